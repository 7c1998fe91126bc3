//! Structural claims about Hom graphs, checked instance by instance on
//! module zoos.

pub mod module_iso;
pub mod probe;
pub mod verdict;
pub mod zoo;

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::analysis::{diameter, is_complete, is_connected, is_regular, is_tree};
use crate::graph::chordal::{is_chordal, ChordalReport};
use crate::graph::iso::{are_isomorphic, is_vertex_transitive};
use crate::graph::spectrum::{iterative_spectrum, spectrum, SpectrumReport};
use crate::graph::{Graph, HomGraph};
use crate::hom::{present_quotient, present_submodule};
use crate::presentation::KxyPreset;
use crate::ring::{RingKind, RingSpec};
use crate::spec::ModuleSpec;

pub use module_iso::{module_isomorphic, ModuleIso};
pub use probe::{step4_socle_probe, SocleProbe};
pub use verdict::{verdicts_csv, verdicts_json, ClaimVerdict, Status, Witness};
pub use zoo::{default_bound, default_zoos, enumerate_zoo, ModuleZoo, ZooMember};

/// Complete graphs up to this size get their spectrum from the iterative
/// solver for the K_n check.
const KN_SPECTRUM_MAX: usize = 128;

pub struct ClaimInfo {
    pub id: &'static str,
    pub statement: &'static str,
    /// A single failing instance refutes the claim outright.
    pub universal_pairs: bool,
}

const fn claim(id: &'static str, statement: &'static str) -> ClaimInfo {
    ClaimInfo {
        id,
        statement,
        universal_pairs: false,
    }
}

pub const RECONSTRUCTION: &str = "reconstruction";

pub static REGISTRY: &[ClaimInfo] = &[
    claim("chordal", "the graph is chordal, hence perfect"),
    claim(
        "complete_iff_uniserial.if",
        "complete if and only if M is uniserial: uniserial implies complete",
    ),
    claim(
        "complete_iff_uniserial.only_if",
        "complete if and only if M is uniserial: complete implies uniserial",
    ),
    claim(
        "completeness_observation",
        "measured: every graph with at least two vertices is complete",
    ),
    claim(
        "connected_universal_zero",
        "every vertex is adjacent to 0, so the graph is connected",
    ),
    claim("diameter.at_most_two", "the diameter is at most 2"),
    claim(
        "diameter.one_iff_uniserial.if",
        "diameter 1 if and only if uniserial with at least two proper submodules: uniserial implies diameter 1",
    ),
    claim(
        "diameter.one_iff_uniserial.only_if",
        "diameter 1 if and only if uniserial with at least two proper submodules: diameter 1 implies uniserial",
    ),
    claim(
        "empty_graph.has_edge",
        "with at least two proper submodules the graph has at least one edge",
    ),
    claim(
        "empty_graph.simple_single_vertex",
        "a simple module gives a single vertex and no edges",
    ),
    claim("k2_example", "Z/p^2 gives K_2"),
    claim(
        "kn_spectrum",
        "K_n has eigenvalue n-1 with multiplicity 1 and -1 with multiplicity n-1",
    ),
    claim(
        "lambda_max_bound",
        "the largest eigenvalue is at least sqrt(t-1), t the number of proper submodules",
    ),
    claim(
        "noetherian_reduction",
        "a finite-length module over Z/p^k has the same graph over the quotient ring Z/p^e that acts faithfully",
    ),
    claim(
        "nonlocal_remark",
        "without locality reconstruction fails: the two simple modules over F_p x F_p both give a single vertex",
    ),
    ClaimInfo {
        id: RECONSTRUCTION,
        statement: "over a local ring, isomorphic graphs imply isomorphic modules",
        universal_pairs: true,
    },
    claim(
        "reconstruction.residue_square_graph",
        "k + k has three proper submodules, so its graph is K_3",
    ),
    claim(
        "reconstruction.socle_probe.maximal_adjacency",
        "the socle is adjacent to every maximal submodule",
    ),
    claim(
        "reconstruction.socle_probe.socle_unique",
        "the socle is the unique neighbor of 0 adjacent to every maximal submodule",
    ),
    claim(
        "reconstruction.socle_probe.zero_unique_max_degree",
        "0 is the unique vertex of maximal degree",
    ),
    claim(
        "regular_iff_complete.if",
        "with at least three proper submodules, regular if and only if complete: complete implies regular",
    ),
    claim(
        "regular_iff_complete.only_if",
        "with at least three proper submodules, regular if and only if complete: regular implies complete",
    ),
    claim(
        "regular_iff_uniserial.if",
        "with at least three proper submodules, regular exactly when uniserial: uniserial implies regular",
    ),
    claim(
        "regular_iff_uniserial.only_if",
        "with at least three proper submodules, regular exactly when uniserial: regular implies uniserial",
    ),
    claim(
        "semisimple_adjacency",
        "for semisimple M, N1 ~ N2 exactly when N1 and M/N2, or N2 and M/N1, share a simple summand",
    ),
    claim(
        "socle.below_maximals",
        "over a local ring the socle is contained in every maximal submodule",
    ),
    claim(
        "socle.sum_of_simples",
        "over a local ring the socle is the sum of all simple submodules",
    ),
    claim(
        "spectral_radius_chain",
        "for R/m^n with n >= 2 the graph is K_(n-1) with largest eigenvalue n-2",
    ),
    claim(
        "tree_iff_length_two.if",
        "a tree if and only if composition length 2: length 2 gives a tree, namely K_2",
    ),
    claim(
        "tree_iff_length_two.only_if",
        "a tree if and only if composition length 2: a tree forces length 2",
    ),
    claim(
        "uniserial_complete",
        "for uniserial M the graph is complete on its chain of proper submodules",
    ),
    ClaimInfo {
        id: "uniserial_reconstruction",
        statement: "uniserial modules over a local ring with isomorphic graphs are isomorphic",
        universal_pairs: true,
    },
    claim(
        "vertex_transitivity.large_not_transitive",
        "a graph with more than two vertices is not vertex-transitive",
    ),
    claim(
        "vertex_transitivity.small_transitive",
        "the vertex-transitive cases are one vertex (M simple) and K_2 (length 2)",
    ),
];

pub fn claim_info(id: &str) -> Option<&'static ClaimInfo> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Everything the claims look at for one zoo member.
struct Instance {
    name: String,
    spec: ModuleSpec,
    graph: HomGraph,
    t: usize,
    length: usize,
    uniserial: bool,
    semisimple: bool,
    complete: bool,
    chordal: ChordalReport,
    spectrum: SpectrumReport,
    vertex_transitive: Option<bool>,
}

impl Instance {
    fn analyze(member: &ZooMember, caps: &Caps) -> Result<Self> {
        let graph = HomGraph::build(&member.module, caps)?;
        let g = graph.graph();
        let vertex_transitive = match is_vertex_transitive(g, caps) {
            Ok(b) => Some(b),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(Instance {
            name: member.name(),
            spec: member.spec.clone(),
            t: graph.vertex_count(),
            length: member.module.composition_length(),
            uniserial: graph.lattice().is_uniserial(),
            semisimple: member.module.is_semisimple(),
            complete: is_complete(g),
            chordal: is_chordal(g),
            spectrum: spectrum(g, caps)?,
            vertex_transitive,
            graph,
        })
    }

    fn g(&self) -> &Graph {
        self.graph.graph()
    }

    fn shape(&self) -> String {
        describe(self.g())
    }
}

fn describe(g: &Graph) -> String {
    let t = g.vertex_count();
    if is_complete(g) {
        format!("K_{t}")
    } else {
        format!("{t} vertices, {} edges", g.edge_count())
    }
}

/// Tally of one claim: checks passed and failed, and witnesses.
#[derive(Default)]
struct Tally {
    instances: usize,
    passed: usize,
    failed: usize,
    witnesses: Vec<Witness>,
}

struct Ledger {
    tallies: BTreeMap<&'static str, Tally>,
}

impl Ledger {
    fn new() -> Self {
        Ledger {
            tallies: REGISTRY.iter().map(|c| (c.id, Tally::default())).collect(),
        }
    }

    fn tally(&mut self, id: &'static str) -> &mut Tally {
        self.tallies.get_mut(id).unwrap_or_else(|| panic!("unregistered claim {id}"))
    }

    /// One instance with a single check.
    fn check(&mut self, id: &'static str, modules: &[&str], ok: bool, detail: impl FnOnce() -> String) {
        self.checks(id, modules, &[ok], detail, false);
    }

    /// One instance made of several checks; the witness is recorded when any
    /// check fails, or always when `notable`.
    fn checks(
        &mut self,
        id: &'static str,
        modules: &[&str],
        results: &[bool],
        detail: impl FnOnce() -> String,
        notable: bool,
    ) {
        let t = self.tally(id);
        t.instances += 1;
        let failed = results.iter().filter(|ok| !**ok).count();
        t.failed += failed;
        t.passed += results.len() - failed;
        if failed > 0 || notable {
            t.witnesses.push(Witness {
                modules: modules.iter().map(|s| s.to_string()).collect(),
                detail: detail(),
            });
        }
    }

    fn into_verdicts(self) -> Vec<ClaimVerdict> {
        self.tallies
            .into_iter()
            .map(|(id, mut t)| {
                let info = claim_info(id).expect("registered");
                let status = if t.instances == 0 {
                    Status::NotApplicable
                } else if t.failed == 0 {
                    Status::Confirmed
                } else if t.passed == 0 || info.universal_pairs {
                    Status::Refuted
                } else {
                    Status::Mixed
                };
                t.witnesses.sort();
                ClaimVerdict {
                    claim_id: id.to_string(),
                    paper_ref: info.statement.to_string(),
                    instances_checked: t.instances,
                    status,
                    witnesses: t.witnesses,
                }
            })
            .collect()
    }
}

/// Verdicts plus the members that could not be analyzed within the caps.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub verdicts: Vec<ClaimVerdict>,
    pub skipped: Vec<Witness>,
}

fn analyze_zoo(zoo: &ModuleZoo, caps: &Caps) -> Result<(Vec<Instance>, Vec<Witness>)> {
    let mut instances = Vec::new();
    let mut skipped = Vec::new();
    for member in &zoo.members {
        match Instance::analyze(member, caps) {
            Ok(i) => instances.push(i),
            Err(e) if e.is_resource_limit() => skipped.push(Witness {
                modules: vec![member.name()],
                detail: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok((instances, skipped))
}

/// Run every registered claim over the zoo. Refuted claims are results,
/// not errors; only internal inconsistencies abort.
pub fn run_claim_suite(zoo: &ModuleZoo, caps: &Caps) -> Result<SuiteReport> {
    run_claim_suites(std::slice::from_ref(zoo), caps)
}

/// Like [`run_claim_suite`], pooling the instances of several zoos into one
/// verdict per claim. Pairs are only formed within a zoo.
pub fn run_claim_suites(zoos: &[ModuleZoo], caps: &Caps) -> Result<SuiteReport> {
    let mut ledger = Ledger::new();
    let mut skipped = Vec::new();
    for zoo in zoos {
        let (instances, mut missed) = analyze_zoo(zoo, caps)?;
        skipped.append(&mut missed);
        for inst in &instances {
            graph_claims(&mut ledger, inst);
            spectral_claims(&mut ledger, inst, caps)?;
            lattice_claims(&mut ledger, inst, &zoo.ring)?;
            noetherian_reduction(&mut ledger, inst, caps)?;
        }
        semisimple_adjacency(&mut ledger, &instances)?;
        pair_claims(&mut ledger, &instances, &zoo.ring, caps)?;
    }
    skipped.sort();
    Ok(SuiteReport {
        verdicts: ledger.into_verdicts(),
        skipped,
    })
}

/// Only the reconstruction verdict.
pub fn reconstruction_experiment(zoo: &ModuleZoo, caps: &Caps) -> Result<ClaimVerdict> {
    let (instances, _) = analyze_zoo(zoo, caps)?;
    let mut ledger = Ledger::new();
    reconstruction_pairs(&mut ledger, &instances, &zoo.ring, caps)?;
    Ok(ledger
        .into_verdicts()
        .into_iter()
        .find(|v| v.claim_id == RECONSTRUCTION)
        .expect("registered"))
}

fn graph_claims(ledger: &mut Ledger, inst: &Instance) {
    let g = inst.g();
    let name = inst.name.as_str();
    let m = [name];
    let t = inst.t;
    let shape = inst.shape();

    ledger.check("chordal", &m, inst.chordal.chordal, || {
        format!("hole {:?}", inst.chordal.hole.clone().unwrap_or_default())
    });

    if inst.uniserial {
        ledger.check("complete_iff_uniserial.if", &m, inst.complete, || {
            format!("uniserial but graph is {shape}")
        });
        ledger.check("uniserial_complete", &m, inst.complete, || {
            format!("uniserial but graph is {shape}")
        });
    }
    if inst.complete {
        ledger.check("complete_iff_uniserial.only_if", &m, inst.uniserial, || {
            format!("graph is {shape} but the module is not uniserial")
        });
    }

    if t >= 2 {
        ledger.check("completeness_observation", &m, inst.complete, || {
            format!("graph is {shape}")
        });
        let zero_universal = g.degree(0) + 1 == t;
        let connected = is_connected(g);
        ledger.check("connected_universal_zero", &m, zero_universal && connected, || {
            format!("degree of 0 is {} of {}, connected: {connected}", g.degree(0), t - 1)
        });
        let d = diameter(g);
        ledger.check("diameter.at_most_two", &m, d.is_some_and(|d| d <= 2), || {
            format!("diameter {d:?}")
        });
        if inst.uniserial {
            ledger.check("diameter.one_iff_uniserial.if", &m, d == Some(1), || {
                format!("uniserial but diameter {d:?}")
            });
        }
        if d == Some(1) {
            ledger.check("diameter.one_iff_uniserial.only_if", &m, inst.uniserial, || {
                format!("diameter 1 ({shape}) but not uniserial")
            });
        }
        ledger.check("empty_graph.has_edge", &m, g.edge_count() > 0, || {
            format!("{t} vertices and no edges")
        });
    }
    if inst.length == 1 {
        ledger.check(
            "empty_graph.simple_single_vertex",
            &m,
            t == 1 && g.edge_count() == 0,
            || format!("simple module with graph {shape}"),
        );
    }

    if t >= 3 {
        let regular = is_regular(g);
        if inst.complete {
            ledger.check("regular_iff_complete.if", &m, regular, || format!("{shape} not regular"));
        }
        if regular {
            ledger.check("regular_iff_complete.only_if", &m, inst.complete, || {
                format!("regular but graph is {shape}")
            });
            ledger.check("regular_iff_uniserial.only_if", &m, inst.uniserial, || {
                format!("regular ({shape}) but not uniserial")
            });
        }
        if inst.uniserial {
            ledger.check("regular_iff_uniserial.if", &m, regular, || {
                format!("uniserial but graph is {shape}, not regular")
            });
        }
    }

    let tree = is_tree(g);
    if inst.length == 2 {
        ledger.check("tree_iff_length_two.if", &m, tree && t == 2, || {
            format!("length 2 but graph is {shape}")
        });
    }
    if tree {
        ledger.check("tree_iff_length_two.only_if", &m, inst.length == 2, || {
            format!("graph {shape} is a tree but composition length is {}", inst.length)
        });
    }

    if let Some(vt) = inst.vertex_transitive {
        if t >= 3 {
            ledger.check("vertex_transitivity.large_not_transitive", &m, !vt, || {
                format!("{shape} is vertex-transitive")
            });
        } else {
            let shape_ok = (t == 1 && inst.length == 1) || (t == 2 && inst.length == 2);
            ledger.check("vertex_transitivity.small_transitive", &m, vt && shape_ok, || {
                format!("graph {shape}, length {}, vertex-transitive: {vt}", inst.length)
            });
        }
    }
}

fn spectral_claims(ledger: &mut Ledger, inst: &Instance, caps: &Caps) -> Result<()> {
    let m = [inst.name.as_str()];
    let t = inst.t;
    let tol = caps.tol;
    if inst.complete && t <= KN_SPECTRUM_MAX.min(caps.max_spectrum) {
        let solved = iterative_spectrum(inst.g(), caps)?;
        let expected: Vec<f64> = std::iter::once(t as f64 - 1.0)
            .chain(std::iter::repeat_n(-1.0, t.saturating_sub(1)))
            .collect();
        let worst = solved
            .eigenvalues
            .iter()
            .zip(&expected)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        let ok = solved.eigenvalues.len() == expected.len() && worst <= tol;
        ledger.check("kn_spectrum", &m, ok, || {
            format!("K_{t}: largest deviation from closed form {worst:.3e}")
        });
    }
    if t >= 2 {
        let bound = ((t - 1) as f64).sqrt();
        let lambda = inst.spectrum.lambda_max;
        ledger.check("lambda_max_bound", &m, lambda + tol >= bound, || {
            format!("lambda_max {lambda:.6} < sqrt({}) = {bound:.6}", t - 1)
        });
    }

    let chain_n = match &inst.spec {
        ModuleSpec::Zmod { exponents, .. } if exponents.len() == 1 && exponents[0] >= 2 => {
            Some(exponents[0] as usize)
        }
        ModuleSpec::KxyPreset {
            preset: KxyPreset::Regular,
            ..
        } => Some(2),
        _ => None,
    };
    if let Some(n) = chain_n {
        let lambda = inst.spectrum.lambda_max;
        let stated_lambda = n as f64 - 2.0;
        let results = [inst.complete, t == n - 1, (lambda - stated_lambda).abs() <= tol];
        let detail = format!(
            "R/m^{n}: measured {} with lambda_max {lambda:.6}; stated K_{} with lambda_max {}",
            inst.shape(),
            n - 1,
            n - 2
        );
        ledger.checks("spectral_radius_chain", &m, &results, || detail, true);
    }
    if let ModuleSpec::Zmod { exponents, .. } = &inst.spec {
        if exponents.as_slice() == [2] {
            ledger.check("k2_example", &m, inst.complete && t == 2, || {
                format!("graph is {}", inst.shape())
            });
        }
    }
    Ok(())
}

fn lattice_claims(ledger: &mut Ledger, inst: &Instance, ring: &RingSpec) -> Result<()> {
    if !ring.is_local() {
        return Ok(());
    }
    let m = [inst.name.as_str()];
    let lattice = inst.graph.lattice();
    let socle = lattice.socle_node()?;
    let simples = lattice.minimal_nonzero();
    let join = lattice.join(&simples);
    ledger.check("socle.sum_of_simples", &m, join == socle.index, || {
        format!(
            "socle {} but sum of simple submodules {}",
            lattice.node(socle.index).label(lattice.module()),
            lattice.node(join).label(lattice.module())
        )
    });
    let missing: Vec<String> = if socle.is_whole_module {
        lattice
            .maximal_submodules()
            .into_iter()
            .map(|i| lattice.node(i).label(lattice.module()))
            .collect()
    } else {
        socle
            .maximals_not_containing
            .iter()
            .map(|&i| lattice.node(i).label(lattice.module()))
            .collect()
    };
    ledger.check("socle.below_maximals", &m, missing.is_empty(), || {
        format!(
            "socle {} is not contained in maximal submodules {}",
            lattice.node(socle.index).label(lattice.module()),
            missing.join(" ")
        )
    });

    if let Some(p) = step4_socle_probe(&inst.graph)? {
        let label = lattice.node(p.socle_vertex).label(lattice.module());
        ledger.check("reconstruction.socle_probe.maximal_adjacency", &m, p.adjacent_to_all_maximals, || {
            format!("socle {label} misses a maximal submodule")
        });
        ledger.check("reconstruction.socle_probe.socle_unique", &m, p.socle_unique, || {
            let names: Vec<String> = p
                .candidates
                .iter()
                .map(|&v| lattice.node(v).label(lattice.module()))
                .collect();
            format!("vertices adjacent to every maximal submodule: {}", names.join(" "))
        });
        ledger.check(
            "reconstruction.socle_probe.zero_unique_max_degree",
            &m,
            p.zero_unique_max_degree,
            || format!("degree of 0 is {}, graph is {}", inst.g().degree(0), inst.shape()),
        );
    }

    if inst.semisimple && inst.graph.module().simple_multiplicities() == Some(vec![2]) {
        ledger.checks(
            "reconstruction.residue_square_graph",
            &m,
            &[inst.t == 3],
            || format!("measured {} proper submodules, graph {}", inst.t, inst.shape()),
            true,
        );
    }
    Ok(())
}

/// Rebuild a Z/p^k module over Z/p^e, e the largest exponent, and compare.
fn noetherian_reduction(ledger: &mut Ledger, inst: &Instance, caps: &Caps) -> Result<()> {
    let ModuleSpec::Zmod { p, k, exponents } = &inst.spec else {
        return Ok(());
    };
    let e = exponents.iter().copied().max().unwrap_or(1);
    if e >= *k {
        return Ok(());
    }
    let reduced = ModuleSpec::zmod(*p, e, exponents);
    let rebuilt = HomGraph::build(&reduced.to_presentation()?, caps)?;
    let same = are_isomorphic(inst.g(), rebuilt.graph(), caps)?.is_isomorphic();
    let name = inst.name.clone();
    let reduced_name = reduced.to_string();
    ledger.check("noetherian_reduction", &[&name, &reduced_name], same, || {
        format!("{} over Z/{p}^{k} but {} over Z/{p}^{e}", inst.shape(), describe(rebuilt.graph()))
    });
    Ok(())
}

fn shares_simple(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x > 0 && y > 0)
}

fn semisimple_adjacency(ledger: &mut Ledger, instances: &[Instance]) -> Result<()> {
    for inst in instances.iter().filter(|i| i.semisimple) {
        let lattice = inst.graph.lattice();
        let m = lattice.module();
        let t = inst.t;
        let mut subs = Vec::with_capacity(t);
        let mut quots = Vec::with_capacity(t);
        for v in 0..t {
            let multiplicities = |pres: crate::presentation::ModulePresentation| -> Result<Vec<usize>> {
                if pres.is_zero() {
                    return Ok(vec![0, 0]);
                }
                pres.simple_multiplicities()
                    .ok_or_else(|| Error::Internal("piece of a semisimple module is not semisimple".into()))
            };
            subs.push(multiplicities(present_submodule(m, lattice.node(v))?)?);
            quots.push(multiplicities(present_quotient(m, lattice.node(v))?)?);
        }
        let mut mismatches = Vec::new();
        for u in 0..t {
            for v in (u + 1)..t {
                let predicted = shares_simple(&subs[u], &quots[v]) || shares_simple(&subs[v], &quots[u]);
                if predicted != inst.g().has_edge(u, v) {
                    mismatches.push(format!("({u},{v})"));
                }
            }
        }
        ledger.check("semisimple_adjacency", &[&inst.name], mismatches.is_empty(), || {
            format!("adjacency disagrees with shared simple summands on pairs {}", mismatches.join(" "))
        });
    }
    Ok(())
}

fn pair_claims(ledger: &mut Ledger, instances: &[Instance], ring: &RingSpec, caps: &Caps) -> Result<()> {
    reconstruction_pairs(ledger, instances, ring, caps)?;
    if ring.kind() == RingKind::ProductField {
        let simples: Vec<&Instance> = instances.iter().filter(|i| i.length == 1).collect();
        for (i, a) in simples.iter().enumerate() {
            for b in &simples[i + 1..] {
                let graphs = are_isomorphic(a.g(), b.g(), caps)?.is_isomorphic();
                let modules = module_isomorphic(a.graph.module(), b.graph.module())?;
                let ok = graphs && a.t == 1 && !modules.is_isomorphic();
                ledger.checks(
                    "nonlocal_remark",
                    &[&a.name, &b.name],
                    &[ok],
                    || {
                        format!(
                            "graphs {} and {}; modules {}",
                            a.shape(),
                            b.shape(),
                            iso_phrase(&modules)
                        )
                    },
                    true,
                );
            }
        }
    }
    Ok(())
}

fn iso_phrase(m: &ModuleIso) -> String {
    match m {
        ModuleIso::Isomorphic(c) => format!("isomorphic ({c})"),
        ModuleIso::NotIsomorphic(c) => format!("not isomorphic ({c})"),
    }
}

fn reconstruction_pairs(ledger: &mut Ledger, instances: &[Instance], ring: &RingSpec, caps: &Caps) -> Result<()> {
    if !ring.is_local() {
        return Ok(());
    }
    for (i, a) in instances.iter().enumerate() {
        for b in &instances[i + 1..] {
            let graphs = are_isomorphic(a.g(), b.g(), caps)?.is_isomorphic();
            let modules = if graphs {
                Some(module_isomorphic(a.graph.module(), b.graph.module())?)
            } else {
                None
            };
            let ok = modules.as_ref().is_none_or(ModuleIso::is_isomorphic);
            let detail = || {
                format!(
                    "both graphs {}; modules {}",
                    a.shape(),
                    modules.as_ref().map(iso_phrase).unwrap_or_default()
                )
            };
            ledger.check(RECONSTRUCTION, &[&a.name, &b.name], ok, detail);
            if a.uniserial && b.uniserial {
                ledger.check("uniserial_reconstruction", &[&a.name, &b.name], ok, detail);
            }
        }
    }
    Ok(())
}
