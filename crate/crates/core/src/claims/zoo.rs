//! Families of small modules, one per isomorphism class.

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::fp;
use crate::presentation::{KxyPreset, ModulePresentation, ResidueMatrix};
use crate::ring::{RingKind, RingSpec};
use crate::spec::ModuleSpec;

use super::module_iso::module_isomorphic;

/// Largest dimension for which every F_2[x,y]/(x,y)² presentation is tried.
const GENERIC_KXY_DIM: usize = 3;

#[derive(Debug, Clone)]
pub struct ZooMember {
    pub spec: ModuleSpec,
    pub module: ModulePresentation,
}

impl ZooMember {
    pub fn new(spec: ModuleSpec) -> Result<Self> {
        let module = spec.to_presentation()?;
        Ok(ZooMember { spec, module })
    }

    pub fn name(&self) -> String {
        self.spec.to_string()
    }
}

#[derive(Debug, Clone)]
pub struct ModuleZoo {
    pub ring: RingSpec,
    pub bound: usize,
    pub members: Vec<ZooMember>,
}

impl ModuleZoo {
    /// A zoo from explicit specs; rejects duplicates up to isomorphism.
    pub fn from_specs(ring: RingSpec, bound: usize, specs: Vec<ModuleSpec>) -> Result<Self> {
        let mut members: Vec<ZooMember> = Vec::with_capacity(specs.len());
        for spec in specs {
            let m = ZooMember::new(spec)?;
            m.module.ring().ensure_same(&ring)?;
            for other in &members {
                if module_isomorphic(&m.module, &other.module)?.is_isomorphic() {
                    return Err(Error::InvalidPresentation(format!(
                        "{} and {} are isomorphic",
                        m.name(),
                        other.name()
                    )));
                }
            }
            members.push(m);
        }
        Ok(ModuleZoo { ring, bound, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.members.iter().map(ZooMember::name).collect()
    }
}

/// Partitions of `n` into parts at most `max_part`, parts non-increasing.
fn partitions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every pair of commuting square-zero matrices with XY = 0 in dimension
/// `dim` over F_p, in lexicographic order of their entries.
fn square_zero_pairs(p: u64, dim: usize) -> Vec<(ResidueMatrix, ResidueMatrix)> {
    let cells = dim * dim;
    let total = p.pow(cells as u32);
    let zero = vec![vec![0u64; dim]; dim];
    let to_matrix = |mut code: u64| -> ResidueMatrix {
        let mut m = vec![vec![0u64; dim]; dim];
        for idx in (0..cells).rev() {
            m[idx / dim][idx % dim] = code % p;
            code /= p;
        }
        m
    };
    let nilpotent: Vec<ResidueMatrix> = (0..total)
        .map(to_matrix)
        .filter(|m| fp::mat_mul(m, m, p) == zero)
        .collect();
    let mut out = Vec::new();
    for x in &nilpotent {
        for y in &nilpotent {
            if fp::mat_mul(x, y, p) == zero && fp::mat_mul(y, x, p) == zero {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// Cheap isomorphism invariants, used to bucket candidates.
fn kxy_invariants(m: &ModulePresentation) -> Result<String> {
    let p = m.ring().p();
    Ok(format!(
        "{}|{}|{}|{}|{}",
        m.rank(),
        m.annihilator_profile(),
        m.socle_indices()?.len(),
        fp::rank(&m.actions()[0], p),
        fp::rank(&m.actions()[1], p)
    ))
}

fn kxy_specs(p: u64, bound: usize) -> Result<Vec<ModuleSpec>> {
    let mut reps: Vec<(ModuleSpec, ModulePresentation)> = Vec::new();
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut add_if_new = |spec: ModuleSpec,
                          m: ModulePresentation,
                          reps: &mut Vec<(ModuleSpec, ModulePresentation)>|
     -> Result<()> {
        let key = kxy_invariants(&m)?;
        let bucket = buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if module_isomorphic(&m, &reps[i].1)?.is_isomorphic() {
                return Ok(());
            }
        }
        bucket.push(reps.len());
        reps.push((spec, m));
        Ok(())
    };

    let mut presets: Vec<KxyPreset> = KxyPreset::ALL.iter().copied().filter(|k| k.dim() <= bound).collect();
    presets.sort_by_key(|k| k.dim());
    for preset in presets {
        let spec = ModuleSpec::KxyPreset { p, preset };
        let m = spec.to_presentation()?;
        add_if_new(spec, m, &mut reps)?;
    }
    if p == 2 {
        for dim in 1..=bound.min(GENERIC_KXY_DIM) {
            for (x, y) in square_zero_pairs(p, dim) {
                let spec = ModuleSpec::KxyMatrices { p, dim, x, y };
                let m = spec.to_presentation()?;
                add_if_new(spec, m, &mut reps)?;
            }
        }
    }
    reps.sort_by_key(|a| a.1.rank());
    Ok(reps.into_iter().map(|(s, _)| s).collect())
}

/// Every module of the family up to isomorphism within `bound` (total
/// length for Z/p^k, dimension otherwise).
///
/// For F_p[x,y]/(x,y)² the named presets are always included; for p = 2 the
/// zoo is completed by every presentation of dimension at most
/// min(bound, 3), deduplicated up to isomorphism.
pub fn enumerate_zoo(ring: RingSpec, bound: usize, caps: &Caps) -> Result<ModuleZoo> {
    if bound == 0 {
        return Err(Error::InvalidPresentation("zoo bound must be positive".into()));
    }
    let p = ring.p();
    let specs: Vec<ModuleSpec> = match ring.kind() {
        RingKind::Zmod => (1..=bound as u32)
            .flat_map(|n| partitions(n, ring.k()))
            .map(|e| ModuleSpec::zmod(p, ring.k(), &e))
            .collect(),
        RingKind::PrimeField => (1..=bound).map(|dim| ModuleSpec::Field { p, dim }).collect(),
        RingKind::ProductField => (1..=bound)
            .flat_map(|n| (0..=n).rev().map(move |m1| [m1, n - m1]))
            .map(|mult| ModuleSpec::Prod { p, mult })
            .collect(),
        RingKind::LocalSquareZero => kxy_specs(p, bound)?,
    };
    let mut members = Vec::with_capacity(specs.len());
    for spec in specs {
        let member = ZooMember::new(spec)?;
        member.module.ensure_within(caps)?;
        members.push(member);
    }
    Ok(ModuleZoo { ring, bound, members })
}

/// Default bound for a ring family when none is given.
pub fn default_bound(kind: RingKind) -> usize {
    match kind {
        RingKind::Zmod | RingKind::ProductField => 4,
        RingKind::PrimeField | RingKind::LocalSquareZero => 3,
    }
}

/// The four standard zoos: Z/8, F_2, F_2 x F_2 and F_2[x,y]/(x,y)^2, each
/// at its default bound.
pub fn default_zoos(caps: &Caps) -> Result<Vec<ModuleZoo>> {
    [
        RingSpec::zmod(2, 3)?,
        RingSpec::prime_field(2)?,
        RingSpec::product_field(2)?,
        RingSpec::local_square_zero(2)?,
    ]
    .into_iter()
    .map(|ring| enumerate_zoo(ring, default_bound(ring.kind()), caps))
    .collect()
}
