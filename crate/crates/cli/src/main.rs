use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homgraph::claims::{
    default_bound, default_zoos, enumerate_zoo, reconstruction_experiment, run_claim_suites, verdicts_csv,
    verdicts_json, ClaimVerdict, Witness,
};
use homgraph::graph::analysis::GraphProperties;
use homgraph::graph::export::{to_dot, to_json};
use homgraph::graph::spectrum::{iterative_spectrum, spectrum};
use homgraph::{hom_oracle, hom_structure, parse_module, Caps, Error, HomGraph, RingKind, RingSpec};

/// Writes to stdout, ignoring a closed pipe (`homgraph verify | head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! out_raw {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "homgraph", version, about = "Homomorphism submodule graphs of finite modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    limits: Limits,
}

#[derive(Args)]
struct Limits {
    /// Largest module order accepted.
    #[arg(long, global = true, default_value_t = Caps::default().max_module_order)]
    max_module_order: usize,
    /// Largest number of submodules enumerated.
    #[arg(long, global = true, default_value_t = Caps::default().max_lattice)]
    max_lattice: usize,
    /// Largest graph whose full spectrum is computed.
    #[arg(long, global = true, default_value_t = Caps::default().max_spectrum)]
    max_spectrum: usize,
    /// Eigenvalue tolerance.
    #[arg(long, global = true, default_value_t = Caps::default().tol)]
    tol: f64,
}

impl Limits {
    fn caps(&self) -> Result<Caps, String> {
        if self.max_module_order == 0 || self.max_lattice == 0 || self.max_spectrum == 0 {
            return Err("caps must be positive".into());
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(format!("tolerance must be positive, got {}", self.tol));
        }
        Ok(Caps {
            max_module_order: self.max_module_order,
            max_lattice: self.max_lattice,
            max_spectrum: self.max_spectrum,
            tol: self.tol,
            ..Caps::default()
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a module, its lattice and its graph.
    Analyze {
        spec: String,
        /// Emit the graph as JSON instead of the text summary.
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Emit the graph as DOT instead of the text summary.
        #[arg(long)]
        dot: bool,
    },
    /// Export the graph.
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Write graph.<format> into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adjacency eigenvalues and the sqrt(t-1) bound.
    Spectrum {
        spec: String,
        #[arg(long)]
        json: bool,
        /// Use the iterative solver even for complete graphs.
        #[arg(long)]
        iterative: bool,
    },
    /// Run the claim suite and write verdicts.json and verdicts.csv.
    Verify(ZooArgs),
    /// Run only the reconstruction experiment.
    Reconstruct(ZooArgs),
    /// Hom group between two modules, from the solver and the oracle.
    Homtest { a: String, b: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Zmod,
    #[value(alias = "prime_field")]
    Field,
    #[value(alias = "product_field")]
    Prod,
    #[value(alias = "local_square_zero")]
    Kxy,
}

#[derive(Args)]
struct ZooArgs {
    /// Ring family; all four default zoos when omitted.
    #[arg(long, value_enum)]
    ring: Option<RingArg>,
    #[arg(long, default_value_t = 2)]
    p: u64,
    /// k in Z/p^k (zmod only).
    #[arg(long)]
    kk: Option<u32>,
    /// Total length (zmod) or dimension bound.
    #[arg(long)]
    bound: Option<usize>,
    /// Directory for verdict files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Engine(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_internal() {
        3
    } else if e.is_resource_limit() {
        2
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let caps = cli.limits.caps().map_err(Failure::Usage)?;
    match cli.command {
        Command::Analyze { spec, json, dot } => analyze(&spec, json, dot, &caps),
        Command::Graph { spec, format, out } => graph(&spec, format, out.as_deref(), &caps),
        Command::Spectrum { spec, json, iterative } => spectrum_cmd(&spec, json, iterative, &caps),
        Command::Verify(args) => verify(&args, false, &caps),
        Command::Reconstruct(args) => verify(&args, true, &caps),
        Command::Homtest { a, b } => homtest(&a, &b, &caps),
    }
}

fn build(spec: &str, caps: &Caps) -> Result<HomGraph, Failure> {
    let (_, module) = parse_module(spec)?;
    module.ensure_within(caps)?;
    Ok(HomGraph::build(&module, caps)?)
}

fn shape(props: &GraphProperties) -> String {
    if props.complete {
        format!("K_{}", props.vertex_count)
    } else {
        format!("{} vertices, {} edges", props.vertex_count, props.edge_count)
    }
}

fn list(items: &[usize]) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn analyze(spec: &str, json: bool, dot: bool, caps: &Caps) -> Result<(), Failure> {
    let (parsed, _) = parse_module(spec)?;
    let g = build(spec, caps)?;
    if dot {
        out_raw!("{}", to_dot(&g));
        return Ok(());
    }
    let props = GraphProperties::compute(g.graph(), caps)?;
    if json {
        out_raw!("{}", to_json(&g, &props));
        return Ok(());
    }
    let m = g.module();
    let diameter = props.diameter.map_or("infinite".to_string(), |d| d.to_string());
    let transitive = props
        .vertex_transitive
        .map_or("not computed (over cap)".to_string(), |b| b.to_string());
    out!("module: {parsed}");
    out!("ring: {}", m.ring());
    out!("order: {}", m.size());
    out!("cyclic orders: {:?}", m.orders());
    out!("proper submodules (t): {}", props.vertex_count);
    out!("composition length: {}", m.composition_length());
    out!("uniserial: {}", g.lattice().is_uniserial());
    out!("semisimple: {}", m.is_semisimple());
    out!("graph: {}", shape(&props));
    out!("edges: {}", props.edge_count);
    out!("complete: {}", props.complete);
    out!("connected: {}", props.connected);
    out!("diameter: {diameter}");
    out!("chordal: {}", props.chordal);
    out!("tree: {}", props.tree);
    out!("regular: {}", props.regular);
    out!("universal vertices: {}", list(&props.universal_vertices));
    out!("vertex-transitive: {transitive}");
    out!("lambda_max: {:.6}", props.lambda_max);
    Ok(())
}

fn graph(spec: &str, format: Format, out: Option<&Path>, caps: &Caps) -> Result<(), Failure> {
    let g = build(spec, caps)?;
    let (text, ext) = match format {
        Format::Dot => (to_dot(&g), "dot"),
        Format::Json => (to_json(&g, &GraphProperties::compute(g.graph(), caps)?), "json"),
    };
    match out {
        None => out_raw!("{text}"),
        Some(dir) => {
            let path = dir.join(format!("graph.{ext}"));
            write_file(&path, &text)?;
            out!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn clean(x: f64, tol: f64) -> f64 {
    if x.abs() < tol {
        0.0
    } else {
        x
    }
}

fn spectrum_cmd(spec: &str, json: bool, iterative: bool, caps: &Caps) -> Result<(), Failure> {
    let g = build(spec, caps)?;
    let mut report = if iterative {
        iterative_spectrum(g.graph(), caps)?
    } else {
        spectrum(g.graph(), caps)?
    };
    for v in report.eigenvalues.iter_mut() {
        *v = clean(*v, caps.tol);
    }
    let t = g.vertex_count();
    let bound = (t.saturating_sub(1) as f64).sqrt();
    let satisfied = report.lambda_max + caps.tol >= bound;
    if json {
        let doc = serde_json::json!({
            "vertex_count": t,
            "eigenvalues": report.eigenvalues,
            "lambda_max": report.lambda_max,
            "tolerance": report.tolerance,
            "mode": report.mode,
            "sqrt_t_minus_1": bound,
            "bound_satisfied": satisfied,
        });
        out!("{}", serde_json::to_string_pretty(&doc).expect("spectrum JSON serializes"));
        return Ok(());
    }
    let eig: Vec<String> = report.eigenvalues.iter().map(|v| format!("{v:.6}")).collect();
    out!("t: {t}");
    out!("mode: {}", serde_json::to_value(report.mode).expect("mode serializes").as_str().unwrap_or(""));
    out!("eigenvalues: {}", eig.join(" "));
    out!("lambda_max: {:.6}", report.lambda_max);
    out!(
        "sqrt(t-1) = {bound:.6}: {}",
        if satisfied { "satisfied" } else { "violated" }
    );
    Ok(())
}

fn homtest(a: &str, b: &str, caps: &Caps) -> Result<(), Failure> {
    let (_, ma) = parse_module(a)?;
    let (_, mb) = parse_module(b)?;
    ma.ensure_within(caps)?;
    mb.ensure_within(caps)?;
    let solved = hom_structure(&ma, &mb)?;
    out!("solver: {solved}");
    match hom_oracle(&ma, &mb, caps) {
        Ok(oracle) => {
            out!("oracle: {oracle}");
            if oracle != solved {
                return Err(Failure::Engine(Error::Internal(format!(
                    "solver gives {solved}, oracle gives {oracle}"
                ))));
            }
        }
        Err(e) if e.is_resource_limit() => out!("oracle: skipped ({e})"),
        Err(e) => return Err(e.into()),
    }
    match solved.order() {
        Some(n) => out!("order: {n}"),
        None => out!("order: too large to print"),
    }
    Ok(())
}

fn ring_from(args: &ZooArgs, ring: RingArg) -> Result<RingSpec, Failure> {
    let kind = match ring {
        RingArg::Zmod => RingKind::Zmod,
        RingArg::Field => RingKind::PrimeField,
        RingArg::Prod => RingKind::ProductField,
        RingArg::Kxy => RingKind::LocalSquareZero,
    };
    if kind != RingKind::Zmod && args.kk.is_some() {
        return Err(Failure::Usage("--kk only applies to --ring zmod".into()));
    }
    Ok(RingSpec::new(kind, args.p, args.kk.unwrap_or(if kind == RingKind::Zmod { 3 } else { 1 }))?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn verify(args: &ZooArgs, reconstruction_only: bool, caps: &Caps) -> Result<(), Failure> {
    let zoos = match args.ring {
        Some(ring) => {
            let ring = ring_from(args, ring)?;
            let bound = args.bound.unwrap_or_else(|| default_bound(ring.kind()));
            vec![enumerate_zoo(ring, bound, caps)?]
        }
        None => {
            if args.kk.is_some() || args.bound.is_some() || args.p != 2 {
                return Err(Failure::Usage("--p, --kk and --bound need --ring".into()));
            }
            default_zoos(caps)?
        }
    };
    for zoo in &zoos {
        out!("zoo {} bound {}: {} members", zoo.ring, zoo.bound, zoo.len());
    }
    let (verdicts, skipped): (Vec<ClaimVerdict>, Vec<Witness>) = if reconstruction_only {
        let mut vs = Vec::new();
        for zoo in &zoos {
            vs.push(reconstruction_experiment(zoo, caps)?);
        }
        (merge_reconstruction(vs), Vec::new())
    } else {
        let report = run_claim_suites(&zoos, caps)?;
        (report.verdicts, report.skipped)
    };
    for s in &skipped {
        out!("skipped {}: {}", s.modules.join(" "), s.detail);
    }
    let width = verdicts.iter().map(|v| v.claim_id.len()).max().unwrap_or(0);
    for v in &verdicts {
        out!(
            "{:<width$}  {:<14}  instances {:>4}  witnesses {}",
            v.claim_id,
            v.status.to_string(),
            v.instances_checked,
            v.witnesses.len()
        );
    }
    write_file(&args.out.join("verdicts.json"), &verdicts_json(&verdicts))?;
    write_file(&args.out.join("verdicts.csv"), &verdicts_csv(&verdicts))?;
    out!("wrote {} and {}", args.out.join("verdicts.json").display(), args.out.join("verdicts.csv").display());
    Ok(())
}

/// One reconstruction verdict per zoo folded into one.
fn merge_reconstruction(mut vs: Vec<ClaimVerdict>) -> Vec<ClaimVerdict> {
    use homgraph::Status;
    let Some(mut acc) = vs.pop() else { return Vec::new() };
    for v in vs {
        acc.instances_checked += v.instances_checked;
        acc.witnesses.extend(v.witnesses);
        acc.status = match (acc.status, v.status) {
            (Status::NotApplicable, s) | (s, Status::NotApplicable) => s,
            (Status::Refuted, _) | (_, Status::Refuted) => Status::Refuted,
            (s, _) => s,
        };
    }
    acc.witnesses.sort();
    vec![acc]
}
