//! `isoext`: Ext charts over the bigraded dual Steenrod algebra.

mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isoext::comodule::{cofree_g, cofree_g_g, composition_series, parse_comodule, reassemble, Comodule};
use isoext::extengine::{
    chart_from_resolution, cobar_ext, parse_checkpoint, write_checkpoint, ChartBounds, DualComodule,
    ModuleSource, Resolution,
};
use isoext::hopf::{verify_hopf, AlgebraId};
use isoext::specseq::{check_gate, Engine, GeneratorSet};
use isoext::{Bidegree, Error};

#[derive(Parser)]
#[command(name = "isoext", version, about = "Ext charts over the bigraded dual Steenrod algebra")]
struct Cli {
    /// Worker threads (default: $ISOEXT_THREADS, then all cores)
    #[arg(long, global = true, env = "ISOEXT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an isotropic Adams E2 chart
    Chart(ChartArgs),
    /// Check Hopf axioms, comodule files and engine agreement
    Verify(VerifyArgs),
    /// Print a composition series with its attaching cocycles
    Series(SeriesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Resolution,
    Cobar,
}

#[derive(Args)]
struct ChartArgs {
    /// The sphere (the trivial comodule)
    #[arg(long, conflicts_with = "module")]
    sphere: bool,
    /// A comodule file, or a built-in: mbp.cofree, mbp2.cofree
    #[arg(long, required_unless_present = "sphere")]
    module: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    max_stem: i32,
    /// Default: max stem minus the lowest degree of the input
    #[arg(long)]
    max_s: Option<u32>,
    #[arg(long, allow_negative_numbers = true, requires = "weight_max")]
    weight_min: Option<i32>,
    #[arg(long, allow_negative_numbers = true, requires = "weight_min")]
    weight_max: Option<i32>,
    /// Top topological degree of built-in windows (default: just enough)
    #[arg(long, allow_negative_numbers = true)]
    window: Option<i32>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "resolution")]
    engine: EngineArg,
    /// Write the resolution here when done
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Generator set of the input, for the finiteness gate
    /// (explicit:p,q,n;…  linear:p0,q0,dp,dq[,n|inf]  gmonomials)
    #[arg(long)]
    generators: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check the Hopf algebra axioms of G or RISO
    #[arg(long)]
    hopf: Option<String>,
    #[arg(long, default_value_t = 12)]
    max_p: i32,
    /// Compare the resolution and cobar engines on the sphere
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = 8)]
    max_stem: i32,
    #[arg(long)]
    max_s: Option<u32>,
    /// Validate a comodule file
    #[arg(long)]
    module: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Comodule file
    module: PathBuf,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidComodule(_) => 2,
            Error::WindowTooSmall(_) => 3,
            Error::NotIsotropicallyFiniteType { .. } => 4,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("isoext: {e}");
            return ExitCode::FAILURE;
        }
    };
    let result = pool.install(|| match cli.command {
        Command::Chart(args) => chart(args),
        Command::Verify(args) => verify(args),
        Command::Series(args) => series(args),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("isoext: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_comodule(path: &Path) -> Result<Comodule, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
    let c = parse_comodule(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
    let report = c.validate();
    if !report.is_empty() {
        return Err(fail(2, format!("{}: not a comodule\n{report}", path.display())));
    }
    Ok(c)
}

/// Writes through a temporary file in the target directory, so a failed
/// run never leaves a partial file behind.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let io = |e: std::io::Error| fail(1, format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn chart(args: ChartArgs) -> Result<u8, Failure> {
    // Inputs are loaded in two steps: built-in windows depend on the bounds,
    // and the default bounds depend on the lowest degree of the input.
    let (name, fixed) = match (&args.module, args.sphere) {
        (_, true) => ("sphere".to_string(), Some(Comodule::trivial("1", Bidegree::ZERO))),
        (Some(m), false) if m == "mbp.cofree" || m == "mbp2.cofree" => (m.clone(), None),
        (Some(m), false) => (m.clone(), Some(read_comodule(Path::new(m))?)),
        (None, false) => unreachable!("clap requires --module or --sphere"),
    };
    let min_p = fixed.as_ref().map_or(Some(0), Comodule::min_p).unwrap_or(0);
    let max_s = args.max_s.unwrap_or((args.max_stem - min_p).max(0) as u32);
    let mut bounds = ChartBounds::new(max_s, args.max_stem);
    if let (Some(lo), Some(hi)) = (args.weight_min, args.weight_max) {
        bounds = bounds.with_weight(lo, hi);
    }
    let module = match fixed {
        Some(c) => c,
        None => {
            let p_max = args.window.unwrap_or(bounds.max_t());
            if name == "mbp.cofree" { cofree_g(p_max)? } else { cofree_g_g(p_max)? }
        }
    };
    let generators = args
        .generators
        .as_deref()
        .map(str::parse::<GeneratorSet>)
        .transpose()
        .map_err(|e| fail(2, format!("--generators: {e}")))?;
    check_gate(&module, bounds, generators.as_ref())?;

    let engine = match args.engine {
        EngineArg::Resolution => Engine::Resolution,
        EngineArg::Cobar => Engine::Cobar,
    };
    let chart = match engine {
        Engine::Cobar => {
            if args.checkpoint.is_some() || args.resume.is_some() {
                return Err(fail(2, "checkpoints need the resolution engine"));
            }
            cobar_ext(&Comodule::trivial("1", Bidegree::ZERO), &module, bounds)?
        }
        Engine::Resolution => {
            let source: Arc<dyn ModuleSource> = Arc::new(DualComodule::new(module)?);
            let mut r = match &args.resume {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| fail(1, format!("{}: {e}", path.display())))?;
                    parse_checkpoint(&text, source)?
                }
                None => Resolution::new(source),
            };
            r.extend_to(bounds.max_s, bounds.max_t())?;
            if let Some(path) = &args.checkpoint {
                write_atomic(path, &write_checkpoint(&r))?;
            }
            chart_from_resolution(&r).restrict(bounds)
        }
    };
    let text = match args.format {
        Format::Tsv => render::tsv(&chart, &name, engine),
        Format::Svg => render::svg(&chart, &name),
    };
    match &args.output {
        Some(path) => write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let mut failed = false;
    let mut line = |name: &str, ok: bool, detail: String| {
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        failed |= !ok;
    };
    let run_all = args.hopf.is_none() && !args.oracle && args.module.is_none();

    let algebras: Vec<AlgebraId> = match (&args.hopf, run_all) {
        (Some(a), _) => vec![a.parse().map_err(|e| fail(2, format!("--hopf: {e}")))?],
        (None, true) => vec![AlgebraId::G, AlgebraId::Riso],
        (None, false) => vec![],
    };
    for alg in algebras {
        let report = verify_hopf(alg, args.max_p)?;
        for v in &report.violations {
            println!("  {v}");
        }
        let detail = format!(
            "{} monomials, {} products through p = {}, {} violations",
            report.monomials_checked,
            report.products_checked,
            args.max_p,
            report.violations.len()
        );
        line(&format!("hopf axioms of {alg}"), report.passed(), detail);
    }

    if let Some(path) = &args.module {
        let c = read_comodule(path)?;
        line("comodule axioms", true, format!("{} elements", c.dim()));
        let series = composition_series(&c)?;
        let one_dim = series.layers.len() == c.dim();
        line("composition series", one_dim, format!("{} one-dimensional layers", series.layers.len()));
        let back = reassemble(&series)?;
        line("reassembly", back.dims() == c.dims(), "graded dimensions restored".into());
    }

    if args.oracle || run_all {
        let bounds = ChartBounds::new(args.max_s.unwrap_or(args.max_stem.max(0) as u32), args.max_stem);
        let sphere = Comodule::trivial("1", Bidegree::ZERO);
        let cobar = cobar_ext(&sphere, &sphere, bounds)?;
        let res = isoext::extengine::minimal_resolution(Arc::new(DualComodule::new(sphere)?), bounds)?;
        let violations = res.verify();
        let chart = chart_from_resolution(&res).restrict(bounds);
        let diff = chart.diff(&cobar);
        for (d, a, b) in &diff {
            println!("  {d}: resolution {a}, cobar {b}");
        }
        let detail = format!("s <= {}, stem <= {}, {} classes", bounds.max_s, bounds.max_stem, cobar.total());
        line("resolution = cobar on the sphere", diff.is_empty(), detail);
        line("resolution is minimal with d² = 0", violations.is_empty(), format!("{} violations", violations.len()));
    }
    Ok(if failed { 1 } else { 0 })
}

fn series(args: SeriesArgs) -> Result<u8, Failure> {
    let c = read_comodule(&args.module)?;
    let s = composition_series(&c)?;
    print!("{}", render::series(&s));
    Ok(0)
}
