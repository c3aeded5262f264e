use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use poisson_homology::catalog::{build_structure, schouten_status, StructureId, StructureKind};
use poisson_homology::report::{applicable_suites, emit_report, run, write_report, Format, HomologyReport, RunConfig, Suite};
use poisson_homology::{Error, ExactScalar, Multivector};

/// Environment variable naming the default directory for report files.
const OUT_DIR_VAR: &str = "PHOM_OUT_DIR";

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_STRUCTURAL: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "phom", version, about = "Exact Poisson homology of r-matrix type structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print catalog structures with their bivectors.
    Catalog(CatalogArgs),
    /// Run identity and proposition suites.
    Check(RunArgs),
    /// Homology dimension tables on weight slices.
    Homology(RunArgs),
    /// First page of the weight spectral sequence and its convergence.
    Spectral(RunArgs),
    /// Every suite applicable to the structure.
    Report(RunArgs),
}

#[derive(Args)]
struct CatalogArgs {
    /// Only this structure; all named structures otherwise.
    #[arg(long)]
    structure: Option<String>,
    #[arg(long, default_value_t = 2)]
    n: usize,
}

#[derive(Args)]
struct RunArgs {
    /// Catalog name, e.g. `DrinfeldSklyanin` or `Pencil(1,2)`.
    #[arg(long, default_value = "DrinfeldSklyanin")]
    structure: String,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 4)]
    weight_cutoff: i64,
    /// Bound on `p` for σ cocycles, on `|m|` for the classifier grid and on the homogenization level.
    #[arg(long, default_value_t = 2)]
    p_max: u32,
    /// Bound on `q` for σ cocycles.
    #[arg(long, default_value_t = 2)]
    q_max: u32,
    /// Comma-separated suites; the subcommand's default set otherwise.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    #[arg(long, default_value = "json")]
    format: String,
    /// Report file; `$PHOM_OUT_DIR/<name>` or standard output otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for slice computations.
    #[arg(long)]
    jobs: Option<usize>,
    /// Record wall-clock time per suite.
    #[arg(long)]
    timing: bool,
    /// Keep all forms on cotangent slices instead of the balanced `i_H`-kernel part.
    #[arg(long)]
    full_forms: bool,
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidConfig(_) | Error::UnknownStructure(_) => EXIT_USAGE,
        Error::Io { .. } => EXIT_IO,
        _ => EXIT_STRUCTURAL,
    }
}

fn default_suites(command: &str, id: StructureId) -> Result<Vec<Suite>, Error> {
    let applicable = applicable_suites(id)?;
    let wanted: &[Suite] = match command {
        "check" => &[Suite::Identities, Suite::Eigen, Suite::Propositions],
        "homology" => &[Suite::Homology],
        "spectral" => &[Suite::Spectral],
        _ => &Suite::ALL,
    };
    Ok(wanted.iter().copied().filter(|s| applicable.contains(s)).collect())
}

fn config_from(command: &str, args: &RunArgs) -> Result<RunConfig, Error> {
    let mut config = RunConfig {
        structure: args.structure.clone(),
        n: args.n,
        weight_cutoff: args.weight_cutoff,
        p_max: args.p_max,
        q_max: args.q_max,
        suites: Vec::new(),
        format: args.format.parse::<Format>()?,
        full_forms: args.full_forms,
        timing: args.timing,
    };
    let id = config.validate()?;
    config.suites = if args.suite.is_empty() {
        default_suites(command, id)?
    } else {
        args.suite.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    Ok(config)
}

fn file_stem(command: &str, config: &RunConfig) -> String {
    let name: String = config.structure.chars().filter(|c| c.is_ascii_alphanumeric() || *c == '_').collect();
    format!("{name}-n{}-{command}.{}", config.n, config.format.extension())
}

fn output_path(command: &str, args: &RunArgs, config: &RunConfig) -> Option<PathBuf> {
    args.out
        .clone()
        .or_else(|| std::env::var_os(OUT_DIR_VAR).map(|dir| PathBuf::from(dir).join(file_stem(command, config))))
}

fn summarize(report: &HomologyReport) {
    let mut err = std::io::stderr().lock();
    for r in &report.results {
        let failed = r.checks.iter().filter(|c| !c.passed).count();
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(err, "{verdict} {} ({} checks, {failed} failed)", r.suite, r.checks.len());
    }
    for (r, c) in report.failures() {
        let _ = writeln!(err, "  failed: {} {} [{}]", r.suite, c.claim, c.subject);
    }
}

fn run_suites(command: &str, args: &RunArgs) -> Result<u8, Failure> {
    let config = config_from(command, args)?;
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {jobs} workers: {e}")))?;
    }
    let report = run(&config)?;
    match output_path(command, args, &config) {
        Some(path) => write_report(&report, config.format, &path)?,
        None => {
            let bytes = emit_report(&report, config.format)?;
            std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| Error::Io { path: "<stdout>".into(), message: e.to_string() })?;
        }
    }
    summarize(&report);
    Ok(if report.passed { 0 } else { EXIT_CHECK_FAILED })
}

fn catalog(args: &CatalogArgs) -> Result<u8, Failure> {
    let kinds: Vec<StructureKind> = match &args.structure {
        Some(name) => vec![name.parse()?],
        None => StructureKind::NAMED.to_vec(),
    };
    let mut out = std::io::stdout().lock();
    for kind in kinds {
        let id = StructureId::new(kind, args.n);
        let pi: Multivector = build_structure(id)?;
        let status = schouten_status::<ExactScalar>(id)?;
        writeln!(out, "{id}\n  weights: {:?}\n  schouten: {status:?}\n  bivector: {pi}", pi.weights())
            .map_err(|e| Error::Io { path: "<stdout>".into(), message: e.to_string() })?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Catalog(args) => catalog(args),
        Command::Check(args) => run_suites("check", args),
        Command::Homology(args) => run_suites("homology", args),
        Command::Spectral(args) => run_suites("spectral", args),
        Command::Report(args) => run_suites("report", args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
