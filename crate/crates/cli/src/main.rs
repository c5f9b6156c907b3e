//! `oddcycle`: h-vectors of toric rings of odd cycles, with verdicts.
//!
//! Exit codes: 0 when every check is internally consistent, 1 on usage
//! errors, 2 when a mathematical inconsistency is detected.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddcycle::counting::{self, EhrhartCache};
use oddcycle::report::{self, Format, PipelineOptions, VerdictReport};
use oddcycle::Error;

#[derive(Parser, Debug)]
#[command(
    name = "oddcycle",
    version,
    about = "Exact h-vectors of toric rings of odd cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the h-vector of K[C_{2s+1}] and run every check on it.
    Hvector {
        #[arg(long)]
        s: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run `hvector` for every s in a range.
    Sweep {
        #[arg(long = "from")]
        from: u32,
        #[arg(long = "to")]
        to: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Facet table, codegree, interior points and reflexivity of the stable set polytope.
    Geometry {
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
        format: OutputFormat,
    },
    /// Inspect or clear the count cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[arg(long, default_value = "ehrhart-cache.jsonl")]
        cache: PathBuf,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum CacheAction {
    Inspect,
    Clear,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
    format: OutputFormat,
    /// Count cache, one JSON record per line.
    #[arg(long, default_value = "ehrhart-cache.jsonl")]
    cache: PathBuf,
    /// Recompute everything; neither read nor write the cache.
    #[arg(long)]
    no_cache: bool,
    /// Cross-check counts by brute-force enumeration where the budget allows.
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = report::DEFAULT_MAX_S)]
    max_s: u32,
    /// Candidate-point budget for brute-force counting.
    #[arg(long, env = counting::BUDGET_ENV, default_value_t = counting::DEFAULT_BRUTEFORCE_BUDGET)]
    budget: u128,
    /// Include wall-clock timing in reports.
    #[arg(long)]
    timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Md => Format::Markdown,
        }
    }
}

impl Common {
    fn options(&self) -> PipelineOptions {
        PipelineOptions {
            max_s: self.max_s,
            oracle: self.oracle,
            budget: self.budget,
            timing: self.timing,
        }
    }

    fn open_cache(&self) -> Result<Option<EhrhartCache>, Error> {
        if self.no_cache {
            Ok(None)
        } else {
            EhrhartCache::open(&self.cache).map(Some)
        }
    }
}

fn exit_for(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    if err.is_inconsistency() {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn emit(reports: &[VerdictReport], format: Format, single: bool) -> ExitCode {
    let text = match format {
        Format::Json if single => report::reports_to_json(&reports[0]),
        Format::Json => report::reports_to_json(&reports),
        Format::Csv => report::reports_to_csv(reports),
        Format::Markdown => report::reports_to_markdown(reports),
    };
    print!("{text}");
    for r in reports {
        for w in &r.warnings {
            eprintln!("{w}");
        }
    }
    if reports.iter().all(|r| r.consistent) {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: internal inconsistency detected");
        ExitCode::from(2)
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Hvector { s, common } => {
            let cache = match common.open_cache() {
                Ok(c) => c,
                Err(e) => return exit_for(&e),
            };
            match report::run_pipeline(s, &common.options(), cache.as_ref()) {
                Ok(r) => emit(&[r], common.format.into(), true),
                Err(e) => exit_for(&e),
            }
        }
        Command::Sweep { from, to, common } => {
            let cache = match common.open_cache() {
                Ok(c) => c,
                Err(e) => return exit_for(&e),
            };
            match report::run_sweep(from, to, &common.options(), cache.as_ref()) {
                Ok(reports) => {
                    let code = emit(&reports, common.format.into(), false);
                    if !matches!(common.format, OutputFormat::Json) {
                        eprintln!("conjecture shape:");
                        for r in &reports {
                            let status = if r.verdicts.conjecture_shape.holds {
                                "holds".to_string()
                            } else {
                                let w = &r.verdicts.conjecture_shape.witnesses[0];
                                format!("counterexample ({}) at index {}", w.explanation, w.index)
                            };
                            let label = match r.regime {
                                report::Regime::Reference => "",
                                report::Regime::Extrapolation => " [extrapolation]",
                            };
                            eprintln!("  s={}{label}: {status}", r.s);
                        }
                    }
                    code
                }
                Err(e) => exit_for(&e),
            }
        }
        Command::Geometry { s, format } => match report::run_geometry(s) {
            Ok(g) => {
                match format {
                    OutputFormat::Json => print!("{}", report::reports_to_json(&g)),
                    _ => print!("{}", report::geometry_to_markdown(&g)),
                }
                ExitCode::SUCCESS
            }
            Err(e) => exit_for(&e),
        },
        Command::Cache { action, cache } => {
            let cache = match EhrhartCache::open(&cache) {
                Ok(c) => c,
                Err(e) => return exit_for(&e),
            };
            match action {
                CacheAction::Inspect => {
                    let records = cache.records();
                    println!(
                        "{} records in {}",
                        records.len(),
                        cache.path().unwrap().display()
                    );
                    for r in records {
                        println!("s={} n={} {} {}", r.s, r.n, r.mode.as_str(), r.count);
                    }
                    ExitCode::SUCCESS
                }
                CacheAction::Clear => match cache.clear() {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => exit_for(&e),
                },
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Ok(threads) = std::env::var("ODDCYCLE_THREADS") {
        if let Ok(n) = threads.parse() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    run(cli)
}
