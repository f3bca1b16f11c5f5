//! `tperf`: batch front end for the t-perfection toolkit. Every command except
//! `gen` prints a JSON report; the exit code is 0 (holds), 1 (fails, with a
//! certificate), 2 (input error) or 3 (resource exhaustion).

mod cert;
mod check;
mod error;
mod input;
mod report;
mod suites;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use tperf_core::graph::corpus::{graphs_up_to, CorpusFilter};
use tperf_core::graph::formats::{to_dimacs, to_graph6};

use check::{CheckOptions, Property};
use error::CliError;
use report::{InputDescriptor, Report, SweepSummary, Timings, Verdict};

#[derive(Parser, Debug)]
#[command(name = "tperf", version, about = "Exact checks for t-perfect graphs")]
struct Cli {
    /// Record wall-clock time in the report. Off by default so reports are reproducible.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dimacs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Filter {
    All,
    P5free,
    Nearbip,
}

impl From<Filter> for CorpusFilter {
    fn from(f: Filter) -> Self {
        match f {
            Filter::All => CorpusFilter::All,
            Filter::P5free => CorpusFilter::P5Free,
            Filter::Nearbip => CorpusFilter::NearBip,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generated graph.
    Gen {
        /// antiweb, cycle, cycle-power, wheel, path, complete, moebius or named
        kind: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Decide one property of one graph.
    Check {
        /// `kind:params` generator (e.g. `antiweb:13:3`), `@file`, `-` for stdin, or graph6
        graph: Option<String>,
        /// p5free | nearbip | tperfect | oddgirth | chif | colour K | harmonious | oddpair U V
        #[arg(long, required = true, num_args = 1..=4, value_name = "PROPERTY")]
        property: Vec<String>,
        /// Let tperfect fall back to the polytope oracle when no recogniser applies.
        #[arg(long)]
        oracle: bool,
        /// Run the oracle above its default vertex limit.
        #[arg(long)]
        force_long: bool,
    },
    /// Re-run one of the reproduction suites.
    VerifyPaper {
        #[arg(long, value_enum)]
        suite: suites::Suite,
        /// Corpus size for suites that sweep small graphs.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Check an assertion over every graph of a corpus.
    Sweep {
        /// Generate every graph up to this many vertices.
        #[arg(long, required_unless_present = "input")]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "all")]
        filter: Filter,
        #[arg(long = "assert", value_enum)]
        assertion: sweep::Assertion,
        /// Read graphs from a graph6 file instead of generating them.
        #[arg(long, conflicts_with = "max_n")]
        input: Option<PathBuf>,
        #[arg(long)]
        force_long: bool,
    },
}

fn run_check(
    report: &mut Report,
    graph: Option<String>,
    mut words: Vec<String>,
    opts: CheckOptions,
) -> Result<(), CliError> {
    // `--property` takes a variable number of values, so a trailing graph argument
    // may have been swallowed by it.
    let mut graph = graph;
    let arity = Property::arity(&words[0]).unwrap_or(0);
    if graph.is_none() && words.len() == arity + 2 {
        graph = words.pop();
    }
    let prop = Property::parse(&words)?;
    let arg = graph.ok_or_else(|| CliError::input("missing graph argument"))?;
    let g = input::read_graph(&arg)?;
    report.input = Some(InputDescriptor::new(arg, &g));
    report.verdicts.push(check::check(&g, prop, opts)?);
    Ok(())
}

fn run_sweep(
    report: &mut Report,
    max_n: Option<usize>,
    filter: Filter,
    assertion: sweep::Assertion,
    input: Option<PathBuf>,
    force_long: bool,
) -> Result<(), CliError> {
    let cf = CorpusFilter::from(filter);
    let (graphs, source) = match &input {
        Some(path) => {
            let path = path.to_string_lossy();
            let all = input::read_graph6_file(&path)?;
            (all.into_iter().filter(|g| cf.accepts(g)).collect(), path.to_string())
        }
        None => (graphs_up_to(max_n.expect("clap enforces --max-n"), cf), "corpus".to_string()),
    };
    let r = sweep::sweep(assertion, &graphs, force_long)?;
    let holds = r.counterexamples.is_empty();
    let name = assertion.name();
    report.verdicts.push(
        Verdict::new(format!("sweep {name}"), holds, report::Mode::OracleExhaustive).value(serde_json::json!({
            "graphs": r.graphs,
            "applicable": r.applicable,
            "counterexamples": r.counterexamples.len(),
            "resource_failures": r.resource_failures.len(),
        })),
    );
    report.sweep = Some(SweepSummary {
        assertion: name,
        filter: format!("{filter:?}").to_lowercase(),
        source,
        max_n,
        graphs: r.graphs,
        applicable: r.applicable,
        counterexamples: r.counterexamples,
        resource_failures: r.resource_failures,
    });
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let argv: Vec<String> = std::env::args().skip(1).collect();

    let (mut report, r) = match cli.command {
        Command::Gen { kind, params, format } => {
            return match input::generate(&kind, &params) {
                Ok(g) => {
                    match format {
                        Format::Graph6 => println!("{}", to_graph6(&g)),
                        Format::Dimacs => print!("{}", to_dimacs(&g)),
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("tperf: {e}");
                    ExitCode::from(2)
                }
            };
        }
        Command::Check { graph, property, oracle, force_long } => {
            let mut report = Report::new("check", argv);
            let r = run_check(&mut report, graph, property, CheckOptions { oracle, force_long });
            (report, r)
        }
        Command::VerifyPaper { suite, max_n } => {
            let mut report = Report::new("verify-paper", argv);
            let r = suites::run(suite, max_n).map(|v| report.verdicts = v);
            (report, r)
        }
        Command::Sweep { max_n, filter, assertion, input, force_long } => {
            let mut report = Report::new("sweep", argv);
            let r = run_sweep(&mut report, max_n, filter, assertion, input, force_long);
            (report, r)
        }
    };
    match r {
        Ok(()) => report.settle(),
        Err(e) => report.fail_with(e),
    }
    if cli.timings {
        report.timings = Some(Timings { total_ms: start.elapsed().as_millis() });
    }
    println!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
    ExitCode::from(report.status.exit_code() as u8)
}
