//! Command-line front end: construct, inspect, enumerate, classify,
//! verify. Emits tables, JSON, and DOT.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use floplen::classify::ClassificationReport;
use floplen::verify::VerificationReport;
use floplen::{AdeType, Vertex, build_ade};

pub mod dot;
pub mod render;
pub mod schema;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    /// Graph-bearing subcommands only (diagram, fundcycle, mark).
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "floplen",
    version,
    about = "ADE dual graphs of threefold flops: fundamental cycles, the length invariant, and a \
             machine-checkable classification"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Rank bound for the A and D families in enumerations and sweeps.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_rank: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an ADE configuration (A<n>, D<n> or E<n>).
    Diagram {
        /// Type, e.g. E8.
        type_spec: String,
        /// Annotate with the fundamental cycle.
        #[arg(long)]
        fundcycle: bool,
        /// Add a legend mapping vertex identifiers to positions.
        #[arg(long)]
        describe: bool,
    },
    /// Compute the fundamental cycle of a configuration.
    Fundcycle {
        type_spec: String,
        /// Show the saturation steps.
        #[arg(long)]
        trace: bool,
    },
    /// Mark a vertex and print the length, components, and multiplicities.
    Mark {
        type_spec: String,
        vertex: u32,
        #[arg(long)]
        describe: bool,
    },
    /// List all marked diagrams of a given length, up to automorphism.
    Enumerate { length: i64 },
    /// Run the case analysis for one length; exit 0 iff the survivor
    /// matches the classification table.
    Classify { length: i64 },
    /// Run the whole verification suite; exit 0 iff every fact passes.
    Verify,
}

pub fn classification_exit(report: &ClassificationReport) -> i32 {
    if report.is_verified() {
        0
    } else {
        1
    }
}

pub fn verification_exit(report: &VerificationReport) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Diagram {
            type_spec,
            fundcycle,
            describe,
        } => {
            let t: AdeType = type_spec.parse().map_err(stringify)?;
            let config = build_ade(t);
            let cycle = fundcycle.then(|| floplen::ade_fundamental_cycle(t));
            let out = match cli.format {
                OutputFormat::Table => render::diagram_table(t, &config, cycle.as_ref(), *describe),
                OutputFormat::Json => {
                    schema::to_pretty(&schema::diagram_json(t, &config, cycle.as_ref()))
                }
                OutputFormat::Dot => {
                    dot::render(&t.to_string(), &config, cycle.as_ref(), None)
                }
            };
            print!("{out}");
            Ok(0)
        }
        Command::Fundcycle { type_spec, trace } => {
            let t: AdeType = type_spec.parse().map_err(stringify)?;
            let config = build_ade(t);
            let computation =
                floplen::laufer_fundamental_cycle(&config).map_err(stringify)?;
            let out = match cli.format {
                OutputFormat::Table => render::fundcycle_table(t, &computation, *trace),
                OutputFormat::Json => {
                    schema::to_pretty(&schema::fundcycle_json(&computation, *trace))
                }
                OutputFormat::Dot => {
                    dot::render(&t.to_string(), &config, Some(&computation.result), None)
                }
            };
            print!("{out}");
            Ok(0)
        }
        Command::Mark {
            type_spec,
            vertex,
            describe,
        } => {
            let t: AdeType = type_spec.parse().map_err(stringify)?;
            let marked = floplen::mark(t, Vertex(*vertex)).map_err(stringify)?;
            let resolution = floplen::partial_resolution(&marked);
            let out = match cli.format {
                OutputFormat::Table => render::mark_table(&resolution, *describe),
                OutputFormat::Json => schema::to_pretty(&schema::mark_json(&resolution)),
                OutputFormat::Dot => dot::render(
                    &format!("{t} marked at {vertex}"),
                    marked.config(),
                    Some(marked.fundamental_cycle()),
                    Some(marked.marked_vertex()),
                ),
            };
            print!("{out}");
            Ok(0)
        }
        Command::Enumerate { length } => {
            let found = floplen::enumerate_marked(*length, cli.max_rank).map_err(stringify)?;
            let out = match cli.format {
                OutputFormat::Table => render::enumerate_table(*length, cli.max_rank, &found),
                OutputFormat::Json => {
                    let candidates: Vec<schema::CandidateJson> =
                        found.iter().map(schema::candidate_json).collect();
                    schema::to_pretty(&candidates)
                }
                OutputFormat::Dot => return Err(no_dot("enumerate")),
            };
            print!("{out}");
            Ok(0)
        }
        Command::Classify { length } => {
            let report = floplen::classify(*length, cli.max_rank).map_err(stringify)?;
            let out = match cli.format {
                OutputFormat::Table => render::classify_table(&report, cli.max_rank),
                OutputFormat::Json => schema::to_pretty(&schema::classify_json(&report)),
                OutputFormat::Dot => return Err(no_dot("classify")),
            };
            print!("{out}");
            Ok(classification_exit(&report))
        }
        Command::Verify => {
            let report = floplen::run_verification(cli.max_rank).map_err(stringify)?;
            let out = match cli.format {
                OutputFormat::Table => render::verify_table(&report),
                OutputFormat::Json => schema::to_pretty(&schema::verify_json(&report)),
                OutputFormat::Dot => return Err(no_dot("verify")),
            };
            print!("{out}");
            Ok(verification_exit(&report))
        }
    }
}

fn stringify(e: floplen::Error) -> String {
    e.to_string()
}

fn no_dot(command: &str) -> String {
    format!("dot output is only available for graph-bearing subcommands, not `{command}`")
}
