use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use lefschetz_cli::commands::{self, CliError};
use lefschetz_cli::report::to_sorted_json;
use lefschetz_cli::{ParseOptions, Report};

const BASIS_HELP: &str = "\
Homology classes are integer vectors in the symplectic basis
(a_1, b_1, a_2, b_2, ..., a_g, b_g) of H_1 of the genus-g fiber, with
a_i . b_i = +1. Twists act by the transvection x -> x + e<x, c>c and a
word acts letter by letter, left to right.

Word files:
  genus <g>
  base disk|sphere
  section <k>                        (optional; needed for H1 over the sphere)
  twist <name>                       (B0..Bg, a, b, c)
  twist <exp> <2g ints> [separating]
A zero class without `separating` is taken as separating, with a warning
(an error under --strict). Disk-base fibers have one boundary component.
Lines starting with # are comments.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition violation.";

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Exact invariants of Lefschetz fibrations", after_help = BASIS_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the Stein filling S_g(n) built from the twisted relator W_g(n)
    Paper {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        twist_power: u64,
        /// Evaluate every n in N1..N2 (inclusive) instead of --twist-power
        #[arg(long, value_name = "N1..N2")]
        sweep: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Invariants of the fibration described by a word file
    Word {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Reject zero-class twists lacking the `separating` token instead of warning
        #[arg(long)]
        strict: bool,
    },
    /// Check that a word file's monodromy is the identity on homology
    Verify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Reject zero-class twists lacking the `separating` token instead of warning
        #[arg(long)]
        strict: bool,
    },
    /// H1 of the boundary of a plumbing of disk bundles over surfaces
    Plumbing {
        /// GENUS:EULER, one per vertex, numbered from 0
        #[arg(long = "vertex", value_name = "GENUS:EULER", required = true, allow_hyphen_values = true)]
        vertices: Vec<String>,
        /// I-J, joining vertices I and J
        #[arg(long = "edge", value_name = "I-J")]
        edges: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

fn emit(reports: &[Report], json: bool) {
    if json {
        if let [one] = reports {
            print!("{}", one.to_json());
        } else {
            print!("{}", to_sorted_json(&reports));
        }
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{r}");
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Paper {
            genus,
            twist_power,
            sweep,
            json,
        } => {
            let reports = match sweep {
                Some(range) => {
                    let (lo, hi) = commands::parse_sweep(&range)?;
                    commands::sweep(genus, lo, hi)?
                }
                None => vec![commands::paper(genus, twist_power)?],
            };
            emit(&reports, json);
        }
        Command::Word {
            path,
            json,
            strict,
        } => {
            let wf = commands::load_word_file(
                &path,
                ParseOptions {
                    strict,
                },
            )?;
            for w in &wf.warnings {
                eprintln!("warning: {w}");
            }
            emit(&[commands::word(&wf)?], json);
        }
        Command::Verify {
            path,
            json,
            strict,
        } => {
            let wf = commands::load_word_file(
                &path,
                ParseOptions {
                    strict,
                },
            )?;
            emit(&[commands::verify(&wf)?], json);
        }
        Command::Plumbing { vertices, edges, json } => {
            let vertices = vertices
                .iter()
                .map(|v| commands::parse_vertex(v))
                .collect::<Result<Vec<_>, _>>()?;
            let edges = edges
                .iter()
                .map(|e| commands::parse_edge(e))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&[commands::plumbing(vertices, edges)?], json);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
