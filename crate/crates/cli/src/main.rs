//! `redwords` — verification harness and utility CLI for reduced-word graphs.
//!
//! Verification subcommands print one report line per claim (JSONL by
//! default) and encode the overall outcome in the exit status: `0` when every
//! claim was verified, `2` when some claim found a counterexample, `3` when
//! some claim could not be settled under the given budgets, and `1` for usage
//! or internal errors. Reports never say "verified" on the strength of a
//! truncated search; sound lower bounds may still certify inequalities.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use commands::Budgets;
use report::Format;

#[derive(Parser)]
#[command(name = "redwords", version, about = "Reduced-word graph toolkit")]
struct Cli {
    /// Largest number of reduced words any single graph may materialize.
    #[arg(long, global = true, default_value_t = 50_000)]
    budget_vertices: usize,

    /// Largest number of BFS sources per diameter computation; beyond it the
    /// result is a lower bound, not an exact diameter.
    #[arg(long, global = true, default_value_t = 20_000)]
    budget_sources: usize,

    /// Directory for binary graph caches.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    format: Format,

    /// Worker threads for parallel scans (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// Selects one group element by family, rank, and window notation.
#[derive(Args)]
struct ElementArgs {
    /// Group family: A, B, or D.
    #[arg(long = "type", value_name = "FAMILY")]
    family: String,

    #[arg(long)]
    rank: u8,

    /// Window notation, comma separated, e.g. "3,-1,2".
    #[arg(long, allow_hyphen_values = true)]
    window: String,
}

impl ElementArgs {
    fn element(&self) -> Result<redwords::GroupElement> {
        commands::parse_element(&self.family, self.rank, &self.window)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that twice the diameter is at least the rank-two subsystem
    /// count for every symmetric-group element up to a degree.
    VerifyALowerBound {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Check that the diameter meets half the subsystem count exactly for
    /// the prefix/jump/suffix windows, equivalently the pattern-avoiding
    /// ones.
    VerifyEquality {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Check the upper bound: diameter at most subsystem count minus the
    /// number of 3412 occurrences.
    #[command(name = "verify-3412")]
    Verify3412 {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Check that three times the diameter is at least the subsystem count
    /// for signed permutations: exhaustive through rank 3, sampled at rank 4.
    VerifyBConjecture {
        #[arg(long, default_value_t = 4)]
        n_max: u8,
        /// Rank-4 sample size (fixed seed, so reruns agree).
        #[arg(long, default_value_t = 48)]
        samples: usize,
    },
    /// Check the valley family: two reduced words, diameter one, linearly
    /// many subsystems.
    VerifyDExample {
        #[arg(long, default_value_t = 8)]
        n_max: u8,
    },
    /// Run the battery around the longest element of D_rank: subsystem-count
    /// formula, factored word's root ordering, defect bound, diameter
    /// window, and the search for a separation-realizing word.
    #[command(name = "d-w0-suite")]
    DW0Suite {
        #[arg(long, default_value_t = 4)]
        rank: u8,
        /// Scan every word with the streaming criterion instead of stopping
        /// at the vertex budget (hours at rank 5).
        #[arg(long)]
        full_accessibility: bool,
    },
    /// Print facts about one element, graph, subsystem list, or the
    /// coefficient table.
    Dump {
        #[command(subcommand)]
        target: DumpTarget,
    },
    /// List every reduced word of an element, one per line.
    Enumerate {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Build (or load from cache) one word graph and report its diameter.
    Diameter {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Count the rank-two subsystems of an element, broken down by kind.
    L2 {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Count pattern occurrences in a one-line permutation window.
    Patterns {
        /// Permutation in one-line notation, comma separated.
        #[arg(long)]
        window: String,
        /// Comma-separated pattern list, e.g. "321,3412"; defaults to the
        /// coefficient-table patterns.
        #[arg(long)]
        patterns: Option<String>,
    },
    /// Print the pattern coefficient table.
    Table,
}

#[derive(Subcommand)]
enum DumpTarget {
    /// Window, length, and inversion set of one element.
    Element {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the word graph and write it to the cache directory.
    Graph {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// The rank-two subsystems of an element with their positive roots.
    L2 {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The pattern coefficient table.
    Table {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(jobs) = cli.jobs {
        // A second initialization (e.g. in tests) is harmless; the first pool wins.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let budgets = Budgets { vertices: cli.budget_vertices, sources: cli.budget_sources };
    let format = cli.format;
    match cli.command {
        Command::VerifyALowerBound { n_max } => {
            let report = commands::verify_a_lower_bound(n_max, budgets)?;
            Ok(report::emit_and_code(&[report], format))
        }
        Command::VerifyEquality { n_max } => {
            let report = commands::verify_equality(n_max, budgets)?;
            Ok(report::emit_and_code(&[report], format))
        }
        Command::Verify3412 { n_max } => {
            let report = commands::verify_3412(n_max, budgets)?;
            Ok(report::emit_and_code(&[report], format))
        }
        Command::VerifyBConjecture { n_max, samples } => {
            let report = commands::verify_b_conjecture(n_max, samples, budgets)?;
            Ok(report::emit_and_code(&[report], format))
        }
        Command::VerifyDExample { n_max } => {
            let report = commands::verify_d_example(n_max, budgets)?;
            Ok(report::emit_and_code(&[report], format))
        }
        Command::DW0Suite { rank, full_accessibility } => {
            let reports = commands::d_w0_suite(rank, full_accessibility, budgets)?;
            Ok(report::emit_and_code(&reports, format))
        }
        Command::Dump { target } => match target {
            DumpTarget::Element { element, out } => {
                commands::dump_element(&element.element()?, format, out.as_deref())?;
                Ok(0)
            }
            DumpTarget::Graph { element } => {
                let dir = cli
                    .cache_dir
                    .ok_or_else(|| anyhow::anyhow!("dump graph requires --cache-dir"))?;
                commands::dump_graph(&element.element()?, budgets, &dir)?;
                Ok(0)
            }
            DumpTarget::L2 { element, out } => {
                commands::dump_l2(&element.element()?, format, out.as_deref())?;
                Ok(0)
            }
            DumpTarget::Table { out } => {
                let content = commands::render_table(format);
                match out {
                    Some(path) => std::fs::write(path, content)?,
                    None => print!("{content}"),
                }
                Ok(0)
            }
        },
        Command::Enumerate { element } => commands::enumerate(&element.element()?, budgets, format),
        Command::Diameter { element } => {
            commands::diameter(&element.element()?, budgets, cli.cache_dir.as_deref())
        }
        Command::L2 { element } => {
            commands::l2_breakdown(&element.element()?)?;
            Ok(0)
        }
        Command::Patterns { window, patterns } => {
            commands::patterns(&window, patterns.as_deref(), format)?;
            Ok(0)
        }
        Command::Table => {
            print!("{}", commands::render_table(format));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are success; anything else is a
            // usage error, reported on code 1 so that 2 stays reserved for
            // counterexamples.
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
