use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bicluster_cli::format::{format_edit_script, format_graph, parse_graph};
use bicluster_cli::gen::generate;
use bicluster_cli::witness::find_witness;
use bicluster_core::branching::{self, BranchRule};
use bicluster_core::{enumerate, solver, Graph};

/// Exact editing of graphs into bicluster graphs (disjoint unions of
/// complete bipartite components).
#[derive(Parser)]
#[command(name = "bicluster", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether at most `k` edge edits suffice; prints an edit script
    /// on yes, `NO` on no.
    Decide { file: PathBuf, k: usize },

    /// Compute a minimum edit script with the search-tree solver.
    Solve { file: PathBuf },

    /// Classify the graph; prints a witness (triangle, odd cycle, or
    /// induced path) when it is not a bicluster graph.
    Recognize { file: PathBuf },

    /// Compute a minimum edit script by exhaustive search (small graphs
    /// only); cross-check for `solve`.
    MinEdits { file: PathBuf },

    /// Evaluate every branching configuration, print per-case vectors and
    /// numbers, and check the maximum against the certified bound.
    VerifyBranching {
        /// Restrict the report to one rule.
        #[arg(long, value_enum)]
        rule: Option<RuleArg>,

        /// Keep one case per path-reversal mirror pair.
        #[arg(long)]
        mirror_reduce: bool,
    },

    /// Emit a random bicluster graph on `n` vertices perturbed by `budget`
    /// random edge toggles; deterministic per seed.
    Gen { n: usize, budget: usize, seed: u64 },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    B1,
    B2,
    B3,
}

impl From<RuleArg> for BranchRule {
    fn from(rule: RuleArg) -> Self {
        match rule {
            RuleArg::B1 => BranchRule::B1,
            RuleArg::B2 => BranchRule::B2,
            RuleArg::B3 => BranchRule::B3,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: bicluster_cli::ParseError,
    },

    #[error(transparent)]
    Core(#[from] bicluster_core::Error),

    #[error(transparent)]
    Gen(#[from] bicluster_cli::GenError),
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Decide { file, k } => {
            let graph = load_graph(&file)?;
            match solver::decide(&graph, k)? {
                Some(edits) => {
                    print!("{}", format_edit_script(&graph, &edits));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NO");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Solve { file } => {
            let graph = load_graph(&file)?;
            let solution = solver::solve_minimum(&graph)?;
            print!("{}", format_edit_script(&graph, &solution.edits));
            Ok(ExitCode::SUCCESS)
        }
        Command::Recognize { file } => {
            let graph = load_graph(&file)?;
            match find_witness(&graph) {
                None => {
                    println!("BICLUSTER");
                    Ok(ExitCode::SUCCESS)
                }
                Some(witness) => {
                    println!("NOT-BICLUSTER");
                    println!("{witness}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::MinEdits { file } => {
            let graph = load_graph(&file)?;
            let edits = enumerate::minimum_editing_set(&graph)?;
            print!("{}", format_edit_script(&graph, &edits));
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyBranching {
            rule,
            mirror_reduce,
        } => {
            let report = branching::verify_all(rule.map(BranchRule::from), mirror_reduce);
            println!("{report}");
            if report.verified() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Gen { n, budget, seed } => {
            let out = generate(n, budget, seed)?;
            println!("# planted budget {}", out.planted);
            print!("{}", format_graph(&out.graph));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    // conventional pipeline behavior: die quietly when stdout is closed
    // (e.g. `bicluster verify-branching | head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
