use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use symbreak_core::Budget;

use crate::input::InputArgs;

#[derive(Parser, Debug)]
#[command(name = "symbreak", version, about = "Determining numbers and determining indices of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Search budget in nodes, or `unlimited`.
    #[arg(long, global = true, env = "SYMBREAK_BUDGET", value_name = "NODES", value_parser = parse_budget)]
    pub budget: Option<BudgetLimit>,
    /// Leave witnesses, generators and matrices out of the report.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Worker threads for corpus runs (default: available parallelism).
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetLimit {
    Nodes(u64),
    Unlimited,
}

impl BudgetLimit {
    pub fn budget(self) -> Budget {
        match self {
            BudgetLimit::Nodes(n) => Budget::new(n),
            BudgetLimit::Unlimited => Budget::unlimited(),
        }
    }
}

impl Default for BudgetLimit {
    fn default() -> Self {
        BudgetLimit::Nodes(Budget::DEFAULT_LIMIT)
    }
}

fn parse_budget(s: &str) -> Result<BudgetLimit, String> {
    if s.eq_ignore_ascii_case("unlimited") {
        return Ok(BudgetLimit::Unlimited);
    }
    match s.replace('_', "").parse::<u64>() {
        Ok(n) if n > 0 => Ok(BudgetLimit::Nodes(n)),
        _ => Err(format!("`{s}` is not a positive node count or `unlimited`")),
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Automorphism group: order, generators, vertex orbits.
    Aut(InputArgs),
    /// Determining number with a lexicographically least minimum witness.
    Det(InputArgs),
    /// Determining index with a minimum edge witness.
    DetIndex(InputArgs),
    /// Is a vertex set determining?
    CheckVertexSet {
        #[command(flatten)]
        input: InputArgs,
        /// Vertices, e.g. `0,2,5`.
        #[arg(long)]
        set: String,
    },
    /// Is an edge set determining?
    CheckEdgeSet {
        #[command(flatten)]
        input: InputArgs,
        /// Edges, e.g. `0-1,2-3`.
        #[arg(long)]
        set: String,
    },
    /// Symmetry properties, twins and (on small graphs) distinguishing values.
    Props(InputArgs),
    /// Checks `det' <= det <= 2 det'`, the `det = 1` dichotomy, the line graph
    /// comparison and, for trees, `det = det'`.
    Bounds(InputArgs),
    /// Formula values for a family member compared with exhaustive search.
    Family {
        /// path, cycle, star, complete, complete-bipartite, hypercube or join-nk.
        kind: String,
        params: Vec<String>,
    },
    /// Minimum edge determining set of Q_n built from its characteristic matrix.
    QnConstruct { n: usize },
    /// Checks the Q_4 edge set whose endpoints contain no minimum vertex determining set.
    Q4Check,
    /// Compares n - ceil(log2 n) with 2^(ceil(log2 n) - 1) for n = 3..=max.
    Series {
        #[arg(long, default_value_t = 64)]
        max: u64,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Csv)]
        format: SeriesFormat,
    },
    /// Runs a TOML manifest of graphs and expected values.
    Corpus { manifest: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Csv,
    Json,
}
