use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "irrg",
    version,
    about = "Graph irregularity: reports, extremal constructions, degree sequences and exhaustive checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irregularity and Zagreb indices of a graph file
    Irr(IrrArgs),
    /// Build an extremal graph and compare its closed-form irregularity with a recomputation
    #[command(subcommand)]
    Extremal(ExtremalCommand),
    /// Maximal-irregularity graphs for n = 3..max-n from the degree-sequence bound
    Table1(Table1Args),
    /// Degree-sequence tools
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Exhaustive checks over all labeled graphs on at most 8 vertices
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Args)]
pub struct IrrArgs {
    /// Graph file, or `-` for standard input
    pub path: PathBuf,
    /// Input format; guessed from a `.g6`/`.graph6` extension when omitted
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub json: bool,
}

/// Where a constructed graph goes. Without `--out` the graph is written to
/// standard output and the report to standard error.
#[derive(Debug, Args)]
pub struct GraphOutput {
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum ExtremalCommand {
    /// Clique-star KS_{p,q}; with --n, the maximal one of that order (smaller p on ties)
    Ks {
        #[arg(long, conflicts_with_all = ["p", "q"], required_unless_present_all = ["p", "q"])]
        n: Option<usize>,
        #[arg(long, requires = "q")]
        p: Option<usize>,
        #[arg(long, requires = "p")]
        q: Option<usize>,
        #[command(flatten)]
        output: GraphOutput,
    },
    /// Fanned split graph with n vertices and cyclomatic number k
    Fs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: GraphOutput,
    },
    /// Chained clique-stars, given directly or by order and degree window
    Chain {
        #[arg(long, requires_all = ["p", "q"], conflicts_with = "n")]
        copies: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, requires = "max_degree", required_unless_present = "copies")]
        n: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, requires = "max_degree")]
        min_degree: Option<usize>,
        #[command(flatten)]
        output: GraphOutput,
    },
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, default_value_t = 14)]
    pub max_n: usize,
    /// Tab-separated rows in the layout of docs/table1.txt
    #[arg(long, conflicts_with = "json")]
    pub paper: bool,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Subcommand)]
pub enum SeqCommand {
    /// Erdős–Gallai test
    Check {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Havel–Hakimi realization
    Realize {
        sequence: String,
        #[command(flatten)]
        output: GraphOutput,
    },
    /// Every graphic sequence of length n, in decreasing lexicographic order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Print only the number of sequences
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Graphic sequences of length n maximizing the irregularity bound
    Maxbound {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
    /// Per-threshold terms of the irregularity bound for one sequence
    Bound {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct VerifyOptions {
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub json: bool,
    /// Directory receiving counterexample graphs
    #[arg(long, default_value = ".")]
    pub export: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Maximum over all graphs against the clique-star closed form
    Extremal {
        #[arg(long, default_value = "3..7")]
        n: IncRange,
        #[command(flatten)]
        options: VerifyOptions,
    },
    /// Maximum over connected graphs with n + k - 1 edges against the fanned split graph
    Kcyclic {
        #[arg(long, default_value = "4..7")]
        n: IncRange,
        /// Defaults to every feasible k
        #[arg(long)]
        k: Option<IncRange>,
        #[command(flatten)]
        options: VerifyOptions,
    },
    /// Degree-sequence bound against every graph
    Bounds {
        #[arg(long, default_value = "1..7")]
        n: IncRange,
        #[command(flatten)]
        options: VerifyOptions,
    },
    /// Minimum over connected graphs in each degree window against its bound
    Minirr {
        #[arg(long, default_value = "3..7")]
        n: IncRange,
        #[command(flatten)]
        options: VerifyOptions,
    },
}

/// Inclusive range written `a..b`, `a..=b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncRange {
    pub start: usize,
    pub end: usize,
}

impl IncRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for IncRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a nonnegative integer"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(IncRange { start, end })
    }
}

impl fmt::Display for IncRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("3..6".parse(), Ok(IncRange { start: 3, end: 6 }));
        assert_eq!("3..=6".parse(), Ok(IncRange { start: 3, end: 6 }));
        assert_eq!("7".parse(), Ok(IncRange { start: 7, end: 7 }));
        assert!("6..3".parse::<IncRange>().is_err());
        assert!("x..3".parse::<IncRange>().is_err());
    }

    #[test]
    fn definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
