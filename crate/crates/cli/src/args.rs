//! Command-line argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Output rendering formats. JSON is the canonical machine format; CSV
/// flattens one row per reported item; text is for humans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Biharmonic-index toolkit: compute index reports, verify spectral
/// inequalities, and run extremal scans over trees and small graphs.
#[derive(Debug, Parser)]
#[command(name = "bhix", version, about)]
pub struct Cli {
    /// Output format (stdout carries pure data; diagnostics go to
    /// stderr).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for sweep commands. Defaults to the available
    /// cores; 1 forces a deterministic sequential order.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the full index report of one graph.
    Compute(InputArgs),
    /// Evaluate every inequality on one graph, or exhaustively over all
    /// connected graphs of a small order.
    VerifyBounds(VerifyBoundsArgs),
    /// Extremal scans over trees, small graphs, and closed-form
    /// families.
    Scan {
        #[command(subcommand)]
        which: ScanCommand,
    },
    /// Build a complement/join/cartesian/lexicographic product and
    /// compare its predicted index with the directly computed one.
    Product(ProductArgs),
}

/// One input graph: exactly one source among a named family, a graph6
/// string, or an edge-list file.
#[derive(Debug, Args, Default)]
pub struct InputArgs {
    /// Family name: star, path, complete, cycle, double-star, firefly.
    #[arg(long)]
    pub family: Option<String>,

    /// Order, for star/path/complete/cycle (also the sweep order for
    /// `verify-bounds --exhaustive`).
    #[arg(long)]
    pub n: Option<usize>,

    /// Leaf count on the first hub (double-star).
    #[arg(long)]
    pub a: Option<usize>,

    /// Leaf count on the second hub (double-star).
    #[arg(long)]
    pub b: Option<usize>,

    /// Triangle count (firefly).
    #[arg(long)]
    pub s: Option<usize>,

    /// Pendant-path count (firefly).
    #[arg(long)]
    pub t: Option<usize>,

    /// Pendant-edge count (firefly).
    #[arg(long)]
    pub q: Option<usize>,

    /// Literal graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,

    /// Path to an edge-list file: first line `n` or `n m`, then one
    /// `u v` pair per line; `#` starts a comment.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyBoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Sweep every adjacency mask on `--n` vertices instead of checking
    /// one graph.
    #[arg(long)]
    pub exhaustive: bool,

    /// Comma-separated exponents for the power-mean bound (fractions
    /// like `1/3` are accepted). Defaults to 1/3, 2/3, 1, 2.
    #[arg(long)]
    pub p: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ScanCommand {
    /// Evaluate every free tree of one order; certify the star as the
    /// unique minimum and the path as the unique maximum.
    Trees {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive diameter-2 maximality sweep over all adjacency masks.
    Diameter2 {
        #[arg(long)]
        n: usize,
    },
    /// Check that trees whose diameter reaches `pi (7n/8)^{1/4} - 1`
    /// strictly beat the star.
    T52 {
        #[arg(long)]
        n: usize,
    },
    /// Replay family closed forms and factored polynomials up to an
    /// order cap.
    Families {
        #[arg(long = "n-max")]
        n_max: usize,
    },
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// Operation: complement, join, cartesian, or lex.
    #[arg(long)]
    pub op: String,

    /// First operand: a file containing a graph6 line (or an edge
    /// list), or a literal graph6 string.
    #[arg(long)]
    pub a: String,

    /// Second operand (binary operations only), same forms as --a.
    #[arg(long)]
    pub b: Option<String>,
}
