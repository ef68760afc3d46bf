use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Spectra, energies, spanning trees and spectral identity checks for small
/// graphs. Graphs are read as graph6 or as a 0-based edge list (`n m`
/// header, one `u v` line per edge); the format is taken from the file
/// extension (`.g6`, `.el`) or sniffed from the contents.
#[derive(Debug, Parser)]
#[command(name = "specgraph", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sorted spectrum of the adjacency, Laplacian or signless Laplacian matrix.
    Spectra {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixArg::A)]
        matrix: MatrixArg,
    },
    /// Graph energy E, Laplacian energy LE or signless Laplacian energy LE+.
    Energy {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = EnergyArg::E)]
        kind: EnergyArg,
    },
    /// Applies a unary construction and/or combines with a second graph, then
    /// prints the resulting graph.
    Construct {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        op: Option<UnaryOp>,
        /// Iterations for `edc^k`, copies for `kfold`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "with", requires = "op2")]
        with: Option<PathBuf>,
        #[arg(long, value_enum, requires = "with")]
        op2: Option<BinaryOp>,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        out: FormatArg,
    },
    /// Spanning-tree count.
    Trees {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = TreeMethod::Exact)]
        method: TreeMethod,
    },
    /// Checks one spectral identity on the input graph.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        theorem: String,
        /// Second graph for identities about pairs; defaults to the input.
        #[arg(long = "in2")]
        input2: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Matrix for the product-spectrum identities.
        #[arg(long, value_enum)]
        matrix: Option<MatrixArg>,
        #[arg(long, default_value_t = 1e-7)]
        eps: f64,
    },
    /// Builds an equienergetic family instance and compares the closed-form
    /// Laplacian energy with direct computation. Omitted parameters take the
    /// smallest feasible values.
    Family {
        #[arg(long)]
        theorem: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: Option<PathBuf>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    A,
    L,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnergyArg {
    E,
    Le,
    #[value(name = "le+")]
    LePlus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnaryOp {
    Edc,
    #[value(name = "edc^k")]
    EdcK,
    Double,
    Kfold,
    Line,
    Complement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BinaryOp {
    Join,
    Cartesian,
    Kronecker,
    Union,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeMethod {
    Eigen,
    Exact,
    #[value(name = "edc-formula")]
    EdcFormula,
}
