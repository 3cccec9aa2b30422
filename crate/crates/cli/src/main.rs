mod commands;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Failure, Output};

/// Build, compare and verify de Bruijn, spider-web and lamplighter graphs.
#[derive(Debug, Parser)]
#[command(name = "spiderweb", version)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for results when --out is not given.
    #[arg(long, global = true, env = "SPIDERWEB_OUT")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Debruijn,
    Spiderweb,
    Cycle,
    Rose,
    Theta,
    Schreier,
    SwAction,
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Number of slices (or the `l` of a finite quotient).
    #[arg(long)]
    m: Option<usize>,
    /// Half-width of the window standing in for an infinite cycle.
    #[arg(long, conflicts_with = "m")]
    window: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph of one of the built-in families.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// Emit the underlying non-oriented graph.
        #[arg(long)]
        underlying: bool,
    },
    /// Tensor product or line graph of graph files.
    Product {
        #[command(subcommand)]
        op: ProductOp,
    },
    /// Derangement of a graph (per component when disconnected).
    Derange { graph: PathBuf },
    /// Predicted and actual component counts of `G ⊗ C_M`.
    Components {
        graph: Option<PathBuf>,
        #[arg(long, conflicts_with = "graph")]
        family: Option<Family>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Length of the cycle factor.
        #[arg(long)]
        m: usize,
    },
    /// Lamplighter Schreier graphs, Cayley balls and the Kesten measure.
    Lamplighter {
        #[command(subcommand)]
        op: LampOp,
    },
    /// Isomorphism search between two graph files.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "weak")]
        kind: String,
        /// Pair of roots `u,v` to be matched.
        #[arg(long)]
        root: Option<String>,
    },
    /// Eulerian circuit of an oriented graph, as edge ids.
    Euler { graph: PathBuf },
    /// Hamiltonian cycle of an oriented graph, as edge ids.
    Hamilton {
        graph: PathBuf,
        #[arg(long, default_value_t = 10_000_000)]
        cap: u64,
    },
    /// Spectrum of the underlying spider-web graph, as CSV.
    Spectrum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Add a column counting eigenvalues from a numeric eigensolver.
        #[arg(long)]
        numeric: bool,
        /// Print the expanded characteristic polynomial instead.
        #[arg(long)]
        expand: bool,
    },
    /// Ball statistics and spectral distances along spider-web graphs.
    Converge {
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Semicolon-separated `N,M` pairs.
        #[arg(long, default_value = "2,2;4,4;8,8")]
        pairs: String,
        #[arg(long, default_value_t = 2)]
        rmax: usize,
    },
    /// Run a verification suite and print a JSON report.
    Verify(suites::VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum ProductOp {
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    Line {
        a: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
}

#[derive(Debug, Subcommand)]
enum LampOp {
    Schreier {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    CayleyBall {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    Kesten {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 30)]
        qmax: u64,
    },
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let out = Output::new(cli.out, cli.out_dir);
    match cli.command {
        Command::Gen {
            family,
            format,
            underlying,
        } => commands::gen(&out, &family, format, underlying),
        Command::Product { op } => match op {
            ProductOp::Tensor { a, b, format } => commands::tensor(&out, &a, &b, format),
            ProductOp::Line { a, format } => commands::line(&out, &a, format),
        },
        Command::Derange { graph } => commands::derange(&out, &graph),
        Command::Components {
            graph,
            family,
            k,
            n,
            m,
        } => commands::components(&out, graph.as_deref(), family, k, n, m),
        Command::Lamplighter { op } => match op {
            LampOp::Schreier { k, n, format } => commands::schreier(&out, k, n, format),
            LampOp::CayleyBall { k, r, format } => commands::cayley_ball(&out, k, r, format),
            LampOp::Kesten { k, qmax } => commands::kesten(&out, k, qmax),
        },
        Command::Iso { a, b, kind, root } => commands::iso(&out, &a, &b, &kind, root.as_deref()),
        Command::Euler { graph } => commands::euler(&out, &graph),
        Command::Hamilton { graph, cap } => commands::hamilton(&out, &graph, cap),
        Command::Spectrum {
            k,
            n,
            m,
            numeric,
            expand,
        } => commands::spectrum(&out, k, n, m, numeric, expand),
        Command::Converge { k, pairs, rmax } => commands::converge(&out, k, &pairs, rmax),
        Command::Verify(args) => suites::verify(&out, &args, cli.seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
