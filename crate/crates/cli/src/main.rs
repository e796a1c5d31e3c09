//! `matchkit`: matching polynomials, matching energy and extremal checks
//! from the command line.
//!
//! Every subcommand prints one JSON document (or a CSV table with `--csv`)
//! on standard output. Exit status is 0 on success, 1 when a computation
//! fails or a checked claim does not hold, and 2 on usage errors.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "matchkit",
    version,
    about = "Matching polynomials and matching energy of simple graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Allow the slow enumeration orders 9 and 10.
    #[arg(long, global = true)]
    pub slow: bool,

    /// Relative tolerance of the energy quadrature.
    #[arg(long, global = true, value_name = "TOL")]
    pub tolerance: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Matching vector and matching polynomial of a graph.
    Mp(GraphInput),
    /// Matching energy of a graph, a matching vector or a family member.
    Me(EnergyInput),
    /// Quasi-order and energy difference of two matching vectors.
    Compare(CompareArgs),
    /// Members of the named graph families.
    Family(FamilyArgs),
    /// Closed-form analysis of the two maximal tricyclic families.
    #[command(subcommand)]
    Analysis(Analysis),
    /// Isomorph-free enumeration of graphs with n vertices and m edges.
    Enumerate(EnumerateArgs),
    /// Check an extremal claim at one order.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "graph")]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge list such as "0-1,1-2,2-0".
    #[arg(long)]
    pub edges: Option<String>,
}

#[derive(Args, Debug)]
pub struct GraphInput {
    #[command(flatten)]
    pub source: GraphSource,
    /// Vertex count for --edges (default: largest label + 1).
    #[arg(long, requires = "edges")]
    pub n: Option<usize>,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Quadrature,
    Roots,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["g6", "edges", "mvector", "family"])))]
pub struct EnergyInput {
    #[arg(long)]
    pub g6: Option<String>,
    #[arg(long)]
    pub edges: Option<String>,
    /// Comma-separated counts m(G,0), m(G,1), ...
    #[arg(long)]
    pub mvector: Option<String>,
    /// Family id, see `family --help`.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, requires = "family")]
    pub k: Option<usize>,
    #[arg(long, requires = "family")]
    pub l: Option<usize>,
    #[arg(long, value_enum, default_value = "quadrature")]
    pub method: MethodArg,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long)]
    pub mvector_a: String,
    #[arg(long)]
    pub mvector_b: String,
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// g1|g2|snpp|snstar|snstarstar|k4pendant|cycle|path|star|pkl|max10a|max10b
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Analysis {
    /// Symbolic kernel polynomial against its printed expansion.
    K0,
    /// Integral of the limiting amplitude ratio minus one.
    LimitIntegral,
    /// Energies, difference and kernel signs at order n >= 14.
    Verdict {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Keep connected graphs only.
    #[arg(long)]
    pub connected: bool,
    /// Report matching-equivalence classes instead of the graphs.
    #[arg(long)]
    pub classes: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// unicyclic|bicyclic|tricyclic-min|tricyclic-max
    #[arg(long)]
    pub claim: String,
    #[arg(long)]
    pub n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => match output::emit(&out, cli.csv) {
            Ok(()) if out.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("matchkit: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("matchkit: {e}");
            let code = commands::exit_code(&e);
            if code == 2 {
                eprintln!("For the argument grammar, try 'matchkit --help'.");
            }
            ExitCode::from(code)
        }
    }
}
