//! `monideal`: decompositions, symbolic powers, strong vertex covers and
//! covering polyhedra from the command line.
//!
//! Inputs are files (or `-` for stdin) holding either a monomial ideal such
//! as `t1*t2^2, t2*t3`, or a weighted oriented graph starting with
//! `vertices N`. Graph inputs stand for their edge ideal wherever an ideal is
//! expected.
//!
//! Exit codes: 0 success, 1 failed check, 2 bad input, 3 resource limit.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monideal::{Error, PolyLimits};

#[derive(Parser)]
#[command(
    name = "monideal",
    version,
    about = "Exact monomial ideal and weighted oriented graph computations"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Global {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest polyhedron dimension for vertex enumeration.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_vars: usize,
    /// Largest number of constraint rows for vertex enumeration.
    #[arg(long, global = true, default_value_t = 24)]
    pub max_constraints: usize,
    /// Largest vertex count for strong-cover enumeration.
    #[arg(long, global = true, default_value_t = monideal::wog::DEFAULT_MAX_COVER_VERTICES)]
    pub max_covers: usize,
    /// Largest box scanned for integral-closure generators.
    #[arg(long, global = true, default_value_t = monideal::polyhedra::DEFAULT_MAX_BOX_POINTS)]
    pub max_box: u64,
    /// Default highest power for checks over n = 1..N.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub power_bound: u32,
}

impl Global {
    pub fn poly_limits(&self) -> PolyLimits {
        PolyLimits {
            max_dim: self.max_vars,
            max_constraints: self.max_constraints,
            max_box_points: self.max_box,
        }
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Irredundant irreducible decomposition.
    Decompose { file: String },
    /// Associated, minimal and embedded primes.
    Ass { file: String },
    /// Symbolic power I^(n) (minimal primes) or I^<n> (maximal associated primes).
    Symbolic {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Use the minimal primes (the default).
        #[arg(long, conflicts_with = "ass")]
        min: bool,
        /// Use the maximal associated primes.
        #[arg(long)]
        ass: bool,
    },
    /// Compare I^n with I^(n) and I^<n>, listing generators of I^(n) outside I^n.
    Compare {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Ass(I^n) for n up to the bound, and whether I is normally torsion-free there.
    Ntf {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: Option<u32>,
    },
    /// Vertex roles, underlying graph properties and the power criteria.
    WogClassify { file: String },
    /// Strong vertex covers with their L1/L2/L3 parts and ideals I_C.
    WogCovers { file: String },
    /// The edge ideal of a graph.
    WogIdeal { file: String },
    /// The Alexander dual J(D) and its decomposition.
    WogDual {
        file: String,
        /// Also compare J^n = J^(n) with normality and NP(J) = IP(J).
        #[arg(long)]
        normality: bool,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: Option<u32>,
    },
    /// Vertices of the covering polyhedron Q(I), or of a Normaliz constraint block.
    PolyVertices {
        file: String,
        /// Print the polyhedron and its vertices in Normaliz syntax.
        #[arg(long)]
        normaliz_format: bool,
    },
    /// Inequalities and vertices of the Newton polyhedron.
    Newton { file: String },
    /// Minimal generators of the integral closure of I^n.
    Closure {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Whether I^n is integrally closed for n up to the bound.
    Normal {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: Option<u32>,
    },
    /// Closure splitting, NP = IP, and vertices of Q(I) versus inverted components.
    ClosureCriteria {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: Option<u32>,
    },
    /// Recompute every built-in fixture fact and print PASS/FAIL lines.
    Examples,
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Usage(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                Error::Consistency(_) => 1,
                Error::ResourceLimit { .. } | Error::Overflow => 3,
                _ => 2,
            },
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.global) {
        Ok(report) => {
            if cli.global.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json")
                );
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
