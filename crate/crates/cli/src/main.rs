//! `sumrules`: exact angular-momentum coefficients, weighted 3jm sum rules
//! and hydrogenic moments from the command line.
//!
//! Exit status: 0 on success, 1 when methods disagree or a verify suite
//! fails, 2 on usage, parse or domain errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wigner_sumrules::{HalfInt, Rational};

pub(crate) enum Failure {
    /// Bad input; exit status 2.
    Usage(String),
    /// Methods or suites disagree; exit status 1.
    Mismatch,
}

impl From<wigner_sumrules::Error> for Failure {
    fn from(e: wigner_sumrules::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn half(s: &str) -> Result<HalfInt, String> {
    s.parse::<HalfInt>().map_err(|e| e.to_string())
}

fn rational(s: &str) -> Result<Rational, String> {
    wigner_sumrules::exact::parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(name = "sumrules", version, about = "Exact Wigner symbols, 3jm sum rules and hydrogenic moments")]
pub(crate) struct Cli {
    /// Emit one JSON object per result line.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub(crate) enum Command {
    /// Wigner 3jm symbol (j1 j2 j3; m1 m2 m3).
    #[command(name = "3j")]
    ThreeJ {
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j2: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j3: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m1: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m2: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m3: HalfInt,
    },
    /// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}.
    #[command(name = "6j")]
    SixJ {
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j2: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j3: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j4: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j5: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j6: HalfInt,
    },
    /// Clebsch-Gordan coefficient <j m | j1 m1 j2 m2>.
    Cg {
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m1: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j2: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m2: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m: HalfInt,
    },
    /// Weighted sum S_k = sum_j (2j+1) [j(j+1)]^k (j1 j2 j; m1 m2 -m1-m2)^2.
    Sumrule {
        k: u32,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m1: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        j2: HalfInt,
        #[arg(value_parser = half, allow_hyphen_values = true)]
        m2: HalfInt,
        #[arg(long, value_enum, default_value_t = SumruleMethod::Operator)]
        method: SumruleMethod,
    },
    /// Hydrogenic <r^p>.
    Expval {
        #[command(subcommand)]
        coords: Expval,
    },
    /// Parabolic xi-moment coefficient c_k, with <xi^k> = c_k sqrt(Z/pi)/n.
    Xi {
        n: u32,
        n1: u32,
        m: u32,
        #[arg(long = "Z", value_parser = rational, default_value = "1")]
        z: Rational,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = XiMethod::Recurrence)]
        method: XiMethod,
    },
    /// Spherical-parabolic overlap <n q m | n l m>, for one l or all of them.
    Overlap {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        q: i32,
        #[arg(allow_hyphen_values = true)]
        m: i32,
        #[arg(long)]
        l: Option<u32>,
    },
    /// <L^(2k)> in a parabolic state, k in {1, 2}.
    Angular {
        #[command(flatten)]
        state: ParabolicState,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = AngularMethod::Sumrule)]
        method: AngularMethod,
    },
    /// Closed-form <r^k> polynomial, k in 1..=4.
    Table {
        #[command(subcommand)]
        coords: TableCoords,
    },
    /// Quasi-classical estimate of |<n q m|n l m>|^2 for large n.
    Quasiclassical {
        n: u32,
        m: u32,
        #[arg(allow_hyphen_values = true)]
        q: i32,
        /// Omit for the l-independent m = 0 limit.
        l: Option<u32>,
    },
    /// Run the property suites over bounded grids.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_parser = half, default_value = "2")]
        max_j: HalfInt,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, default_value_t = 5)]
        max_k: u32,
        /// Also write the text report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum SumruleMethod {
    Operator,
    Closed,
    Bruteforce,
    Permutation,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum XiMethod {
    Recurrence,
    Explicit,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum ExpvalMethod {
    /// Spherical: Pasternack recurrence. Parabolic: xi/eta composition.
    Recurrence,
    /// Spherical only: explicit double sum.
    Explicit,
    /// Spherical only: reflection onto a negative power.
    Reflection,
    /// Parabolic only: sum over spherical states.
    Basis,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum AngularMethod {
    Sumrule,
    Bruteforce,
    /// Every method, plus the printed L^4 polynomial as a diagnostic.
    All,
}

#[derive(Subcommand)]
pub(crate) enum Expval {
    Spherical {
        n: u32,
        l: u32,
        #[arg(long = "Z", value_parser = rational, default_value = "1")]
        z: Rational,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = ExpvalMethod::Recurrence)]
        method: ExpvalMethod,
        /// Compute <r^(-p-2)> instead.
        #[arg(long)]
        negative: bool,
    },
    Parabolic {
        #[command(flatten)]
        state: ParabolicState,
        #[arg(long = "Z", value_parser = rational, default_value = "1")]
        z: Rational,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = ExpvalMethod::Recurrence)]
        method: ExpvalMethod,
    },
}

#[derive(Subcommand)]
pub(crate) enum TableCoords {
    Spherical {
        n: u32,
        l: u32,
        #[arg(long = "Z", value_parser = rational, default_value = "1")]
        z: Rational,
        #[arg(long)]
        k: u32,
    },
    Parabolic {
        #[command(flatten)]
        state: ParabolicState,
        #[arg(long = "Z", value_parser = rational, default_value = "1")]
        z: Rational,
        #[arg(long)]
        k: u32,
        /// k = 4 only: use the n^4/(64 Z^3) prefactor.
        #[arg(long)]
        printed_prefactor: bool,
    },
}

/// A parabolic state given by `(n1, n2, m)` or by `(q, m)`, with `n`
/// optional in the first form.
#[derive(Args, Clone, Copy, Debug)]
pub(crate) struct ParabolicState {
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, requires = "n2", conflicts_with = "q")]
    pub n1: Option<u32>,
    #[arg(long, requires = "n1")]
    pub n2: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<i32>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: i32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
