//! Argument parsing and command dispatch for the `kpsi` binary.

mod commands;

use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use kpsi_core::qsym::Automorphism;
use kpsi_core::{Basis, Error, Guards};

/// Exit status: success.
pub const EXIT_OK: u8 = 0;
/// A requested cross-check disagreed.
pub const EXIT_VERIFY: u8 = 1;
/// Unreadable input or bad arguments.
pub const EXIT_USAGE: u8 = 2;
/// An enumeration guard was exceeded.
pub const EXIT_GUARD: u8 = 3;
/// Input parsed but is outside the domain of the command.
pub const EXIT_DOMAIN: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "kpsi",
    version,
    about = "P-partition generating functions and quasisymmetric power sums"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    /// Run redundant computations and compare them.
    #[arg(long, global = true)]
    pub verify: bool,

    /// Override every enumeration guard with N.
    #[arg(long, value_name = "N", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub guard: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    #[value(name = "M")]
    M,
    #[value(name = "L")]
    L,
    #[value(name = "psi")]
    Psi,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::L => Basis::Fundamental,
            BasisArg::Psi => Basis::Psi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctionalArg {
    Min1,
    Max1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AutomorphismArg {
    Omega,
    Rho,
    Omegarho,
}

impl From<AutomorphismArg> for Automorphism {
    fn from(a: AutomorphismArg) -> Self {
        match a {
            AutomorphismArg::Omega => Automorphism::Omega,
            AutomorphismArg::Rho => Automorphism::Rho,
            AutomorphismArg::Omegarho => Automorphism::OmegaRho,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand K_(P,ω) of a labeled poset file.
    Kpw {
        /// Poset JSON file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::Psi)]
        basis: BasisArg,
        /// Also print every pointed (P,ω)-partition.
        #[arg(long)]
        list: bool,
    },
    /// The minimum-length part K~ of a naturally labeled poset.
    Ktilde { file: PathBuf },
    /// Count zigzag labelings of a naturally labeled poset.
    Zigzag {
        file: PathBuf,
        /// Print every zigzag labeling.
        #[arg(long)]
        list: bool,
    },
    /// Decide irreducibility of K_P for a naturally labeled poset.
    Irreducible { file: PathBuf },
    /// Check that series-parallel posets of each size up to N have distinct K_P.
    SpDistinguish { n: usize },
    /// Murnaghan-Nakayama data for a skew shape file.
    Mn {
        /// Shape JSON file, or `-` for stdin.
        file: PathBuf,
        /// Print χ(α) for every composition α.
        #[arg(long)]
        chi: bool,
        /// Print the power sum expansion.
        #[arg(long)]
        p: bool,
        /// Print Min1 of the skew Schur function.
        #[arg(long)]
        min1: bool,
    },
    /// Convert an expression to another basis.
    Convert {
        expr: String,
        #[arg(long, value_enum)]
        to: BasisArg,
    },
    /// Evaluate Min1 or Max1.
    Functional {
        #[arg(value_enum)]
        which: FunctionalArg,
        expr: String,
    },
    /// Apply ω, ρ or ωρ.
    Auto {
        #[arg(value_enum)]
        map: AutomorphismArg,
        expr: String,
    },
    /// Multiply two expressions.
    Product { left: String, right: String },
    /// The coproduct, or the graded coproduct Δ_α with --graded.
    Coproduct {
        expr: String,
        /// A composition such as `[2,1]`.
        #[arg(long, value_name = "ALPHA")]
        graded: Option<String>,
    },
}

/// Settings shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub guards: Guards,
    pub format: OutputFormat,
    pub verify: bool,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        RunConfig {
            guards: cli
                .guard
                .map(|n| Guards::uniform(n as usize))
                .unwrap_or_default(),
            format: cli.format,
            verify: cli.verify,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    /// A cross-check failed; carries the first counterexample.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::Io(_) => EXIT_USAGE,
            CliError::Core(Error::Parse(_)) => EXIT_USAGE,
            CliError::Core(Error::GuardExceeded { .. }) => EXIT_GUARD,
            CliError::Core(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Verification(e) => write!(f, "verification failed: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

/// Runs one parsed command, returning the text to print.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let cfg = RunConfig::from_cli(cli);
    match &cli.command {
        Command::Kpw { file, basis, list } => {
            commands::kpw(&cfg, &read_input(file)?, (*basis).into(), *list)
        }
        Command::Ktilde { file } => commands::ktilde(&cfg, &read_input(file)?),
        Command::Zigzag { file, list } => commands::zigzag(&cfg, &read_input(file)?, *list),
        Command::Irreducible { file } => commands::irreducible(&cfg, &read_input(file)?),
        Command::SpDistinguish { n } => commands::sp_distinguish(&cfg, *n),
        Command::Mn { file, chi, p, min1 } => {
            commands::mn(&cfg, &read_input(file)?, *chi, *p, *min1)
        }
        Command::Convert { expr, to } => commands::convert(&cfg, expr, (*to).into()),
        Command::Functional { which, expr } => commands::functional(&cfg, *which, expr),
        Command::Auto { map, expr } => commands::auto(&cfg, (*map).into(), expr),
        Command::Product { left, right } => commands::product(&cfg, left, right),
        Command::Coproduct { expr, graded } => commands::coproduct(&cfg, expr, graded.as_deref()),
    }
}
