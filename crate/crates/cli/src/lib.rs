//! Command-line front end for `nbody-afm`.
//!
//! [`run`] parses arguments, dispatches to the library and returns the text
//! to print with the exit status, so the binary itself stays trivial.

pub mod commands;
pub mod input;
pub mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exit status for a run whose verification reports contain a violation.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit status for inadmissible input.
pub const EXIT_VALIDATION: i32 = 2;
/// Exit status for admissible input with no computable answer.
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// The spec file could not be read or parsed.
    Input(String),
    Library(nbody_afm::Error),
}

impl From<nbody_afm::Error> for CliError {
    fn from(e: nbody_afm::Error) -> Self {
        CliError::Library(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_VALIDATION,
            CliError::Library(e) if e.is_validation() => EXIT_VALIDATION,
            CliError::Library(_) => EXIT_NUMERICAL,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "InvalidInput",
            CliError::Library(e) => e.kind(),
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Library(e) => e.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    M0,
    M1,
    M2,
}

#[derive(Debug, Parser)]
#[command(name = "nbody-afm", version, about = "Auxiliary field method masses for quantum N-body systems")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SpecArg {
    /// JSON system description.
    #[arg(long)]
    pub spec: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// AFM mass of a system of identical particles.
    Solve(SpecArg),
    /// Exact energy of a nonrelativistic harmonic system.
    Ho {
        #[command(flatten)]
        spec: SpecArg,
        /// Add the total rest mass to the energy.
        #[arg(long)]
        add_rest_mass: bool,
    },
    /// Baryon masses for every band up to `--max-band`.
    BaryonTable {
        /// String tension.
        #[arg(long)]
        lambda: f64,
        /// Strong coupling constant.
        #[arg(long)]
        alphas: f64,
        /// Restrict the table to one formula.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, default_value_t = 6)]
        max_band: u32,
    },
    /// Band-by-band spectrum and critical couplings of pairwise Gaussian wells.
    Gaussian {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 5)]
        max_band: u32,
        /// Add the total rest mass to the energies.
        #[arg(long)]
        add_rest_mass: bool,
    },
    /// Compares direct masses with their two-body duality routes.
    DualityCheck {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Compares the AFM mass with a direct numerical extremization and, where
    /// available, with a variational trial bound.
    Verify {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let format = cli.format;
    match commands::dispatch(cli.command) {
        Ok(rendered) => {
            let stdout = match format {
                Format::Tsv => rendered.table.render(),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&rendered.json).expect("serializable")),
            };
            let code = if rendered.all_match { 0 } else { EXIT_VIOLATION };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = e.exit_code();
            match format {
                Format::Json => {
                    let body = json!({ "error": { "kind": e.kind(), "message": e.message() } });
                    Outcome { code, stdout: format!("{body}\n"), stderr: String::new() }
                }
                Format::Tsv => Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error[{}]: {}\n", e.kind(), e.message()),
                },
            }
        }
    }
}
