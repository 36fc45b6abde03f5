//! Command-line driver: `tetra verify` runs checks and writes a report,
//! `tetra emit` prints a built-in presentation in the file format.

pub mod format;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::families::{build_omega, build_sigma, quotient_gamma};
use crate::path_algebra::{tetrahedral_relations, Presentation};
use crate::scalars::{Field, FieldSpec, Fp, Rationals};

pub use format::{emit_presentation, parse_presentation, parse_relation};
pub use verify::{parse_checks, run_verify, Check, CheckOutcome, Report, Status, VerificationConfig};

#[derive(Debug, Parser)]
#[command(name = "tetra", version, about = "Exact verification of higher tetrahedral algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run checks on Λ(m, λ) or a presentation file and write a report.
    Verify {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        /// `fp:<p>` or `q`.
        #[arg(long, default_value = "fp:1000003")]
        field: String,
        /// `all` or a comma-separated subset of dims, basis-crosscheck,
        /// symmetry, lemmas4, simples, bimodule, families.
        #[arg(long)]
        checks: Option<String>,
        #[arg(long = "max-syzygy", default_value_t = 8)]
        max_syzygy: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        headroom: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify this presentation instead of Λ(m, λ); checks default to dims,simples.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Print a built-in presentation.
    Emit {
        #[arg(long, value_enum, default_value_t = Family::Lambda)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// λ for `lambda` and `gamma`, t for `sigma`.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "fp:1000003")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Lambda,
    Omega,
    Sigma,
    Gamma,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_family<F: Field>(field: &F, family: Family, m: usize, lambda: &str) -> Result<String> {
    let value = field.parse(lambda)?;
    let pres: Presentation<F> = match family {
        Family::Lambda => tetrahedral_relations(field, m, value)?,
        Family::Omega => build_omega(field, m)?,
        Family::Sigma => build_sigma(field, m, value)?,
        Family::Gamma => quotient_gamma(field, m, value)?,
    };
    Ok(emit_presentation(&pres))
}

/// Exit status: 0 when every check passes, 1 when some check fails or
/// errors, 2 on usage errors.
pub fn run_main<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Verify {
            m,
            lambda,
            field,
            checks,
            max_syzygy,
            seed,
            headroom,
            out,
            presentation,
        } => {
            let field: FieldSpec = match field.parse() {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let presentation = match presentation {
                Some(path) => match std::fs::read_to_string(&path) {
                    Ok(text) => Some((path.display().to_string(), text)),
                    Err(e) => return usage(format!("{}: {e}", path.display())),
                },
                None => None,
            };
            let default_checks = if presentation.is_some() { "dims,simples" } else { "all" };
            let checks = match parse_checks(checks.as_deref().unwrap_or(default_checks)) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let config = VerificationConfig {
                m,
                lambda,
                field,
                checks,
                max_n: max_syzygy,
                seed,
                headroom,
                presentation,
            };
            let report = match run_verify(&config) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            eprint!("{}", report.timings());
            if let Err(e) = write_output(&out, &report.render()) {
                return usage(e);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Emit {
            family,
            m,
            lambda,
            field,
            out,
        } => {
            let text = match field.parse::<FieldSpec>() {
                Ok(FieldSpec::Prime(p)) => Fp::new(p).and_then(|f| emit_family(&f, family, m, &lambda)),
                Ok(FieldSpec::Rational) => emit_family(&Rationals, family, m, &lambda),
                Err(e) => Err(e),
            };
            match text.map_err(|e: Error| e.to_string()) {
                Ok(text) => match write_output(&out, &text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => usage(e),
                },
                Err(e) => usage(e),
            }
        }
    }
}
