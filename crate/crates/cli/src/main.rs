//! `superfrob`: character tables, symmetric function expansions, tensor
//! traces and verification suites.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use superfrob::frobenius::{char_table, frobenius_element, FrobeniusError};
use superfrob::heckesim::{gamma_word, trace_d_pi, xy_substitute, HeckeError};
use superfrob::hl::{hl_p_abstract, hl_q_lambda, hl_q_row, hl_tilde_q, HlError};
use superfrob::partition::{Composition, Partition, PartitionError};
use superfrob::scalar::{LaurentScalar, ScalarError};
use superfrob::symring::{Basis, SymError, SymFunc};
use superfrob::verify::{run_suite, Suite, VerifyError};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    IoFailure { path: String, source: io::Error },
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Hl(#[from] HlError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Func {
    /// Hall–Littlewood q_k(.; t)
    QRow,
    /// q_lambda(.; t)
    QLambda,
    /// Hall–Littlewood P_lambda(.; t)
    HlP,
    /// q^k q_k(.; q^-2)
    TildeQ,
    /// q^|mu| (q - q^-1)^-l(mu) q_mu(.; q^-2)
    Frobenius,
    P,
    M,
    E,
    H,
    S,
}

#[derive(Debug, Parser)]
#[command(name = "superfrob", version, about = "Exact Hecke algebra characters via supersymmetric Hall-Littlewood functions")]
struct Cli {
    /// Bound on worker threads
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character table of the Hecke algebra H_r on the elements T_gamma_mu
    CharTable {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a symmetric function in a chosen basis
    Expand {
        #[arg(long, value_enum)]
        func: Func,
        /// Degree, for one-row functions
        #[arg(long)]
        k: Option<usize>,
        /// Partition as comma-separated parts, e.g. 2,1
        #[arg(long)]
        lambda: Option<String>,
        /// Parameter t as a Laurent polynomial in q
        #[arg(long, default_value = "q", allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value = "p")]
        basis: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Trace of D_r pi_r(T_word) on the tensor space
    Trace {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Generator indices, comma-separated, applied right to left
        #[arg(long, conflicts_with = "mu")]
        word: Option<String>,
        /// Composition whose gamma element is traced; defaults to (r)
        #[arg(long)]
        mu: Option<String>,
        /// Substitute z -> (x, -y)
        #[arg(long)]
        xy: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        r: usize,
        /// Defaults to r
        #[arg(long)]
        m: Option<usize>,
        /// Defaults to r
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_parts(s: &str) -> Result<Vec<usize>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| CliError::Usage(format!("bad part {p:?}: {e}"))))
        .collect()
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(what: &str) -> CliError {
    CliError::Usage(format!("csv output is not available for {what}"))
}

fn expand(func: Func, k: Option<usize>, lambda: Option<&str>, t: &LaurentScalar, basis: Basis) -> Result<SymFunc, CliError> {
    let need_k = || k.ok_or_else(|| CliError::Usage("--k is required for this function".into()));
    let shape = || -> Result<Partition, CliError> {
        match (lambda, k) {
            (Some(l), _) => Ok(Partition::new(parse_parts(l)?)?),
            (None, Some(k)) => Ok(Partition::row(k)),
            (None, None) => Err(CliError::Usage("--lambda or --k is required".into())),
        }
    };
    let f = match func {
        Func::QRow => hl_q_row(need_k()?, t),
        Func::TildeQ => hl_tilde_q(need_k()?),
        Func::QLambda => hl_q_lambda(&shape()?, t),
        Func::HlP => hl_p_abstract(&shape()?, t)?,
        Func::Frobenius => frobenius_element(&shape()?),
        Func::P => SymFunc::basis_element(Basis::P, shape()?),
        Func::M => SymFunc::basis_element(Basis::M, shape()?),
        Func::E => SymFunc::basis_element(Basis::E, shape()?),
        Func::H => SymFunc::basis_element(Basis::H, shape()?),
        Func::S => SymFunc::basis_element(Basis::S, shape()?),
    };
    Ok(f.convert(basis))
}

/// Returns the artifact and whether it records a failure.
fn run(cmd: Command) -> Result<(String, bool), CliError> {
    match cmd {
        Command::CharTable { r, format } => {
            if r == 0 {
                return Err(CliError::Usage("--r must be at least 1".into()));
            }
            let table = char_table(r)?;
            let out = match format {
                Format::Json => json(&table),
                Format::Csv => table.to_csv(),
                Format::Text => table.to_text(),
            };
            Ok((out, false))
        }
        Command::Expand { func, k, lambda, t, basis, format } => {
            let t: LaurentScalar = t.parse()?;
            let basis: Basis = basis.parse()?;
            let f = expand(func, k, lambda.as_deref(), &t, basis)?;
            let out = match format {
                Format::Json => json(&f),
                Format::Text => format!("{f}\n"),
                Format::Csv => return Err(no_csv("expansions")),
            };
            Ok((out, false))
        }
        Command::Trace { r, m, n, word, mu, xy, format } => {
            if r == 0 {
                return Err(CliError::Usage("--r must be at least 1".into()));
            }
            if m + n == 0 {
                return Err(CliError::Usage("m + n must be at least 1".into()));
            }
            let word = match (word, mu) {
                (Some(w), _) => parse_parts(&w)?,
                (None, Some(mu)) => {
                    let alpha = Composition::new(parse_parts(&mu)?)?;
                    if alpha.size() != r {
                        return Err(CliError::Usage(format!("--mu has size {}, expected {r}", alpha.size())));
                    }
                    gamma_word(&alpha)
                }
                (None, None) => gamma_word(&Composition::new(vec![r])?),
            };
            let z = trace_d_pi(&word, r, m, n).map_err(|e| CliError::Usage(e.to_string()))?;
            let out = match (format, xy) {
                (Format::Json, false) => json(&z),
                (Format::Json, true) => json(&xy_substitute(&z, m, n)),
                (Format::Text, false) => format!("{}\n", z.render()),
                (Format::Text, true) => format!("{}\n", xy_substitute(&z, m, n).render()),
                (Format::Csv, _) => return Err(no_csv("traces")),
            };
            Ok((out, false))
        }
        Command::Verify { suite, r, m, n, format } => {
            let suite: Suite = suite.parse().map_err(|e: VerifyError| {
                CliError::Usage(format!("{e}; expected one of {}", Suite::NAMES.join(", ")))
            })?;
            if r == 0 {
                return Err(CliError::Usage("--r must be at least 1".into()));
            }
            let report = run_suite(suite, r, m.unwrap_or(r), n.unwrap_or(r))?;
            let out = match format {
                Format::Json => json(&report),
                Format::Text => report.to_text(),
                Format::Csv => return Err(no_csv("reports")),
            };
            Ok((out, !report.passed()))
        }
    }
}

fn emit(out: &str, path: Option<&PathBuf>) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, out).map_err(|source| CliError::IoFailure { path: p.display().to_string(), source }),
        None => io::stdout()
            .write_all(out.as_bytes())
            .map_err(|source| CliError::IoFailure { path: "<stdout>".into(), source }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(cli.command).and_then(|(out, failed)| emit(&out, cli.output.as_ref()).map(|()| failed)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
