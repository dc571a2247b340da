//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 usage.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::enumerate::{EnumerateError, SearchSpace, Verifier};
use crate::families::{self, FamilyError};
use crate::formulas::{self, FormulaError};
use crate::hypergraph::{self, Hypergraph, HypergraphError};

#[derive(Debug, Parser)]
#[command(
    name = "hyperwiener",
    version,
    about = "Wiener index toolkit for k-uniform hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wiener index of a hypergraph file (`-` reads standard input)
    Wiener { file: PathBuf },
    /// Berge distance between two vertices
    Dist { file: PathBuf, u: usize, v: usize },
    /// Write a named family in the hypergraph file format
    Gen {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        x: Option<usize>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Maximum Wiener index over connected k-uniform hypergraphs of order n
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Check the two closing identities over a parameter grid
    Identities {
        #[arg(long, default_value_t = 10)]
        s_max: u64,
        #[arg(long, default_value_t = 8)]
        k_max: u64,
    },
    /// Exhaustively verify the maximum and its extremal hypergraphs
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    TightPath,
    OffsetTightPath,
    LoosePath,
    LooseStar,
    Complete,
    DenseStar,
    Fano,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("verification failed")]
    VerificationFailed,
    #[error("identity check failed")]
    IdentityFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn required(value: Option<usize>, flag: &str, family: Family) -> Result<usize, CliError> {
    value.ok_or_else(|| {
        CliError::Usage(format!(
            "`{}` requires --{flag}",
            family
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))
    })
}

pub fn generate(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    x: Option<usize>,
) -> Result<Hypergraph, CliError> {
    let nk = || Ok::<_, CliError>((required(n, "n", family)?, required(k, "k", family)?));
    Ok(match family {
        Family::TightPath => {
            let (n, k) = nk()?;
            families::tight_path(n, k)?
        }
        Family::OffsetTightPath => {
            let (n, k) = nk()?;
            families::offset_tight_path(n, k, required(x, "x", family)?)?
        }
        Family::LoosePath => {
            let (n, k) = nk()?;
            families::loose_path(n, k)?
        }
        Family::LooseStar => {
            let (n, k) = nk()?;
            families::loose_star(n, k)?
        }
        Family::Complete => {
            let (n, k) = nk()?;
            families::complete(n, k)?
        }
        Family::DenseStar => {
            let (n, k) = nk()?;
            families::dense_star(n, k)?
        }
        Family::Fano => families::fano(),
    })
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<Hypergraph, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        s
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?
    };
    Ok(hypergraph::parse(&text)?)
}

fn io_err(source: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Wiener { file } => {
            let h = read_input(&file, stdin)?;
            writeln!(out, "{}", h.wiener()?).map_err(io_err)?;
        }
        Command::Dist { file, u, v } => {
            let h = read_input(&file, stdin)?;
            writeln!(out, "{}", h.distance(u, v)?).map_err(io_err)?;
        }
        Command::Gen {
            family,
            n,
            k,
            x,
            output,
        } => {
            let text = generate(family, n, k, x)?.to_file_string();
            match output {
                Some(path) => fs::write(&path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?,
                None => out.write_all(text.as_bytes()).map_err(io_err)?,
            }
        }
        Command::Bound { n, k } => {
            writeln!(out, "{}", formulas::wmax(n as u64, k as u64)?).map_err(io_err)?;
        }
        Command::Identities { s_max, k_max } => match formulas::check_identity_grid(s_max, k_max) {
            Ok(count) => writeln!(out, "OK {count}").map_err(io_err)?,
            Err(fail) => {
                writeln!(
                    out,
                    "FAIL s={} k={} r={} l={} identity={} residual={} expected={}",
                    fail.s, fail.k, fail.r, fail.l, fail.case, fail.residual, fail.expected
                )
                .map_err(io_err)?;
                return Err(CliError::IdentityFailed);
            }
        },
        Command::Verify {
            n,
            k,
            max_edges,
            jobs,
        } => {
            if jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            let space = max_edges.map_or(SearchSpace::Full, SearchSpace::EdgeBounded);
            let report = Verifier::new(n, k)
                .space(space)
                .jobs(jobs)
                .verify_theorem()?;
            write!(out, "{report}").map_err(io_err)?;
            if !report.passed() {
                return Err(CliError::VerificationFailed);
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
