//! `qsix`: expand the series and polynomials of the identity engine, list the
//! identity catalog, and verify identities.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qsix_core::registry::{self, Selection};

#[derive(Parser, Debug)]
#[command(name = "qsix", version, about = "Exact q-series and Chebyshev identity engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the expansion of a series or polynomial.
    Expand {
        #[arg(long, value_enum)]
        series: SeriesName,
        /// Index parameter: `n` for f, T, U; `ell` for P_ell.
        #[arg(long)]
        n: Option<usize>,
        /// Truncation order (default 8, or 20 for q-series).
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity checks.
    Verify {
        /// Identity id; may be repeated.
        #[arg(long = "id", required_unless_present = "all", conflicts_with = "all")]
        ids: Vec<String>,
        /// Run every registered identity.
        #[arg(long)]
        all: bool,
        /// Override every selected identity's default order.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Maximum number of checks run at once.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List the identity catalog.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    /// sum x^m (x;q)_m
    #[value(name = "S")]
    S,
    /// sum q^m x^m (x;q)_m
    #[value(name = "Sq")]
    Sq,
    /// Euler's tower series in x
    #[value(name = "calP")]
    CalP,
    /// Tower member P_ell as a q-series (needs --n)
    #[value(name = "P_ell")]
    PEll,
    /// prod (1 - q^j)
    #[value(name = "pentagonal")]
    Pentagonal,
    /// f_n (needs --n)
    #[value(name = "f")]
    LowerF,
    /// sum f_n x^n
    #[value(name = "F")]
    UpperF,
    /// Chebyshev T_n (needs --n)
    #[value(name = "T")]
    T,
    /// Chebyshev U_n (needs --n)
    #[value(name = "U")]
    U,
    /// T_alpha about x = 1, in u = x - 1
    #[value(name = "Talpha")]
    Talpha,
}

const USAGE: u8 = 2;

/// Write to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Expand { series, n, order, format } => match output::expand(series, n, order) {
            Ok(exp) => {
                emit(&output::render_expansion(&exp, format));
                ExitCode::SUCCESS
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(USAGE)
            }
        },
        Command::Verify { ids, all, order, format, jobs } => {
            let selection = if all { Selection::All } else { Selection::Ids(ids) };
            match registry::run(&selection, order, jobs) {
                Ok(result) => {
                    emit(&output::render_suite(&result, format));
                    if result.ok() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(USAGE)
                }
            }
        }
        Command::List { format } => {
            emit(&output::render_catalog(&registry::list_identities(), format));
            ExitCode::SUCCESS
        }
    }
}
