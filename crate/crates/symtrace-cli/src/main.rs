//! Command-line front end. Subcommands compose over standard streams using
//! the text formats in `formats`; reports are JSON or CSV documents. Exit
//! status: 0 success, 1 domain error (stable `E_*` code on stderr), 2 usage.

mod formats;
mod reports;

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use symtrace_core::constructions::{
    construct_L, construct_T, density_sequence, four_square, path_matrix, MeasureKind,
};
use symtrace_core::harness::{
    density_report, enumerate_class, merge_reports, spectrum_scan, verify_campaign,
    verify_campaign_range, CampaignReport, Dedupe, EnumSpec, DEFAULT_NODE_BUDGET,
};
use symtrace_core::matrices::{classify, AnyMatrix};
use symtrace_core::measures::{check_bounds, trace_k};
use symtrace_core::numerics::approx;
use symtrace_core::screener::{min_poly_obstruction, screen_char_poly};
use symtrace_core::spectra::{char_poly_int, char_poly_radical, CharPoly};
use symtrace_core::symmetry::{rationalize, symmetrize};
use symtrace_core::Error;

use formats::{
    format_rational, parse_any_matrix, parse_poly, parse_rational, print_int_matrix, print_poly,
    print_radical_matrix, ParseError,
};

#[derive(Parser)]
#[command(
    name = "symtrace",
    version,
    about = "Exact-arithmetic toolkit for trace measures of symmetrizable integer matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input file; standard input when omitted.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoxArgs {
    /// Matrix order.
    #[arg(long)]
    n: usize,
    /// Diagonal entries range over [1, diag-max].
    #[arg(long = "diag-max")]
    diag_max: i64,
    /// Off-diagonal entries range over [-off-max, off-max].
    #[arg(long = "off-max")]
    off_max: i64,
    /// Keep one representative per row/column permutation orbit (order <= 6).
    #[arg(long)]
    dedupe: bool,
    /// Include matrices with disconnected support.
    #[arg(long = "allow-disconnected")]
    allow_disconnected: bool,
    /// Include matrices that are not positive definite.
    #[arg(long = "allow-indefinite")]
    allow_indefinite: bool,
    /// Search-space ceiling; enumeration refuses to start above it.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

impl BoxArgs {
    fn spec(&self) -> EnumSpec {
        let mut spec = EnumSpec::new(self.n, self.diag_max, self.off_max);
        if self.dedupe {
            spec.dedupe = Dedupe::PermutationCanonical;
        }
        spec.require_connected = !self.allow_disconnected;
        spec.require_pd = !self.allow_indefinite;
        spec.budget = self.budget;
        spec
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Trace,
    Trace2,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a matrix: structural predicates and class membership.
    Classify {
        #[command(flatten)]
        io: Io,
    },
    /// Map an integer matrix to its symmetric radical form entrywise.
    Symmetrize {
        #[command(flatten)]
        io: Io,
    },
    /// Diagonally rescale a radical matrix to a rational similar matrix.
    Rationalize {
        #[command(flatten)]
        io: Io,
    },
    /// Exact characteristic polynomial, constant to leading coefficient.
    Charpoly {
        #[command(flatten)]
        io: Io,
    },
    /// Exact trace of the k-th matrix power.
    Traces {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Add decimal approximations (marked approximate) to the report.
        #[arg(long)]
        human: bool,
    },
    /// Check the iterated-trace lower bounds up to exponent index k-max.
    Bounds {
        #[command(flatten)]
        io: Io,
        #[arg(long = "k-max", default_value_t = 1)]
        k_max: u32,
        #[arg(long)]
        human: bool,
    },
    /// Build one of the explicit matrix families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Least sorted four-square decomposition of a nonnegative integer.
    Foursquare {
        m: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Screen polynomials (one per line) against the class trace bounds.
    ScreenCharpoly {
        #[command(flatten)]
        io: Io,
        #[arg(long = "k-max", default_value_t = 1)]
        k_max: u32,
    },
    /// Minimal-polynomial obstruction for a factor list (one per line).
    ScreenMinpoly {
        #[command(flatten)]
        io: Io,
    },
    /// Stream the matrices of an enumeration box.
    Enumerate {
        #[command(flatten)]
        bx: BoxArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate a box and verify the trace bounds over it.
    Campaign {
        #[command(flatten)]
        bx: BoxArgs,
        #[arg(long = "k-max", default_value_t = 2)]
        k_max: u32,
        /// Worker threads; the report is byte-identical for any count.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        workers: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distinct absolute trace measure values over a box, with counts.
    Spectrum {
        #[command(flatten)]
        bx: BoxArgs,
        /// Measure index: 1 for trace, 2 for second trace.
        #[arg(long)]
        k: u32,
        #[arg(long)]
        human: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-order constructions approaching a rational density target.
    Density {
        /// Target as `num/den` or a plain integer.
        #[arg(long)]
        r: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Comma-separated matrix orders.
        #[arg(long, value_delimiter = ',', required = true)]
        nlist: Vec<usize>,
        #[arg(long)]
        human: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Tridiagonal path matrix with diagonal (1, 2, ..., 2).
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tridiagonal matrix with prescribed trace.
    Tn {
        #[arg(long)]
        n: usize,
        /// Target trace (arbitrary-precision integer).
        #[arg(long)]
        trace: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Four-square-based matrix with prescribed second trace target.
    Ln {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        an: String,
        #[arg(long)]
        an1: String,
        /// Emit a JSON construction report instead of the matrix.
        #[arg(long)]
        report: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Domain(Error),
    Parse(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Domain(err)
    }
}

impl From<ParseError> for CliError {
    fn from(err: ParseError) -> Self {
        match err {
            ParseError::Domain(err) => CliError::Domain(err),
            ParseError::Malformed(msg) => CliError::Parse(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "E_PARSE",
            CliError::Io(_) => "E_IO",
            CliError::Domain(err) => match err {
                Error::NotSignSymmetric { .. } => "E_NOT_SIGN_SYMMETRIC",
                Error::NotSymmetric { .. } => "E_NOT_SYMMETRIC",
                Error::CycleConditionViolated { .. } => "E_CYCLE_CONDITION",
                Error::RationalCycleConditionViolated { .. } => "E_RATIONAL_CYCLE_CONDITION",
                Error::IrrationalDiagonal { .. } => "E_IRRATIONAL_DIAGONAL",
                Error::DimensionMismatch { .. } => "E_DIMENSION_MISMATCH",
                Error::TraceTooSmall => "E_TRACE_TOO_SMALL",
                Error::OrderTooSmall => "E_ORDER_TOO_SMALL",
                Error::ResidualTooSmall => "E_RESIDUAL_TOO_SMALL",
                Error::ResidualTooLarge => "E_RESIDUAL_TOO_LARGE",
                Error::NonMonic => "E_NON_MONIC",
                Error::NonIntegerCoefficients => "E_NON_INTEGER_COEFFICIENTS",
                Error::TargetOutOfRange => "E_TARGET_OUT_OF_RANGE",
                Error::BudgetExceeded { .. } => "E_BUDGET_EXCEEDED",
                Error::DedupeUnsupported { .. } => "E_DEDUPE_UNSUPPORTED",
                Error::UnsupportedExponent { .. } => "E_UNSUPPORTED_EXPONENT",
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(err) => write!(f, "{err}"),
            CliError::Parse(msg) => write!(f, "{msg}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(path) => Ok(fs::read_to_string(path)?),
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn emit(path: &Option<PathBuf>, document: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, document)?,
        None => print!("{document}"),
    }
    Ok(())
}

fn pretty(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn parse_bigint_flag(token: &str, flag: &str) -> Result<BigInt, CliError> {
    token
        .parse()
        .map_err(|_| CliError::Parse(format!("--{flag} expects an integer, found {token:?}")))
}

fn input_matrix(io: &Io) -> Result<AnyMatrix, CliError> {
    Ok(parse_any_matrix(&read_input(&io.input)?)?)
}

fn input_polys(io: &Io) -> Result<Vec<CharPoly>, CliError> {
    let text = read_input(&io.input)?;
    let mut polys = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        polys.push(parse_poly(line)?);
    }
    Ok(polys)
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify { io } => {
            let matrix = input_matrix(&io)?;
            let report = classify(&matrix);
            emit(&io.out, &pretty(&reports::classification(&report)))
        }
        Command::Symmetrize { io } => {
            let matrix = match input_matrix(&io)? {
                AnyMatrix::Int(a) => a,
                AnyMatrix::Radical(_) => {
                    return Err(CliError::Parse(
                        "symmetrize expects an integer matrix".into(),
                    ))
                }
            };
            let symmetric = symmetrize(&matrix)?;
            emit(&io.out, &print_radical_matrix(&symmetric))
        }
        Command::Rationalize { io } => {
            let radical = match input_matrix(&io)? {
                AnyMatrix::Radical(t) => t,
                AnyMatrix::Int(a) => a.to_radical()?,
            };
            let (rational, certificate) = rationalize(&radical)?;
            let doc = reports::rationalization(radical.n(), &rational, &certificate);
            emit(&io.out, &pretty(&doc))
        }
        Command::Charpoly { io } => {
            let poly = match input_matrix(&io)? {
                AnyMatrix::Int(a) => char_poly_int(&a),
                AnyMatrix::Radical(t) => char_poly_radical(&t)?,
            };
            emit(&io.out, &print_poly(&poly))
        }
        Command::Traces { io, k, human } => {
            let matrix = input_matrix(&io)?;
            let trace = trace_k(&matrix, k)?;
            let doc = reports::trace_value(matrix.n(), k, &trace, human);
            emit(&io.out, &pretty(&doc))
        }
        Command::Bounds { io, k_max, human } => {
            let matrix = input_matrix(&io)?;
            let report = check_bounds(&matrix, k_max)?;
            emit(&io.out, &pretty(&reports::bounds(&report, human)))
        }
        Command::Construct { family } => match family {
            Family::Path { n, out } => emit(&out, &print_int_matrix(&path_matrix(n))),
            Family::Tn { n, trace, out } => {
                let target = parse_bigint_flag(&trace, "trace")?;
                emit(&out, &print_int_matrix(&construct_T(n, &target)?))
            }
            Family::Ln { n, an, an1, report, out } => {
                let a_n = parse_bigint_flag(&an, "an")?;
                let a_n1 = parse_bigint_flag(&an1, "an1")?;
                let (matrix, record) = construct_L(n, &a_n, &a_n1)?;
                if report {
                    let doc = serde_json::json!({
                        "n": record.n,
                        "an": record.a_n.to_string(),
                        "an1": record.a_n1.to_string(),
                        "s2": record.s2.to_string(),
                        "residual": record.residual.to_string(),
                        "b": record.b.parts(),
                        "w": record.w,
                        "kappa": record.kappa,
                        "matrix": reports::matrix_rows(&matrix),
                    });
                    emit(&out, &pretty(&doc))
                } else {
                    emit(&out, &print_int_matrix(&matrix))
                }
            }
        },
        Command::Foursquare { m, out } => {
            let parts = four_square(m).parts();
            let line = format!("{} {} {} {}\n", parts[0], parts[1], parts[2], parts[3]);
            emit(&out, &line)
        }
        Command::ScreenCharpoly { io, k_max } => {
            let mut document = String::new();
            for poly in input_polys(&io)? {
                let verdict = screen_char_poly(&poly, k_max)?;
                let line = serde_json::to_string(&reports::screen(&verdict, poly.degree()))
                    .expect("verdict serializes");
                document.push_str(&line);
                document.push('\n');
            }
            emit(&io.out, &document)
        }
        Command::ScreenMinpoly { io } => {
            let factors = input_polys(&io)?;
            let verdict = min_poly_obstruction(&factors)?;
            emit(&io.out, &pretty(&reports::obstruction(&verdict)))
        }
        Command::Enumerate { bx, out } => {
            let spec = bx.spec();
            let mut document = String::new();
            for matrix in enumerate_class(&spec)? {
                document.push_str(&print_int_matrix(&matrix));
                document.push('\n');
            }
            emit(&out, &document)
        }
        Command::Campaign { bx, k_max, workers, out } => {
            let spec = bx.spec();
            let report = run_campaign(&spec, k_max, workers)?;
            emit(&out, &pretty(&reports::campaign(&report)))
        }
        Command::Spectrum { bx, k, human, out } => {
            let spec = bx.spec();
            let points = spectrum_scan(&spec, k)?;
            let mut document = String::from(if human {
                "value,count,value_approx\n"
            } else {
                "value,count\n"
            });
            for (value, count) in points {
                if human {
                    document.push_str(&format!(
                        "{},{},{}\n",
                        format_rational(&value),
                        count,
                        approx(&value)
                    ));
                } else {
                    document.push_str(&format!("{},{}\n", format_rational(&value), count));
                }
            }
            emit(&out, &document)
        }
        Command::Density { r, kind, nlist, human, out } => {
            let target = parse_rational(&r)?;
            let kind = match kind {
                KindArg::Trace => MeasureKind::Trace,
                KindArg::Trace2 => MeasureKind::Trace2,
            };
            let document = if human {
                let mut doc = String::from("n,abs_measure,gap,kappa,abs_measure_approx\n");
                for point in density_sequence(&target, kind, &nlist)? {
                    doc.push_str(&format!(
                        "{},{},{},{},{}\n",
                        point.n,
                        format_rational(&point.abs_measure),
                        format_rational(&point.gap),
                        point.kappa.map(|k| k.to_string()).unwrap_or_default(),
                        approx(&point.abs_measure),
                    ));
                }
                doc
            } else {
                density_report(&target, kind, &nlist)?
            };
            emit(&out, &document)
        }
    }
}

/// Splits the raw index space into one window per worker and merges the
/// per-window reports; the merge is a pure min-reduction and set union, so
/// the result is byte-identical for every worker count.
fn run_campaign(spec: &EnumSpec, k_max: u32, workers: u32) -> Result<CampaignReport, CliError> {
    spec.validate()?;
    if workers <= 1 {
        return Ok(verify_campaign(spec, k_max)?);
    }
    let space = spec.search_space();
    let workers = u128::from(workers);
    let parts = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let start = space * w / workers;
                    let end = space * (w + 1) / workers;
                    verify_campaign_range(spec, k_max, start, end)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|handle| handle.join().expect("campaign worker panicked"))
            .collect::<Result<Vec<_>, Error>>()
    })?;
    let mut merged: Option<CampaignReport> = None;
    for part in parts {
        merged = Some(match merged {
            None => part,
            Some(acc) => merge_reports(acc, part),
        });
    }
    Ok(merged.expect("at least one worker"))
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli.command) {
        eprintln!("error[{}]: {err}", err.code());
        std::process::exit(1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_printers_handle_both_entry_kinds() {
        let path = path_matrix(2);
        assert_eq!(print_int_matrix(&path), "n 2\n1 -1\n-1 2\n");
        let radical = symmetrize(&path).unwrap();
        assert_eq!(print_radical_matrix(&radical), "n 2\n1 -1\n-1 2\n");
    }
}
