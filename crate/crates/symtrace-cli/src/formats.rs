//! Text formats shared across subcommands: matrices with an `n <order>`
//! header and space-separated entry rows (radical entries as `s*sqrt(m)`),
//! polynomials as one line of coefficients from constant to leading, and
//! exact rationals as `num/den`. Printing then parsing is bit-exact.

use num_bigint::BigInt;
use num_traits::Signed;
use symtrace_core::matrices::{AnyMatrix, IntMatrix, RadicalMatrix};
use symtrace_core::numerics::{Rational, RadicalScalar, Sign};
use symtrace_core::spectra::CharPoly;
use symtrace_core::Error;

/// Errors surfaced while reading one of the text formats.
#[derive(Debug)]
pub enum ParseError {
    Malformed(String),
    Domain(Error),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Malformed(msg) => write!(f, "{msg}"),
            ParseError::Domain(err) => write!(f, "{err}"),
        }
    }
}

fn bad(msg: impl Into<String>) -> ParseError {
    ParseError::Malformed(msg.into())
}

fn parse_bigint(token: &str) -> Result<BigInt, ParseError> {
    token
        .parse()
        .map_err(|_| bad(format!("expected an integer, found {token:?}")))
}

/// Parses `num/den` or a plain integer.
pub fn parse_rational(token: &str) -> Result<Rational, ParseError> {
    match token.split_once('/') {
        None => Ok(Rational::from(parse_bigint(token)?)),
        Some((num, den)) => {
            let den = parse_bigint(den)?;
            if den == BigInt::ZERO {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(parse_bigint(num)?, den))
        }
    }
}

/// Always `num/den`, even for integers, so machine outputs stay uniform.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

fn parse_radical_token(token: &str) -> Result<RadicalScalar, ParseError> {
    match token.split_once("*sqrt(") {
        None => Ok(RadicalScalar::from_integer(&parse_bigint(token)?)),
        Some((sign, rest)) => {
            let radicand = rest
                .strip_suffix(')')
                .ok_or_else(|| bad(format!("unterminated radical {token:?}")))?;
            let sign = match sign {
                "1" => Sign::Plus,
                "-1" => Sign::Minus,
                other => return Err(bad(format!("radical sign must be 1 or -1, found {other:?}"))),
            };
            let radicand = parse_bigint(radicand)?;
            if radicand.is_negative() {
                return Err(bad("negative radicand"));
            }
            if radicand == BigInt::ZERO {
                return Ok(RadicalScalar::zero());
            }
            Ok(RadicalScalar::new(sign, radicand))
        }
    }
}

/// Parses one matrix document: an `n <order>` header line, then `n` rows of
/// `n` entries. Any `s*sqrt(m)` token makes the whole matrix radical.
pub fn parse_any_matrix(text: &str) -> Result<AnyMatrix, ParseError> {
    let mut lines = text.lines().filter(|line| !line.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty matrix document"))?;
    let mut header_fields = header.split_whitespace();
    if header_fields.next() != Some("n") {
        return Err(bad(format!("matrix header must be `n <order>`, found {header:?}")));
    }
    let n: usize = header_fields
        .next()
        .and_then(|tok| tok.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| bad("matrix order must be a positive integer"))?;
    if header_fields.next().is_some() {
        return Err(bad("matrix header has trailing fields"));
    }

    let mut rows: Vec<Vec<&str>> = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines.next().ok_or_else(|| bad(format!("expected {n} entry rows")))?;
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != n {
            return Err(bad(format!("expected {n} entries per row, found {}", row.len())));
        }
        rows.push(row);
    }
    if lines.next().is_some() {
        return Err(bad("trailing content after the matrix rows"));
    }

    let radical = rows
        .iter()
        .any(|row| row.iter().any(|tok| tok.contains("*sqrt(")));
    if radical {
        let mut parsed = Vec::with_capacity(n);
        for row in rows {
            let mut out = Vec::with_capacity(n);
            for tok in row {
                out.push(parse_radical_token(tok)?);
            }
            parsed.push(out);
        }
        RadicalMatrix::from_rows(parsed)
            .map(AnyMatrix::Radical)
            .map_err(ParseError::Domain)
    } else {
        let mut parsed = Vec::with_capacity(n);
        for row in rows {
            let mut out = Vec::with_capacity(n);
            for tok in row {
                out.push(parse_bigint(tok)?);
            }
            parsed.push(out);
        }
        IntMatrix::from_rows(parsed)
            .map(AnyMatrix::Int)
            .map_err(ParseError::Domain)
    }
}

pub fn print_int_matrix(m: &IntMatrix) -> String {
    let n = m.n();
    let mut out = format!("n {n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn print_radical_matrix(t: &RadicalMatrix) -> String {
    let n = t.n();
    let mut out = format!("n {n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| t.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses one polynomial line: coefficients from constant to leading,
/// integers or `num/den` rationals, monic enforced.
pub fn parse_poly(line: &str) -> Result<CharPoly, ParseError> {
    let mut coeffs = Vec::new();
    for tok in line.split_whitespace() {
        coeffs.push(parse_rational(tok)?);
    }
    if coeffs.is_empty() {
        return Err(bad("empty polynomial line"));
    }
    CharPoly::from_coeffs(coeffs).map_err(ParseError::Domain)
}

pub fn print_poly(p: &CharPoly) -> String {
    let cells: Vec<String> = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                c.numer().to_string()
            } else {
                format_rational(c)
            }
        })
        .collect();
    let mut line = cells.join(" ");
    line.push('\n');
    line
}
