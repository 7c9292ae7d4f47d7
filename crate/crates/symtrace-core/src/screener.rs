//! Polynomial exclusion screening: power-sum tests that rule a polynomial
//! out as a characteristic polynomial of the positive-definite classes, and
//! a trace-deficit obstruction for minimal polynomials of integer symmetric
//! matrices with only semidefinite components.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Error;
use crate::measures::{lower_bound_B, trace_lower_bound, MAX_REPORT_INDEX};
use crate::numerics::Rational;
use crate::spectra::{is_totally_positive, power_sums_from_coeffs, CharPoly, PowerSums};

/// Outcome of screening one candidate characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenVerdict {
    pub excluded: bool,
    /// Exponent index k whose power sum s_{2^k} fell below the bound, when a
    /// power-sum level is what failed; a trace-level failure leaves this
    /// empty (the trace itself sits below 2n - 1).
    pub violated_k: Option<u32>,
    /// s_1 through s_{2^k_max}.
    pub s_values: PowerSums,
    pub trace_bound: BigInt,
    /// (k, bound) pairs for each screened power-sum level.
    pub bounds: Vec<(u32, BigInt)>,
    /// Second elementary symmetric function of the roots, for degree >= 2.
    pub e2: Option<Rational>,
    /// Threshold paired with e2: when the trace equals 2n - 1 exactly,
    /// s_2 < 6n - 5 holds if and only if e_2 > 2n^2 - 5n + 3.
    pub e2_threshold: Option<BigInt>,
    pub note: String,
}

impl ScreenVerdict {
    /// True when the exclusion came from the trace sitting below 2n - 1.
    pub fn trace_violated(&self) -> bool {
        self.s_values.s(1) < &Rational::from(self.trace_bound.clone())
    }
}

/// Tests whether the power sums of `p` clear the class lower bounds:
/// s_1 >= 2n - 1 and s_{2^k} >= B(n, k) for every k <= k_max. A failure at
/// any level proves no matrix of the positive-definite classes has `p` as
/// its characteristic polynomial.
///
/// The verdict is decided on power sums alone; the equivalent
/// second-coefficient form is carried informationally because its threshold
/// doubles or halves with the sign convention chosen for coefficients.
pub fn screen_char_poly(p: &CharPoly, k_max: u32) -> Result<ScreenVerdict, Error> {
    if !p.is_integer() {
        return Err(Error::NonIntegerCoefficients);
    }
    let n = p.degree();
    assert!(n >= 1, "degree must be at least 1");
    if k_max > MAX_REPORT_INDEX {
        return Err(Error::UnsupportedExponent { k: k_max });
    }

    let s_count = 1usize.max(1usize << k_max);
    let s_values = power_sums_from_coeffs(p, s_count);
    let trace_bound = trace_lower_bound(n);
    let mut bounds = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        bounds.push((k, lower_bound_B(n, k)?));
    }

    let mut violated_k = None;
    let mut excluded = s_values.s(1) < &Rational::from(trace_bound.clone());
    if !excluded {
        for (k, bound) in &bounds {
            if s_values.s(1 << k) < &Rational::from(bound.clone()) {
                excluded = true;
                violated_k = Some(*k);
                break;
            }
        }
    }

    let (e2, e2_threshold) = if n >= 2 {
        let n_int = BigInt::from(n);
        let threshold = BigInt::from(2) * &n_int * &n_int - BigInt::from(5) * &n_int + 3;
        (Some(p.e(2)), Some(threshold))
    } else {
        (None, None)
    };

    Ok(ScreenVerdict {
        excluded,
        violated_k,
        s_values,
        trace_bound,
        bounds,
        e2,
        e2_threshold,
        note: String::from(
            "verdict decided on power sums; the coefficient form of the first \
             level reads e2 > 2n^2 - 5n + 3 when the trace is exactly 2n - 1 \
             (doubling both sides gives the variant 2*e2 > 4n^2 - 10n + 6)",
        ),
    })
}

/// Per-factor data backing a minimal-polynomial obstruction verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorRecord {
    pub degree: usize,
    pub trace: BigInt,
    /// 2*degree - trace; the criterion needs this positive for every factor.
    pub deficit: BigInt,
    pub totally_positive: bool,
}

/// Outcome of the minimal-polynomial obstruction test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub excluded: bool,
    pub factors: Vec<FactorRecord>,
    /// The hypotheses the verdict is conditional on.
    pub note: String,
}

/// Tests whether x * (product of the factors) can be the minimal polynomial
/// of an integer symmetric matrix whose connected components are all
/// positive semidefinite with no component positive definite. Excluded when
/// every factor is totally positive and has trace below twice its degree;
/// anything else is inconclusive, including factors that fail total
/// positivity.
///
/// Irreducibility of the factors is assumed, not verified.
pub fn min_poly_obstruction(factors: &[CharPoly]) -> Result<ObstructionVerdict, Error> {
    let mut records = Vec::with_capacity(factors.len());
    for factor in factors {
        if !factor.is_integer() {
            return Err(Error::NonIntegerCoefficients);
        }
        let degree = factor.degree();
        assert!(degree >= 1, "factors must be nonconstant");
        let trace = factor
            .e(1)
            .to_integer();
        let deficit = BigInt::from(2 * degree as i64) - &trace;
        records.push(FactorRecord {
            degree,
            trace,
            deficit,
            totally_positive: is_totally_positive(factor),
        });
    }
    let excluded = !records.is_empty()
        && records
            .iter()
            .all(|r| r.totally_positive && r.deficit > BigInt::ZERO);
    Ok(ObstructionVerdict {
        excluded,
        factors: records,
        note: format!(
            "factors are assumed irreducible; an excluded verdict rules out \
             x times their product as the minimal polynomial of any integer \
             symmetric matrix whose connected components are all positive \
             semidefinite with none positive definite{}",
            if excluded { "" } else { "; inconclusive otherwise" }
        ),
    })
}
