//! Exact trace measures of matrix powers and the lower bounds they are
//! compared against.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Error;
use crate::matrices::{classify, AnyMatrix, IntMatrix};
use crate::numerics::Rational;
use crate::spectra::{char_poly_radical, power_sums_from_coeffs};

/// Largest supported bound index k in B(n, k); the bound has on the order of
/// 2^k bits, so this cap keeps results at a few megabytes.
pub const MAX_BOUND_INDEX: u32 = 24;

/// Largest supported k_max for [`check_bounds`]; trace exponents reach 2^k.
pub const MAX_REPORT_INDEX: u32 = 16;

/// One row of a [`BoundReport`]: Tr_{2^k} against B(n, k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRecord {
    pub k: u32,
    /// Exact Tr_{2^k}; integer-valued for integer matrices.
    pub trace: Rational,
    pub bound: BigInt,
    pub margin: Rational,
}

/// Trace measures of one matrix against the class lower bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    /// Whether the matrix was verified in one of the two bounded classes;
    /// margins of matrices outside them carry no claim.
    pub applicable: bool,
    pub trace: Rational,
    pub trace_bound: BigInt,
    pub trace_margin: Rational,
    pub records: Vec<BoundRecord>,
}

impl BoundReport {
    /// A negative margin on a class member would falsify the bounds these
    /// reports certify; callers treat this as a hard failure, never as data.
    pub fn has_violation(&self) -> bool {
        self.applicable
            && (self.trace_margin.is_negative()
                || self.records.iter().any(|r| r.margin.is_negative()))
    }
}

fn int_power_trace(a: &IntMatrix, k: u32) -> BigInt {
    match k {
        1 => a.trace(),
        // Tr(A^2) needs no matrix product: (A^2)_ii = sum_j a_ij a_ji.
        2 => {
            let n = a.n();
            let mut acc = BigInt::ZERO;
            for i in 0..n {
                for j in 0..n {
                    acc += a.get(i, j) * a.get(j, i);
                }
            }
            acc
        }
        _ => a.pow(u64::from(k)).trace(),
    }
}

/// Exact Tr(A^k), the sum of k-th eigenvalue powers with multiplicity.
///
/// Integer matrices go through integer matrix powers; radical matrices go
/// through the characteristic polynomial of their rational similar form and
/// Newton's identities.
pub fn trace_k(m: &AnyMatrix, k: u32) -> Result<Rational, Error> {
    assert!(k >= 1, "trace exponent must be positive");
    match m {
        AnyMatrix::Int(a) => Ok(Rational::from(int_power_trace(a, k))),
        AnyMatrix::Radical(t) => {
            let p = char_poly_radical(t)?;
            let sums = power_sums_from_coeffs(&p, k as usize);
            Ok(sums.s(k as usize).clone())
        }
    }
}

/// Tr(A^k) / n, exact.
pub fn abs_trace_k(m: &AnyMatrix, k: u32) -> Result<Rational, Error> {
    Ok(trace_k(m, k)? / Rational::from(BigInt::from(m.n())))
}

/// Lower bound for the plain trace over both matrix classes: 2n - 1.
pub fn trace_lower_bound(n: usize) -> BigInt {
    BigInt::from(2 * n as i64 - 1)
}

/// Lower bound B(n, k) = 2^r + (n-2) 6^r + 5^r with r = 2^(k-1), applying to
/// Tr_{2^k} over both matrix classes. For k = 1 this is 6n - 5.
#[allow(non_snake_case)]
pub fn lower_bound_B(n: usize, k: u32) -> Result<BigInt, Error> {
    if k == 0 || k > MAX_BOUND_INDEX {
        return Err(Error::UnsupportedExponent { k });
    }
    let r = 1usize << (k - 1);
    let b = num_traits::pow(BigInt::from(2), r)
        + BigInt::from(n as i64 - 2) * num_traits::pow(BigInt::from(6), r)
        + num_traits::pow(BigInt::from(5), r);
    Ok(b)
}

fn row_square_sums(m: &AnyMatrix) -> Result<Vec<BigInt>, Error> {
    let n = m.n();
    match m {
        AnyMatrix::Int(a) => {
            if let Some(witness) = a.symmetry_violation() {
                return Err(Error::NotSymmetric { witness });
            }
            Ok((0..n)
                .map(|i| (0..n).map(|j| a.get(i, j) * a.get(i, j)).sum())
                .collect())
        }
        AnyMatrix::Radical(t) => Ok((0..n)
            .map(|i| (0..n).map(|j| t.get(i, j).square()).sum())
            .collect()),
    }
}

/// Row-sum-of-squares lower bound for Tr_{2^k} of a symmetric matrix:
/// sum_i (sum_j a_ij^2)^(2^(k-1)). Equals Tr_2 exactly at k = 1.
pub fn rss_bound(m: &AnyMatrix, k: u32) -> Result<BigInt, Error> {
    if k == 0 || k > MAX_BOUND_INDEX {
        return Err(Error::UnsupportedExponent { k });
    }
    let r = 1usize << (k - 1);
    Ok(row_square_sums(m)?
        .into_iter()
        .map(|row| num_traits::pow(row, r))
        .sum())
}

/// Computes Tr and Tr_{2^k} for k = 1..k_max with their lower bounds and
/// exact margins. `applicable` records whether the matrix was verified in a
/// bounded class.
pub fn check_bounds(m: &AnyMatrix, k_max: u32) -> Result<BoundReport, Error> {
    if k_max > MAX_REPORT_INDEX {
        return Err(Error::UnsupportedExponent { k: k_max });
    }
    let n = m.n();
    let report = classify(m);
    let applicable = report.in_s_n.is_yes() || report.in_t_n.is_yes();

    let trace = trace_k(m, 1)?;
    let trace_bound = trace_lower_bound(n);
    let trace_margin = &trace - Rational::from(trace_bound.clone());

    let mut records = Vec::with_capacity(k_max as usize);
    match m {
        AnyMatrix::Int(a) => {
            // One squaring per level: after k squarings the power is 2^k.
            let mut power = a.clone();
            for k in 1..=k_max {
                power = power.mul(&power);
                let tr = Rational::from(power.trace());
                let bound = lower_bound_B(n, k)?;
                let margin = &tr - Rational::from(bound.clone());
                records.push(BoundRecord { k, trace: tr, bound, margin });
            }
        }
        AnyMatrix::Radical(t) => {
            if k_max >= 1 {
                let p = char_poly_radical(t)?;
                let sums = power_sums_from_coeffs(&p, 1usize << k_max);
                for k in 1..=k_max {
                    let tr = sums.s(1usize << k).clone();
                    let bound = lower_bound_B(n, k)?;
                    let margin = &tr - Rational::from(bound.clone());
                    records.push(BoundRecord { k, trace: tr, bound, margin });
                }
            }
        }
    }
    Ok(BoundReport { n, applicable, trace, trace_bound, trace_margin, records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::symmetrize;
    use num_traits::One;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn path(n: usize) -> IntMatrix {
        IntMatrix::from_fn(n, |i, j| {
            if i == j {
                BigInt::from(if i == 0 { 1 } else { 2 })
            } else if i.abs_diff(j) == 1 {
                BigInt::from(-1)
            } else {
                BigInt::ZERO
            }
        })
    }

    fn q(v: i64) -> Rational {
        Rational::from(BigInt::from(v))
    }

    #[test]
    fn trace_power_examples() {
        assert_eq!(trace_k(&AnyMatrix::Int(path(2)), 2), Ok(q(7)));
        assert_eq!(trace_k(&AnyMatrix::Int(path(3)), 4), Ok(q(117)));
        assert_eq!(trace_k(&AnyMatrix::Int(IntMatrix::identity(4)), 7), Ok(q(4)));
    }

    #[test]
    fn trace_paths_agree_across_kinds() {
        let a = m(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]);
        let t = symmetrize(&a).unwrap();
        for k in 1..=8 {
            assert_eq!(
                trace_k(&AnyMatrix::Int(a.clone()), k),
                trace_k(&AnyMatrix::Radical(t.clone()), k),
                "paths disagree at exponent {k}"
            );
        }
        assert_eq!(trace_k(&AnyMatrix::Int(a), 2), Ok(q(372)));
    }

    #[test]
    fn absolute_trace_examples() {
        assert_eq!(abs_trace_k(&AnyMatrix::Int(path(2)), 2), Ok(Rational::new(7.into(), 2.into())));
        assert_eq!(abs_trace_k(&AnyMatrix::Int(IntMatrix::identity(5)), 3), Ok(Rational::one()));
        assert_eq!(
            abs_trace_k(&AnyMatrix::Int(path(10)), 2),
            Ok(Rational::new(11.into(), 2.into()))
        );
    }

    #[test]
    fn bound_values() {
        assert_eq!(lower_bound_B(2, 2), Ok(BigInt::from(29)));
        assert_eq!(lower_bound_B(3, 2), Ok(BigInt::from(65)));
        assert_eq!(lower_bound_B(1, 1), Ok(BigInt::from(1)));
        assert_eq!(trace_lower_bound(7), BigInt::from(13));
    }

    #[test]
    fn first_bound_is_linear_in_the_order() {
        for n in 1..=1_000_000usize {
            assert_eq!(
                lower_bound_B(n, 1),
                Ok(BigInt::from(6 * n as i64 - 5)),
                "mismatch at n = {n}"
            );
        }
    }

    #[test]
    fn exponent_guards() {
        assert_eq!(lower_bound_B(3, 0), Err(Error::UnsupportedExponent { k: 0 }));
        assert_eq!(
            lower_bound_B(3, MAX_BOUND_INDEX + 1),
            Err(Error::UnsupportedExponent { k: MAX_BOUND_INDEX + 1 })
        );
        let id = AnyMatrix::Int(IntMatrix::identity(2));
        assert_eq!(rss_bound(&id, 0), Err(Error::UnsupportedExponent { k: 0 }));
        assert_eq!(
            check_bounds(&id, MAX_REPORT_INDEX + 1),
            Err(Error::UnsupportedExponent { k: MAX_REPORT_INDEX + 1 })
        );
    }

    #[test]
    fn rss_examples() {
        assert_eq!(rss_bound(&AnyMatrix::Int(path(3)), 1), Ok(BigInt::from(13)));
        assert_eq!(rss_bound(&AnyMatrix::Int(path(3)), 2), Ok(BigInt::from(65)));
        assert_eq!(rss_bound(&AnyMatrix::Int(IntMatrix::identity(6)), 3), Ok(BigInt::from(6)));
        let skew = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            rss_bound(&AnyMatrix::Int(skew), 1),
            Err(Error::NotSymmetric { witness: (0, 1) })
        );
    }

    #[test]
    fn rss_equals_second_trace_at_level_one() {
        let a = m(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]);
        let t = AnyMatrix::Radical(symmetrize(&a).unwrap());
        assert_eq!(Rational::from(rss_bound(&t, 1).unwrap()), trace_k(&t, 2).unwrap());
        assert_eq!(rss_bound(&t, 1), Ok(BigInt::from(372)));
    }

    #[test]
    fn rss_bounds_higher_traces() {
        let corpus = [path(3), path(5), m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 2]])];
        for a in corpus {
            let any = AnyMatrix::Int(a);
            for k in 1..=3 {
                let tr = trace_k(&any, 1 << k).unwrap();
                let bound = Rational::from(rss_bound(&any, k).unwrap());
                assert!(tr >= bound, "rss exceeded the trace at level {k}");
                if k == 1 {
                    assert_eq!(tr, bound);
                }
            }
        }
    }

    #[test]
    fn bound_report_for_the_extremal_family() {
        for n in 2..=12 {
            let report = check_bounds(&AnyMatrix::Int(path(n)), 1).unwrap();
            assert!(report.applicable);
            assert_eq!(report.records[0].margin, q(0), "slack at order {n}");
            assert_eq!(report.trace_margin, q(0));
            assert!(!report.has_violation());
        }
    }

    #[test]
    fn bound_report_for_the_worked_example() {
        let a = m(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]);
        let report = check_bounds(&AnyMatrix::Int(a), 1).unwrap();
        // Singular, hence outside both classes; margins are informational.
        assert!(!report.applicable);
        assert_eq!(report.trace, q(18));
        assert_eq!(report.records[0].trace, q(372));
        assert_eq!(report.records[0].margin, q(359));
        assert!(!report.has_violation());
    }

    #[test]
    fn bound_report_flags_nonmembers() {
        let report = check_bounds(&AnyMatrix::Int(m(&[&[1, 1], &[1, 1]])), 2).unwrap();
        assert!(!report.applicable);
        assert!(!report.has_violation());
    }

    #[test]
    fn radical_report_matches_integer_report() {
        let a = m(&[&[2, 2, 3], &[1, 4, 3], &[1, 2, 6]]);
        let t = symmetrize(&a).unwrap();
        let ri = check_bounds(&AnyMatrix::Int(a), 3).unwrap();
        let rt = check_bounds(&AnyMatrix::Radical(t), 3).unwrap();
        for (x, y) in ri.records.iter().zip(rt.records.iter()) {
            assert_eq!(x.trace, y.trace);
            assert_eq!(x.margin, y.margin);
        }
    }
}
