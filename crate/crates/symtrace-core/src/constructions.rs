//! Explicit matrix families: the extremal path family, the trace-targeting
//! tridiagonal family, and the second-trace family built on four-square
//! decompositions.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive};

use crate::error::Error;
use crate::matrices::{AnyMatrix, IntMatrix};
use crate::numerics::Rational;

/// Tridiagonal matrix with diagonal (1, 2, ..., 2) and -1 off the diagonal.
/// Connected, symmetric, positive definite, and extremal for the second
/// trace measure: Tr_2 = 6n - 5 with equality.
pub fn path_matrix(n: usize) -> IntMatrix {
    assert!(n >= 1, "matrix order must be at least 1");
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

/// Tridiagonal matrix with diagonal (a_n - 2(n-1), 2, ..., 2) and -1 off the
/// diagonal, so the trace is exactly `a_n`. The corner entry must stay
/// positive, hence a_n >= 2n - 1.
#[allow(non_snake_case)]
pub fn construct_T(n: usize, a_n: &BigInt) -> Result<IntMatrix, Error> {
    assert!(n >= 1, "matrix order must be at least 1");
    let corner = a_n - BigInt::from(2 * (n as i64 - 1));
    if !corner.is_positive() {
        return Err(Error::TraceTooSmall);
    }
    Ok(IntMatrix::from_fn(n, |i, j| {
        if i == j {
            if i == 0 {
                corner.clone()
            } else {
                BigInt::from(2)
            }
        } else if i.abs_diff(j) == 1 {
            BigInt::from(-1)
        } else {
            BigInt::ZERO
        }
    }))
}

/// Sorted decomposition of a nonnegative integer into four squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourSquare {
    b: [u64; 4],
    target: u64,
}

impl FourSquare {
    /// The parts, ascending.
    pub fn parts(&self) -> [u64; 4] {
        self.b
    }

    pub fn target(&self) -> u64 {
        self.target
    }
}

/// Lexicographically least tuple b1 <= b2 <= b3 <= b4 with sum of squares m.
///
/// Ascending enumeration over (b1, b2, b3) with the last part determined;
/// the first hit is the least tuple because b4 is a function of the rest.
pub fn four_square(m: u64) -> FourSquare {
    for b1 in 0..=(m / 4).sqrt() {
        let r1 = m - b1 * b1;
        for b2 in b1..=(r1 / 3).sqrt() {
            let r2 = r1 - b2 * b2;
            for b3 in b2..=(r2 / 2).sqrt() {
                let r3 = r2 - b3 * b3;
                let b4 = r3.sqrt();
                if b4 * b4 == r3 {
                    debug_assert!(b4 >= b3);
                    return FourSquare { b: [b1, b2, b3, b4], target: m };
                }
            }
        }
    }
    unreachable!("every nonnegative integer is a sum of four squares")
}

/// Record of one second-trace construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LConstruction {
    pub n: usize,
    pub a_n: BigInt,
    pub a_n1: BigInt,
    /// Target power sum a_n^2 - 2 a_n1.
    pub s2: BigInt,
    /// s2 - 2(n-1) - 4(n-4): what the four leading diagonal squares must
    /// absorb after the -1 path entries and the trailing 2s.
    pub residual: BigInt,
    pub b: FourSquare,
    /// Adjusted diagonal prefix: each part lifted to the class minimum.
    pub w: [u64; 4],
    /// Slack added by the adjustment; always within 0..=9.
    pub kappa: u64,
}

/// Builds the order-n matrix with diagonal (w1, w2, w3, w4, 2, ..., 2) and
/// -1 path off-diagonal, where w adjusts the four-square parts of the
/// residual upward to (>=1, >=2, >=2, b4). The second trace measure of the
/// result is exactly s2 + kappa.
///
/// Positive definiteness of the result is verified, not assumed.
#[allow(non_snake_case)]
pub fn construct_L(
    n: usize,
    a_n: &BigInt,
    a_n1: &BigInt,
) -> Result<(IntMatrix, LConstruction), Error> {
    if n < 5 {
        return Err(Error::OrderTooSmall);
    }
    let s2 = a_n * a_n - BigInt::from(2) * a_n1;
    let residual = &s2 - BigInt::from(2 * (n as i64 - 1)) - BigInt::from(4 * (n as i64 - 4));
    if residual <= BigInt::from(18) {
        return Err(Error::ResidualTooSmall);
    }
    let residual_u64 = residual.to_u64().ok_or(Error::ResidualTooLarge)?;
    let b = four_square(residual_u64);
    let [b1, b2, b3, b4] = b.parts();
    let w = [b1.max(1), b2.max(2), b3.max(2), b4];
    let square_sum = |parts: [u64; 4]| -> u128 {
        parts.iter().map(|&p| u128::from(p) * u128::from(p)).sum()
    };
    let kappa = (square_sum(w) - square_sum(b.parts())) as u64;

    let matrix = IntMatrix::from_fn(n, |i, j| {
        if i == j {
            BigInt::from(if i < 4 { w[i] } else { 2 })
        } else if i.abs_diff(j) == 1 {
            BigInt::from(-1)
        } else {
            BigInt::ZERO
        }
    });
    let pd = crate::spectra::is_positive_definite(&AnyMatrix::Int(matrix.clone()))
        .expect("integer verdicts never fail");
    assert!(pd, "adjusted diagonal must stay positive definite");

    let record = LConstruction {
        n,
        a_n: a_n.clone(),
        a_n1: a_n1.clone(),
        s2,
        residual,
        b,
        w,
        kappa,
    };
    Ok((matrix, record))
}

/// Which measure a density run targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureKind {
    Trace,
    Trace2,
}

/// One constructed matrix with its exact measure and distance to the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityPoint {
    pub n: usize,
    pub matrix: IntMatrix,
    pub abs_measure: Rational,
    pub gap: Rational,
    /// Present for the second-trace family only.
    pub kappa: Option<u64>,
    pub construction: Option<LConstruction>,
}

/// Builds per-order matrices whose absolute measure approaches the target r:
/// within 1/N for the trace family (r >= 2), within 10/N for the
/// second-trace family (r > 6, N >= 5).
///
/// Integer targets are synthesized from r directly: the trace family takes
/// a_n = ceil(rN); the second-trace family additionally takes
/// a_n1 = floor((a_n^2 - round(rN)) / 2), which pins the target power sum
/// a_n^2 - 2 a_n1 to round(rN) or round(rN) + 1.
pub fn density_sequence(
    r: &Rational,
    kind: MeasureKind,
    n_list: &[usize],
) -> Result<Vec<DensityPoint>, Error> {
    match kind {
        MeasureKind::Trace => {
            if r < &Rational::from(BigInt::from(2)) {
                return Err(Error::TargetOutOfRange);
            }
        }
        MeasureKind::Trace2 => {
            if r <= &Rational::from(BigInt::from(6)) {
                return Err(Error::TargetOutOfRange);
            }
        }
    }
    let mut points = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let rn = r * Rational::from(BigInt::from(n));
        let a_n = rn.ceil().to_integer();
        let point = match kind {
            MeasureKind::Trace => {
                let matrix = construct_T(n, &a_n)?;
                let abs_measure = Rational::new(a_n, BigInt::from(n));
                let gap = (&abs_measure - r).abs();
                DensityPoint { n, matrix, abs_measure, gap, kappa: None, construction: None }
            }
            MeasureKind::Trace2 => {
                let t = rn.round().to_integer();
                let a_n1 = (&a_n * &a_n - t).div_floor(&BigInt::from(2));
                let (matrix, record) = construct_L(n, &a_n, &a_n1)?;
                let tr2 = &record.s2 + BigInt::from(record.kappa);
                let abs_measure = Rational::new(tr2, BigInt::from(n));
                let gap = (&abs_measure - r).abs();
                DensityPoint {
                    n,
                    matrix,
                    abs_measure,
                    gap,
                    kappa: Some(record.kappa),
                    construction: Some(record),
                }
            }
        };
        points.push(point);
    }
    Ok(points)
}
