//! Scalar layer: arbitrary-precision integers, exact rationals, and signed
//! square-root scalars.

use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational number, always reduced, denominator positive.
pub type Rational = num_rational::Ratio<BigInt>;

/// Floor of the square root. `m` must be nonnegative.
pub fn integer_sqrt(m: &BigInt) -> BigInt {
    debug_assert!(!m.is_negative(), "integer_sqrt of a negative number");
    m.sqrt()
}

/// Exact square test: `Some(r)` with `r * r == m` and `r >= 0`, else `None`.
/// Negative inputs are never squares.
pub fn is_perfect_square(m: &BigInt) -> Option<BigInt> {
    if m.is_negative() {
        return None;
    }
    let r = m.sqrt();
    if &r * &r == *m {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a nonnegative rational, when one exists. A reduced
/// fraction is a square iff numerator and denominator are both squares.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let num = is_perfect_square(r.numer())?;
    let den = is_perfect_square(r.denom())?;
    Some(Rational::new(num, den))
}

/// Decimal approximation for display purposes only; never used in a verdict.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Sign of a scalar: -1, 0, or +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    /// Sign of an integer.
    pub fn of(v: &BigInt) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// Sign of a product.
    pub fn mul(self, other: Sign) -> Sign {
        match (self.as_i8()) * (other.as_i8()) {
            -1 => Sign::Minus,
            0 => Sign::Zero,
            _ => Sign::Plus,
        }
    }

    /// `magnitude` with this sign attached (zero sign gives zero).
    pub fn apply(self, magnitude: BigInt) -> BigInt {
        match self {
            Sign::Minus => -magnitude,
            Sign::Zero => BigInt::ZERO,
            Sign::Plus => magnitude,
        }
    }
}

/// A signed square root: the real number `sign * sqrt(radicand)` with an
/// integer radicand >= 0.
///
/// The representation is canonical (`sign == Zero` iff `radicand == 0`, and a
/// nonnegative radicand is enforced at construction), so structural equality
/// coincides with equality of the represented real numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    sign: Sign,
    radicand: BigInt,
}

impl RadicalScalar {
    /// Builds `sign * sqrt(radicand)`. A zero sign or zero radicand collapses
    /// to the canonical zero. Panics on a negative radicand.
    pub fn new(sign: Sign, radicand: BigInt) -> Self {
        assert!(!radicand.is_negative(), "radicand must be nonnegative");
        if sign.is_zero() || radicand.is_zero() {
            RadicalScalar { sign: Sign::Zero, radicand: BigInt::ZERO }
        } else {
            RadicalScalar { sign, radicand }
        }
    }

    pub fn zero() -> Self {
        RadicalScalar { sign: Sign::Zero, radicand: BigInt::ZERO }
    }

    /// Embeds an integer: `v` becomes `sign(v) * sqrt(v^2)`.
    pub fn from_integer(v: &BigInt) -> Self {
        RadicalScalar::new(Sign::of(v), v * v)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign.is_zero()
    }

    /// The square of the represented value, always an integer.
    pub fn square(&self) -> BigInt {
        self.radicand.clone()
    }

    /// The represented value as an integer, when the radicand is a perfect
    /// square.
    pub fn as_integer(&self) -> Option<BigInt> {
        let root = is_perfect_square(&self.radicand)?;
        Some(self.sign.apply(root))
    }

    /// Product of two signed radicals: signs multiply, radicands multiply.
    pub fn product(&self, other: &RadicalScalar) -> RadicalScalar {
        RadicalScalar::new(self.sign.mul(other.sign), &self.radicand * &other.radicand)
    }
}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;

    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        self.product(rhs)
    }
}

impl fmt::Display for RadicalScalar {
    /// Integers render bare; everything else as `1*sqrt(m)` or `-1*sqrt(m)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => match self.sign {
                Sign::Minus => write!(f, "-1*sqrt({})", self.radicand),
                _ => write!(f, "1*sqrt({})", self.radicand),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(&int(36864)), Some(int(192)));
        assert_eq!(is_perfect_square(&int(0)), Some(int(0)));
        assert_eq!(is_perfect_square(&int(1)), Some(int(1)));
        assert_eq!(is_perfect_square(&int(2)), None);
        assert_eq!(is_perfect_square(&int(-4)), None);
    }

    #[test]
    fn rational_sqrt_examples() {
        let r = Rational::new(int(9), int(4));
        assert_eq!(rational_sqrt(&r), Some(Rational::new(int(3), int(2))));
        assert_eq!(rational_sqrt(&Rational::new(int(2), int(1))), None);
        assert_eq!(rational_sqrt(&Rational::new(int(4), int(3))), None);
    }

    #[test]
    fn radical_products() {
        let a = RadicalScalar::new(Sign::Plus, int(16));
        let b = RadicalScalar::new(Sign::Plus, int(4));
        assert_eq!(a.product(&b), RadicalScalar::new(Sign::Plus, int(64)));

        let c = RadicalScalar::new(Sign::Minus, int(3));
        let d = RadicalScalar::new(Sign::Minus, int(12));
        assert_eq!(c.product(&d), RadicalScalar::new(Sign::Plus, int(36)));

        let z = RadicalScalar::zero();
        let e = RadicalScalar::new(Sign::Plus, int(7));
        assert_eq!(z.product(&e), RadicalScalar::zero());
    }

    #[test]
    fn integer_embedding_round_trip() {
        let two = RadicalScalar::from_integer(&int(2));
        assert_eq!(two, RadicalScalar::new(Sign::Plus, int(4)));
        assert_eq!(two.as_integer(), Some(int(2)));

        let neg = RadicalScalar::from_integer(&int(-3));
        assert_eq!(neg, RadicalScalar::new(Sign::Minus, int(9)));
        assert_eq!(neg.as_integer(), Some(int(-3)));

        assert_eq!(RadicalScalar::from_integer(&int(0)), RadicalScalar::zero());
        assert_eq!(RadicalScalar::new(Sign::Plus, int(8)).as_integer(), None);
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(RadicalScalar::new(Sign::Zero, int(0)), RadicalScalar::zero());
        assert_eq!(RadicalScalar::new(Sign::Plus, int(0)), RadicalScalar::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(RadicalScalar::from_integer(&int(-3)).to_string(), "-3");
        assert_eq!(RadicalScalar::new(Sign::Plus, int(8)).to_string(), "1*sqrt(8)");
        assert_eq!(RadicalScalar::new(Sign::Minus, int(8)).to_string(), "-1*sqrt(8)");
        assert_eq!(RadicalScalar::zero().to_string(), "0");
        assert_eq!(format!("{}", RadicalScalar::new(Sign::Plus, int(4))), "2");
    }

    proptest! {
        #[test]
        fn squares_are_recognized(r in -10_000i64..10_000) {
            let m = int(r) * int(r);
            prop_assert_eq!(is_perfect_square(&m), Some(int(r.abs())));
        }

        #[test]
        fn off_by_one_is_not_a_square(r in 1i64..100_000) {
            let m = int(r) * int(r) + 1;
            // r^2 + 1 is a square only for r = 0.
            prop_assert_eq!(is_perfect_square(&m), None);
        }

        #[test]
        fn product_commutes_and_squares_multiply(
            s1 in -1i8..=1, m1 in 0i64..1000, s2 in -1i8..=1, m2 in 0i64..1000
        ) {
            let sign = |s: i8| match s { -1 => Sign::Minus, 0 => Sign::Zero, _ => Sign::Plus };
            let a = RadicalScalar::new(sign(s1), int(m1));
            let b = RadicalScalar::new(sign(s2), int(m2));
            prop_assert_eq!(a.product(&b), b.product(&a));
            prop_assert_eq!(a.product(&b).square(), a.square() * b.square());
        }
    }
}
