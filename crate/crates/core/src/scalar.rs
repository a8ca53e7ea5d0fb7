//! Exact coefficient rings.
//!
//! Polynomials are generic over [`Scalar`]; the alcove geometry needs
//! an ordered field with a floor, see [`ExactField`]. Floating point
//! types deliberately do not implement either trait.

use std::fmt::Debug;
use std::ops::{AddAssign, Div, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::Num;

/// A commutative ring with exact arithmetic.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + AddAssign + SubAssign + MulAssign + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Exact rational value, used for text and JSON output.
    fn to_ratio(&self) -> BigRational;

    /// Inverse of [`Scalar::to_ratio`]; `None` if the value is not representable.
    fn from_ratio(r: &BigRational) -> Option<Self>;

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other.clone();
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other.clone();
    }

    fn is_unit(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

/// An ordered field with an integer floor.
pub trait ExactField: Scalar + Div<Output = Self> + PartialOrd {
    fn floor_int(&self) -> BigInt;

    fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_ratio(&self) -> BigRational {
        self.clone()
    }

    fn from_ratio(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

impl ExactField for BigRational {
    fn floor_int(&self) -> BigInt {
        self.floor().to_integer()
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn to_ratio(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn from_ratio(r: &BigRational) -> Option<Self> {
        r.is_integer().then(|| r.to_integer())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

macro_rules! small_ratio {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn from_i64(v: i64) -> Self {
                Ratio::from_integer(<$t>::from(v))
            }

            fn to_ratio(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }

            fn from_ratio(r: &BigRational) -> Option<Self> {
                let num = <$t>::try_from(r.numer()).ok()?;
                let den = <$t>::try_from(r.denom()).ok()?;
                Some(Ratio::new(num, den))
            }
        }

        impl ExactField for Ratio<$t> {
            fn floor_int(&self) -> BigInt {
                BigInt::from(self.numer().div_floor(self.denom()))
            }
        }
    )*};
}

small_ratio!(i64, i128);

/// Sign of a rational as -1, 0 or 1.
pub fn signum<F: ExactField>(v: &F) -> i32 {
    if v.is_zero() {
        0
    } else if *v > F::zero() {
        1
    } else {
        -1
    }
}

/// Absolute value through the ordering.
pub fn abs<F: ExactField>(v: &F) -> F {
    if *v < F::zero() {
        -v.clone()
    } else {
        v.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn floors_match_across_types() {
        for (n, d) in [(7, 2), (-7, 2), (6, 3), (-1, 3), (0, 5)] {
            let a = Rational64::new(n, d).floor_int();
            let b = BigRational::new(n.into(), d.into()).floor_int();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn ratio_round_trip() {
        let r = BigRational::new((-3).into(), 4.into());
        assert_eq!(Rational64::from_ratio(&r).unwrap().to_ratio(), r);
        assert!(BigInt::from_ratio(&r).is_none());
    }

    #[test]
    fn units() {
        assert!(BigInt::from(-1).is_unit());
        assert!(!BigRational::from_i64(2).is_unit());
    }
}
