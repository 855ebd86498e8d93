//! The quadratic field `Q(√2)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `rational + sqrt2 * √2` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub rational: BigRational,
    pub sqrt2: BigRational,
}

impl QSqrt2 {
    pub fn new(rational: BigRational, sqrt2: BigRational) -> Self {
        Self { rational, sqrt2 }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    /// `(a + b√2) / d`
    pub fn from_frac(a: i64, b: i64, d: i64) -> Self {
        let d = BigInt::from(d);
        Self::new(
            BigRational::new(a.into(), d.clone()),
            BigRational::new(b.into(), d),
        )
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt2.is_zero()
    }

    /// Field norm `a^2 - 2 b^2`, nonzero for nonzero elements since √2 is irrational.
    pub fn norm(&self) -> BigRational {
        let two = BigRational::from_integer(2.into());
        &self.rational * &self.rational - two * &self.sqrt2 * &self.sqrt2
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.rational.clone(), -&self.sqrt2)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(Self::new(c.rational / &n, c.sqrt2 / n))
    }
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rational + &rhs.rational, &self.sqrt2 + &rhs.sqrt2)
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rational - &rhs.rational, &self.sqrt2 - &rhs.sqrt2)
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-&self.rational, -&self.sqrt2)
    }
}

impl Mul for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        let two = BigRational::from_integer(2.into());
        QSqrt2::new(
            &self.rational * &rhs.rational + two * &self.sqrt2 * &rhs.sqrt2,
            &self.rational * &rhs.sqrt2 + &self.sqrt2 * &rhs.rational,
        )
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt2.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return if self.sqrt2.is_one() {
                f.write_str("√2")
            } else {
                write!(f, "({})√2", self.sqrt2)
            };
        }
        write!(f, "{} + ({})√2", self.rational, self.sqrt2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let r = QSqrt2::sqrt2();
        assert_eq!(&r * &r, QSqrt2::from_ints(2, 0));
    }

    #[test]
    fn inverse_of_one_over_sqrt2() {
        let x = QSqrt2::from_frac(0, 1, 2); // √2/2 = 1/√2
        assert_eq!(x.inverse().unwrap(), QSqrt2::sqrt2());
        assert!(QSqrt2::zero().inverse().is_none());
    }

    fn arb() -> impl Strategy<Value = QSqrt2> {
        (-20i64..20, -20i64..20, -20i64..20, 1i64..9, 1i64..9).prop_map(|(a, b, _, d1, d2)| {
            QSqrt2::new(
                BigRational::new(a.into(), d1.into()),
                BigRational::new(b.into(), d2.into()),
            )
        })
    }

    proptest! {
        #[test]
        fn multiplication_associates(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn nonzero_values_invert(a in arb()) {
            prop_assume!(!a.is_zero());
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, QSqrt2::one());
        }
    }
}
