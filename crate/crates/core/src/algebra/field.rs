//! Exact fields used throughout the crate.
//!
//! Every algorithm is generic over [`Field`]. Two implementations exist: the
//! rationals [`Q`] and the cyclotomic field [`Zeta6`]. Mixing them is a type
//! error; the only bridge is the explicit promotion `Zeta6::from(q)`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{FieldKind, Scalar};
use super::AlgebraError;

/// Arbitrary precision rationals, always in lowest terms with positive denominator.
pub type Q = BigRational;

pub trait Field:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + 'static
{
    const KIND: FieldKind;

    fn from_rational(q: Q) -> Self;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;

    fn to_scalar(&self) -> Scalar;

    /// Fails when the scalar belongs to the other field variant.
    fn from_scalar(s: &Scalar) -> Result<Self, AlgebraError>;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(Q::from_integer(BigInt::from(v)))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        rhs.inv()
            .map(|r| self.clone() * r)
            .ok_or(AlgebraError::DivisionByZero)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

impl Field for Q {
    const KIND: FieldKind = FieldKind::Rational;

    fn from_rational(q: Q) -> Self {
        q
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Result<Self, AlgebraError> {
        match s {
            Scalar::Rational(q) => Ok(q.clone()),
            Scalar::Zeta6(_) => Err(AlgebraError::MixedFields),
        }
    }
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Q::from_integer(acc)
}

/// Parses `"num/den"` or `"num"`.
pub fn parse_rational(s: &str) -> Result<Q, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(s.to_string());
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            Ok(Q::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(num))
        }
    }
}

/// Inverse of [`parse_rational`]; the denominator is omitted when it is 1.
pub fn format_rational(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &Q) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-3", "7/2", "-1/4"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/-8").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let q = parse_rational("-2/3").unwrap();
        assert_eq!(q.inv().unwrap(), parse_rational("-3/2").unwrap());
        assert!(Q::zero().inv().is_none());
        assert_eq!(q.pow(3), parse_rational("-8/27").unwrap());
        assert_eq!(q.pow(0), Q::one());
        assert_eq!(factorial(5), Q::from_i64(120));
    }
}
