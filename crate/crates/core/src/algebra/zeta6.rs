//! The cyclotomic field Q(ζ) for a primitive sixth root of unity ζ = e^{iπ/3}.
//!
//! Elements are `a + b·ζ` with rational `a, b`, reduced with `ζ² = ζ − 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::field::{format_rational, is_negative, Field, Q};
use super::scalar::{FieldKind, Scalar};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zeta6 {
    pub a: Q,
    pub b: Q,
}

impl Zeta6 {
    pub fn new(a: Q, b: Q) -> Self {
        Zeta6 { a, b }
    }

    /// The generator ζ.
    pub fn zeta() -> Self {
        Zeta6::new(Q::zero(), Q::one())
    }

    /// `a² + ab + b²`, the field norm down to Q.
    pub fn norm(&self) -> Q {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    /// Complex conjugate; ζ̄ = 1 − ζ.
    pub fn conj(&self) -> Self {
        Zeta6::new(&self.a + &self.b, -self.b.clone())
    }

    /// Whether the element lies in Q (zero ζ-component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a + bd;
        Zeta6::new(a, b)
    }
}

impl From<Q> for Zeta6 {
    fn from(q: Q) -> Self {
        Zeta6::new(q, Q::zero())
    }
}

impl fmt::Display for Zeta6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let zpart = if self.b.is_one() {
            "z".to_string()
        } else if (-self.b.clone()).is_one() {
            "-z".to_string()
        } else {
            format!("{}*z", format_rational(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{zpart}")
        } else if is_negative(&self.b) {
            write!(f, "{}{}", format_rational(&self.a), zpart)
        } else {
            write!(f, "{}+{}", format_rational(&self.a), zpart)
        }
    }
}

impl Zero for Zeta6 {
    fn zero() -> Self {
        Zeta6::new(Q::zero(), Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Zeta6 {
    fn one() -> Self {
        Zeta6::new(Q::one(), Q::zero())
    }
}

impl Neg for Zeta6 {
    type Output = Zeta6;
    fn neg(self) -> Zeta6 {
        Zeta6::new(-self.a, -self.b)
    }
}

impl Add for Zeta6 {
    type Output = Zeta6;
    fn add(mut self, rhs: Zeta6) -> Zeta6 {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a Zeta6> for Zeta6 {
    type Output = Zeta6;
    fn add(mut self, rhs: &'a Zeta6) -> Zeta6 {
        self += rhs;
        self
    }
}

impl Sub for Zeta6 {
    type Output = Zeta6;
    fn sub(mut self, rhs: Zeta6) -> Zeta6 {
        self -= &rhs;
        self
    }
}

impl<'a> Sub<&'a Zeta6> for Zeta6 {
    type Output = Zeta6;
    fn sub(mut self, rhs: &'a Zeta6) -> Zeta6 {
        self -= rhs;
        self
    }
}

impl Mul for Zeta6 {
    type Output = Zeta6;
    fn mul(self, rhs: Zeta6) -> Zeta6 {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a Zeta6> for Zeta6 {
    type Output = Zeta6;
    fn mul(self, rhs: &'a Zeta6) -> Zeta6 {
        self.mul_ref(rhs)
    }
}

impl<'a> AddAssign<&'a Zeta6> for Zeta6 {
    fn add_assign(&mut self, rhs: &'a Zeta6) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> SubAssign<&'a Zeta6> for Zeta6 {
    fn sub_assign(&mut self, rhs: &'a Zeta6) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl<'a> MulAssign<&'a Zeta6> for Zeta6 {
    fn mul_assign(&mut self, rhs: &'a Zeta6) {
        *self = self.mul_ref(rhs);
    }
}

impl Field for Zeta6 {
    const KIND: FieldKind = FieldKind::Zeta6;

    fn from_rational(q: Q) -> Self {
        Zeta6::from(q)
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Zeta6::new(c.a / &n, c.b / &n))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Zeta6(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Result<Self, AlgebraError> {
        match s {
            Scalar::Zeta6(z) => Ok(z.clone()),
            Scalar::Rational(_) => Err(AlgebraError::MixedFields),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::parse_rational;

    fn z(a: &str, b: &str) -> Zeta6 {
        Zeta6::new(parse_rational(a).unwrap(), parse_rational(b).unwrap())
    }

    #[test]
    fn root_of_unity_identities() {
        let zeta = Zeta6::zeta();
        assert_eq!(zeta.pow(6), Zeta6::one());
        assert_eq!(zeta.pow(3), -Zeta6::one());
        assert_eq!(zeta.clone() - Zeta6::one(), zeta.pow(2));
        assert_ne!(zeta.pow(2), Zeta6::one());
    }

    #[test]
    fn inverse() {
        let x = z("3/2", "-5");
        let inv = x.inv().unwrap();
        assert_eq!(x * inv, Zeta6::one());
        assert!(Zeta6::zero().inv().is_none());
        assert!(Zeta6::one().checked_div(&Zeta6::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(z("6", "0").to_string(), "6");
        assert_eq!(z("0", "1").to_string(), "z");
        assert_eq!(z("1/2", "-3").to_string(), "1/2-3*z");
        assert_eq!(z("-1", "1").to_string(), "-1+z");
    }

    #[test]
    fn sixth_powers_of_pairwise_determinants() {
        // forms (1,0), (1,ζ), (1,ζ²): every 2x2 determinant is a sixth root of unity
        let zeta = Zeta6::zeta();
        let zeta2 = zeta.pow(2);
        let dets = [zeta.clone(), zeta2.clone(), zeta2 - zeta];
        for d in dets {
            assert_eq!(d.pow(6), Zeta6::one());
        }
    }
}
