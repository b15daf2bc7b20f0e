//! Waring decompositions `p = Σ c_i ℓ_i^d`.

use super::field::Field;
use super::matrix::Matrix;
use super::poly::{DensePoly, LinearForm};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaringPoint<F> {
    pub d: u32,
    pub m: usize,
    pub terms: Vec<(F, LinearForm<F>)>,
}

impl<F: Field> WaringPoint<F> {
    pub fn new(d: u32, m: usize, terms: Vec<(F, LinearForm<F>)>) -> Result<Self, AlgebraError> {
        if d == 0 {
            return Err(AlgebraError::ZeroDegree);
        }
        if let Some((_, l)) = terms.iter().find(|(_, l)| l.m() != m) {
            return Err(AlgebraError::FormLength {
                expected: m,
                found: l.m(),
            });
        }
        Ok(WaringPoint { d, m, terms })
    }

    /// `Σ ℓ_i^d` with unit coefficients.
    pub fn from_forms(d: u32, forms: Vec<LinearForm<F>>) -> Result<Self, AlgebraError> {
        let m = forms.first().map_or(0, LinearForm::m);
        WaringPoint::new(d, m, forms.into_iter().map(|l| (F::one(), l)).collect())
    }

    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &F) -> Self {
        WaringPoint {
            d: self.d,
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(a, l)| (a.clone() * c, l.clone()))
                .collect(),
        }
    }

    /// Replaces every form `ℓ_i` by `g·ℓ_i`.
    pub fn transform(&self, g: &Matrix<F>) -> Self {
        assert_eq!(
            (g.nrows(), g.ncols()),
            (self.m, self.m),
            "matrix size must equal m"
        );
        WaringPoint {
            d: self.d,
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(c, l)| (c.clone(), l.transform(g)))
                .collect(),
        }
    }
}

/// Multinomial expansion of `Σ c_i ℓ_i^d`.
pub fn waring_expand<F: Field>(p: &WaringPoint<F>) -> DensePoly<F> {
    let mut out = DensePoly::zero(p.d, p.m);
    for (c, l) in &p.terms {
        out = out.add(&l.to_poly().pow(p.d).scale(c));
    }
    out
}
