//! Homogeneous polynomials and linear forms.

use std::collections::BTreeMap;

use super::field::Field;
use super::matrix::Matrix;
use super::AlgebraError;

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

/// A homogeneous linear form `Σ_j coeffs[j]·x_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm<F> {
    pub coeffs: Vec<F>,
}

impl<F: Field> LinearForm<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        LinearForm::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    /// The variable `x_{j+1}` among `m`.
    pub fn variable(j: usize, m: usize) -> Self {
        let mut coeffs = vec![F::zero(); m];
        coeffs[j] = F::one();
        LinearForm { coeffs }
    }

    pub fn m(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        LinearForm::new(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        LinearForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        )
    }

    /// `g·ℓ` for an `m × m` matrix `g`.
    pub fn transform(&self, g: &Matrix<F>) -> Self {
        LinearForm::new(g.mul_vec(&self.coeffs))
    }

    pub fn to_poly(&self) -> DensePoly<F> {
        let m = self.m();
        let mut p = DensePoly::zero(1, m);
        for (j, c) in self.coeffs.iter().enumerate() {
            let mut alpha = vec![0; m];
            alpha[j] = 1;
            p.add_term(alpha, c.clone());
        }
        p
    }
}

/// A homogeneous polynomial of degree `d` in `m` variables, stored sparsely.
///
/// Every key has length `m` and sums to `d`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly<F> {
    d: u32,
    m: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Field> DensePoly<F> {
    pub fn zero(d: u32, m: usize) -> Self {
        DensePoly {
            d,
            m,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(alpha, c)` pairs, summing repeated exponents.
    pub fn from_terms(
        d: u32,
        m: usize,
        terms: impl IntoIterator<Item = (Exponent, F)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = DensePoly::zero(d, m);
        for (alpha, c) in terms {
            if alpha.len() != m {
                return Err(AlgebraError::ExponentLength {
                    expected: m,
                    found: alpha.len(),
                });
            }
            let deg: u32 = alpha.iter().sum();
            if deg != d {
                return Err(AlgebraError::NotHomogeneous {
                    expected: d,
                    found: deg,
                });
            }
            p.add_term(alpha, c);
        }
        Ok(p)
    }

    /// `x^alpha` with unit coefficient; the degree is read off `alpha`.
    pub fn monomial(alpha: Exponent) -> Self {
        let d = alpha.iter().sum();
        let m = alpha.len();
        let mut p = DensePoly::zero(d, m);
        p.add_term(alpha, F::one());
        p
    }

    pub fn constant(c: F, m: usize) -> Self {
        let mut p = DensePoly::zero(0, m);
        p.add_term(vec![0; m], c);
        p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, alpha: &[u32]) -> F {
        self.terms.get(alpha).cloned().unwrap_or_else(F::zero)
    }

    pub(crate) fn add_term(&mut self, alpha: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(alpha.len(), self.m);
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.d, self.m),
            (other.d, other.m),
            "shape mismatch in add"
        );
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = DensePoly::zero(self.d, self.m);
        if c.is_zero() {
            return out;
        }
        for (alpha, x) in &self.terms {
            out.terms.insert(alpha.clone(), x.clone() * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "variable count mismatch in mul");
        let mut out = DensePoly::zero(self.d + other.d, self.m);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let alpha = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(alpha, x.clone() * y);
            }
        }
        out
    }

    pub fn mul_linear(&self, l: &LinearForm<F>) -> Self {
        self.mul(&l.to_poly())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = DensePoly::constant(F::one(), self.m);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to `x_{j+1}`.
    pub fn partial(&self, j: usize) -> Self {
        let mut out = DensePoly::zero(self.d.saturating_sub(1), self.m);
        for (alpha, c) in &self.terms {
            if alpha[j] == 0 {
                continue;
            }
            let mut beta = alpha.clone();
            beta[j] -= 1;
            out.add_term(beta, c.clone() * F::from_i64(alpha[j] as i64));
        }
        out
    }

    /// Evaluation at a point.
    pub fn eval(&self, x: &[F]) -> F {
        let mut acc = F::zero();
        for (alpha, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(alpha) {
                t *= &xi.pow(e);
            }
            acc += &t;
        }
        acc
    }

    /// The polynomial `p(g^T x)`, i.e. each variable `x_i` replaced by `Σ_j g[j][i] x_j`.
    ///
    /// This is the substitution matching `ℓ ↦ g·ℓ` on Waring terms.
    pub fn substitute(&self, g: &Matrix<F>) -> Self {
        let m = self.m;
        let images: Vec<DensePoly<F>> = (0..m)
            .map(|i| {
                let col: Vec<F> = (0..m).map(|j| g[(j, i)].clone()).collect();
                LinearForm::new(col).to_poly()
            })
            .collect();
        let mut out = DensePoly::zero(self.d, m);
        for (alpha, c) in &self.terms {
            let mut t = DensePoly::constant(c.clone(), m);
            for (i, &e) in alpha.iter().enumerate() {
                t = t.mul(&images[i].pow(e));
            }
            out = out.add(&t);
        }
        out
    }
}

/// All exponent vectors of length `m` summing to `d`, in the order of their
/// sorted index words (`x_1^d` first).
pub fn exponents(m: usize, d: u32) -> Vec<Exponent> {
    multisets(m, d as usize)
        .into_iter()
        .map(|w| word_exponent(&w, m))
        .collect()
}

/// Nondecreasing words of length `k` over `0..m`, lexicographically.
pub fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 && k > 0 {
        return out;
    }
    rec(m, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Exponent vector of a word of 0-based variable indices.
pub fn word_exponent(word: &[usize], m: usize) -> Exponent {
    let mut alpha = vec![0; m];
    for &i in word {
        alpha[i] += 1;
    }
    alpha
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Q;

    #[test]
    fn multiset_enumeration() {
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(exponents(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(multisets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(exponents(4, 3).len(), 20);
    }

    #[test]
    fn from_terms_rejects_inhomogeneous() {
        let err = DensePoly::<Q>::from_terms(2, 2, [(vec![1, 0], Q::from_i64(1))]);
        assert!(err.is_err());
        let p = DensePoly::<Q>::from_terms(
            2,
            2,
            [(vec![1, 1], Q::from_i64(1)), (vec![1, 1], Q::from_i64(-1))],
        )
        .unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn substitution_and_derivative() {
        // p = x^2 y, substitute x -> x + y (g = [[1,0],[1,1]] acting on forms)
        let p = DensePoly::<Q>::monomial(vec![2, 1]);
        let g = Matrix::from_rows(vec![
            vec![Q::from_i64(1), Q::from_i64(0)],
            vec![Q::from_i64(1), Q::from_i64(1)],
        ]);
        let s = p.substitute(&g);
        // x -> x + y, y -> y: (x+y)^2 y
        let x_plus_y = LinearForm::<Q>::from_i64(&[1, 1]).to_poly();
        let y = LinearForm::<Q>::from_i64(&[0, 1]).to_poly();
        assert_eq!(s, x_plus_y.pow(2).mul(&y));
        assert_eq!(
            p.partial(0),
            DensePoly::monomial(vec![1, 1]).scale(&Q::from_i64(2))
        );
        assert!(p.partial(0).partial(0).partial(0).is_zero());
    }
}
