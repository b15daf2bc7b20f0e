//! Symmetric tensors seen through their polynomial coefficients.
//!
//! The coefficient `c_α` of `x^α` in a degree `d` polynomial corresponds to the
//! tensor entry `c_α·α!/d!` at every word whose multiset has exponent vector `α`.
//! Words are 0-based variable indices.

use super::field::{factorial, Field, Q};
use super::matrix::Matrix;
use super::poly::{exponents, multisets, word_exponent, DensePoly, Exponent};
use super::AlgebraError;

fn alpha_factorial(alpha: &[u32]) -> Q {
    alpha.iter().map(|&a| factorial(a)).product()
}

fn check_word(word: &[usize], m: usize) -> Result<(), AlgebraError> {
    match word.iter().find(|&&i| i >= m) {
        Some(&index) => Err(AlgebraError::VariableIndex { index, m }),
        None => Ok(()),
    }
}

/// Tensor entry of `p` at `word` (length `d`).
pub fn tensor_coeff<F: Field>(p: &DensePoly<F>, word: &[usize]) -> Result<F, AlgebraError> {
    let d = p.degree();
    if word.len() != d as usize {
        return Err(AlgebraError::WordLength {
            expected: d as usize,
            found: word.len(),
        });
    }
    check_word(word, p.nvars())?;
    let alpha = word_exponent(word, p.nvars());
    Ok(coeff_at(p, &alpha))
}

fn coeff_at<F: Field>(p: &DensePoly<F>, alpha: &[u32]) -> F {
    let c = p.coeff(alpha);
    if c.is_zero() {
        return c;
    }
    c * F::from_rational(alpha_factorial(alpha) / factorial(p.degree()))
}

/// The contraction `⟨e_word, p⟩`, a polynomial of degree `d − k`.
///
/// `(d!/(d−k)!)·contract(word, p)` is the corresponding k-th partial derivative.
pub fn contract<F: Field>(word: &[usize], p: &DensePoly<F>) -> Result<DensePoly<F>, AlgebraError> {
    let d = p.degree();
    let m = p.nvars();
    let k = word.len();
    if k > d as usize {
        return Err(AlgebraError::WordTooLong { k, d });
    }
    check_word(word, m)?;
    let gamma = word_exponent(word, m);
    let rest = d - k as u32;
    let scale = factorial(rest) / factorial(d);
    let mut terms: Vec<(Exponent, F)> = Vec::new();
    for (alpha, c) in p.terms() {
        if alpha.iter().zip(&gamma).any(|(a, g)| a < g) {
            continue;
        }
        let beta: Exponent = alpha.iter().zip(&gamma).map(|(a, g)| a - g).collect();
        let ratio = alpha_factorial(alpha) / alpha_factorial(&beta) * &scale;
        terms.push((beta, c.clone() * F::from_rational(ratio)));
    }
    DensePoly::from_terms(rest, m, terms)
}

/// Multiset-indexed flattening: rows are size-`k` multisets, columns size-`(d−k)`
/// multisets, both in lexicographic order of their sorted words.
pub fn flattening<F: Field>(p: &DensePoly<F>, k: usize) -> Result<Matrix<F>, AlgebraError> {
    let d = p.degree();
    if k > d as usize {
        return Err(AlgebraError::WordTooLong { k, d });
    }
    let m = p.nvars();
    let rows = exponents(m, k as u32);
    let cols = exponents(m, d - k as u32);
    let mut mat = Matrix::zeros(rows.len(), cols.len());
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            let alpha: Exponent = r.iter().zip(c).map(|(a, b)| a + b).collect();
            mat[(i, j)] = coeff_at(p, &alpha);
        }
    }
    Ok(mat)
}

/// Rank over the field of definition.
pub fn exact_rank<F: Field>(m: &Matrix<F>) -> usize {
    m.rank()
}

/// Row and column labels of [`flattening`] as 0-based sorted words.
pub fn flattening_labels(m: usize, d: u32, k: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    (multisets(m, k), multisets(m, d as usize - k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::parse_rational;

    fn q(s: &str) -> Q {
        parse_rational(s).unwrap()
    }

    fn x2y() -> DensePoly<Q> {
        DensePoly::monomial(vec![2, 1])
    }

    #[test]
    fn coefficients() {
        assert_eq!(tensor_coeff(&x2y(), &[0, 0, 1]).unwrap(), q("1/3"));
        assert_eq!(tensor_coeff(&x2y(), &[0, 1, 0]).unwrap(), q("1/3"));
        assert_eq!(
            tensor_coeff(&DensePoly::<Q>::monomial(vec![3, 0]), &[0, 0, 0]).unwrap(),
            q("1")
        );
        let two_xy = DensePoly::<Q>::monomial(vec![1, 1]).scale(&q("2"));
        assert_eq!(tensor_coeff(&two_xy, &[0, 1]).unwrap(), q("1"));
        assert!(tensor_coeff(&two_xy, &[0]).is_err());
        assert!(tensor_coeff(&two_xy, &[0, 2]).is_err());
    }

    #[test]
    fn contractions() {
        let x3 = DensePoly::<Q>::monomial(vec![3, 0]);
        assert!(contract(&[1], &x3).unwrap().is_zero());
        let c1 = contract(&[0], &x2y()).unwrap();
        assert_eq!(c1, DensePoly::monomial(vec![1, 1]).scale(&q("2/3")));
        let c11 = contract(&[0, 0], &x2y()).unwrap();
        assert_eq!(c11, DensePoly::monomial(vec![0, 1]).scale(&q("1/3")));
        assert!(contract(&[0, 0, 0, 0], &x2y()).is_err());
        // full contraction is the tensor coefficient
        let full = contract(&[1, 0, 0], &x2y()).unwrap();
        assert_eq!(full.coeff(&[0, 0]), q("1/3"));
    }

    #[test]
    fn flattening_of_x2y() {
        let f = flattening(&x2y(), 1).unwrap();
        assert_eq!(f.nrows(), 2);
        assert_eq!(f.ncols(), 3);
        assert_eq!(f.row(0), &[q("0"), q("1/3"), q("0")]);
        assert_eq!(f.row(1), &[q("1/3"), q("0"), q("0")]);
        assert_eq!(exact_rank(&f), 2);
        for k in 0..=4 {
            let p = DensePoly::<Q>::monomial(vec![4, 0, 0]);
            assert_eq!(exact_rank(&flattening(&p, k).unwrap()), 1);
        }
    }
}
