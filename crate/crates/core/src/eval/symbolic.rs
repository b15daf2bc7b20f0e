//! Symbolic expansion of a tableau polynomial in the coefficients of a general
//! degree `d` form. Small cases only; used as an oracle.
//!
//! Writing every box in the standard basis, a column of length `q` survives
//! only when its indices are a permutation of `0..q`, contributing the sign of
//! that permutation. Block `i` then reads the tensor entry `a_α·α!/d!` where
//! `α` is the multiset of its indices.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{check_inputs, EvalError};
use crate::algebra::{exponents, factorial, DensePoly, Exponent, Field, Matrix, Q};
use crate::tableau::Tableau;

/// A polynomial in the variables `a_α`, `α` ranging over `exponents(m, d)`.
/// Monomials are sorted lists of indices into that list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicPoly {
    pub m: usize,
    pub d: usize,
    pub terms: BTreeMap<Vec<usize>, Q>,
}

impl SymbolicPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes the coefficients of `p`.
    pub fn eval<F: Field>(&self, p: &DensePoly<F>) -> F {
        let vars: Vec<F> = exponents(self.m, self.d as u32)
            .iter()
            .map(|a| p.coeff(a))
            .collect();
        let mut acc = F::zero();
        for (mono, c) in &self.terms {
            let mut t = F::from_rational(c.clone());
            for &i in mono {
                t *= &vars[i];
            }
            acc += &t;
        }
        acc
    }
}

/// Expands the tableau polynomial of `t` for forms in `m` variables.
pub fn expand_tableau(t: &Tableau, m: usize) -> Result<SymbolicPoly, EvalError> {
    check_inputs(t, t.d(), m)?;
    let d = t.d();
    let n = t.n();
    let alphas = exponents(m, d as u32);
    let index: HashMap<&Exponent, usize> = alphas.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let weight: Vec<Q> = alphas
        .iter()
        .map(|a| a.iter().map(|&e| factorial(e)).product::<Q>() / factorial(d as u32))
        .collect();
    let columns = t.columns();
    let perms: Vec<Vec<(Vec<usize>, i32)>> = columns
        .iter()
        .map(|c| signed_permutations(c.len()))
        .collect();

    let mut terms: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
    let mut counts = vec![vec![0u32; m]; n];
    #[allow(clippy::too_many_arguments)]
    fn walk(
        c: usize,
        sign: i32,
        columns: &[Vec<u32>],
        perms: &[Vec<(Vec<usize>, i32)>],
        counts: &mut Vec<Vec<u32>>,
        index: &HashMap<&Exponent, usize>,
        weight: &[Q],
        terms: &mut BTreeMap<Vec<usize>, Q>,
    ) {
        if c == columns.len() {
            let mut mono: Vec<usize> = counts.iter().map(|a| index[a]).collect();
            mono.sort_unstable();
            let mut coef = Q::from_i64(sign as i64);
            for &i in &mono {
                coef *= &weight[i];
            }
            let slot = terms.entry(mono).or_insert_with(Q::zero);
            *slot += &coef;
            return;
        }
        for (perm, s) in &perms[c] {
            for (&v, &idx) in columns[c].iter().zip(perm) {
                counts[v as usize - 1][idx] += 1;
            }
            walk(
                c + 1,
                sign * s,
                columns,
                perms,
                counts,
                index,
                weight,
                terms,
            );
            for (&v, &idx) in columns[c].iter().zip(perm) {
                counts[v as usize - 1][idx] -= 1;
            }
        }
    }
    walk(
        0,
        1,
        &columns,
        &perms,
        &mut counts,
        &index,
        &weight,
        &mut terms,
    );
    terms.retain(|_, c| !c.is_zero());
    Ok(SymbolicPoly { m, d, terms })
}

/// All permutations of `0..q` with their signs.
fn signed_permutations(q: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..q).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, sign: &mut i32, out: &mut Vec<(Vec<usize>, i32)>) {
        if k <= 1 {
            out.push((cur.clone(), *sign));
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, sign, out);
            if i + 1 < k {
                let j = if k.is_multiple_of(2) { i } else { 0 };
                cur.swap(j, k - 1);
                *sign = -*sign;
            }
        }
    }
    let mut sign = 1;
    heap(q, &mut cur, &mut sign, &mut out);
    out
}

/// Rank of the coefficient vectors of the given expansions.
pub fn span_dimension(polys: &[SymbolicPoly]) -> usize {
    let mut monos: Vec<&Vec<usize>> = polys.iter().flat_map(|p| p.terms.keys()).collect();
    monos.sort();
    monos.dedup();
    let pos: HashMap<&Vec<usize>, usize> = monos.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut mat = Matrix::<Q>::zeros(polys.len(), monos.len());
    for (r, p) in polys.iter().enumerate() {
        for (mono, c) in &p.terms {
            mat[(r, pos[mono])] = c.clone();
        }
    }
    mat.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;

    #[test]
    fn permutation_signs() {
        let p = signed_permutations(3);
        assert_eq!(p.len(), 6);
        for (perm, s) in &p {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            assert_eq!(*s, if inversions % 2 == 0 { 1 } else { -1 });
        }
        assert_eq!(signed_permutations(1), vec![(vec![0], 1)]);
    }

    #[test]
    fn discriminant() {
        let disc = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]]).unwrap();
        let f = expand_tableau(&disc, 2).unwrap();
        // variables: 0 = x², 1 = xy, 2 = y²
        let mut expected = BTreeMap::new();
        expected.insert(vec![0, 2], parse_rational("2").unwrap());
        expected.insert(vec![1, 1], parse_rational("-1/2").unwrap());
        assert_eq!(f.terms, expected);
    }
}
