mod common;

use common::*;
use hwv_core::abp::{flattening_ranks, ncw, AbpError, NcAbp};
use hwv_core::algebra::{contract, multisets, waring_expand, DensePoly, LinearForm, Matrix, Q};
use hwv_core::random;
use proptest::prelude::*;
use rand::Rng;

/// Rank of the coefficient matrix of a family of polynomials of one degree.
fn span_rank(polys: &[DensePoly<Q>]) -> usize {
    let mut monos: Vec<Vec<u32>> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(a, _)| a.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    if monos.is_empty() {
        return 0;
    }
    Matrix::from_rows(
        polys
            .iter()
            .map(|p| monos.iter().map(|a| p.coeff(a)).collect())
            .collect(),
    )
    .rank()
}

#[test]
fn zero_polynomial_rejected() {
    assert_eq!(
        NcAbp::minimize(&DensePoly::<Q>::zero(2, 2)),
        Err(AbpError::ZeroPolynomial)
    );
    assert!(ncw(&DensePoly::<Q>::zero(2, 2)).is_err());
}

#[test]
fn matrix_power_trace() {
    let p = DensePoly::from_terms(
        3,
        4,
        [
            (vec![3, 0, 0, 0], q(1)),
            (vec![1, 1, 1, 0], q(3)),
            (vec![0, 1, 1, 1], q(3)),
            (vec![0, 0, 0, 3], q(1)),
        ],
    )
    .unwrap();
    assert_eq!(flattening_ranks(&p).unwrap(), vec![1, 4, 4, 1]);
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn waring_abp_computes_expansion(seed in seeds()) {
        let mut rng = rng(seed);
        let d = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=4);
        let r = rng.gen_range(0..=4);
        let p = random::waring_point(&mut rng, d, m, r, -5, 5);
        let a = NcAbp::from_waring(&p).unwrap();
        prop_assert_eq!(a.eval_dense(), waring_expand(&p));
        prop_assert!(a.width() <= r.max(1));
    }

    #[test]
    fn minimize_round_trips(seed in seeds()) {
        let mut rng = rng(seed);
        let d = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=4);
        let p = random::dense_poly(&mut rng, d, m, -5, 5, 0.5);
        prop_assume!(!p.is_zero());
        let a = NcAbp::minimize(&p).unwrap();
        prop_assert_eq!(a.eval_dense(), p.clone());
        let ranks = flattening_ranks(&p).unwrap();
        prop_assert_eq!(a.layers(), ranks.as_slice());
        prop_assert_eq!(a.width(), ncw(&p).unwrap());
    }

    #[test]
    fn contractions_lie_in_residual_span(seed in seeds()) {
        let mut rng = rng(seed);
        let d = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=3);
        let p = random::dense_poly(&mut rng, d, m, -5, 5, 0.6);
        prop_assume!(!p.is_zero());
        let a = NcAbp::minimize(&p).unwrap();
        for k in 0..=d as usize {
            let residuals = a.residuals(k);
            let base = span_rank(&residuals);
            prop_assert_eq!(base, residuals.len());
            for word in multisets(m, k) {
                let mut family = residuals.clone();
                family.push(contract(&word, &p).unwrap());
                prop_assert_eq!(span_rank(&family), base);
            }
        }
    }

    #[test]
    fn ncw_bounded_by_terms(seed in seeds()) {
        let mut rng = rng(seed);
        let d = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=4);
        let r = rng.gen_range(1..=4);
        let f = waring_expand(&random::waring_point(&mut rng, d, m, r, -5, 5));
        prop_assume!(!f.is_zero());
        prop_assert!(ncw(&f).unwrap() <= r);
    }

    #[test]
    fn chow_layers_are_binomial(seed in seeds()) {
        let mut rng = rng(seed);
        let d = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=3);
        let forms: Vec<LinearForm<Q>> = (0..d).map(|_| random::linear_form(&mut rng, m, -3, 3)).collect();
        let a = NcAbp::chow(&forms).unwrap();
        let mut expected = vec![1usize];
        for k in 0..d {
            expected.push(expected[k] * (d - k) / (k + 1));
        }
        prop_assert_eq!(a.layers(), expected.as_slice());
        let product = forms.iter().fold(DensePoly::constant(q(1), m), |acc, l| acc.mul_linear(l));
        prop_assert_eq!(a.eval_dense(), product);
    }
}
