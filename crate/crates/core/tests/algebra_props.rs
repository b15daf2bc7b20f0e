mod common;

use common::*;
use hwv_core::algebra::{
    contract, exponents, flattening, multisets, tensor_coeff, waring_expand, DensePoly, Field,
    Matrix, WaringPoint, Zeta6, Q,
};
use hwv_core::random;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn falling(d: u32, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, i| acc * q((d - i) as i64))
}

fn random_poly(seed: u64) -> DensePoly<Q> {
    let mut rng = rng(seed);
    let d = rng.gen_range(1..=5);
    let m = rng.gen_range(1..=4);
    random::dense_poly(&mut rng, d, m, -6, 6, 0.6)
}

#[test]
fn zeta_identities() {
    let z = Zeta6::zeta();
    assert_eq!(z.pow(6), Zeta6::one());
    assert_eq!(z.pow(3), -Zeta6::one());
    assert_eq!(z.clone() - Zeta6::one(), z.pow(2));
}

#[test]
fn tensor_coefficients_of_a_monomial() {
    // x²y: three positions, the y may sit in any of them
    let p = DensePoly::<Q>::monomial(vec![2, 1]);
    let third = Q::new(1.into(), 3.into());
    for w in [[0, 0, 1], [0, 1, 0], [1, 0, 0]] {
        assert_eq!(tensor_coeff(&p, &w).unwrap(), third);
    }
    assert!(tensor_coeff(&p, &[1, 1, 0]).unwrap().is_zero());
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn contraction_is_scaled_derivative(seed in seeds()) {
        let p = random_poly(seed);
        let (d, m) = (p.degree(), p.nvars());
        for k in 0..=d as usize {
            for word in multisets(m, k) {
                let mut deriv = p.clone();
                for &j in &word {
                    deriv = deriv.partial(j);
                }
                let c = contract(&word, &p).unwrap();
                prop_assert_eq!(c.scale(&falling(d, k as u32)), deriv);
            }
        }
    }

    #[test]
    fn tensor_coeff_is_symmetric(seed in seeds()) {
        let p = random_poly(seed);
        let mut rng = rng(seed ^ 1);
        for alpha in exponents(p.nvars(), p.degree()) {
            let mut word: Vec<usize> = alpha.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect();
            let base = tensor_coeff(&p, &word).unwrap();
            word.shuffle(&mut rng);
            prop_assert_eq!(tensor_coeff(&p, &word).unwrap(), base);
        }
    }

    #[test]
    fn flattening_rank_symmetry(seed in seeds()) {
        let p = random_poly(seed);
        let d = p.degree() as usize;
        for k in 0..=d {
            prop_assert_eq!(flattening(&p, k).unwrap().rank(), flattening(&p, d - k).unwrap().rank());
        }
    }

    #[test]
    fn waring_expand_is_additive(seed in seeds()) {
        let mut rng = rng(seed);
        let d = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=4);
        let (ra, rb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = random::waring_point(&mut rng, d, m, ra, -5, 5);
        let b = random::waring_point(&mut rng, d, m, rb, -5, 5);
        let joined = WaringPoint::new(d, m, a.terms.iter().chain(&b.terms).cloned().collect()).unwrap();
        prop_assert_eq!(waring_expand(&joined), waring_expand(&a).add(&waring_expand(&b)));
    }

    #[test]
    fn transform_matches_substitution(seed in seeds()) {
        let mut rng = rng(seed);
        let d = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=3);
        let p = random::waring_point(&mut rng, d, m, 2, -4, 4);
        let g = Matrix::from_rows((0..m).map(|_| (0..m).map(|_| random::int(&mut rng, -3, 3)).collect()).collect());
        prop_assert_eq!(waring_expand(&p.transform(&g)), waring_expand(&p).substitute(&g));
    }

    #[test]
    fn determinant_is_multiplicative(seed in seeds()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=6);
        let mut gen = || Matrix::from_rows((0..n).map(|_| (0..n).map(|_| random::int(&mut rng, -4, 4)).collect()).collect());
        let (a, b) = (gen(), gen());
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
        prop_assert_eq!(a.det().is_zero(), a.rank() < n);
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn zeta_field_inverse(a in -50i64..50, b in -50i64..50) {
        let x = Zeta6::new(q(a), q(b));
        match x.inv() {
            None => prop_assert!(x.is_zero()),
            Some(y) => prop_assert_eq!(x.clone() * y, Zeta6::one()),
        }
        prop_assert_eq!(x.clone() * x.conj(), Zeta6::from(x.norm()));
    }
}
