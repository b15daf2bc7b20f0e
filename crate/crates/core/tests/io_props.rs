mod common;

use common::*;
use hwv_core::abp::NcAbp;
use hwv_core::algebra::Q;
use hwv_core::graph::SimpleGraph;
use hwv_core::io::*;
use hwv_core::random;
use hwv_core::reductions::{gen_3col_counting, gen_3col_decision};
use hwv_core::treedec::minfill_decomposition;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn zeta_files_round_trip() {
    let (t, p) = gen_3col_counting(&SimpleGraph::complete(3), 12).unwrap();
    assert_eq!(tableau_from_json(&tableau_to_json(&t)).unwrap(), t);
    assert_eq!(
        point_from_json(&point_to_json(&p)).unwrap(),
        Dual::Zeta6(p.clone())
    );
    let a = NcAbp::from_waring(&p).unwrap();
    assert_eq!(abp_from_json(&abp_to_json(&a)).unwrap(), Dual::Zeta6(a));
    let (_, p) = gen_3col_decision(&SimpleGraph::complete(3), 8).unwrap();
    assert_eq!(
        point_from_json(&point_to_json(&p)).unwrap(),
        Dual::Rational(p)
    );
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn emitted_files_reparse(seed in seeds()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=5);
        let d = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=4);
        let t = random::tableau(&mut rng, n, d, m, 20);
        prop_assert_eq!(tableau_from_json(&tableau_to_json(&t)).unwrap(), t.clone());
        let p = random::waring_point(&mut rng, d as u32, m, 2, -9, 9).scale(&Q::new(1.into(), 7.into()));
        prop_assert_eq!(point_from_json(&point_to_json(&p)).unwrap(), Dual::Rational(p.clone()));
        let f = random::dense_poly(&mut rng, d as u32, m, -9, 9, 0.5);
        prop_assert_eq!(poly_from_json(&poly_to_json(&f)).unwrap(), Dual::Rational(f.clone()));
        let a = NcAbp::from_waring(&p).unwrap();
        prop_assert_eq!(abp_from_json(&abp_to_json(&a)).unwrap(), Dual::Rational(a));
        if !t.has_column_repeat() {
            let g = t.graph().unwrap().simple();
            prop_assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g.clone());
            let td = minfill_decomposition(&g);
            prop_assert_eq!(decomposition_from_json(&to_json(&td)).unwrap(), td);
        }
    }
}
