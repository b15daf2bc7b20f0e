mod common;

use common::*;
use hwv_core::graph::SimpleGraph;
use hwv_core::random;
use hwv_core::tableau::{grid_family, Tableau};
use hwv_core::treedec::{
    build_computation_tree, minfill_decomposition, ComputationTree, TreeDecomposition,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn check_tree(ct: &ComputationTree, t: &Tableau) -> Result<(), String> {
    let columns = t.columns();
    let mut leaves = Vec::new();
    let mut stack = vec![ct.root];
    while let Some(x) = stack.pop() {
        let node = &ct.nodes[x];
        match node.children.as_slice() {
            [] => {
                let c = node.column.ok_or("leaf without column")?;
                leaves.push(c);
                if !columns[c].iter().all(|v| node.bag.contains(v)) {
                    return Err(format!(
                        "leaf bag {:?} misses column {:?}",
                        node.bag, columns[c]
                    ));
                }
                if (node.leftmost, node.rightmost) != (leaves.len(), leaves.len()) {
                    return Err("leaf traversal index".into());
                }
            }
            &[c] => {
                if ct.nodes[c].bag != node.bag {
                    return Err("one-child node bag differs from child".into());
                }
                stack.push(c);
            }
            &[a, b] => {
                let (l, r) = (&ct.nodes[a], &ct.nodes[b]);
                if l.bag
                    .iter()
                    .any(|v| r.bag.contains(v) && !node.bag.contains(v))
                {
                    return Err("children overlap outside parent bag".into());
                }
                stack.push(b);
                stack.push(a);
            }
            _ => return Err("node with more than two children".into()),
        }
    }
    for x in ct.post_order() {
        let node = &ct.nodes[x];
        if let &[a, b] = node.children.as_slice() {
            let (l, r) = (&ct.nodes[a], &ct.nodes[b]);
            if node.leftmost != l.leftmost
                || node.rightmost != r.rightmost
                || l.rightmost + 1 != r.leftmost
            {
                return Err("leftmost/rightmost".into());
            }
        }
    }
    let mut sorted = leaves.clone();
    sorted.sort_unstable();
    if sorted != (0..columns.len()).collect::<Vec<_>>() || leaves != ct.leaf_order {
        return Err("leaves are not the columns in traversal order".into());
    }
    for i in 1..=t.n() as u32 {
        let mut seen = 0;
        for step in 0..=leaves.len() {
            if ct.kappa(step, i) != seen {
                return Err(format!("kappa({step}, {i})"));
            }
            if step < leaves.len() {
                seen += columns[leaves[step]].iter().filter(|&&v| v == i).count() as u32;
            }
        }
        if seen != t.d() as u32 {
            return Err("final kappa differs from d".into());
        }
    }
    Ok(())
}

fn random_graph(rng: &mut random::Rng64, n: u32, p: f64) -> SimpleGraph {
    let edges: Vec<(u32, u32)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    SimpleGraph::new(n, edges).unwrap()
}

#[test]
fn minfill_examples() {
    assert_eq!(minfill_decomposition(&SimpleGraph::path(7)).width(), 1);
    assert_eq!(minfill_decomposition(&SimpleGraph::complete(5)).width(), 4);
    let widths: Vec<usize> = (1..=3)
        .map(|k| minfill_decomposition(&grid_family(k).unwrap().graph().unwrap().simple()).width())
        .collect();
    assert!(
        widths[0] >= 2 && widths.windows(2).all(|w| w[0] < w[1]),
        "{widths:?}"
    );
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn minfill_is_valid(seed in seeds()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.0..0.7);
        let g = random_graph(&mut rng, n, p);
        let td = minfill_decomposition(&g);
        prop_assert_eq!(td.validate(&g), Ok(()));
        prop_assert_eq!(minfill_decomposition(&g), td);
    }

    #[test]
    fn computation_tree_invariants(seed in seeds(), minimize in any::<bool>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=7);
        let d = rng.gen_range(1..=4);
        let t = random::tableau(&mut rng, n, d, 4, 40);
        prop_assume!(!t.has_column_repeat());
        let g = t.graph().unwrap().simple();
        let mut order: Vec<u32> = (1..=n as u32).collect();
        order.shuffle(&mut rng);
        for td in [minfill_decomposition(&g), TreeDecomposition::trivial(n as u32), elimination_decomposition(&g, &order)] {
            prop_assert_eq!(td.validate(&g), Ok(()));
            prop_assert!(td.width() + 1 >= t.max_column_len());
            let ct = build_computation_tree(&t, &td, minimize).unwrap();
            if let Err(e) = check_tree(&ct, &t) {
                prop_assert!(false, "{} on {} with {:?}", e, t, td);
            }
        }
    }
}
