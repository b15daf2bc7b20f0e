//! Dynamic program over a computation tree.
//!
//! The table at node `v` maps a pair of boundary tuples (at separators
//! `leftmost(v) − 1` and `rightmost(v)`) to the sum over multiwalks between
//! them. Only coordinates of bag members that occur in a column below `v` are
//! stored; every other coordinate is constant across `v` and left implicit.

use std::collections::HashMap;

use rayon::prelude::*;

use super::abp_dp::{for_each_choice, label_det, Radix};
use super::{check_inputs, EvalError};
use crate::abp::{Edge, NcAbp};
use crate::algebra::Field;
use crate::tableau::Tableau;
use crate::treedec::{build_computation_tree, minfill_decomposition, ComputationTree};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreewidthStats {
    /// Largest number of nonzero entries in any node table.
    pub max_entries: usize,
    /// Largest number of stored coordinates at any node.
    pub max_keys: usize,
}

struct Table<F> {
    /// Sorted vertex ids; position `p` is digit `p` of both codes.
    keys: Vec<u32>,
    entries: HashMap<(u128, u128), F>,
}

pub fn eval_treewidth<F: Field>(
    t: &Tableau,
    a: &NcAbp<F>,
    ct: &ComputationTree,
) -> Result<F, EvalError> {
    eval_treewidth_stats(t, a, ct).map(|(v, _)| v)
}

/// Evaluates with a min-fill decomposition of the tableau graph. Tableaux with a
/// repeated column entry return zero without building a tree.
pub fn eval_treewidth_minfill<F: Field>(
    t: &Tableau,
    a: &NcAbp<F>,
    minimize_bags: bool,
) -> Result<F, EvalError> {
    check_inputs(t, a.degree() as usize, a.nvars())?;
    if t.has_column_repeat() {
        return Ok(F::zero());
    }
    let td = minfill_decomposition(&t.graph()?.simple());
    let ct = build_computation_tree(t, &td, minimize_bags)?;
    eval_treewidth(t, a, &ct)
}

pub fn eval_treewidth_stats<F: Field>(
    t: &Tableau,
    a: &NcAbp<F>,
    ct: &ComputationTree,
) -> Result<(F, TreewidthStats), EvalError> {
    check_inputs(t, a.degree() as usize, a.nvars())?;
    let mut stats = TreewidthStats::default();
    if t.has_column_repeat() {
        return Ok((F::zero(), stats));
    }
    if ct.columns != t.columns() || ct.n != t.n() || ct.d != t.d() {
        return Err(EvalError::TreeMismatch);
    }
    let radix = Radix::new(a.width(), ct.max_bag())?;
    let mut tables: Vec<Option<Table<F>>> = (0..ct.nodes.len()).map(|_| None).collect();
    for x in ct.post_order() {
        let node = &ct.nodes[x];
        let table = match node.children.as_slice() {
            [] => leaf_table(a, ct, node.leftmost, radix),
            &[c] => tables[c].take().expect("child computed first"),
            &[l, r] => {
                let left = tables[l].take().expect("child computed first");
                let right = tables[r].take().expect("child computed first");
                join(&left, &right, &node.bag, radix)?
            }
            _ => unreachable!("computation trees are binary"),
        };
        stats.max_entries = stats.max_entries.max(table.entries.len());
        stats.max_keys = stats.max_keys.max(table.keys.len());
        tables[x] = Some(table);
    }
    let root = tables[ct.root].take().expect("root computed");
    Ok((
        root.entries.get(&(0, 0)).cloned().unwrap_or_else(F::zero),
        stats,
    ))
}

/// Leaf at traversal index `t`: every entry of the column advances by one layer.
fn leaf_table<F: Field>(a: &NcAbp<F>, ct: &ComputationTree, t: usize, radix: Radix) -> Table<F> {
    let col = ct.column_at(t);
    let mut keys = col.to_vec();
    keys.sort_unstable();
    let pos: Vec<usize> = col
        .iter()
        .map(|v| keys.binary_search(v).expect("own key"))
        .collect();
    let layers: Vec<usize> = col.iter().map(|&v| ct.kappa(t - 1, v) as usize).collect();
    // all (start vertex, edge) choices per coordinate
    let options: Vec<&[Edge<F>]> = layers.iter().map(|&k| a.edges(k)).collect();
    let mut entries: HashMap<(u128, u128), F> = HashMap::new();
    for_each_choice(&options, &mut Vec::with_capacity(col.len()), &mut |edges| {
        let det = label_det(edges);
        if det.is_zero() {
            return;
        }
        let (mut s, mut e) = (0u128, 0u128);
        for (&p, edge) in pos.iter().zip(edges) {
            s = radix.set(s, p, edge.from);
            e = radix.set(e, p, edge.to);
        }
        *entries.entry((s, e)).or_insert_with(F::zero) += &det;
    });
    entries.retain(|_, v| !v.is_zero());
    Table { keys, entries }
}

fn join<F: Field>(
    left: &Table<F>,
    right: &Table<F>,
    bag: &[u32],
    radix: Radix,
) -> Result<Table<F>, EvalError> {
    let keys: Vec<u32> = {
        let mut k: Vec<u32> = left
            .keys
            .iter()
            .chain(&right.keys)
            .copied()
            .filter(|v| bag.binary_search(v).is_ok())
            .collect();
        k.sort_unstable();
        k.dedup();
        k
    };
    let shared: Vec<(usize, usize)> = left
        .keys
        .iter()
        .enumerate()
        .filter_map(|(i, v)| right.keys.binary_search(v).ok().map(|j| (i, j)))
        .collect();
    if shared
        .iter()
        .any(|&(i, _)| bag.binary_search(&left.keys[i]).is_err())
    {
        return Err(EvalError::TreeMismatch);
    }
    // for each output key: where its start and end digits come from
    let plan: Vec<(usize, Option<usize>, Option<usize>)> = keys
        .iter()
        .enumerate()
        .map(|(p, v)| {
            (
                p,
                left.keys.binary_search(v).ok(),
                right.keys.binary_search(v).ok(),
            )
        })
        .collect();

    let mut by_mid: HashMap<u128, Vec<(u128, u128, &F)>> = HashMap::new();
    for (&(s, e), v) in &right.entries {
        let mid = shared.iter().enumerate().fold(0u128, |acc, (q, &(_, j))| {
            radix.set(acc, q, radix.get(s, j))
        });
        by_mid.entry(mid).or_default().push((s, e, v));
    }
    let left_entries: Vec<(&(u128, u128), &F)> = left.entries.iter().collect();
    let entries = left_entries
        .par_iter()
        .fold(
            HashMap::<(u128, u128), F>::new,
            |mut acc, &(&(ls, le), lv)| {
                let mid = shared
                    .iter()
                    .enumerate()
                    .fold(0u128, |m, (q, &(i, _))| radix.set(m, q, radix.get(le, i)));
                let Some(matches) = by_mid.get(&mid) else {
                    return acc;
                };
                for &(rs, re, rv) in matches {
                    let (mut s, mut e) = (0u128, 0u128);
                    for &(p, li, ri) in &plan {
                        let start = match (li, ri) {
                            (Some(i), _) => radix.get(ls, i),
                            (None, Some(j)) => radix.get(rs, j),
                            (None, None) => unreachable!("key comes from a child"),
                        };
                        let end = match (ri, li) {
                            (Some(j), _) => radix.get(re, j),
                            (None, Some(i)) => radix.get(le, i),
                            (None, None) => unreachable!("key comes from a child"),
                        };
                        s = radix.set(s, p, start);
                        e = radix.set(e, p, end);
                    }
                    let prod = lv.clone() * rv;
                    *acc.entry((s, e)).or_insert_with(F::zero) += &prod;
                }
                acc
            },
        )
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert_with(F::zero) += &v;
            }
            a
        });
    let mut entries = entries;
    entries.retain(|_, v| !v.is_zero());
    Ok(Table { keys, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LinearForm, WaringPoint, Q};
    use crate::eval::{eval_abp, eval_naive};
    use crate::treedec::{build_computation_tree, minfill_decomposition, TreeDecomposition};

    fn point(d: u32, forms: &[&[i64]], coeffs: &[i64]) -> WaringPoint<Q> {
        WaringPoint::new(
            d,
            forms[0].len(),
            forms
                .iter()
                .zip(coeffs)
                .map(|(f, &c)| {
                    (
                        Q::from(num_bigint::BigInt::from(c)),
                        LinearForm::from_i64(f),
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn sample_agreement() {
        let t = Tableau::new(vec![vec![1, 1, 2, 3, 5], vec![2, 4, 4, 5], vec![3]], 5, 2).unwrap();
        let td = TreeDecomposition::new(
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![3, 5]],
            vec![(1, 0), (0, 2)],
        );
        let p = point(2, &[&[1, 2, -1], &[3, -1, 2]], &[2, -3]);
        let a = NcAbp::from_waring(&p).unwrap();
        let expected = eval_naive(&t, &p).unwrap();
        for minimize in [false, true] {
            let ct = build_computation_tree(&t, &td, minimize).unwrap();
            assert_eq!(eval_treewidth(&t, &a, &ct).unwrap(), expected);
        }
        assert_eq!(eval_abp(&t, &a).unwrap(), expected);
    }

    #[test]
    fn single_column() {
        let t = Tableau::new(vec![vec![1], vec![2]], 2, 1).unwrap();
        let p = point(1, &[&[1, 2], &[3, 5]], &[2, -1]);
        let ct = build_computation_tree(&t, &TreeDecomposition::trivial(2), false).unwrap();
        let a = NcAbp::from_waring(&p).unwrap();
        assert_eq!(
            eval_treewidth(&t, &a, &ct).unwrap(),
            eval_naive(&t, &p).unwrap()
        );
    }

    #[test]
    fn grid_one() {
        let t = crate::tableau::grid_family(1).unwrap();
        let p = point(4, &[&[1, 0], &[0, 1]], &[1, 1]);
        let ct = build_computation_tree(
            &t,
            &minfill_decomposition(&t.graph().unwrap().simple()),
            false,
        )
        .unwrap();
        let a = NcAbp::from_waring(&p).unwrap();
        assert_eq!(
            eval_treewidth(&t, &a, &ct).unwrap(),
            eval_naive(&t, &p).unwrap()
        );
    }
}
