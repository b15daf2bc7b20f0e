#![allow(dead_code)]

use std::collections::BTreeSet;

use hwv_core::algebra::{Field, Q};
use hwv_core::graph::SimpleGraph;
use hwv_core::random::{self, Rng64};
use hwv_core::tableau::Tableau;
use hwv_core::treedec::TreeDecomposition;
use proptest::prelude::*;

pub fn q(v: i64) -> Q {
    Q::from_i64(v)
}

pub fn rng(seed: u64) -> Rng64 {
    random::rng(seed)
}

pub fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

/// Rebuilds a tableau from its columns, which must be listed in nonincreasing length.
pub fn from_columns(columns: &[Vec<u32>], n: usize, d: usize) -> Tableau {
    let height = columns.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|i| columns.iter().filter_map(|c| c.get(i).copied()).collect())
        .collect();
    Tableau::new(rows, n, d).unwrap()
}

/// Decomposition from an arbitrary elimination order.
pub fn elimination_decomposition(g: &SimpleGraph, order: &[u32]) -> TreeDecomposition {
    let n = g.n() as usize;
    let mut adj: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n + 1];
    for (u, v) in g.edges() {
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    let mut pos = vec![0; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut bags = Vec::new();
    let mut parents = Vec::new();
    for &v in order {
        let later: Vec<u32> = adj[v as usize]
            .iter()
            .copied()
            .filter(|&u| pos[u as usize] > pos[v as usize])
            .collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    adj[a as usize].insert(b);
                }
            }
        }
        parents.push(later.iter().map(|&u| pos[u as usize]).min());
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    let tree_edges = parents
        .iter()
        .enumerate()
        .filter_map(|(i, p)| match p {
            Some(p) => Some((i, *p)),
            None if i + 1 < n => Some((i, i + 1)),
            None => None,
        })
        .collect();
    TreeDecomposition::new(bags, tree_edges)
}
