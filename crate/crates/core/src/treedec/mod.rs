//! Tree decompositions and the binary computation tree used by the treewidth evaluator.

mod ctree;

pub use ctree::{build_computation_tree, ComputationTree, CtNode};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::tableau::TableauError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeDecError {
    #[error("invalid tree decomposition: {0}")]
    Invalid(TdDiagnostic),
    #[error("no bag contains all entries of column {column}")]
    ColumnNotCovered { column: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// First violated property found by [`TreeDecomposition::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdDiagnostic {
    NoBags,
    TreeEdgeOutOfRange { a: usize, b: usize },
    NotATree,
    VertexOutOfRange { vertex: u32 },
    VertexUncovered { vertex: u32 },
    EdgeUncovered { u: u32, v: u32 },
    Disconnected { vertex: u32 },
}

impl fmt::Display for TdDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdDiagnostic::NoBags => write!(f, "no bags"),
            TdDiagnostic::TreeEdgeOutOfRange { a, b } => {
                write!(f, "tree edge ({a},{b}) names a missing bag")
            }
            TdDiagnostic::NotATree => write!(f, "bags and tree edges do not form a tree"),
            TdDiagnostic::VertexOutOfRange { vertex } => {
                write!(f, "bag vertex {vertex} is not a graph vertex")
            }
            TdDiagnostic::VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            TdDiagnostic::EdgeUncovered { u, v } => write!(f, "edge {{{u},{v}}} is in no bag"),
            TdDiagnostic::Disconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} do not form a subtree")
            }
        }
    }
}

/// Bags are stored sorted; tree edges are unordered pairs of bag indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<u32>>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<u32>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|b| b.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
            .collect();
        TreeDecomposition { bags, tree_edges }
    }

    /// A single bag holding every vertex.
    pub fn trivial(n: u32) -> Self {
        TreeDecomposition::new(vec![(1..=n).collect()], Vec::new())
    }

    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn validate(&self, g: &SimpleGraph) -> Result<(), TdDiagnostic> {
        let nb = self.bags.len();
        if nb == 0 {
            return Err(TdDiagnostic::NoBags);
        }
        if let Some(&(a, b)) = self
            .tree_edges
            .iter()
            .find(|&&(a, b)| a >= nb || b >= nb || a == b)
        {
            return Err(TdDiagnostic::TreeEdgeOutOfRange { a, b });
        }
        if self.tree_edges.len() != nb - 1 || component(&self.adjacency(), 0, |_| true).len() != nb
        {
            return Err(TdDiagnostic::NotATree);
        }
        let n = g.n();
        for bag in &self.bags {
            if let Some(&vertex) = bag.iter().find(|&&v| v == 0 || v > n) {
                return Err(TdDiagnostic::VertexOutOfRange { vertex });
            }
        }
        let adj = self.adjacency();
        for vertex in 1..=n {
            let holders: Vec<usize> = (0..nb)
                .filter(|&i| self.bags[i].binary_search(&vertex).is_ok())
                .collect();
            let Some(&start) = holders.first() else {
                return Err(TdDiagnostic::VertexUncovered { vertex });
            };
            let reached = component(&adj, start, |i| self.bags[i].binary_search(&vertex).is_ok());
            if reached.len() != holders.len() {
                return Err(TdDiagnostic::Disconnected { vertex });
            }
        }
        for (u, v) in g.edges() {
            let covered = self
                .bags
                .iter()
                .any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok());
            if !covered {
                return Err(TdDiagnostic::EdgeUncovered { u, v });
            }
        }
        Ok(())
    }
}

/// Nodes reachable from `start` through nodes satisfying `keep`.
fn component(adj: &[Vec<usize>], start: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    let mut out = vec![start];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] && keep(y) {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out
}

/// Decomposition from a min-fill elimination ordering (ties to the smallest
/// vertex). Bag `k` belongs to the `k`-th eliminated vertex.
pub fn minfill_decomposition(g: &SimpleGraph) -> TreeDecomposition {
    let n = g.n() as usize;
    if n == 0 {
        return TreeDecomposition::new(vec![Vec::new()], Vec::new());
    }
    let mut adj: Vec<BTreeSet<u32>> = g
        .adjacency()
        .into_iter()
        .map(|a| a.into_iter().collect())
        .collect();
    let mut alive = vec![true; n + 1];
    alive[0] = false;
    let mut position = vec![usize::MAX; n + 1];
    let mut bags = Vec::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let fill = |v: usize| -> usize {
            let nb: Vec<u32> = adj[v].iter().copied().collect();
            let mut missing = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !adj[a as usize].contains(&b) {
                        missing += 1;
                    }
                }
            }
            missing
        };
        let v = (1..=n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill(v), v))
            .expect("a vertex remains");
        let nb: Vec<u32> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a as usize].insert(b);
                adj[b as usize].insert(a);
            }
        }
        for &a in &nb {
            adj[a as usize].remove(&(v as u32));
        }
        let mut bag = nb.clone();
        bag.push(v as u32);
        bags.push(bag);
        order.push(nb);
        alive[v] = false;
        position[v] = step;
    }
    let mut tree_edges = Vec::with_capacity(n - 1);
    for (k, nb) in order.iter().enumerate() {
        match nb.iter().map(|&u| position[u as usize]).min() {
            Some(parent) => tree_edges.push((k, parent)),
            None if k + 1 < n => tree_edges.push((k, k + 1)),
            None => {}
        }
    }
    TreeDecomposition::new(bags, tree_edges)
}
