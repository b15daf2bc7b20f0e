//! Simple undirected graphs on vertices `1..=n`.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl SimpleGraph {
    /// Duplicate edges are collapsed; each edge is stored as `(min, max)`.
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn empty(n: u32) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: u32) -> Self {
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        SimpleGraph { n, edges }
    }

    pub fn path(n: u32) -> Self {
        SimpleGraph {
            n,
            edges: (1..n).map(|u| (u, u + 1)).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Degrees indexed by vertex; entry 0 is unused.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n as usize + 1];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Sorted adjacency lists indexed by vertex; entry 0 is unused.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n as usize + 1];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n as usize + 1];
        let mut queue = VecDeque::from([1u32]);
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }
}
