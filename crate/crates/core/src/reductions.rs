//! Graph 3-coloring encoded as tableau evaluations, plus the brute-force counter.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{Field, LinearForm, WaringPoint, Zeta6, Q};
use crate::graph::SimpleGraph;
use crate::tableau::Tableau;

/// Degree used for the decision instance when none is given (graphs of maximum degree 4).
pub const DEFAULT_DECISION_DEGREE: usize = 8;
/// Degree used for the counting instance when none is given (graphs of maximum degree 3).
pub const DEFAULT_COUNTING_DEGREE: usize = 18;

const BRUTEFORCE_MAX_VERTICES: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("degree {d} too small: vertex {vertex} has degree {degree} and needs {needed}")]
    DegreeTooSmall {
        d: usize,
        vertex: u32,
        degree: usize,
        needed: usize,
    },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("brute force is limited to {max} vertices, got {n}")]
    TooManyVertices { n: u32, max: u32 },
    #[error("Vandermonde point needs m >= 1 and 1 <= r <= {max}")]
    VandermondeRange { max: usize },
}

/// `copies` columns `(u/v)` per edge and `d − copies·deg(v)` single boxes per vertex,
/// sorted by length (longest first) and then lexicographically.
fn coloring_tableau(g: &SimpleGraph, d: usize, copies: usize) -> Result<Tableau, ReductionError> {
    if g.n() == 0 {
        return Err(ReductionError::EmptyGraph);
    }
    let deg = g.degrees();
    let (vertex, &degree) = deg
        .iter()
        .enumerate()
        .skip(1)
        .max_by_key(|&(v, &k)| (k, std::cmp::Reverse(v)))
        .expect("at least one vertex");
    if copies * degree > d {
        return Err(ReductionError::DegreeTooSmall {
            d,
            vertex: vertex as u32,
            degree,
            needed: copies * degree,
        });
    }
    let mut columns: Vec<Vec<u32>> = Vec::new();
    for (u, v) in g.edges() {
        columns.extend(std::iter::repeat_n(vec![u, v], copies));
    }
    for v in 1..=g.n() {
        let singles = d - copies * deg[v as usize];
        columns.extend(std::iter::repeat_n(vec![v], singles));
    }
    columns.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let height = columns.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|i| columns.iter().filter_map(|c| c.get(i).copied()).collect())
        .collect();
    Ok(Tableau::new(rows, g.n() as usize, d).expect("content n×d by construction"))
}

fn point<F: Field>(d: usize, second: [F; 3]) -> WaringPoint<F> {
    let terms = second
        .into_iter()
        .map(|y| (F::one(), LinearForm::new(vec![F::one(), y])))
        .collect();
    WaringPoint::new(d as u32, 2, terms).expect("d ≥ 1")
}

/// Instance whose evaluation is nonzero exactly when `g` is 3-colorable.
pub fn gen_3col_decision(
    g: &SimpleGraph,
    d: usize,
) -> Result<(Tableau, WaringPoint<Q>), ReductionError> {
    let t = coloring_tableau(g, d, 2)?;
    Ok((
        t,
        point(d, [Q::from_i64(0), Q::from_i64(1), Q::from_i64(2)]),
    ))
}

/// Instance whose evaluation equals the number of proper 3-colorings of `g`.
pub fn gen_3col_counting(
    g: &SimpleGraph,
    d: usize,
) -> Result<(Tableau, WaringPoint<Zeta6>), ReductionError> {
    let t = coloring_tableau(g, d, 6)?;
    let z = Zeta6::zeta();
    let z2 = z.clone() * z.clone();
    Ok((t, point(d, [Zeta6::zero(), z, z2])))
}

/// Number of proper 3-colorings, by enumeration of all `3^n` assignments.
pub fn count_colorings_bruteforce(g: &SimpleGraph) -> Result<u64, ReductionError> {
    let n = g.n();
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(ReductionError::TooManyVertices {
            n,
            max: BRUTEFORCE_MAX_VERTICES,
        });
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (u as usize - 1, v as usize - 1))
        .collect();
    let mut color = vec![0u8; n as usize];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(u, v)| color[u] != color[v]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == color.len() {
                return Ok(count);
            }
            color[i] += 1;
            if color[i] < 3 {
                break;
            }
            color[i] = 0;
            i += 1;
        }
    }
}

const VANDERMONDE_MAX_TERMS: usize = 64;

/// `Σ_{i=1}^r ℓ_i^d` with `ℓ_i = (1, i, i², …, i^{m−1})`.
pub fn vandermonde_point(m: usize, r: usize, d: u32) -> Result<WaringPoint<Q>, ReductionError> {
    if m == 0 || r == 0 || r > VANDERMONDE_MAX_TERMS {
        return Err(ReductionError::VandermondeRange {
            max: VANDERMONDE_MAX_TERMS,
        });
    }
    let terms = (1..=r as i64)
        .map(|i| {
            let form = (0..m as u32).map(|e| Q::from_i64(i.pow(e))).collect();
            (Q::one(), LinearForm::new(form))
        })
        .collect();
    WaringPoint::new(d, m, terms).map_err(|_| ReductionError::VandermondeRange {
        max: VANDERMONDE_MAX_TERMS,
    })
}

/// One representative of every isomorphism class of simple graphs on `n` vertices.
pub fn nonisomorphic_graphs(n: u32) -> Vec<SimpleGraph> {
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n as usize);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(u32, u32)> = edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (p[u as usize - 1], p[v as usize - 1]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default();
        if seen.insert(canon) {
            out.push(SimpleGraph::new(n, edges).expect("pairs are valid"));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as u32);
            out.push(q);
        }
    }
    out
}
