//! Two-row semistandard tableaux from layered multigraphs, and the doubled grid family.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{Tableau, TableauError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiEdge {
    pub u: u32,
    pub v: u32,
    pub mult: usize,
}

/// Vertices grouped into layers (in ascending order within a layer) and
/// edges with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeredMultigraph {
    pub layers: Vec<Vec<u32>>,
    pub edges: Vec<MultiEdge>,
}

fn violation(property: u8, detail: String) -> TableauError {
    TableauError::Property { property, detail }
}

impl LayeredMultigraph {
    /// The tableau whose columns are the edges `(u/v)`, layer pair by layer
    /// pair, each pair's edges ordered left to right.
    pub fn to_tableau(&self) -> Result<Tableau, TableauError> {
        let n: usize = self.layers.iter().map(Vec::len).sum();
        let mut layer_of: HashMap<u32, usize> = HashMap::new();
        for (j, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                if v == 0 || v as usize > n || layer_of.insert(v, j).is_some() {
                    return Err(violation(
                        1,
                        format!("vertex labels must be exactly 1..={n}, got {v}"),
                    ));
                }
            }
        }
        let mut prev_max = 0;
        for (j, layer) in self.layers.iter().enumerate() {
            let Some(&first) = layer.first() else {
                return Err(violation(4, format!("layer {j} is empty")));
            };
            let consecutive = layer
                .iter()
                .enumerate()
                .all(|(i, &v)| v == first + i as u32);
            if !consecutive || first <= prev_max {
                return Err(violation(
                    4,
                    format!("layer {j} is not a consecutive run above the previous layer"),
                ));
            }
            prev_max = *layer.last().expect("nonempty");
        }
        let mut between: Vec<BTreeMap<(u32, u32), usize>> =
            vec![BTreeMap::new(); self.layers.len()];
        for e in &self.edges {
            let (Some(&lu), Some(&lv)) = (layer_of.get(&e.u), layer_of.get(&e.v)) else {
                return Err(violation(
                    1,
                    format!("edge {{{},{}}} uses an unknown vertex", e.u, e.v),
                ));
            };
            let (top, bottom, j) = if lv == lu + 1 {
                (e.u, e.v, lu)
            } else if lu == lv + 1 {
                (e.v, e.u, lv)
            } else {
                return Err(violation(
                    2,
                    format!("edge {{{},{}}} does not join consecutive layers", e.u, e.v),
                ));
            };
            if e.mult > 0 {
                *between[j].entry((top, bottom)).or_insert(0) += e.mult;
            }
        }
        for (j, edges) in between.iter().enumerate() {
            // sorted by (top, bottom); non-crossing iff bottoms never decrease
            let bottoms: Vec<u32> = edges.keys().map(|&(_, b)| b).collect();
            if bottoms.windows(2).any(|w| w[0] > w[1]) {
                return Err(violation(
                    3,
                    format!("edges between layers {j} and {} cross", j + 1),
                ));
            }
        }
        let mut top_row = Vec::new();
        let mut bottom_row = Vec::new();
        let mut degree = vec![0usize; n + 1];
        for edges in &between {
            for (&(u, v), &mult) in edges {
                for _ in 0..mult {
                    top_row.push(u);
                    bottom_row.push(v);
                }
                degree[u as usize] += mult;
                degree[v as usize] += mult;
            }
        }
        let expected = degree.get(1).copied().unwrap_or(0);
        if let Some(vertex) = (1..=n).find(|&v| degree[v] != expected) {
            return Err(TableauError::NotRegular {
                vertex: vertex as u32,
                degree: degree[vertex],
                expected,
            });
        }
        Tableau::new(vec![top_row, bottom_row], n, expected)
    }
}

/// The `2k × 2k` grid with doubled border edges, layered by anti-diagonals.
pub fn grid_multigraph(k: usize) -> LayeredMultigraph {
    let side = 2 * k;
    let mut id = HashMap::new();
    let mut layers = Vec::new();
    let mut next = 1u32;
    for s in 2..=2 * side {
        let mut layer = Vec::new();
        for x in 1..=side {
            if s > x && s - x <= side {
                id.insert((x, s - x), next);
                layer.push(next);
                next += 1;
            }
        }
        layers.push(layer);
    }
    let doubled = |a: (usize, usize), b: (usize, usize)| {
        let (x1, y1) = a.min(b);
        let (x2, y2) = a.max(b);
        if x1 == x2 && (x1 == 1 || x1 == side) && y1 % 2 == 1 && y2 == y1 + 1 {
            return true;
        }
        y1 == y2 && (y1 == 1 || y1 == side) && x1 % 2 == 1 && x2 == x1 + 1
    };
    let mut edges = Vec::new();
    for x in 1..=side {
        for y in 1..=side {
            for (nx, ny) in [(x + 1, y), (x, y + 1)] {
                if nx > side || ny > side {
                    continue;
                }
                let mult = if doubled((x, y), (nx, ny)) { 2 } else { 1 };
                edges.push(MultiEdge {
                    u: id[&(x, y)],
                    v: id[&(nx, ny)],
                    mult,
                });
            }
        }
    }
    LayeredMultigraph { layers, edges }
}

/// Two-row semistandard tableau with content `(2k)² × 4` whose graph is the doubled grid.
pub fn grid_family(k: usize) -> Result<Tableau, TableauError> {
    grid_multigraph(k).to_tableau()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(u: u32, v: u32, mult: usize) -> MultiEdge {
        MultiEdge { u, v, mult }
    }

    #[test]
    fn small_multigraphs() {
        let g = LayeredMultigraph {
            layers: vec![vec![1], vec![2]],
            edges: vec![edge(1, 2, 2)],
        };
        assert_eq!(g.to_tableau().unwrap().rows(), &[vec![1, 1], vec![2, 2]]);
        let g = LayeredMultigraph {
            layers: vec![vec![1], vec![2]],
            edges: vec![edge(2, 1, 1)],
        };
        assert_eq!(g.to_tableau().unwrap().rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn property_violations() {
        let crossing = LayeredMultigraph {
            layers: vec![vec![1, 2], vec![3, 4]],
            edges: vec![edge(1, 4, 1), edge(2, 3, 1)],
        };
        assert!(matches!(
            crossing.to_tableau(),
            Err(TableauError::Property { property: 3, .. })
        ));
        let skipping = LayeredMultigraph {
            layers: vec![vec![1], vec![2], vec![3]],
            edges: vec![edge(1, 3, 1)],
        };
        assert!(matches!(
            skipping.to_tableau(),
            Err(TableauError::Property { property: 2, .. })
        ));
        let unordered = LayeredMultigraph {
            layers: vec![vec![2], vec![1]],
            edges: vec![edge(1, 2, 1)],
        };
        assert!(matches!(
            unordered.to_tableau(),
            Err(TableauError::Property { property: 4, .. })
        ));
        let irregular = LayeredMultigraph {
            layers: vec![vec![1], vec![2, 3]],
            edges: vec![edge(1, 2, 1), edge(1, 3, 1)],
        };
        assert!(matches!(
            irregular.to_tableau(),
            Err(TableauError::NotRegular { .. })
        ));
    }

    #[test]
    fn grids() {
        let t = grid_family(1).unwrap();
        assert_eq!(
            t.rows(),
            &[vec![1, 1, 1, 1, 2, 2, 3, 3], vec![2, 2, 3, 3, 4, 4, 4, 4]]
        );
        assert_eq!((t.n(), t.d()), (4, 4));
        let g = grid_multigraph(2);
        let doubled: Vec<(u32, u32)> = g
            .edges
            .iter()
            .filter(|e| e.mult == 2)
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        let mut doubled = doubled;
        doubled.sort_unstable();
        assert_eq!(
            doubled,
            vec![
                (1, 2),
                (1, 3),
                (4, 7),
                (6, 10),
                (7, 11),
                (10, 13),
                (14, 16),
                (15, 16)
            ]
        );
        let t = grid_family(2).unwrap();
        assert_eq!((t.n(), t.d()), (16, 4));
        assert!(t.is_semistandard());
        assert_eq!(t.rows().len(), 2);
    }
}
