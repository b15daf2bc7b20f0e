//! Young tableaux with rectangular content.

mod enumerate;
mod layered;

pub use enumerate::{enumerate_ssyt, enumerate_standard, DEFAULT_CAP};
pub use layered::{grid_family, grid_multigraph, LayeredMultigraph};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("invalid tableau: {0}")]
    Invalid(Diagnostic),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("column {column} contains a repeated entry")]
    ColumnRepeat { column: usize },
    #[error("column order must list each of the {columns} columns exactly once")]
    ColumnOrder { columns: usize },
    #[error("enumeration exceeded the cap of {cap} tableaux")]
    CapExceeded { cap: usize },
    #[error("shape has {boxes} boxes but content {n}x{d} needs {}", n * d)]
    ShapeContent { boxes: usize, n: usize, d: usize },
    #[error("layered multigraph violates property {property}: {detail}")]
    Property { property: u8, detail: String },
    #[error(
        "multigraph is not regular: vertex {vertex} has degree {degree}, vertex 1 has {expected}"
    )]
    NotRegular {
        vertex: u32,
        degree: usize,
        expected: usize,
    },
    #[error("tableau content is {n}x{d}, expected lifted content (nd)x1")]
    NotLifted { n: usize, d: usize },
}

/// First problem found by [`Tableau::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    NoRows,
    EmptyRow {
        row: usize,
    },
    RowsNotDecreasing {
        row: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u32,
    },
    Multiplicity {
        value: u32,
        expected: usize,
        found: usize,
    },
    BoxCount {
        boxes: usize,
        expected: usize,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NoRows => write!(f, "no rows"),
            Diagnostic::EmptyRow { row } => write!(f, "row {} is empty", row + 1),
            Diagnostic::RowsNotDecreasing { row } => {
                write!(f, "row {} is longer than row {}", row + 1, row)
            }
            Diagnostic::EntryOutOfRange { row, col, value } => {
                write!(
                    f,
                    "entry {value} at row {}, column {} is out of range",
                    row + 1,
                    col + 1
                )
            }
            Diagnostic::Multiplicity {
                value,
                expected,
                found,
            } => {
                write!(f, "value {value} occurs {found} times, expected {expected}")
            }
            Diagnostic::BoxCount { boxes, expected } => {
                write!(f, "{boxes} boxes, content requires {expected}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.contains(&0) {
            return Err(TableauError::Partition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::Partition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths.
    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|i| self.0.iter().filter(|&&l| l >= i).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Entries are positive integers stored row by row; content `(n, d)` declares
/// that each of `1..=n` occurs exactly `d` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
    n: usize,
    d: usize,
}

impl Tableau {
    /// Builds and validates.
    pub fn new(rows: Vec<Vec<u32>>, n: usize, d: usize) -> Result<Self, TableauError> {
        let t = Tableau::unchecked(rows, n, d);
        t.validate().map_err(TableauError::Invalid)?;
        Ok(t)
    }

    /// Builds without validation; see [`Tableau::validate`].
    pub fn unchecked(rows: Vec<Vec<u32>>, n: usize, d: usize) -> Self {
        Tableau { rows, n, d }
    }

    /// Content is inferred from the entries: `n` is the largest entry and `d`
    /// its multiplicity. The result is validated.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let n = rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let boxes: usize = rows.iter().map(Vec::len).sum();
        let d = boxes.checked_div(n).unwrap_or(0);
        Tableau::new(rows, n, d)
    }

    pub fn validate(&self) -> Result<(), Diagnostic> {
        if self.rows.is_empty() {
            return Err(Diagnostic::NoRows);
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Diagnostic::EmptyRow { row: i });
            }
            if i > 0 && row.len() > self.rows[i - 1].len() {
                return Err(Diagnostic::RowsNotDecreasing { row: i });
            }
        }
        let boxes = self.num_boxes();
        if boxes != self.n * self.d {
            return Err(Diagnostic::BoxCount {
                boxes,
                expected: self.n * self.d,
            });
        }
        let mut counts = vec![0usize; self.n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > self.n {
                    return Err(Diagnostic::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                counts[v as usize] += 1;
            }
        }
        for (v, &c) in counts.iter().enumerate().skip(1) {
            if c != self.d {
                return Err(Diagnostic::Multiplicity {
                    value: v as u32,
                    expected: self.d,
                    found: c,
                });
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of blocks `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Block size `d`.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Columns read top to bottom.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.num_columns())
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect()
    }

    pub fn max_column_len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        rows_ok
            && self
                .columns()
                .iter()
                .all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    /// Whether some column holds the same value twice.
    pub fn has_column_repeat(&self) -> bool {
        self.first_column_repeat().is_some()
    }

    pub fn first_column_repeat(&self) -> Option<usize> {
        self.columns().iter().position(|c| {
            let mut s = c.clone();
            s.sort_unstable();
            s.windows(2).any(|w| w[0] == w[1])
        })
    }

    /// Replaces the `j`-th occurrence of `i`, counted in the given column
    /// order and top to bottom within a column, by `(i−1)d + j`.
    /// Columns with a repeated value lift without complaint.
    pub fn lift_blocks(&self, column_order: &[usize]) -> Result<Tableau, TableauError> {
        let ncols = self.num_columns();
        let mut seen = vec![false; ncols];
        if column_order.len() != ncols
            || column_order
                .iter()
                .any(|&c| c >= ncols || std::mem::replace(&mut seen[c], true))
        {
            return Err(TableauError::ColumnOrder { columns: ncols });
        }
        let mut used = vec![0u32; self.n + 1];
        let mut rows = self.rows.clone();
        for &c in column_order {
            for row in rows.iter_mut().take_while(|r| r.len() > c) {
                let v = row[c];
                used[v as usize] += 1;
                row[c] = (v - 1) * self.d as u32 + used[v as usize];
            }
        }
        Ok(Tableau::unchecked(rows, self.n * self.d, 1))
    }

    /// Inverse of [`Tableau::lift_blocks`]: maps `a` to `⌈a/d⌉`.
    pub fn hat(&self, d: usize) -> Result<Tableau, TableauError> {
        if self.d != 1 || d == 0 || !self.n.is_multiple_of(d) {
            return Err(TableauError::NotLifted {
                n: self.n,
                d: self.d,
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&a| a.div_ceil(d as u32)).collect())
            .collect();
        Tableau::new(rows, self.n / d, d)
    }

    /// Multigraph on `1..=n`: one edge per unordered in-column pair of positions.
    pub fn graph(&self) -> Result<TableauGraph, TableauError> {
        if let Some(column) = self.first_column_repeat() {
            return Err(TableauError::ColumnRepeat { column });
        }
        let mut mult = BTreeMap::new();
        for col in self.columns() {
            for (a, &u) in col.iter().enumerate() {
                for &v in &col[a + 1..] {
                    *mult.entry((u.min(v), u.max(v))).or_insert(0) += 1;
                }
            }
        }
        Ok(TableauGraph {
            n: self.n as u32,
            mult,
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n > 9;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u32::to_string).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "({})", rows.join("/"))
    }
}

/// Tableau graph with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauGraph {
    pub n: u32,
    pub mult: BTreeMap<(u32, u32), usize>,
}

impl TableauGraph {
    pub fn multiplicity(&self, u: u32, v: u32) -> usize {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Degrees counted with multiplicity, indexed by vertex; entry 0 unused.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n as usize + 1];
        for (&(u, v), &k) in &self.mult {
            deg[u as usize] += k;
            deg[v as usize] += k;
        }
        deg
    }

    pub fn simple(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.mult.keys().copied()).expect("tableau graph has no loops")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_tableau() -> Tableau {
        Tableau::new(vec![vec![1, 1, 2, 3, 5], vec![2, 4, 4, 5], vec![3]], 5, 2).unwrap()
    }

    #[test]
    fn validation() {
        assert!(sample_tableau().validate().is_ok());
        assert!(Tableau::new(vec![vec![1, 1, 2, 3], vec![2, 3]], 3, 2).is_ok());
        let bad = Tableau::unchecked(vec![vec![1, 1], vec![2]], 2, 2);
        assert!(matches!(bad.validate(), Err(Diagnostic::BoxCount { .. })));
        let bad = Tableau::unchecked(vec![vec![1, 1], vec![2, 3]], 2, 2);
        assert!(matches!(
            bad.validate(),
            Err(Diagnostic::EntryOutOfRange { value: 3, .. })
        ));
        let bad = Tableau::unchecked(vec![vec![1], vec![1, 2, 2]], 2, 2);
        assert!(matches!(
            bad.validate(),
            Err(Diagnostic::RowsNotDecreasing { row: 1 })
        ));
    }

    #[test]
    fn predicates() {
        let t = Tableau::from_rows(vec![vec![1, 1, 2, 3], vec![2, 3]]).unwrap();
        assert!(t.is_semistandard());
        let t = Tableau::from_rows(vec![vec![1, 2, 3, 1], vec![2, 3]]).unwrap();
        assert!(!t.is_semistandard());
        let t = Tableau::new(vec![vec![1], vec![2], vec![3]], 3, 1).unwrap();
        assert!(t.is_semistandard());
        let t = Tableau::new(vec![vec![1, 2], vec![1, 2]], 2, 2).unwrap();
        assert!(t.has_column_repeat());
        assert!(!Tableau::from_rows(vec![vec![1, 1], vec![2, 2]])
            .unwrap()
            .has_column_repeat());
    }

    #[test]
    fn partitions() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.transpose().parts(), &[2, 1, 1]);
        assert_eq!(p.transpose().transpose(), p);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn lifting() {
        let t = Tableau::from_rows(vec![vec![1, 1, 1, 2, 2, 2], vec![1, 2]]).unwrap();
        let lifted = t.lift_blocks(&[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(lifted.rows(), &[vec![1, 3, 4, 6, 7, 8], vec![2, 5]]);
        assert_eq!(lifted.hat(4).unwrap(), t);

        let lifted = sample_tableau().lift_blocks(&[0, 2, 1, 4, 3]).unwrap();
        assert_eq!(
            lifted.rows(),
            &[vec![1, 2, 4, 6, 9], vec![3, 8, 7, 10], vec![5]]
        );
        assert_eq!(lifted.hat(2).unwrap(), sample_tableau());

        let t = Tableau::new(vec![vec![1], vec![2]], 2, 1).unwrap();
        assert_eq!(t.lift_blocks(&[0]).unwrap().rows(), t.rows());
        assert!(sample_tableau().lift_blocks(&[0, 1, 2, 3]).is_err());
        assert!(sample_tableau().lift_blocks(&[0, 1, 2, 3, 3]).is_err());
    }

    #[test]
    fn graphs() {
        let g = sample_tableau().graph().unwrap();
        let keys: Vec<_> = g.mult.keys().copied().collect();
        assert_eq!(keys, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5)]);
        let k5 = Tableau::from_rows(vec![
            vec![1, 1, 1, 3, 3],
            vec![2, 2, 2, 4, 4],
            vec![3, 4, 5, 5, 5],
        ])
        .unwrap()
        .graph()
        .unwrap();
        assert_eq!(k5.simple(), SimpleGraph::complete(5));
        let g = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]])
            .unwrap()
            .graph()
            .unwrap();
        assert_eq!(g.multiplicity(2, 1), 2);
    }
}
