//! Dense exact matrices: rank, determinants and echelon forms.

use std::fmt;

use super::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc += &(a.clone() * b);
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * &rhs[(k, j)];
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }

    /// Rank by fraction-free (Bareiss) elimination. The pivot is the first
    /// nonzero entry at or below the current row in the current column.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut prev = F::one();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot = m[(r, col)].clone();
            let inv_prev = prev.inv().expect("Bareiss pivots are nonzero");
            for i in r + 1..m.rows {
                let factor = m[(i, col)].clone();
                for j in col + 1..m.cols {
                    let v = (pivot.clone() * &m[(i, j)] - factor.clone() * &m[(r, j)]) * &inv_prev;
                    m[(i, j)] = v;
                }
                m[(i, col)] = F::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n <= 4 {
            let cols: Vec<Vec<F>> = (0..n)
                .map(|j| (0..n).map(|i| self[(i, j)].clone()).collect())
                .collect();
            let refs: Vec<&[F]> = cols.iter().map(Vec::as_slice).collect();
            return det_top_square(&refs);
        }
        self.det_bareiss()
    }

    fn det_bareiss(&self) -> F {
        let n = self.rows;
        let mut m = self.clone();
        let mut prev = F::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return F::zero();
            };
            if p != k {
                m.swap_rows(k, p);
                negate = !negate;
            }
            let pivot = m[(k, k)].clone();
            let inv_prev = prev.inv().expect("Bareiss pivots are nonzero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v =
                        (pivot.clone() * &m[(i, j)] - m[(i, k)].clone() * &m[(k, j)]) * &inv_prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = F::zero();
            }
            prev = pivot;
        }
        let d = m[(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<F>>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, col)].inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m[(r, j)].clone() * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone();
                for j in col..m.cols {
                    let v = factor.clone() * &m[(r, j)];
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(col);
            r += 1;
        }
        let rows = (0..r).map(|i| m.row(i).to_vec()).collect();
        (rows, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant of the top `q × q` block of the `m × q` matrix whose columns
/// are the given vectors (each of length `m ≥ q`).
///
/// Small sizes are expanded along the first column; larger ones go through
/// Bareiss elimination.
pub fn det_top_square<F: Field>(columns: &[&[F]]) -> F {
    let q = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() >= q));
    match q {
        0 => F::one(),
        1 => columns[0][0].clone(),
        2 => columns[0][0].clone() * &columns[1][1] - columns[1][0].clone() * &columns[0][1],
        3 | 4 => {
            let mut acc = F::zero();
            let rows: Vec<usize> = (0..q).collect();
            laplace(columns, &rows, 0, &mut acc, F::one());
            acc
        }
        _ => {
            let rows = (0..q)
                .map(|i| (0..q).map(|j| columns[j][i].clone()).collect())
                .collect();
            Matrix::from_rows(rows).det_bareiss()
        }
    }
}

/// Expansion along columns: picks a row for column `col` from `rows` and recurses.
fn laplace<F: Field>(columns: &[&[F]], rows: &[usize], col: usize, acc: &mut F, sign_coef: F) {
    if rows.is_empty() {
        *acc += &sign_coef;
        return;
    }
    for (pos, &r) in rows.iter().enumerate() {
        let entry = &columns[col][r];
        if entry.is_zero() {
            continue;
        }
        let mut coef = sign_coef.clone() * entry;
        if pos % 2 == 1 {
            coef = -coef;
        }
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        laplace(columns, &rest, col + 1, acc, coef);
    }
}
