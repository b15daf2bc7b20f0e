//! Layered noncommutative algebraic branching programs.
//!
//! Vertices are 0-based within each layer; the JSON encoding shifts them to 1-based.

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{
    exponents, factorial, flattening, AlgebraError, DensePoly, Exponent, Field, LinearForm,
    WaringPoint,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbpError {
    #[error("an ABP needs degree at least 1")]
    ZeroDegree,
    #[error("layer list has length {found}, expected d + 1 = {expected}")]
    LayerCount { expected: usize, found: usize },
    #[error("source and sink layers must have exactly one vertex")]
    Endpoints,
    #[error("layer {layer} has no vertices")]
    EmptyLayer { layer: usize },
    #[error("edge {from}->{to} between layers {layer} and {} is out of range", layer + 1)]
    EdgeOutOfRange {
        layer: usize,
        from: usize,
        to: usize,
    },
    #[error("edge label has {found} coordinates, expected {expected}")]
    LabelLength { expected: usize, found: usize },
    #[error("the zero polynomial has no minimal ABP")]
    ZeroPolynomial,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge<F> {
    pub from: usize,
    pub to: usize,
    pub label: LinearForm<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcAbp<F> {
    d: u32,
    m: usize,
    layers: Vec<usize>,
    edges: Vec<Vec<Edge<F>>>,
}

impl<F: Field> NcAbp<F> {
    /// Validates and normalizes: parallel edges are merged by adding labels,
    /// zero labels are dropped, and edges are sorted by `(from, to)`.
    pub fn new(
        d: u32,
        m: usize,
        layers: Vec<usize>,
        edges: Vec<Vec<Edge<F>>>,
    ) -> Result<Self, AbpError> {
        if d == 0 {
            return Err(AbpError::ZeroDegree);
        }
        let dd = d as usize;
        if layers.len() != dd + 1 {
            return Err(AbpError::LayerCount {
                expected: dd + 1,
                found: layers.len(),
            });
        }
        if edges.len() != dd {
            return Err(AbpError::LayerCount {
                expected: dd,
                found: edges.len(),
            });
        }
        if layers[0] != 1 || layers[dd] != 1 {
            return Err(AbpError::Endpoints);
        }
        if let Some(layer) = layers.iter().position(|&w| w == 0) {
            return Err(AbpError::EmptyLayer { layer });
        }
        let mut normalized = Vec::with_capacity(dd);
        for (k, layer_edges) in edges.into_iter().enumerate() {
            let mut merged: HashMap<(usize, usize), LinearForm<F>> = HashMap::new();
            for e in layer_edges {
                if e.from >= layers[k] || e.to >= layers[k + 1] {
                    return Err(AbpError::EdgeOutOfRange {
                        layer: k,
                        from: e.from,
                        to: e.to,
                    });
                }
                if e.label.m() != m {
                    return Err(AbpError::LabelLength {
                        expected: m,
                        found: e.label.m(),
                    });
                }
                merged
                    .entry((e.from, e.to))
                    .and_modify(|l| *l = l.add(&e.label))
                    .or_insert(e.label);
            }
            let mut list: Vec<Edge<F>> = merged
                .into_iter()
                .filter(|(_, l)| !l.is_zero())
                .map(|((from, to), label)| Edge { from, to, label })
                .collect();
            list.sort_by_key(|e| (e.from, e.to));
            normalized.push(list);
        }
        Ok(NcAbp {
            d,
            m,
            layers,
            edges: normalized,
        })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn layers(&self) -> &[usize] {
        &self.layers
    }

    pub fn width(&self) -> usize {
        self.layers.iter().copied().max().unwrap_or(1)
    }

    /// Edges from layer `k` to layer `k + 1`, sorted by `(from, to)`.
    pub fn edges(&self, k: usize) -> &[Edge<F>] {
        &self.edges[k]
    }

    pub fn num_edges(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Outgoing edges of vertex `u` in layer `k`.
    pub fn out_edges(&self, k: usize, u: usize) -> &[Edge<F>] {
        let list = &self.edges[k];
        let lo = list.partition_point(|e| e.from < u);
        let hi = list.partition_point(|e| e.from <= u);
        &list[lo..hi]
    }

    /// One path per term; the first edge of path `i` carries `c_i ℓ_i`, all
    /// others `ℓ_i`. For `d = 1` the paths share both endpoints and collapse
    /// into a single edge.
    pub fn from_waring(p: &WaringPoint<F>) -> Result<Self, AbpError> {
        let d = p.d as usize;
        if d == 0 {
            return Err(AbpError::ZeroDegree);
        }
        let r = p.terms.len();
        if r == 0 {
            return NcAbp::new(p.d, p.m, vec![1; d + 1], vec![Vec::new(); d]);
        }
        let mut layers = vec![r; d + 1];
        layers[0] = 1;
        layers[d] = 1;
        let mut edges = vec![Vec::new(); d];
        for (i, (c, l)) in p.terms.iter().enumerate() {
            for (k, layer_edges) in edges.iter_mut().enumerate() {
                let from = if k == 0 { 0 } else { i };
                let to = if k + 1 == d { 0 } else { i };
                let label = if k == 0 { l.scale(c) } else { l.clone() };
                layer_edges.push(Edge { from, to, label });
            }
        }
        NcAbp::new(p.d, p.m, layers, edges)
    }

    /// Subset-lattice ABP of the product `ℓ_1⋯ℓ_d`.
    pub fn chow(forms: &[LinearForm<F>]) -> Result<Self, AbpError> {
        let d = forms.len();
        if d == 0 {
            return Err(AbpError::ZeroDegree);
        }
        let m = forms[0].m();
        if let Some(l) = forms.iter().find(|l| l.m() != m) {
            return Err(AbpError::LabelLength {
                expected: m,
                found: l.m(),
            });
        }
        // subsets as bitmasks, grouped by size, ascending within a layer
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); d + 1];
        for mask in 0u32..(1 << d) {
            by_size[mask.count_ones() as usize].push(mask);
        }
        let index: Vec<HashMap<u32, usize>> = by_size
            .iter()
            .map(|layer| layer.iter().enumerate().map(|(i, &s)| (s, i)).collect())
            .collect();
        let source_scale = F::from_rational(factorial(d as u32).recip());
        let mut edges = vec![Vec::new(); d];
        for k in 0..d {
            for (from, &mask) in by_size[k].iter().enumerate() {
                for (i, l) in forms.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        continue;
                    }
                    let to = index[k + 1][&(mask | (1 << i))];
                    let label = if k == 0 {
                        l.scale(&source_scale)
                    } else {
                        l.clone()
                    };
                    edges[k].push(Edge { from, to, label });
                }
            }
        }
        let layers = by_size.iter().map(Vec::len).collect();
        NcAbp::new(d as u32, m, layers, edges)
    }

    /// Commutative polynomial computed at the sink.
    pub fn eval_dense(&self) -> DensePoly<F> {
        let mut cur = vec![DensePoly::constant(F::one(), self.m)];
        for k in 0..self.d as usize {
            let mut next = vec![DensePoly::zero(k as u32 + 1, self.m); self.layers[k + 1]];
            for e in &self.edges[k] {
                if cur[e.from].is_zero() {
                    continue;
                }
                next[e.to] = next[e.to].add(&cur[e.from].mul_linear(&e.label));
            }
            cur = next;
        }
        cur.pop().expect("sink layer has one vertex")
    }

    /// Polynomials computed from each vertex of layer `k` to the sink.
    pub fn residuals(&self, k: usize) -> Vec<DensePoly<F>> {
        let d = self.d as usize;
        let mut cur = vec![DensePoly::constant(F::one(), self.m)];
        for j in (k..d).rev() {
            let mut prev = vec![DensePoly::zero((d - j) as u32, self.m); self.layers[j]];
            for e in &self.edges[j] {
                prev[e.from] = prev[e.from].add(&cur[e.to].mul_linear(&e.label));
            }
            cur = prev;
        }
        cur
    }

    /// The ABP whose layer-`k` vertices are a basis of the span of all
    /// length-`k` contractions of `p`. The source state is `p` itself and later
    /// layers use the reduced row echelon basis of the flattening.
    pub fn minimize(p: &DensePoly<F>) -> Result<Self, AbpError> {
        if p.is_zero() {
            return Err(AbpError::ZeroPolynomial);
        }
        let d = p.degree() as usize;
        if d == 0 {
            return Err(AbpError::ZeroDegree);
        }
        let m = p.nvars();
        // bases[k]: vectors of tensor entries over size-(d-k) multisets
        let mut bases: Vec<Vec<Vec<F>>> = Vec::with_capacity(d + 1);
        let mut pivots: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        let top = flattening(p, 0)?;
        bases.push(vec![top.row(0).to_vec()]);
        pivots.push(Vec::new());
        for k in 1..=d {
            let (rows, piv) = flattening(p, k)?.rref();
            bases.push(rows);
            pivots.push(piv);
        }
        let mut edges = vec![Vec::new(); d];
        for k in 0..d {
            let cols_here = exponents(m, (d - k) as u32);
            let cols_next = exponents(m, (d - k - 1) as u32);
            let pos_here: HashMap<&Exponent, usize> =
                cols_here.iter().enumerate().map(|(i, e)| (e, i)).collect();
            for (a, t) in bases[k].iter().enumerate() {
                let mut labels = vec![vec![F::zero(); m]; bases[k + 1].len()];
                for j in 0..m {
                    let contracted: Vec<F> = cols_next
                        .iter()
                        .map(|beta| {
                            let mut gamma = beta.clone();
                            gamma[j] += 1;
                            t[pos_here[&gamma]].clone()
                        })
                        .collect();
                    let coords: Vec<F> = pivots[k + 1]
                        .iter()
                        .map(|&c| contracted[c].clone())
                        .collect();
                    debug_assert!(in_span(&contracted, &coords, &bases[k + 1]));
                    for (b, c) in coords.into_iter().enumerate() {
                        labels[b][j] = c;
                    }
                }
                for (b, label) in labels.into_iter().enumerate() {
                    edges[k].push(Edge {
                        from: a,
                        to: b,
                        label: LinearForm::new(label),
                    });
                }
            }
        }
        let layers = bases.iter().map(Vec::len).collect();
        NcAbp::new(d as u32, m, layers, edges)
    }
}

fn in_span<F: Field>(v: &[F], coords: &[F], basis: &[Vec<F>]) -> bool {
    (0..v.len()).all(|i| {
        let mut acc = F::zero();
        for (c, row) in coords.iter().zip(basis) {
            acc += &(c.clone() * &row[i]);
        }
        acc == v[i]
    })
}

/// Maximum flattening rank; the width of a minimal ABP for `p`.
pub fn ncw<F: Field>(p: &DensePoly<F>) -> Result<usize, AbpError> {
    if p.is_zero() {
        return Err(AbpError::ZeroPolynomial);
    }
    let d = p.degree() as usize;
    let mut best = 0;
    for k in 0..=d {
        best = best.max(flattening(p, k)?.rank());
    }
    Ok(best)
}

/// Ranks of all flattenings `k = 0..=d`.
pub fn flattening_ranks<F: Field>(p: &DensePoly<F>) -> Result<Vec<usize>, AbpError> {
    (0..=p.degree() as usize)
        .map(|k| Ok(flattening(p, k)?.rank()))
        .collect()
}

/// A width-two ABP for `x²y` whose labels mix `x` and `y`.
pub fn x2y_width_two<F: Field>() -> NcAbp<F> {
    let x = LinearForm::<F>::from_i64(&[1, 0]);
    let y = LinearForm::<F>::from_i64(&[0, 1]);
    let half = F::from_rational(crate::algebra::parse_rational("1/2").expect("literal"));
    let third = F::from_rational(crate::algebra::parse_rational("1/3").expect("literal"));
    let two_thirds = third.clone() + &third;
    let e = |from, to, label| Edge { from, to, label };
    NcAbp::new(
        3,
        2,
        vec![1, 2, 2, 1],
        vec![
            vec![e(0, 0, x.clone()), e(0, 1, y.clone())],
            vec![
                e(0, 0, y.scale(&half)),
                e(0, 1, x.clone()),
                e(1, 0, x.scale(&half)),
            ],
            vec![e(0, 0, x.scale(&two_thirds)), e(1, 0, y.scale(&third))],
        ],
    )
    .expect("fixed ABP is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, waring_expand, Q};

    fn q(s: &str) -> Q {
        parse_rational(s).unwrap()
    }

    fn lf(c: &[i64]) -> LinearForm<Q> {
        LinearForm::from_i64(c)
    }

    fn p_sq() -> WaringPoint<Q> {
        WaringPoint::from_forms(2, vec![lf(&[1, 0]), lf(&[0, 1])]).unwrap()
    }

    fn p_mm() -> DensePoly<Q> {
        // x11^3 + 3 x11 x12 x21 + 3 x12 x22 x21 + x22^3 in variables (x11, x12, x21, x22)
        DensePoly::from_terms(
            3,
            4,
            [
                (vec![3, 0, 0, 0], q("1")),
                (vec![1, 1, 1, 0], q("3")),
                (vec![0, 1, 1, 1], q("3")),
                (vec![0, 0, 0, 3], q("1")),
            ],
        )
        .unwrap()
    }

    #[test]
    fn waring_abp() {
        let a = NcAbp::from_waring(&p_sq()).unwrap();
        assert_eq!(a.layers(), &[1, 2, 1]);
        assert_eq!(a.eval_dense(), waring_expand(&p_sq()));
        let empty = NcAbp::from_waring(&WaringPoint::<Q>::new(3, 2, vec![]).unwrap()).unwrap();
        assert_eq!(empty.layers(), &[1, 1, 1, 1]);
        assert!(empty.eval_dense().is_zero());
        let p_xy = WaringPoint::new(
            2,
            2,
            vec![(q("1/4"), lf(&[1, 1])), (q("-1/4"), lf(&[1, -1]))],
        )
        .unwrap();
        assert_eq!(
            NcAbp::from_waring(&p_xy).unwrap().eval_dense(),
            DensePoly::monomial(vec![1, 1])
        );
        let linear = WaringPoint::from_forms(1, vec![lf(&[1, 0]), lf(&[0, 1])]).unwrap();
        let a = NcAbp::from_waring(&linear).unwrap();
        assert_eq!(a.layers(), &[1, 1]);
        assert_eq!(a.eval_dense(), waring_expand(&linear));
    }

    #[test]
    fn x2y_two_wide() {
        assert_eq!(
            x2y_width_two::<Q>().eval_dense(),
            DensePoly::monomial(vec![2, 1])
        );
    }

    #[test]
    fn chow_abp() {
        let a = NcAbp::chow(&[lf(&[1, 0]), lf(&[0, 1])]).unwrap();
        assert_eq!(a.layers(), &[1, 2, 1]);
        assert_eq!(a.eval_dense(), DensePoly::monomial(vec![1, 1]));
        let a = NcAbp::chow(&[lf(&[1, 1]), lf(&[1, -1])]).unwrap();
        let expected =
            DensePoly::from_terms(2, 2, [(vec![2, 0], q("1")), (vec![0, 2], q("-1"))]).unwrap();
        assert_eq!(a.eval_dense(), expected);
        let a = NcAbp::chow(&[lf(&[1, 0]), lf(&[0, 1]), lf(&[1, 1])]).unwrap();
        assert_eq!(a.layers(), &[1, 3, 3, 1]);
        let a = NcAbp::chow(&[lf(&[1, 0])]).unwrap();
        assert_eq!(a.eval_dense(), DensePoly::monomial(vec![1, 0]));
    }

    #[test]
    fn minimal_abps() {
        let x2y = DensePoly::<Q>::monomial(vec![2, 1]);
        let a = NcAbp::minimize(&x2y).unwrap();
        assert_eq!(a.layers(), &[1, 2, 2, 1]);
        assert_eq!(a.eval_dense(), x2y);
        assert_eq!(ncw(&x2y).unwrap(), 2);

        let x5 = DensePoly::<Q>::monomial(vec![5, 0]);
        assert_eq!(NcAbp::minimize(&x5).unwrap().layers(), &[1; 6]);
        assert_eq!(ncw(&x5).unwrap(), 1);

        let a = NcAbp::minimize(&p_mm()).unwrap();
        assert_eq!(a.layers(), &[1, 4, 4, 1]);
        assert_eq!(a.eval_dense(), p_mm());
        assert_eq!(ncw(&p_mm()).unwrap(), 4);

        assert!(NcAbp::minimize(&DensePoly::<Q>::zero(2, 2)).is_err());
        assert!(ncw(&DensePoly::<Q>::zero(2, 2)).is_err());
    }

    #[test]
    fn normalization_merges_parallel_edges() {
        let e = |l: LinearForm<Q>| Edge {
            from: 0,
            to: 0,
            label: l,
        };
        let a = NcAbp::new(
            1,
            2,
            vec![1, 1],
            vec![vec![e(lf(&[1, 0])), e(lf(&[-1, 0]))]],
        )
        .unwrap();
        assert_eq!(a.num_edges(), 0);
        assert!(NcAbp::<Q>::new(1, 2, vec![1, 2], vec![vec![]]).is_err());
        assert!(NcAbp::new(
            1,
            2,
            vec![1, 1],
            vec![vec![Edge {
                from: 0,
                to: 1,
                label: lf(&[1, 0])
            }]]
        )
        .is_err());
    }
}
