//! Seeded generators for test inputs.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DensePoly, Field, LinearForm, Matrix, WaringPoint, Q};
use crate::tableau::{Partition, Tableau};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(rng: &mut impl Rng, lo: i64, hi: i64) -> Q {
    Q::from_integer(BigInt::from(rng.gen_range(lo..=hi)))
}

pub fn nonzero_int(rng: &mut impl Rng, lo: i64, hi: i64) -> Q {
    loop {
        let v = rng.gen_range(lo..=hi);
        if v != 0 {
            return Q::from_integer(BigInt::from(v));
        }
    }
}

/// A random partition of `size` with at most `max_rows` parts.
pub fn partition(rng: &mut impl Rng, size: usize, max_rows: usize) -> Partition {
    let rows = rng.gen_range(1..=max_rows.min(size).max(1));
    // stars and bars: choose rows−1 distinct cut points in 1..size
    let mut cuts: Vec<usize> = (1..size).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(rows - 1).collect();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(rows);
    let mut prev = 0;
    for c in cuts.into_iter().chain([size]) {
        parts.push(c - prev);
        prev = c;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("positive parts")
}

/// A random tableau with content `n × d` and at most `max_rows` rows. Up to
/// `attempts` shuffles are tried to avoid repeated column entries.
pub fn tableau(
    rng: &mut impl Rng,
    n: usize,
    d: usize,
    max_rows: usize,
    attempts: usize,
) -> Tableau {
    let shape = partition(rng, n * d, max_rows);
    let mut values: Vec<u32> = (1..=n as u32)
        .flat_map(|v| std::iter::repeat_n(v, d))
        .collect();
    let mut best = None;
    for _ in 0..attempts.max(1) {
        values.shuffle(rng);
        let mut it = values.iter().copied();
        let rows = shape
            .parts()
            .iter()
            .map(|&l| it.by_ref().take(l).collect())
            .collect();
        let t = Tableau::new(rows, n, d).expect("content is correct by construction");
        let repeat = t.has_column_repeat();
        best = Some(t);
        if !repeat {
            break;
        }
    }
    best.expect("at least one attempt")
}

pub fn linear_form(rng: &mut impl Rng, m: usize, lo: i64, hi: i64) -> LinearForm<Q> {
    LinearForm::new((0..m).map(|_| int(rng, lo, hi)).collect())
}

/// `r` terms with integer coordinates in `[lo, hi]` and nonzero integer coefficients in `[lo, hi]`.
pub fn waring_point(
    rng: &mut impl Rng,
    d: u32,
    m: usize,
    r: usize,
    lo: i64,
    hi: i64,
) -> WaringPoint<Q> {
    let terms = (0..r)
        .map(|_| (nonzero_int(rng, lo, hi), linear_form(rng, m, lo, hi)))
        .collect();
    WaringPoint::new(d, m, terms).expect("d ≥ 1 and matching lengths")
}

/// Random integer coefficients in `[lo, hi]`; each monomial present with probability `density`.
pub fn dense_poly(
    rng: &mut impl Rng,
    d: u32,
    m: usize,
    lo: i64,
    hi: i64,
    density: f64,
) -> DensePoly<Q> {
    let mut terms = Vec::new();
    for a in crate::algebra::exponents(m, d) {
        if rng.gen_bool(density) {
            terms.push((a, int(rng, lo, hi)));
        }
    }
    DensePoly::from_terms(d, m, terms).expect("exponents have the right shape")
}

pub fn unit_upper_triangular(rng: &mut impl Rng, m: usize, lo: i64, hi: i64) -> Matrix<Q> {
    let mut u = Matrix::identity(m);
    for i in 0..m {
        for j in i + 1..m {
            u[(i, j)] = int(rng, lo, hi);
        }
    }
    u
}

pub fn nonzero_vector(rng: &mut impl Rng, m: usize, lo: i64, hi: i64) -> Vec<Q> {
    (0..m).map(|_| nonzero_int(rng, lo, hi)).collect()
}

/// Diagonal matrix with the given entries.
pub fn diagonal<F: Field>(entries: &[F]) -> Matrix<F> {
    let mut g = Matrix::zeros(entries.len(), entries.len());
    for (i, e) in entries.iter().enumerate() {
        g[(i, i)] = e.clone();
    }
    g
}
