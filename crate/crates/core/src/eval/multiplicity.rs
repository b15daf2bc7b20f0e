//! Multiplicities as ranks of evaluation matrices.

use rayon::prelude::*;

use super::symbolic::{expand_tableau, span_dimension};
use super::{eval_naive, EvalError};
use crate::algebra::{Matrix, Q};
use crate::random;
use crate::tableau::{enumerate_ssyt, Partition, Tableau, DEFAULT_CAP};

/// Range of the integer coordinates used for sample points.
const SAMPLE_RANGE: i64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub value: usize,
    pub ssyt_count: usize,
    pub samples: usize,
    pub seed: u64,
}

fn semistandard(
    shape: &Partition,
    n: usize,
    d: usize,
    m: usize,
) -> Result<Vec<Tableau>, EvalError> {
    if shape.size() != n * d {
        return Err(EvalError::ShapeSize {
            shape: shape.to_string(),
            boxes: shape.size(),
            expected: n * d,
        });
    }
    if shape.len() > m {
        return Err(EvalError::TooManyRows {
            rows: shape.len(),
            m,
        });
    }
    Ok(enumerate_ssyt(shape, n, d, DEFAULT_CAP)?)
}

/// Rank of the matrix of evaluations of every semistandard tableau polynomial of
/// `shape` at `samples` pseudo-random points. A lower bound on the multiplicity,
/// exact once the sample count is large enough.
pub fn multiplicity(
    shape: &Partition,
    n: usize,
    d: usize,
    m: usize,
    samples: usize,
    seed: u64,
) -> Result<MultiplicityReport, EvalError> {
    let tableaux = semistandard(shape, n, d, m)?;
    let mut rng = random::rng(seed);
    let points: Vec<_> = (0..samples)
        .map(|_| random::waring_point(&mut rng, d as u32, m, m + 1, -SAMPLE_RANGE, SAMPLE_RANGE))
        .collect();
    let rows = tableaux
        .par_iter()
        .map(|t| {
            points
                .iter()
                .map(|p| eval_naive(t, p))
                .collect::<Result<Vec<Q>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let value = if rows.is_empty() || samples == 0 {
        0
    } else {
        Matrix::from_rows(rows).rank()
    };
    Ok(MultiplicityReport {
        value,
        ssyt_count: tableaux.len(),
        samples,
        seed,
    })
}

/// The exact span dimension, by full symbolic expansion. Only feasible for tiny parameters.
pub fn multiplicity_symbolic(
    shape: &Partition,
    n: usize,
    d: usize,
    m: usize,
) -> Result<usize, EvalError> {
    let tableaux = semistandard(shape, n, d, m)?;
    let polys = tableaux
        .iter()
        .map(|t| expand_tableau(t, m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(span_dimension(&polys))
}
