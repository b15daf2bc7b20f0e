//! Direct summation over block-to-term maps for Waring points.

use rayon::prelude::*;

use super::{check_inputs, EvalError};
use crate::algebra::{det_top_square, Field, WaringPoint};
use crate::tableau::Tableau;

/// Largest determinant table precomputed per column.
const TABLE_LIMIT: usize = 1 << 16;

/// `Σ_φ ∏_i c_{φ(i)} ∏_columns det`, where column `c` contributes the top
/// square determinant of the forms `ℓ_{φ(entry)}` read top to bottom.
pub fn eval_naive<F: Field>(t: &Tableau, p: &WaringPoint<F>) -> Result<F, EvalError> {
    check_inputs(t, p.d as usize, p.m)?;
    if t.has_column_repeat() {
        return Ok(F::zero());
    }
    let n = t.n();
    let r = p.terms.len();
    if r == 0 {
        return Ok(F::zero());
    }
    let total = (r as u64)
        .checked_pow(n as u32)
        .ok_or_else(|| EvalError::TooLarge(format!("{r}^{n} placements")))?;

    let columns: Vec<Vec<usize>> = t
        .columns()
        .into_iter()
        .map(|c| c.into_iter().map(|v| v as usize - 1).collect())
        .collect();
    let forms: Vec<&[F]> = p.terms.iter().map(|(_, l)| l.coeffs.as_slice()).collect();
    let coeffs: Vec<&F> = p.terms.iter().map(|(c, _)| c).collect();
    let tables: Vec<Option<Vec<F>>> = columns
        .iter()
        .map(|col| {
            let size = r.checked_pow(col.len() as u32)?;
            (size <= TABLE_LIMIT).then(|| {
                (0..size)
                    .map(|code| {
                        let mut rest = code;
                        let cols: Vec<&[F]> = (0..col.len())
                            .map(|_| {
                                let f = forms[rest % r];
                                rest /= r;
                                f
                            })
                            .collect();
                        det_top_square(&cols)
                    })
                    .collect()
            })
        })
        .collect();

    let value = (0..total)
        .into_par_iter()
        .fold(F::zero, |mut acc, index| {
            let mut phi = Vec::with_capacity(n);
            let mut rest = index;
            for _ in 0..n {
                phi.push((rest % r as u64) as usize);
                rest /= r as u64;
            }
            let mut term = F::one();
            for (col, table) in columns.iter().zip(&tables) {
                let det = match table {
                    Some(tab) => {
                        let code = col.iter().rev().fold(0, |code, &b| code * r + phi[b]);
                        tab[code].clone()
                    }
                    None => {
                        let cols: Vec<&[F]> = col.iter().map(|&b| forms[phi[b]]).collect();
                        det_top_square(&cols)
                    }
                };
                if det.is_zero() {
                    return acc;
                }
                term *= &det;
            }
            for &choice in &phi {
                term *= coeffs[choice];
            }
            acc += &term;
            acc
        })
        .reduce(F::zero, |a, b| a + b);
    Ok(value)
}
