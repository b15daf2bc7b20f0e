//! Column-by-column dynamic program over endpoint tuples of an ABP.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{check_inputs, EvalError};
use crate::abp::{Edge, NcAbp};
use crate::algebra::{det_top_square, Field};
use crate::tableau::Tableau;

/// Sizes observed during an [`eval_abp`] run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AbpStats {
    /// Largest number of live endpoint tuples after any column.
    pub max_states: usize,
    /// Total transitions explored.
    pub transitions: u64,
}

/// Mixed-radix codes over a fixed radix.
#[derive(Clone, Copy)]
pub(crate) struct Radix {
    base: u128,
}

impl Radix {
    pub(crate) fn new(base: usize, digits: usize) -> Result<Self, EvalError> {
        let base = base.max(1) as u128;
        let mut cap: u128 = 1;
        for _ in 0..digits {
            cap = cap.checked_mul(base).ok_or_else(|| {
                EvalError::TooLarge(format!("{digits} coordinates of radix {base}"))
            })?;
        }
        Ok(Radix { base })
    }

    pub(crate) fn get(self, code: u128, pos: usize) -> usize {
        ((code / self.base.pow(pos as u32)) % self.base) as usize
    }

    pub(crate) fn set(self, code: u128, pos: usize, value: usize) -> u128 {
        let w = self.base.pow(pos as u32);
        let old = (code / w) % self.base;
        code - old * w + value as u128 * w
    }
}

/// Enumerates one out-edge per coordinate; calls `f` with the chosen edges.
pub(crate) fn for_each_choice<'a, F: Field>(
    options: &[&'a [Edge<F>]],
    chosen: &mut Vec<&'a Edge<F>>,
    f: &mut impl FnMut(&[&'a Edge<F>]),
) {
    if chosen.len() == options.len() {
        f(chosen);
        return;
    }
    for e in options[chosen.len()] {
        chosen.push(e);
        for_each_choice(options, chosen, f);
        chosen.pop();
    }
}

pub(crate) fn label_det<F: Field>(edges: &[&Edge<F>]) -> F {
    let cols: Vec<&[F]> = edges.iter().map(|e| e.label.coeffs.as_slice()).collect();
    det_top_square(&cols)
}

/// Evaluates at the tensor computed by `a`, scanning columns left to right.
pub fn eval_abp<F: Field>(t: &Tableau, a: &NcAbp<F>) -> Result<F, EvalError> {
    eval_abp_stats(t, a).map(|(v, _)| v)
}

pub fn eval_abp_stats<F: Field>(t: &Tableau, a: &NcAbp<F>) -> Result<(F, AbpStats), EvalError> {
    check_inputs(t, a.degree() as usize, a.nvars())?;
    let mut stats = AbpStats::default();
    if t.has_column_repeat() {
        return Ok((F::zero(), stats));
    }
    let n = t.n();
    let radix = Radix::new(a.width(), n)?;
    let mut layer = vec![0usize; n + 1];
    let mut states: HashMap<u128, F> = HashMap::from([(0u128, F::one())]);
    stats.max_states = 1;
    for col in t.columns() {
        let blocks: Vec<usize> = col.iter().map(|&v| v as usize - 1).collect();
        let layers: Vec<usize> = col.iter().map(|&v| layer[v as usize]).collect();
        let entries: Vec<(u128, F)> = states.into_iter().collect();
        let (next, explored) = entries
            .par_iter()
            .fold(
                || (HashMap::<u128, F>::new(), 0u64),
                |(mut acc, mut explored), (code, value)| {
                    let options: Vec<&[Edge<F>]> = blocks
                        .iter()
                        .zip(&layers)
                        .map(|(&b, &k)| a.out_edges(k, radix.get(*code, b)))
                        .collect();
                    for_each_choice(
                        &options,
                        &mut Vec::with_capacity(blocks.len()),
                        &mut |edges| {
                            explored += 1;
                            let det = label_det(edges);
                            if det.is_zero() {
                                return;
                            }
                            let mut to = *code;
                            for (&b, e) in blocks.iter().zip(edges) {
                                to = radix.set(to, b, e.to);
                            }
                            let contribution = det * value;
                            let slot = acc.entry(to).or_insert_with(F::zero);
                            *slot += &contribution;
                        },
                    );
                    (acc, explored)
                },
            )
            .reduce(
                || (HashMap::new(), 0),
                |(mut a, ea), (b, eb)| {
                    for (k, v) in b {
                        *a.entry(k).or_insert_with(F::zero) += &v;
                    }
                    (a, ea + eb)
                },
            );
        states = next;
        states.retain(|_, v| !v.is_zero());
        stats.transitions += explored;
        stats.max_states = stats.max_states.max(states.len());
        for &v in &col {
            layer[v as usize] += 1;
        }
    }
    Ok((states.remove(&0).unwrap_or_else(F::zero), stats))
}
