//! Evaluation of tableau polynomials at symmetric tensors.

mod abp_dp;
mod hwv;
mod multiplicity;
mod naive;
pub mod symbolic;
mod treewidth;

pub use abp_dp::{eval_abp, eval_abp_stats, AbpStats};
pub use hwv::{gl_transform_point, hwv_unipotent_check, hwv_weight_check, weight_factor};
pub use multiplicity::{multiplicity, multiplicity_symbolic, MultiplicityReport};
pub use naive::eval_naive;
pub use treewidth::{eval_treewidth, eval_treewidth_minfill, eval_treewidth_stats, TreewidthStats};

use thiserror::Error;

use crate::abp::AbpError;
use crate::algebra::AlgebraError;
use crate::tableau::{Tableau, TableauError};
use crate::treedec::TreeDecError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("shape exceeds variable count: a column of length {column_len} needs at least that many variables, got {m}")]
    ShapeExceedsVariables { column_len: usize, m: usize },
    #[error("degree mismatch: tableau blocks have size {tableau}, the point has degree {point}")]
    DegreeMismatch { tableau: usize, point: usize },
    #[error("computation tree was built for a different tableau")]
    TreeMismatch,
    #[error("too many states to index: {0}")]
    TooLarge(String),
    #[error("shape {shape} has {boxes} boxes, expected n*d = {expected}")]
    ShapeSize {
        shape: String,
        boxes: usize,
        expected: usize,
    },
    #[error("shape has {rows} rows but only {m} variables")]
    TooManyRows { rows: usize, m: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    TreeDec(#[from] TreeDecError),
    #[error(transparent)]
    Abp(#[from] AbpError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Common preconditions: valid content, matching degree, columns no longer than `m`.
pub(crate) fn check_inputs(t: &Tableau, d: usize, m: usize) -> Result<(), EvalError> {
    t.validate().map_err(TableauError::Invalid)?;
    if t.d() != d {
        return Err(EvalError::DegreeMismatch {
            tableau: t.d(),
            point: d,
        });
    }
    if t.max_column_len() > m {
        return Err(EvalError::ShapeExceedsVariables {
            column_len: t.max_column_len(),
            m,
        });
    }
    Ok(())
}
