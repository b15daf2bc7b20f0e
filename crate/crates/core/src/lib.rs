//! Evaluation of highest weight vectors in plethysms through algebraic branching programs.

pub mod abp;
pub mod algebra;
pub mod eval;
pub mod graph;
pub mod io;
pub mod random;
pub mod reductions;
pub mod selftest;
pub mod tableau;
pub mod treedec;

pub use algebra::{
    AlgebraError, DensePoly, Field, FieldKind, LinearForm, Scalar, WaringPoint, Zeta6, Q,
};
pub use eval::EvalError;
pub use tableau::Tableau;

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Abp(#[from] abp::AbpError),
    #[error(transparent)]
    Tableau(#[from] tableau::TableauError),
    #[error(transparent)]
    TreeDec(#[from] treedec::TreeDecError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Reduction(#[from] reductions::ReductionError),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Format(#[from] io::FormatError),
}
