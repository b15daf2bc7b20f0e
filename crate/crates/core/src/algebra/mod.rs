//! Exact scalars, homogeneous polynomials and the polynomial/tensor dictionary.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod tensor;
pub mod waring;
pub mod zeta6;

pub use field::{factorial, format_rational, parse_rational, Field, Q};
pub use matrix::{det_top_square, Matrix};
pub use poly::{exponents, multisets, word_exponent, DensePoly, Exponent, LinearForm};
pub use scalar::{common_kind, FieldKind, Scalar};
pub use tensor::{contract, exact_rank, flattening, tensor_coeff};
pub use waring::{waring_expand, WaringPoint};
pub use zeta6::Zeta6;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different fields cannot be mixed")]
    MixedFields,
    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("monomial of degree {found} in a polynomial of degree {expected}")]
    NotHomogeneous { expected: u32, found: u32 },
    #[error("word of length {k} is longer than the degree {d}")]
    WordTooLong { k: usize, d: u32 },
    #[error("word has length {found}, expected {expected}")]
    WordLength { expected: usize, found: usize },
    #[error("variable index {index} out of range for {m} variables")]
    VariableIndex { index: usize, m: usize },
    #[error("linear form has {found} coordinates, expected {expected}")]
    FormLength { expected: usize, found: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
}
