//! Exact integer linear algebra: matrices, Smith form, abelian quotients,
//! Laurent polynomials.

mod abelian;
mod laurent;
mod matrix;
mod snf;

pub use abelian::{present_quotient, AbGroupStructure, GroupElementClass};
pub use laurent::LaurentPoly;
pub use matrix::IntMatrix;
pub use snf::{smith_diagonal, smith_normal_form, SmithForm};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}
