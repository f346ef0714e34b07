//! The symbol modules B_n(G) for finite abelian G: characters, symbols,
//! the blowup relation, presentations and the class of a fixed locus.

mod parse;
mod presentation;
mod symbol;

pub use parse::parse_formal_sum;
pub use presentation::{
    beta, beta_sum, build_presentation, class_of, enumerate_generators, relation_b_expand,
    Presentation, DEFAULT_BUDGET,
};
pub use symbol::{generation_condition, Character, DualGroup, FormalSymbolSum, Symbol};

use thiserror::Error;

use crate::exact_algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("group orders must all be at least 2, got {0:?}")]
    BadOrders(Vec<i64>),
    #[error("character has {found} components, group has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("symbol must have at least one entry")]
    EmptySymbol,
    #[error("symbol has {found} entries, expected {expected}")]
    WrongArity { expected: usize, found: usize },
    #[error("invalid block {block:?} for a symbol of length {len}")]
    BadBlock { block: Vec<usize>, len: usize },
    #[error("symbol {0} does not generate the dual group")]
    NotGenerating(String),
    #[error("enumeration budget exceeded: more than {budget} generators")]
    BudgetExceeded { budget: usize },
    #[error("symbol {0} is not a generator of this presentation")]
    UnknownSymbol(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration does not match presentation: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
