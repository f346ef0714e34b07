//! Atom invariant records, the catalog of atoms of points and curves, and
//! nonnegative integer feasibility for decomposition obstructions.

mod catalog;
mod feasibility;
mod obstruction;

pub use catalog::{catalog_low_dim, AtomCatalog, CatalogEntry};
pub use feasibility::{feasibility, Certificate, FeasibilityResult, Verdict};
pub use obstruction::{
    obstruction_report, AtomOutcome, AtomUnderTest, ObstructionEntry, ObstructionReport,
};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_algebra::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AtomError {
    #[error("basis is empty")]
    EmptyBasis,
    #[error("vector {index} has length {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("basis vector {0} has no positive component; the search is unbounded")]
    UnboundedDirection(usize),
    #[error("basis vector {0} has a negative component; only nonnegative bases are supported")]
    NegativeComponent(usize),
    #[error("forced index {index} out of range for a basis of {len}")]
    ForcedIndex { index: usize, len: usize },
    #[error("search exceeded {0} nodes")]
    SearchLimit(u64),
}

/// Invariants of one atom: Hodge polynomial, ρ, ρ^G, whether the group acts
/// trivially, and an optional label for the Mumford-Tate class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomRecord {
    pub hodge_poly: LaurentPoly,
    pub rho: u64,
    pub rho_g: u64,
    pub g_action_trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mt_label: Option<String>,
}

impl AtomRecord {
    pub fn trivial_point() -> Self {
        Self {
            hodge_poly: LaurentPoly::constant(1),
            rho: 1,
            rho_g: 1,
            g_action_trivial: true,
            mt_label: None,
        }
    }

    /// `p` points permuted cyclically.
    pub fn free_orbit_point(p: u32) -> Self {
        Self {
            hodge_poly: LaurentPoly::constant(p),
            rho: u64::from(p),
            rho_g: 1,
            g_action_trivial: false,
            mt_label: None,
        }
    }

    pub fn trivial_curve(genus: u32, label: Option<String>) -> Self {
        Self {
            hodge_poly: LaurentPoly::curve_symbol(genus),
            rho: 2,
            rho_g: 2,
            g_action_trivial: true,
            mt_label: label,
        }
    }

    pub fn nontrivial_curve(genus: u32, label: Option<String>) -> Self {
        Self {
            g_action_trivial: false,
            ..Self::trivial_curve(genus, label)
        }
    }

    /// `p` copies of a genus-`g` curve permuted cyclically.
    pub fn free_orbit_curve(p: u32, genus: u32) -> Self {
        Self {
            hodge_poly: LaurentPoly::curve_symbol(genus).scale(&BigInt::from(p)),
            rho: 2 * u64::from(p),
            rho_g: 2,
            g_action_trivial: false,
            mt_label: None,
        }
    }

    /// `(ρ, ρ^G)`
    pub fn rho_vector(&self) -> Vec<i64> {
        vec![self.rho as i64, self.rho_g as i64]
    }

    /// Problems with `ρ^G ≤ ρ ≤ Σ coefficients` and coefficient signs.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.hodge_poly.terms().any(|(_, c)| c.is_negative()) {
            out.push("negative Hodge coefficient".to_string());
        }
        if self.rho_g > self.rho {
            out.push(format!("rho_g {} exceeds rho {}", self.rho_g, self.rho));
        }
        let total = self
            .hodge_poly
            .terms()
            .fold(BigInt::zero(), |acc, (_, c)| acc + c);
        if BigInt::from(self.rho) > total {
            out.push(format!("rho {} exceeds Hodge total {total}", self.rho));
        }
        out
    }
}
