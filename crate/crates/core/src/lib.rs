//! Exact computations for equivariant birational geometry of `Z/p`-actions:
//! symbol modules B_n(G), integer invariants of fixed loci, a blowup
//! rewriting calculus that tracks them, and atom feasibility checks.

pub mod atom_ledger;
pub mod blowup;
pub mod cli;
pub mod exact_algebra;
pub mod fixed_locus;
pub mod invariants;
pub mod json_int;
pub mod symbol_groups;
