//! Exact computation of the reduced equivariant K-groups of the
//! representation spheres `S^λ` and `S^{1⊕λ}` for a finite group `G` with a
//! surjection `λ: G → {±1}`.
//!
//! Everything reduces to finite character theory: the groups are built as
//! explicit multiplication tables, character tables are computed exactly
//! over cyclotomic fields, and the K-groups are presented as lattices in the
//! representation rings `R(G)` and `R(H)`, `H = ker λ`.

pub mod character;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod ktheory;
pub mod lattice;
pub mod report;
pub mod spec;
pub mod verification;
mod modp;

pub use error::{Error, Result};
