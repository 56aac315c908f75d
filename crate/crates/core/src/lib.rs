//! Symmetry classes of tensors for semidirect products of finite abelian groups.
//!
//! The crate builds groups A ⋊_φ H (and wreath products), computes their irreducible characters
//! exactly in cyclotomic fields, and decides whether a symmetry class V_χ(G) has an orthogonal
//! basis of decomposable symmetrized tensors (an o*-basis), both from the structural criteria
//! and by exhaustive search.

// matrix and table code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod groups;
pub mod job;
pub mod ostar;
mod par;
pub mod symclass;

pub use error::{Error, Result};
