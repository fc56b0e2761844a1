//! Exact invariants of symplectic torus actions.

pub mod linalg;
pub mod polytope;
pub mod torus;
