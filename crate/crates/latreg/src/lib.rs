//! Exact-arithmetic toolkit for convex lattice polytopes: normalized
//! volume, lattice-affine symmetry groups, congruence testing, a catalog
//! of the lattice-regular families in every dimension, and exhaustive
//! checks over that catalog.
//!
//! All computation is exact, over `BigInt` / `BigRational`. There is no
//! floating point in this crate, so results are reproducible bit for bit.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod exactalg;
pub mod polytope;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use polytope::Polytope;
