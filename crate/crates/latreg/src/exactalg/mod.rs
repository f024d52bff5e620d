//! Exact linear algebra over the integers and rationals: matrices with
//! big-integer entries, Hermite and Smith normal forms, and invertible
//! affine maps. Everything here is exact; no floating point anywhere.

pub mod affine;
pub mod matrix;
pub mod normal_form;

pub use affine::{solve_affine_map, AffineMap};
pub use matrix::{IntMatrix, RatMatrix};
pub use normal_form::{hnf, invariant_factors, snf, sublattice_index};
