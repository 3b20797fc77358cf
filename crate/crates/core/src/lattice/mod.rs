//! Integer matrices and sublattices of `Z^n`.

mod matrix;
mod sublattice;

pub use matrix::{hnf, snf, solve_integer, IntMatrix};
pub use sublattice::{index, kernel, kernel_mod, Index, Sublattice};
