//! The coefficient field `F = Q(ζ_N)(q_1, …, q_t)` and its unit monomials.

mod cyclo;
mod scalar;
mod unit;

pub use cyclo::{cyclotomic_polynomial, Cyclo, CycloField};
pub use scalar::{Scalar, ScalarField};
pub use unit::UnitMonomial;
