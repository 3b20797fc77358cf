//! Exact computations in quantum tori `F∗A`, `A = Z^n`.
//!
//! The crate is layered bottom-up:
//!
//! * [`lattice`]: integer matrices, Hermite/Smith normal forms, sublattices.
//! * [`scalars`]: the coefficient field `Q(ζ_N)(q_1, …, q_t)`.
//! * [`torus`]: pairing data, algebra elements, center, simplicity.
//! * [`dimension`]: isotropic sublattices, Krull dimension bounds, commuting monomials.
//! * [`skewmod`]: skew-Laurent presentations and the cyclic modules `M(r)`.
//! * [`verify`]: seeded property suites shared by the CLI and the test targets.

pub mod corpus;
pub mod dimension;
pub mod error;
pub mod lattice;
pub mod rng;
pub mod scalars;
pub mod skewmod;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{IntMatrix, Sublattice};
pub use scalars::{Scalar, ScalarField, UnitMonomial};
pub use torus::{PairingSpec, TorusElement};
