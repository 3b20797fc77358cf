//! The skew-Laurent presentation `F∗A = (F∗C)[X^{±1}, σ]` attached to an
//! isotropic corank-one `C`, and the cyclic modules `M(r)` for unitary `r`.

mod checks;
mod growth;
mod module;
mod presentation;

pub use checks::{mt1_check, theorem2_check, CheckOptions, Mt1Report, Theorem2Report, IDEAL_NOTE};
pub use growth::{default_range, GrowthReport};
pub use module::{determinant, is_irreducible_linear, is_unitary, CyclicModule};
pub use presentation::{
    from_skew, make_presentation, to_skew, SkewLaurentElement, SkewPresentation,
};
