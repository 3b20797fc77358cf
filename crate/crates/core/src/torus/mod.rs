//! The twisted group algebra `F∗A` of `A = Z^n`: pairing data, elements,
//! text syntax, center and simplicity.

mod center;
mod element;
mod parse;
mod spec;

pub use center::{
    center_lattice, finite_index, finite_index_center_agreement, is_central, is_simple,
};
pub use element::{Exponent, TorusElement};
pub use parse::{
    format_element, format_exponent, parse_element, parse_element_with_class, parse_scalar,
};
pub use spec::PairingSpec;
