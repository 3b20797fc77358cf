use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ambient rank mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sublattice is not contained in the target lattice")]
    NotContained,
    #[error("sublattice is not saturated")]
    NotSaturated,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different algebras")]
    SpecMismatch,
    #[error("rows are linearly dependent")]
    DependentRows,
    #[error("sublattice has infinite index")]
    InfiniteIndex,
    #[error("invalid pairing data at {field}: {message}")]
    InvalidSpec { field: String, message: String },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("element `{0}` is not invertible")]
    NotInvertible(String),
    #[error("sublattice is not isotropic (the subalgebra is not commutative)")]
    NotIsotropic,
    #[error("sublattice does not have corank one")]
    NotCorankOne,
    #[error("element is zero")]
    ZeroElement,
    #[error("element is not unitary: an extreme coefficient is not a unit monomial")]
    NotUnitary,
    #[error("generator has width zero; the quotient module is zero")]
    ZeroWidth,
    #[error("growth data is degenerate: dimensions are constant")]
    DegenerateData,
    #[error("the algebra has a nontrivial center")]
    CenterNotTrivial,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("no corank-one commutative subgroup found")]
    NoCorankOneSubgroup,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
