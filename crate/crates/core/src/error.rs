use crate::filtration::MultiIndex;
use thiserror::Error;

/// Errors surfaced by fallible constructors and operations.
///
/// Binary operations on values that were already validated (same ring,
/// canonical form) treat incompatibilities as caller bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial has {got} exponents but the ring has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ring variable names must be nonempty and distinct")]
    BadRingNames,

    #[error("saturation by the zero ideal is undefined")]
    SaturateByZero,

    #[error("the zero ideal has no Newton polyhedron")]
    ZeroIdealClosure,

    #[error("subquotient denominator is not contained in the numerator")]
    DenominatorNotContained,

    #[error("multi-index has {got} entries, expected {expected}")]
    IndexDimension { expected: usize, got: usize },

    #[error("ideal family member {index} must be nonzero and proper")]
    BadFamilyMember { index: usize },

    #[error("filtration requires {kind} data")]
    EmptyFiltrationData { kind: &'static str },

    #[error("filtration is {got}-dimensional, family is {expected}-dimensional")]
    FiltrationDimension { expected: usize, got: usize },

    #[error("every axis of a product filtration must be one-dimensional")]
    ProductAxisDimension,

    #[error("grid bound entries must be at least 1")]
    GridBoundTooSmall,

    #[error("chain window must be at least 1")]
    BadChainWindow,

    #[error("base module ideal must be proper or zero")]
    BaseModuleNotProper,

    #[error("ring has {got} variables; associated-prime scans support at most {max}")]
    TooManyVariables { got: usize, max: usize },

    #[error("filtration axiom (ii) fails at index {at}: J^n is not contained in I_n")]
    AxiomTwoViolated { at: MultiIndex },
}

pub type Result<T> = std::result::Result<T, Error>;
