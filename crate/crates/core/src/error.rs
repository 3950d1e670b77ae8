use std::fmt;

use thiserror::Error;

use crate::scalar::{format_scalar, Scalar};

/// Which Hopf-triple pairing failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    Alpha,
    Beta,
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pairing::Alpha => write!(f, "⟨ι,α⟩"),
            Pairing::Beta => write!(f, "⟨ι,β⟩"),
        }
    }
}

/// A violated supercharacter-theory axiom, reported by [`BaseTheory::from_table`].
///
/// [`BaseTheory::from_table`]: crate::base_theory::BaseTheory::from_table
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("identity class invalid: {0}")]
    IdentityClassInvalid(String),
    #[error("supercharacters {0} and {1} are not orthogonal (pairing {2})")]
    NonOrthogonalBasis(usize, usize, String),
    #[error("supercharacter {0} has non-positive norm")]
    ZeroCharacter(usize),
    #[error("the trivial character is not one of the basis characters")]
    TrivialCharacterMissing,
    #[error("the regular character is not in the span of the basis characters")]
    RegularCharacterNotInSpan,
    #[error("pointwise product of characters {0} and {1} leaves the span")]
    NotClosedUnderProduct(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("the empty composition is not allowed here")]
    EmptyComposition,
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid set composition: {0}")]
    InvalidSetComposition(String),
    #[error("ground sets differ: {{1..{0}}} vs {{1..{1}}}")]
    GroundSetMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{what}: n = {n} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("letter {letter} out of range for a {dim}-dimensional theory")]
    LetterOutOfRange { letter: usize, dim: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("linear system is singular")]
    SingularSystem,
    #[error("element is not a member of the given basis")]
    NotInBasis,
    #[error("{which} = {} ≠ 1", format_scalar(.value))]
    PairingNotOne { which: Pairing, value: Scalar },
    #[error("first set composition does not refine the second")]
    NotARefinement,
    #[error("element has letters outside the admissible support")]
    IncompatibleSupport,
    #[error("ι is not an element of the working basis")]
    IotaNotBasisElement,
    #[error("characters belong to different Hopf contexts")]
    ContextMismatch,
    #[error("not an algebra morphism (fails at n = {n}, j = {j})")]
    NotAMorphism { n: usize, j: usize },
    #[error("inconsistent NSym basis request: {0}")]
    InconsistentTag(String),
    #[error("operation requires a two-dimensional base theory, found dimension {0}")]
    NotTwoDimensional(usize),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
