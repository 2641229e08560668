use thiserror::Error;

/// Errors raised by the algebraic routines.
///
/// Mathematical precondition failures (`NotAdmissible`, `NotTorsion`, ...) are
/// distinguished from malformed input (`Parse`, `DimensionMismatch`) so that the
/// CLI can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("monodromy logarithms N{} and N{} do not commute", .0 + 1, .1 + 1)]
    NotCommuting(usize, usize),
    #[error("nilpotent operator does not preserve the filtration at index {0}")]
    FiltrationNotPreserved(i64),
    #[error("vector is not in the image of the operator")]
    NotInImage,
    #[error("class is not admissible: {0}")]
    NotAdmissible(String),
    #[error("blocks cannot be glued: cup-product obstruction is nonzero at ({}, {})", .0 + 1, .1 + 1)]
    NotGluable(usize, usize),
    #[error("shared blocks differ: {0}")]
    BlockMismatch(String),
    #[error("mixed extension is not restricted: {0}")]
    NotRestricted(String),
    #[error("not a torsion class: {0}")]
    NotTorsion(String),
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("genus {0} is too small, need g >= 3")]
    GenusTooSmall(usize),
    #[error("invalid bounding pair (g = {0}, h = {1})")]
    InvalidPair(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
