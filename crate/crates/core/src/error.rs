use alloc::string::String;
use alloc::vec::Vec;

use crate::exactring::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at δ = {0}")]
    PoleAt(Rational),
    #[error("pole at δ = {at} in classes {}", classes.join(", "))]
    PoleAtClasses { at: Rational, classes: Vec<String> },
    #[error("{0} is not an element of K")]
    NotInK(String),
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("size mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("not a permutation of 1..{0}")]
    NotAPermutation(usize),
    #[error("not a pair partition: {0}")]
    NotADiagram(String),
    #[error("n = {n} exceeds the enumeration bound {max}")]
    EnumerationBound { n: usize, max: usize },
    #[error("tableau {0} is not the spore of any diagram")]
    NotRealizable(String),
    #[error("tableau {tableau} has more than {max} propagating entries")]
    TooManyPropagating { tableau: String, max: usize },
    #[error("malformed tableau: {0}")]
    ParseTableau(String),
    #[error("no splitting idempotent for n = {n}, ℓ = {ell}")]
    InvalidSplitParameters { n: usize, ell: usize },
    #[error("coefficients differ inside class {class}")]
    NonInvariant { class: String },
    #[error("system has rank {rank} for {unknowns} unknowns (witnesses: {})", witnesses.join(" "))]
    RankDeficient { rank: usize, unknowns: usize, witnesses: Vec<String> },
    #[error("system is inconsistent at witness {witness}")]
    Inconsistent { witness: String },
    #[error("{parts} is not a partition of {n}")]
    NotAPartition { parts: String, n: usize },
}
