use thiserror::Error;

use crate::set::ElementSet;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "ground-set size {0} exceeds the supported maximum of {}",
        crate::set::MAX_GROUND_SET
    )]
    GroundSetTooLarge(u32),
    #[error("uniformity k={k} must satisfy 1 <= k <= n (n={n})")]
    InvalidUniformity { n: u32, k: u32 },
    #[error("element {element} lies outside the ground set [1, {n}]")]
    ElementOutOfRange { element: u32, n: u32 },
    #[error("elements must be listed in strictly increasing order")]
    NotStrictlyIncreasing,
    #[error("set has {got} elements, expected {expected}")]
    WrongCardinality { expected: u32, got: u32 },
    #[error("sets have mismatched cardinalities ({0} vs {1})")]
    MismatchedCardinality(u32, u32),
    #[error("shift pair must satisfy 1 <= i < j <= n, got i={i}, j={j}, n={n}")]
    InvalidShiftPair { i: u32, j: u32, n: u32 },
    #[error("operation requires a nonempty family")]
    EmptyFamily,
    #[error("member {0} has no type index")]
    UntypedMember(ElementSet),
    #[error("set {set} does not have type {requested}")]
    WrongType { set: ElementSet, requested: u32 },
    #[error("parameters n={n}, k={k} violate the constraint {constraint}")]
    ParameterConstraint {
        n: u32,
        k: u32,
        constraint: &'static str,
    },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("scale cap exceeded: {0}")]
    ScaleCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
