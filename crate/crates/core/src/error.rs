use thiserror::Error;

use crate::context::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inner form degree d must be at least 1")]
    InvalidDegree,
    #[error("duplicate cuspidal family `{0}`")]
    DuplicateFamily(String),
    #[error("family `{name}`: {reason}")]
    InvalidFamily { name: String, reason: String },
    #[error("unknown cuspidal family `{0}`")]
    UnknownFamily(String),
    #[error("family `{0}` has no D-side attachment (no torsion number s)")]
    NoDAttachment(String),
    #[error("segment length must be at least 1")]
    EmptySegment,
    #[error("side mismatch: expected {expected}, found {found}")]
    SideMismatch { expected: Side, found: Side },
    #[error("basis mismatch: operation requires the {0} basis")]
    BasisMismatch(&'static str),
    #[error("segments are not linked")]
    NotLinked,
    #[error("composition sums to {found} but the degree is {expected}")]
    DegreeMismatch { expected: u64, found: u64 },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("invalid Levi composition: {0}")]
    InvalidComposition(String),
    #[error("block sizes are not all divisible by {0}")]
    NotDivisible(u64),
    #[error("decomposition numbers are not available for {0}")]
    NotCovered(String),
    #[error("multisegments are incomparable")]
    Incomparable,
    #[error("segment {0} does not transfer")]
    DoesNotTransfer(String),
    #[error("inconsistent transfer datum: {0}")]
    InconsistentTransferDatum(String),
    #[error("no inner form at degree {degree} (d = {d})")]
    NoInnerForm { degree: u64, d: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
