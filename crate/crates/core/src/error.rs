use alloc::string::String;

use crate::pic::BiDegree;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A class of rank < 1 was asked for bundle numerics.
    #[error("virtual class of rank {rank} has no bundle numerics")]
    VirtualClass { rank: i64 },
    #[error("malformed class: c1^2 - 2ch2 = {defect} is odd")]
    MalformedClass { defect: i64 },
    #[error("sub-object rank {sub} must be smaller than middle rank {mid}")]
    RankViolation { sub: i64, mid: i64 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("index {0} out of range 0..=3")]
    IndexOutOfRange(usize),
    #[error("torsion support {0} is not effective")]
    NonEffectiveSupport(BiDegree),
    #[error("E2 page for c2 = {c2}: {reason}")]
    InvalidPage { c2: i64, reason: &'static str },
    #[error("case {case}: rank {rank} is below the minimum rank {min_rank}")]
    BelowMinRank { case: String, rank: i64, min_rank: i64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse multiplicity {0:?}; expected int, \"r\", \"r+int\" or \"r-int\"")]
    ParseMultiplicity(String),
    /// An identity that must hold by construction failed. Always a bug.
    #[error("internal consistency failure in {identity}: {detail}")]
    Inconsistent { identity: &'static str, detail: String },
}
