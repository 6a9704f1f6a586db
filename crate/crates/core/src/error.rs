use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("invalid strand count {0}")]
    InvalidStrandCount(usize),

    #[error("generator index {index} out of range for {strands} strands")]
    LetterOutOfRange { index: usize, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("cannot embed {from} strands into {to} strands")]
    InvalidTarget { from: usize, to: usize },

    #[error("subgroup size {m} out of range for {n} strands")]
    SubgroupOutOfRange { m: usize, n: usize },

    #[error("free group rank {rank} does not match {strands} strands")]
    RankMismatch { rank: usize, strands: usize },

    #[error("degenerate curve: punctures {i}..{j} of {n} must number more than 1 and fewer than {n}")]
    DegenerateCurve { i: usize, j: usize, n: usize },

    #[error("super summit set exceeded {cap} elements (reached {count})")]
    ResourceLimit { count: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
