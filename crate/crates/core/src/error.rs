use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of blocks must be at least 1")]
    ZeroBlocks,
    #[error("rank parameters must satisfy m, n >= 1 (got m={m}, n={n})")]
    DegenerateRank { m: usize, n: usize },
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: &'static str, found: &'static str },
    #[error("shape mismatch: expected ({m}|{n}), found ({found_m}|{found_n})")]
    ShapeMismatch { m: usize, n: usize, found_m: usize, found_n: usize },
    #[error("label is not dominant: {0}")]
    NonDominant(String),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("empty window [{lo}, {hi}]")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("window of width {width} exceeds the configured bound {bound}")]
    WindowTooLarge { width: usize, bound: usize },
    #[error("split point {q} leaves no entries at or above it in [{lo}, {hi}]")]
    DegenerateSplit { lo: i64, hi: i64, q: i64 },
    #[error("polynomial is not supersymmetric")]
    NotSupersymmetric,
    #[error("power {k} exceeds min(m, n) = {bound}")]
    PowerTooLarge { k: usize, bound: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
