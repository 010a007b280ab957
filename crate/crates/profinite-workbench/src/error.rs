use thiserror::Error;

/// Errors shared by every module of the workbench.
///
/// Each variant corresponds to one failure contract; the CLI maps them onto
/// the exit-code set {1: usage, 2: validation/parse, 3: cap exceeded}.
#[derive(Debug, Error)]
pub enum Error {
    #[error("enumeration cap exceeded: {reached} elements reached, cap is {cap}")]
    CapExceeded { cap: usize, reached: usize },

    #[error("not a permutation: {0}")]
    BadPerm(String),

    #[error("element is not a member of the group")]
    NotMember,

    #[error("subgroup is not normal: conjugation by element {by} moves it")]
    NotNormal { by: usize },

    #[error("not a subgroup of the ambient group")]
    NotSubgroup,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("group of order {0} is not a p-group")]
    NotPGroup(u64),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("level {level} is out of range for this tower")]
    BadLevel { level: usize },

    #[error("thread is not compatible with the tower: {0}")]
    InvalidThread(String),

    #[error("window {window} exceeds the number of levels {levels}")]
    WindowTooLarge { window: usize, levels: usize },

    #[error("torsion exponent must be at least 2, got {0}")]
    BadN(u64),

    #[error("element is r-type (lies in H); the conjugator exists only off H")]
    NotSType,

    #[error("block sizes must be strictly increasing")]
    NotIncreasing,

    #[error("no block beyond level {n} is larger than |J^{n}|; the construction needs one")]
    NoValidK { n: usize },

    #[error("conjugating matrix is singular")]
    SingularB,

    #[error("generator {index} is singular")]
    SingularGenerator { index: usize },

    #[error("matrix dimensions differ: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("internal consistency failure (engine bug): {0}")]
    EngineInconsistency(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("file format error: {0}")]
    FileFormat(String),

    #[error("tower validation failed:\n{0}")]
    InvalidTower(String),
}

pub type Result<T> = std::result::Result<T, Error>;
