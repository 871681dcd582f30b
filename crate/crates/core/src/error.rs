use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not invertible")]
    NotInvertible,
    #[error("not divisible")]
    NotDivisible,
    #[error("characteristic not prime: {0}")]
    NotPrime(u64),
    #[error("characteristic {0} outside [2, 2^31)")]
    CharacteristicOutOfRange(u64),
    #[error("ring needs at least one variable")]
    NoVariables,
    #[error("elimination block {block} invalid for {num_vars} variables")]
    BadEliminationBlock { block: usize, num_vars: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LookupError {
    #[error("unknown payload id {0}")]
    UnknownId(usize),
    #[error("cannot calibrate a divmap from an empty monomial set")]
    EmptyCalibrationSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueueError {
    #[error("replace_top on an empty queue")]
    Empty,
    #[error("replacement key exceeds the current maximum")]
    KeyAboveMax,
    #[error("hashed and dedup queue options are mutually exclusive")]
    HashedWithDedup,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseDivisorError {
    #[error("signature of the base divisor does not divide the new signature")]
    SignatureNotDivisible,
}

/// Errors from reading an ideal file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: characteristic not prime")]
    NotPrime { line: usize },
    #[error("line {line}: variable x{index} outside x1..x{num_vars}")]
    VariableOutOfRange {
        line: usize,
        index: usize,
        num_vars: usize,
    },
    #[error("missing header line {0}")]
    MissingHeader(usize),
}
