use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("queue-empty: extract from an empty solution queue")]
    QueueEmpty,
    #[error("inconsistent-set: {0}")]
    InconsistentSet(String),
    #[error("inapplicable-operation: {0}")]
    InapplicableOperation(String),
    #[error("length-mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("position-out-of-range: {position} not in 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("unsupported-class: {0} is not closed under literal removal")]
    UnsupportedClass(String),
    #[error("instance-too-large: universe {universe}, parameter {parameter} (limit 40 / 5)")]
    InstanceTooLarge { universe: usize, parameter: usize },
    #[error("parse-error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invariant-violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
