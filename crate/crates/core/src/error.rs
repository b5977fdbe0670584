use thiserror::Error;

/// Which of the three auxiliary primes could not be found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EllSlot {
    W1,
    W2,
    Phi12,
}

impl std::fmt::Display for EllSlot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EllSlot::W1 => "w1",
            EllSlot::W2 => "w2",
            EllSlot::Phi12 => "Phi12",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in Z[sqrt2]")]
    DivisionByZero,
    #[error("value {0} is not a rational integer")]
    NotRationalInteger(String),
    #[error("table row {row} does not evaluate to an integer: {value}")]
    RowNotInteger { row: usize, value: String },
    #[error("table row {row} has negative multiplicity {value}")]
    NegativeMultiplicity { row: usize, value: String },
    #[error("no prime other than 3 divides {0}")]
    NoSuchPrime(EllSlot),
    #[error("parameter m must be at least 1, got {0}")]
    InvalidParameter(u32),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
