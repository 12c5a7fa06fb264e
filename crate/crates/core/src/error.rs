use thiserror::Error;

/// Errors raised by the algebra kernel, the classifier and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands live in different fields")]
    FieldMismatch,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("{what} is divisible by the characteristic {p}")]
    DivisibleByCharacteristic { what: String, p: u64 },

    #[error("no primitive {order}-th root of unity in {field}; an extension of degree {degree} is needed")]
    MissingRootOfUnity { order: u64, field: String, degree: u32 },

    #[error("eigenvalues lie outside {field}; an extension of degree {degree} is needed")]
    NeedsExtension { field: String, degree: u32 },

    #[error("{0} has no square root in the field")]
    MissingSqrt(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("not a dihedral pair: {0}")]
    NotDihedral(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
