//! Crate-wide error type.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    DivisionByZeroPoly,
    /// gcd of two zero polynomials is undefined.
    GcdOfZeros,
    /// Rational function with zero denominator.
    ZeroDenominator,
    /// Square-root test applied to the zero polynomial.
    SqrtOfZero,
    /// Operation applied to the zero polynomial where a degree is required.
    ZeroPolynomial,
    /// Inner polynomial is constant where a nonconstant one is required.
    ConstantInner,
    /// Inner polynomial must have degree at least 2.
    InnerDegreeTooSmall { actual: usize },
    /// Polynomial degree too small for classification or decomposition.
    DegreeTooSmall { actual: usize },
    /// `d` is not a proper divisor of the polynomial degree.
    NotAProperDivisor { divisor: usize, degree: usize },
    /// Recurrence constructed with A0 = 0.
    ZeroRecurrenceCoefficient,
    /// Operation requires a simple recurrence (nonzero discriminant).
    NonSimpleSpec,
    /// Spec failed validation (simple, non-degenerate, minimal all required).
    InvalidSpec,
    /// Ledger evaluation requires deg h >= 2.
    DegHTooSmall { got: u64 },
    /// Unknown identity name.
    UnknownIdentity(String),
    /// Text parse failure at a byte offset.
    Parse { pos: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZeroPoly => write!(f, "division by the zero polynomial"),
            Error::GcdOfZeros => write!(f, "gcd of two zero polynomials is undefined"),
            Error::ZeroDenominator => write!(f, "rational function with zero denominator"),
            Error::SqrtOfZero => write!(f, "square-root test on the zero polynomial"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::ConstantInner => write!(f, "inner polynomial must be nonconstant"),
            Error::InnerDegreeTooSmall { actual } => {
                write!(f, "inner polynomial must have degree >= 2, got {actual}")
            }
            Error::DegreeTooSmall { actual } => {
                write!(f, "polynomial degree must exceed 1, got {actual}")
            }
            Error::NotAProperDivisor { divisor, degree } => {
                write!(f, "{divisor} is not a proper divisor of {degree}")
            }
            Error::ZeroRecurrenceCoefficient => write!(f, "recurrence requires A0 != 0"),
            Error::NonSimpleSpec => write!(f, "recurrence is not simple (zero discriminant)"),
            Error::InvalidSpec => {
                write!(f, "spec must be simple, non-degenerate and minimal")
            }
            Error::DegHTooSmall { got } => {
                write!(f, "ledger evaluation requires deg h >= 2, got {got}")
            }
            Error::UnknownIdentity(name) => write!(f, "unknown identity: {name}"),
            Error::Parse { pos, msg } => write!(f, "parse error at offset {pos}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
