use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid characteristic {0}: characteristic p > 2 must be an odd prime")]
    InvalidCharacteristic(u64),

    #[error("invalid extension degree {0}: must be at least 1")]
    InvalidDegree(usize),

    #[error("field of order {p}^{n} is too large for this library")]
    FieldTooLarge { p: u32, n: usize },

    #[error("invalid modulus polynomial: {0}")]
    InvalidModulus(String),

    #[error("operands belong to different contexts")]
    ContextMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not a unit")]
    NotAUnit,

    #[error("element is not unitary")]
    NotUnitary,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {what} = {value} outside {range}")]
    IndexOutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumeration bound {bound} exceeded after {partial} elements")]
    BoundExceeded { bound: u128, partial: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) fn check_index(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::IndexOutOfRange {
            what,
            value: value as i64,
            range: format!("[{lo}, {hi}]"),
        });
    }
    Ok(())
}
