use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {exponent} on x{var} in polynomial mode")]
    NegativeExponentInPolynomialMode { var: usize, exponent: i64 },

    #[error("exponent vector has {found} entries, ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },

    #[error("support is empty")]
    EmptySupport,

    #[error("ring mismatch: {0}")]
    ModeMismatch(String),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("element is not a member of the ideal")]
    NotMember,

    #[error(
        "member has no certificate of area <= {max_area} within the degree radius \
         (radius slack {slack})"
    )]
    RadiusExhausted { max_area: usize, slack: u64 },

    #[error("bad conversion matrix: {0}")]
    BadConversionMatrix(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
