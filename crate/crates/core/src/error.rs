use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed permutation {0:?}: expected a parenthesized digit string like \"(2314)\"")]
    MalformedPermutation(String),
    #[error("permutation {0:?} is not a bijection of 1..={1}")]
    NotABijection(String, usize),
    #[error("malformed orbit label {0:?}: expected (alpha,l) or a one-line permutation")]
    MalformedLabel(String),
    #[error("coset coordinate ({0},{1}) out of range: alpha in 1..=8, l in 0..=2")]
    CosetOutOfRange(u8, u8),
    #[error("invalid transposition ({0}{1}): need 1 <= i < j <= 4")]
    InvalidTransposition(u8, u8),
    #[error("orbit set is empty")]
    EmptyOrbitSet,
    #[error("orbit {0} appears more than once in the orbit set")]
    DuplicateOrbit(String),
    #[error("classical bound supports one or two orbits, got {0}")]
    UnsupportedOrbitCount(usize),
    #[error("state vector is not normalized: |w| = {0}")]
    NotNormalized(f64),
    #[error(
        "representation matrices fail the homomorphism check in both word orders (defect {0:e})"
    )]
    NotAHomomorphism(f64),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
