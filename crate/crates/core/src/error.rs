use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("pole at s=1")]
    PoleAtOne,
    #[error("gamma has a pole at the nonpositive integer {0}")]
    PoleAtNonpositiveInteger(i64),
    #[error("accuracy not reached: {required} terms needed, max_terms is {max_terms}")]
    AccuracyNotReached { required: usize, max_terms: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("s = {re}+{im}i lies on the pole lattice of the geometric zeta function")]
    PoleAtComplexDimension { re: f64, im: f64 },
    #[error("insufficient atoms: {found} present, at least {required} required")]
    InsufficientAtoms { found: usize, required: usize },
    #[error("invalid fractal string: {0}")]
    InvalidString(String),
    #[error("the segment passes through the pole of zeta at s=1")]
    PoleOnSegment,
    #[error("c = 1 is the pole line of zeta; no verdict is defined there")]
    PoleLine,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("function support is not bounded below")]
    UnboundedTail,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
