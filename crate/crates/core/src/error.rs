use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("index {index} out of range 1..={len}")]
    Index { index: usize, len: usize },
    #[error("potential realization contains no sites with V = 1")]
    EmptyDecomposition,
    #[error("comparison operator is empty: every gap has length zero")]
    EmptyOperator,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("upper comparison needs at least two ones in the potential, found {0}")]
    InsufficientBlocks(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!("p must lie in (0, 1), got {p}")))
    }
}
