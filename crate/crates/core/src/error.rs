use thiserror::Error;

/// Errors produced by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {x}")]
    Pole { x: f64 },

    #[error("gamma ratio is infinite: numerator {num} is a pole, denominator {den} is not")]
    Infinite { num: f64, den: f64 },

    #[error("gamma ratio is ambiguous: both {num} and {den} are poles")]
    Ambiguous { num: f64, den: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular term: exponent {exponent} would be negative with a nonzero coefficient")]
    SingularTerm { exponent: f64 },

    #[error("series grid mismatch: {0}")]
    Grid(String),

    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("tolerance not met: {message} (suggested terms: {suggested_terms:?})")]
    Tolerance {
        message: String,
        suggested_terms: Option<usize>,
    },

    #[error("no root found in [{lo}, {hi}]")]
    NoRoot { lo: f64, hi: f64 },

    #[error("integration blew up near x = {x}")]
    Stiffness { x: f64 },

    #[error("degenerate recurrence denominator at n = {n}")]
    DegenerateDenominator { n: usize },

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("series did not converge after {terms} terms (last partial sums {previous}, {last})")]
    NoConvergence { terms: usize, previous: f64, last: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
