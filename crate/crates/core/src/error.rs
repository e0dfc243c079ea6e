use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: nonzero remainder")]
    NonExactDivision,

    #[error("evaluation at zero of a polynomial with negative exponents")]
    ZeroDenominator,

    #[error("evaluation point is not a unit of the Gaussian integers")]
    NonUnitPoint,

    #[error("the zero polynomial has no canonical unit form")]
    ZeroPolynomial,

    #[error("braid generator exponent must be nonzero")]
    ZeroExponent,

    #[error("braid generator index {0} is not 1 or 2")]
    InvalidGenerator(i64),

    #[error("cannot parse braid word: {0}")]
    Parse(String),

    #[error("matrix determinant is not a unit")]
    NotInvertible,

    #[error("polynomial has odd exponents, cannot halve")]
    OddExponent,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    InternalMismatch(String),

    #[error("root finder did not converge after {iterations} sweeps")]
    NoConvergence { iterations: usize },
}
