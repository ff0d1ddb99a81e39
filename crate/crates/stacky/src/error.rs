use thiserror::Error;

use crate::fpgroup::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports.
///
/// [`Error::is_bound`] separates resource limits from invalid input; the CLI
/// maps the two classes to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} has order {actual}, above the configured bound {bound}")]
    OrderBoundExceeded { what: &'static str, bound: usize, actual: usize },
    #[error("search budget of {budget} steps exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("element {element} is not central")]
    NotCentral { element: usize },
    #[error("{m} and {n} are not coprime")]
    NotCoprime { m: u64, n: u64 },
    #[error("the curve has no punctures; the graph-of-groups description needs an open curve")]
    RequiresOpenCurve,
    #[error("not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("equivariance fails at g={g}, x={x}: phi(g^x) != x^-1 phi(g) x")]
    EquivarianceFailure { g: usize, x: usize },
    #[error("Peiffer identity fails at g={g}, h={h}: g^phi(h) != h^-1 g h")]
    PeifferFailure { g: usize, h: usize },
    #[error("compatibility fails: {0}")]
    CompatibilityFailure(String),
    #[error("the given map is not a homomorphic section of G1 -> pi1")]
    NotASection,
    #[error("group of order {order} is not a finite subgroup of PGL2")]
    NotAPgl2Subgroup { order: usize },
}

impl Error {
    /// True for resource-limit failures, false for invalid input.
    pub fn is_bound(&self) -> bool {
        matches!(self, Error::OrderBoundExceeded { .. } | Error::BudgetExceeded { .. })
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
