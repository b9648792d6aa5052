use thiserror::Error;

/// Errors raised by the geometry, quadrature, functional and bounds layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {got} ({what})")]
    DimensionMismatch { what: &'static str, expected: usize, got: usize },

    #[error("center is not interior to the body (direction {direction:?})")]
    CenterNotInterior { direction: Vec<f64> },

    #[error("support function needs a vertex list for this polytope")]
    SupportUnavailable,

    #[error("polar body cannot be formed: {0}")]
    PolarUnavailable(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("no convergence after {iterations} iterations (gap {gap:e})")]
    NoConvergence { iterations: usize, gap: f64 },

    #[error("octant rules need an unconditional integrand")]
    SymmetryMismatch,

    #[error("integrand is not finite at direction {direction:?}")]
    NonFiniteIntegrand { direction: Vec<f64> },

    #[error("rule engine does not support this operation: {0}")]
    UnsupportedRule(&'static str),

    #[error("exponent must be nonzero")]
    ZeroExponent,

    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(f64),

    #[error("main condition and alpha* characterization disagree for alpha={alpha}, beta={beta}, n={n}")]
    EquivalenceViolation { alpha: String, beta: String, n: usize },

    #[error("beta = {0} is an integer in [1, n]; use the log-corrected bound")]
    IntegerBetaCase(usize),

    #[error("degenerate slope fit: {0}")]
    DegenerateFit(String),

    #[error("asymptotics unresolved: sub-window slopes {lower:.4} vs {upper:.4}")]
    UnresolvedAsymptotics {
        lower: f64,
        upper: f64,
        scan: Box<crate::bounds::ScanResult<f64>>,
    },

    #[error("bound violated at gamma vector {gammas:?}: {detail}")]
    BoundViolation { gammas: Vec<f64>, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn to_f64_vec<T: crate::Real>(v: &[T]) -> Vec<f64> {
    v.iter().map(|x| x.as_f64()).collect()
}
