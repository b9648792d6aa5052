use thiserror::Error;

/// A failed invocation, carrying its process exit code.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    /// Unparseable or invalid input: exit 2.
    #[error("{0}")]
    Input(String),
    /// Geometry or feasibility failure: exit 3.
    #[error("{0}")]
    Geometry(String),
    /// Numerics did not settle: exit 4.
    #[error("{0}")]
    Unresolved(String),
    /// An invariant or bound check failed: exit 1.
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 1,
            CliError::Input(_) => 2,
            CliError::Geometry(_) => 3,
            CliError::Unresolved(_) => 4,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

impl From<santalo::Error> for CliError {
    fn from(e: santalo::Error) -> Self {
        use santalo::Error as E;
        let msg = e.to_string();
        match e {
            E::InvalidInput(_)
            | E::DimensionMismatch { .. }
            | E::SymmetryMismatch
            | E::UnsupportedRule(_)
            | E::ZeroExponent
            | E::NonPositiveAlpha(_)
            | E::IntegerBetaCase(_)
            | E::DegenerateFit(_) => CliError::Input(msg),
            E::CenterNotInterior { .. }
            | E::SupportUnavailable
            | E::PolarUnavailable(_)
            | E::DegenerateInput(_)
            | E::NonFiniteIntegrand { .. } => CliError::Geometry(msg),
            E::NoConvergence { .. } | E::UnresolvedAsymptotics { .. } => CliError::Unresolved(msg),
            E::EquivalenceViolation { .. } | E::BoundViolation { .. } => CliError::Invariant(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("i/o error: {e}"))
    }
}
