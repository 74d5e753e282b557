use std::fmt;

/// Named invariants of validated states, reported when a constructor rejects its input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Hermitian,
    Trace,
    PositiveSemidefinite,
    Normalization,
    SpectrumSum,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Invariant::Hermitian => "hermiticity",
            Invariant::Trace => "unit trace",
            Invariant::PositiveSemidefinite => "positive semidefiniteness",
            Invariant::Normalization => "unit norm",
            Invariant::SpectrumSum => "spectrum sums to one",
        };
        f.write_str(name)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("{invariant} invariant violated: {detail}")]
    Invariant { invariant: Invariant, detail: String },
    #[error("singular value decomposition did not converge")]
    SvdNoConvergence,
    #[error("eigendecomposition did not converge")]
    EigenNoConvergence,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("bound undefined when min(d_A, d_B) = 1")]
    TrivialSubsystem,
    #[error("pure state is not in Schmidt-diagonal form in the computational basis")]
    NotSchmidtDiagonal,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invariant(invariant: Invariant, detail: impl Into<String>) -> Self {
        Error::Invariant { invariant, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
