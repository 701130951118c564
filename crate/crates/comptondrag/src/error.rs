use std::fmt;

/// Crate-wide error type.
#[derive(Debug)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    Domain(String),
    /// A quadrature or iteration failed to reach its tolerance within budget.
    NonConvergence { what: String, error_estimate: f64 },
    /// The Fokker-Planck step controller could not find an acceptable step.
    StepControl(String),
    /// A least-squares fit was rejected (wrong model or degenerate data).
    Fit(String),
    /// Characteristic inversion left the tabulated range.
    Inversion(String),
    /// Malformed input data (spectrum files, grids).
    Format(String),
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonConvergence {
                what,
                error_estimate,
            } => write!(
                f,
                "non-convergence in {what} (error estimate {error_estimate:e})"
            ),
            Error::StepControl(msg) => write!(f, "step control failure: {msg}"),
            Error::Fit(msg) => write!(f, "fit failure: {msg}"),
            Error::Inversion(msg) => write!(f, "inversion failure: {msg}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
