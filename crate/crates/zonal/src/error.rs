use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An input is degenerate for the requested kernel (e.g. a zero vector
    /// where a direction is required).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Inconsistent or out-of-range configuration.
    #[error("config error: {0}")]
    Config(String),

    /// A linear system could not be solved to the required residual.
    #[error("singular system: {0}")]
    SingularSystem(String),

    /// A numerical procedure failed its own convergence diagnostics.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Not enough usable data to carry out the request.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Malformed input file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An input file contained no usable rows.
    #[error("empty data: {0}")]
    EmptyData(String),

    /// Nonlinear least squares failed to converge on every restart.
    #[error("fit error: {0}")]
    Fit(String),

    /// Gradient descent left the stable regime.
    #[error("divergence: {0}")]
    Divergence(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for CLI front-ends: 2 for domain/data problems,
    /// 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::DegenerateInput(_)
            | Error::Config(_)
            | Error::SingularSystem(_)
            | Error::InsufficientData(_)
            | Error::Parse { .. }
            | Error::EmptyData(_)
            | Error::Io(_) => 2,
            Error::Numerical(_) | Error::Fit(_) | Error::Divergence(_) => 3,
        }
    }
}
