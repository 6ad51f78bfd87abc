use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("quadrature did not converge: {reason}")]
    NonConvergent { reason: String },

    #[error("integrand is not finite at x = {abscissa}")]
    NonFinite { abscissa: f64 },

    #[error("invalid model parameters: {0}")]
    InvalidModelParameters(String),

    #[error("distribution is negative (min {min_value:e} at {location:?}); its entropy is undefined")]
    NegativeDistribution { min_value: f64, location: Vec<f64> },

    #[error("normalization integral diverged or is not positive: {0}")]
    DivergentNorm(String),

    #[error("invalid quadrature settings: {0}")]
    InvalidSpec(String),

    #[error("optimizer hit the iteration cap ({iterations}) before converging")]
    NotConverged { iterations: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
