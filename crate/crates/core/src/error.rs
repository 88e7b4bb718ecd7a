use num_complex::Complex64;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("polynomial of degree {degree} is too small (need at least {required})")]
    DegreeTooLow { degree: usize, required: usize },

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error(
        "root finder did not converge after {iterations} iterations (worst residual {residual:e})"
    )]
    RootsNotConverged {
        iterations: usize,
        best: Vec<Complex64>,
        residual: f64,
    },

    #[error("quadrature did not reach tolerance: partial value {partial}, error estimate {err_estimate:e}")]
    QuadratureFailed { partial: f64, err_estimate: f64 },

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("not hyperbolic at alpha = {alpha}: no root with Re(V) <= 0 and Im(V) > 0")]
    NotHyperbolic { alpha: f64 },

    #[error("degenerate longitude: A + iV vanishes")]
    DegenerateLongitude,

    #[error("integrand does not decay toward alpha = 0: {0}")]
    EndpointProbe(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Domain errors are answers about the geometry (the angle is not in the
    /// hyperbolic range), as opposed to numerical breakdowns.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotHyperbolic { .. } | Error::InvalidInput(_) | Error::DegenerateLongitude
        )
    }
}
