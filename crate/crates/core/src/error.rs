use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("degree undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("degree {degree} is below the required minimum {min}")]
    DegreeTooSmall { degree: usize, min: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("polynomial is not square-free (zero discriminant)")]
    NotSquareFree,

    #[error("1 + g does not change sign on the initial bracket for d={d}, a={a}")]
    BracketNotFound { d: u32, a: u64 },

    /// The four test points around x0 did not show the `+ - - +` pattern.
    #[error("sign pattern not found for d={d}, a={a} (epsilon_frac={epsilon_frac}, observed signs {signs:?}); a is below the asymptotic regime")]
    Threshold {
        d: u32,
        a: u64,
        epsilon_frac: f64,
        signs: [i8; 4],
    },

    #[error("root finder did not converge: {0}")]
    NonConvergence(String),

    #[error("root set is not converged")]
    Unconverged,

    #[error("insufficient data: {0}")]
    InsufficientData(String),
}
