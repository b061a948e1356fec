//! Error type shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown space `{name}`; valid names are {valid}")]
    UnknownSpace { name: String, valid: &'static str },

    #[error("invalid request: {reason}")]
    InvalidRequest { reason: String },

    #[error("{name}={value} out of range: {reason}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        reason: String,
    },

    #[error(
        "series did not converge within {max_terms} terms (last term magnitude {last_term:.3e})"
    )]
    SeriesTruncated { max_terms: usize, last_term: f64 },

    #[error("series lost too many digits (max term {max_term:.3e} against sum {sum:.3e})")]
    PrecisionLoss { max_term: f64, sum: f64 },

    #[error("magnitude estimate exp({exponent:.1}) exceeds the exp(700) overflow guard")]
    Overflow { exponent: f64 },

    #[error("evaluation point t={t} too close to pi (engine limit pi - {margin:.1e})")]
    TooCloseToPi { t: f64, margin: f64 },

    #[error(
        "quadrature stalled after {doublings} doublings at {nodes} nodes: {previous} vs {current}"
    )]
    QuadratureStalled {
        doublings: usize,
        nodes: usize,
        previous: Complex64,
        current: Complex64,
    },

    #[error("sample grid too coarse: {points} points (need at least {required})")]
    GridTooCoarse { points: usize, required: usize },

    #[error("bad sample grid: {reason}")]
    BadSampleGrid { reason: String },

    #[error("ray too short for a type fit: {got} samples, sigma_max={sigma_max} (need >= {min_samples} samples and sigma_max >= {min_sigma_max})")]
    InsufficientRay {
        got: usize,
        sigma_max: f64,
        min_samples: usize,
        min_sigma_max: f64,
    },

    #[error("degenerate input: {reason}")]
    DegenerateInput { reason: String },

    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to: 1 for usage/parse
    /// problems, 2 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnknownSpace { .. }
            | Error::InvalidRequest { .. }
            | Error::OutOfRange { .. }
            | Error::Parse { .. }
            | Error::BadSampleGrid { .. }
            | Error::GridTooCoarse { .. }
            | Error::Io(_)
            | Error::Json(_) => 1,
            _ => 2,
        }
    }
}
