use std::path::PathBuf;

use thiserror::Error;

use crate::gas::Statistics;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument z = {z} is outside the domain of Li_{order}(z)")]
    Domain { order: f64, z: f64 },

    #[error("{what} did not converge within {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("root is not bracketed: f({lo}) = {f_lo:e}, f({hi}) = {f_hi:e}")]
    BracketInvalid { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("invalid value for `{key}`: {reason}")]
    InvalidParameter { key: String, reason: String },

    #[error("detuning must be nonzero")]
    ZeroDetuning,

    #[error("{0} statistics has no zero-temperature density profile")]
    UnsupportedStatistics(Statistics),

    #[error("pinhole radius {pinhole:e} m exceeds the cloud radius {cloud:e} m")]
    PinholeExceedsCloud { pinhole: f64, cloud: f64 },

    #[error("pulse delay vanished; the effective group velocity is undefined")]
    ZeroDelay,

    #[error("susceptibility denominator vanished (probe on a local-field resonance)")]
    ResonantDenominator,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{statistics} at x = {x}: {source}")]
    SweepPoint {
        statistics: Statistics,
        x: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(key: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { key: key.into(), reason: reason.into() }
    }
}
