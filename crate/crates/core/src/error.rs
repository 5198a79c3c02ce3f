use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

/// Which Gamma argument of a ratio sits on a pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleSite {
    /// A plain `log Γ(z)` / `Γ_k(z)` evaluation.
    Argument,
    Numerator,
    Denominator,
}

impl fmt::Display for PoleSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PoleSite::Argument => "argument",
            PoleSite::Numerator => "numerator",
            PoleSite::Denominator => "denominator",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter triple (0, 0, 0) is degenerate")]
    DegenerateTriple,

    #[error("series is not compositionally invertible: {0}")]
    NotInvertible(&'static str),

    #[error("series has a zero constant term and no reciprocal")]
    NotUnit,

    #[error("gamma pole in the {site} argument at {arg}")]
    GammaPole { site: PoleSite, arg: Complex64 },

    #[error("factor {index} of the partial product vanishes")]
    ZeroFactor { index: u64 },

    #[error("outside the convergence regime: {0}")]
    Regime(String),

    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("branch error: {0}")]
    Branch(String),

    #[error("{0}")]
    Domain(String),

    #[error("{0}")]
    Range(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("preset `{preset}` requires parameter `{param}`")]
    MissingParameter { preset: String, param: String },

    #[error("invalid preset parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
