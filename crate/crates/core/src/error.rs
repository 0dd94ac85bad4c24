use thiserror::Error;

use crate::blocks::ConjecturePrediction;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The request is larger than the configured search cap.
    #[error("n = {n} exceeds the configured cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    /// A closed form was asked to evaluate outside its hypotheses.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// Only a fixed set of coefficients has exact formulas.
    #[error("unsupported coefficient a = {0}")]
    UnsupportedCoefficient(String),

    /// The four-block conjecture is only claimed for n >= 12. The boundaries
    /// are still reported.
    #[error("n = {n} is below the conjectured range n >= 12")]
    OutOfDomain {
        n: usize,
        prediction: ConjecturePrediction,
    },

    /// Continuous parameters outside 0 <= s <= t <= 1, a > 0.
    #[error("domain error: {0}")]
    Domain(String),

    /// (s, t, a) matches none of the seventeen tabulated regions.
    #[error("(s, t, a) = ({s}, {t}, {a}) lies in none of the tabulated regions")]
    UnlistedRegion { s: f64, t: f64, a: f64 },

    /// Two regions matched strictly; the region table is inconsistent.
    #[error("regions {0:?} all match strictly")]
    Ambiguous(Vec<u8>),

    /// The finite-difference stencil crosses a region boundary.
    #[error("point lies within {h} of a region boundary")]
    OnBoundary { h: f64 },

    /// Reference terms beyond the embedded prefix need an external b-file.
    #[error("missing reference data: {0}")]
    MissingReference(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Toml(#[from] toml::de::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
