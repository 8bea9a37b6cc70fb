use thiserror::Error;

use crate::types::BasisTag;

/// Errors raised by validation and by the coefficient transforms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FfsError {
    #[error("period must be positive and finite, got {0}")]
    InvalidPeriod(f64),

    #[error("coefficient lists differ in length: {cos_terms} cosine terms vs {sin_terms} sine terms")]
    LengthMismatch { cos_terms: usize, sin_terms: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("fractional order must be non-negative, got {0}")]
    NegativeOrder(f64),

    #[error("a sampled period needs at least {required} samples, got {got}")]
    TooFewSamples { required: usize, got: usize },

    #[error("harmonic index must be at least 1, got {0}")]
    NonPositiveHarmonic(i64),

    #[error("n_max = {n_max} is not below the Nyquist limit of {samples} samples (need 2*n_max < M)")]
    NyquistViolation { n_max: usize, samples: usize },

    #[error("DC term cannot be recovered at alpha = {alpha}: cos(pi*alpha/2) vanishes but the constant term is {dc}")]
    SingularDc { alpha: f64, dc: f64 },

    #[error("expected a {expected} coefficient set, found {found}")]
    BasisTagMismatch { expected: &'static str, found: BasisTag },

    #[error("matrix is not a proper rotation (orthogonality defect {orthogonality:e}, det {det})")]
    NotARotation { orthogonality: f64, det: f64 },

    #[error("complex coefficient list must have odd length 2N+1, got {0}")]
    AsymmetricIndexRange(usize),
}

pub type Result<T> = std::result::Result<T, FfsError>;
