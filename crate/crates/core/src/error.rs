use thiserror::Error;

/// Errors produced by sample construction, fitting and generation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample needs at least 2 values, got {0}")]
    TooFewValues(usize),

    #[error("sample value at index {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("paired sample length mismatch: {xs} x-values vs {ys} y-values")]
    LengthMismatch { xs: usize, ys: usize },

    #[error("invalid line: {0}")]
    InvalidLine(&'static str),

    #[error("line is not representable in {0} form")]
    NotRepresentable(&'static str),

    #[error("Y method requires var(x) > 0; all points lie on a vertical line")]
    VerticalData,

    #[error("X method requires var(y) > 0; all points lie on a horizontal line")]
    HorizontalData,

    #[error("var(x) = var(y) and cov(x,y) = 0; every line through the centroid is optimal")]
    Isotropic,

    #[error("inconsistent orthogonal case: {0}")]
    InvalidCase(&'static str),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
