use thiserror::Error;

/// Errors shared across the library.
///
/// Variants split into two families: malformed input (dimension mismatches,
/// out-of-range parameters, non-Hermitian matrices) and structural failures
/// discovered during computation (non-commuting polar parts, non-normal
/// superoperators). The CLI maps the first family to exit code 1 and
/// genuine numerical breakdowns to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (max entry deviation {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("imaginary residue {residue:.3e} exceeds tolerance in {context}")]
    ImaginaryResidue { context: &'static str, residue: f64 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("trace must be one (got {trace:.6})")]
    NotTraceOne { trace: f64 },

    #[error("state has eigenvalue {min_eig:.3e} below tolerance")]
    NotPositive { min_eig: f64 },

    #[error("channel is not trace preserving (defect {defect:.3e})")]
    NotTracePreserving { defect: f64 },

    #[error(
        "rotation and scaling parts do not commute (defect {defect:.3e} exceeds tolerance {tol:.3e}); \
         the source matrix is not normal enough for a canonical form"
    )]
    NonCommutingParts { defect: f64, tol: f64 },

    #[error("orientation-reversing orthogonal part (det R = -1) has no rotation block form")]
    OrientationReversing,

    #[error("superoperator matrix is not normal (defect {defect:.3e} exceeds tolerance {tol:.3e})")]
    NotNormal { defect: f64, tol: f64 },

    #[error("generator is not unital (translation generator norm {defect:.3e})")]
    NotUnital { defect: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
