use thiserror::Error;

use crate::algebra::Signature;
use crate::text::ParseError;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature Cl({p},{q}) exceeds the dense cap of {max} basis vectors", max = crate::algebra::MAX_DIM)]
    SignatureTooLarge { p: usize, q: usize },

    #[error("tolerances must be strictly positive (abs = {abs_eps}, rel = {rel_eps})")]
    InvalidTolerance { abs_eps: f64, rel_eps: f64 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("expected signature {expected}, got {actual}")]
    WrongSignature { expected: Signature, actual: Signature },

    #[error("coefficient vector has length {actual}, expected {expected}")]
    CoefficientLength { expected: usize, actual: usize },

    #[error("grade {grade} out of range for a {dim}-dimensional algebra")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("expected a pure {expected}, found grades {found:?}")]
    WrongGrade { expected: &'static str, found: Vec<usize> },

    #[error("input must be even")]
    NotEven,

    #[error("element is not in the spin group")]
    NotInSpinGroup,

    #[error("multivector is not an invertible versor (U~U = {norm})")]
    NonInvertibleVersor { norm: String },

    #[error("vector is null or not unit (square = {square})")]
    InvalidAxis { square: f64 },

    #[error("axes differ between the two arguments")]
    AxisMismatch,

    #[error("spinor frame is not orthonormal: {0}")]
    InvalidFrame(&'static str),

    #[error("spin is anti-aligned with the axis: p^2 = {p_squared} is not positive")]
    AntiAlignedSpin { p_squared: f64 },

    #[error("degenerate frame for reconstruction: p^2 = {p_squared} is not positive")]
    DegenerateFrame { p_squared: f64 },

    #[error("spinor is not singular: rho = {rho}")]
    NotSingular { rho: f64 },

    #[error("singular spinor has zero current")]
    ZeroCurrent,

    #[error("zero spinor")]
    ZeroSpinor,

    #[error("projector bivector must be timelike with e^2 = 1 (e^2 = {square})")]
    InvalidProjector { square: String },

    #[error("projector bivector must be a relative vector (t e t = -e)")]
    ProjectorNotHermitian,

    #[error("element does not lie in the ideal of the projector")]
    NotInIdeal,

    #[error("the two 2-spinors are proportional ({{eta, chi}} = 0)")]
    ProportionalSpinors,

    #[error("component matrix is not symmetric")]
    AsymmetricComponents,

    #[error("no explicit representation for Cl({p},{q})")]
    UnsupportedSignature { p: usize, q: usize },

    #[error("Cl({p},{q}) lies outside the classification table (p + q <= 7)")]
    OutOfTable { p: usize, q: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
