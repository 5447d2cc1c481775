use thiserror::Error;

/// Errors raised by the algebra, the geometric layers, autodiff and dynamics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PgaError {
    #[error("operands belong to different algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },

    #[error("grade {grade} out of range for an algebra of dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("unknown basis blade name {0:?}")]
    UnknownBlade(String),

    #[error("invalid algebra signature: {0}")]
    InvalidSignature(String),

    #[error("{0}: input is zero")]
    ZeroInput(&'static str),

    #[error("{what}: expected grade {expected}, found a multivector with grades {found:?}")]
    WrongGrade {
        what: &'static str,
        expected: usize,
        found: Vec<usize>,
    },

    #[error("{what}: argument is not normalized (square = {square})")]
    NotNormalized { what: &'static str, square: f64 },

    #[error("{0}: argument must be euclidean, got an ideal element")]
    IdealArgument(&'static str),

    #[error("{0}: argument must be ideal")]
    EuclideanArgument(&'static str),

    #[error("{0}: dependent arguments")]
    DependentArguments(&'static str),

    #[error("{0}: arguments are not parallel")]
    NotParallel(&'static str),

    #[error("{0}: bivector is not simple")]
    NotSimple(&'static str),

    #[error("degenerate pencil: parallel lines have no unique common normal")]
    DegeneratePencil,

    #[error("logarithm branch cut: rotation half-angle {half_angle} is at the principal-branch boundary")]
    BranchCut { half_angle: f64 },

    #[error("domain error in {op}: argument {value}")]
    Domain { op: &'static str, value: f64 },

    #[error("singular inertia map on the requested subspace")]
    SingularInertia,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("state became non-finite at step {step} (t = {t})")]
    NonFinite { step: usize, t: f64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, PgaError>;
