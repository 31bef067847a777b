use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension {0} is outside the supported range 1..=14")]
    DimensionOutOfRange(usize),
    #[error("context mismatch: dim {left} vs dim {right}")]
    ContextMismatch { left: usize, right: usize },
    #[error("grade {grade} out of range 0..={max}")]
    GradeOutOfRange { grade: usize, max: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{op}: input must be supported on {expected} only")]
    MixedSupport { op: &'static str, expected: &'static str },
    #[error("null vecfor: x*(x_*) = 0")]
    NullVecfor,
    #[error("singular bilinear form")]
    SingularForm,
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("zero generator")]
    ZeroGenerator,
    #[error("zero covector")]
    ZeroCovector,
    #[error("{what}: n = {n} exceeds the supported maximum {max}")]
    TooLarge { what: &'static str, n: usize, max: usize },
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar {0:?}")]
    BadScalar(String),
    #[error("element is not in the ideal")]
    NotInIdeal,
    #[error("inconsistent spinor components: {0}")]
    BadSpinor(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
