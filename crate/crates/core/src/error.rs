use thiserror::Error;

use crate::AlgebraKind;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator z is not available in algebra {kind}")]
    IllegalGenerator { kind: AlgebraKind },
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operands live in different algebras ({left}, n={left_n} vs {right}, n={right_n})")]
    KindMismatch {
        left: AlgebraKind,
        left_n: usize,
        right: AlgebraKind,
        right_n: usize,
    },
    #[error("operands have different sizes (n={left} vs n={right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("operation {op} is not supported for algebra {kind}")]
    UnsupportedKind { kind: AlgebraKind, op: &'static str },
    #[error("the degree of the zero element is undefined")]
    ZeroElement,
    #[error("element is not divisible by z")]
    NotDivisible,
    #[error("relations are linearly dependent (rank {rank}, {count} relations)")]
    RankDeficientInput { rank: usize, count: usize },
    #[error("Gram matrix in degree {degree} is singular")]
    SingularGram { degree: usize },
    #[error("fraction is not of degree zero (degree {degree})")]
    NotDegreeZero { degree: i64 },
    #[error("degree shift {degree} is out of range")]
    DegreeOverflow { degree: i64 },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("suite {suite} supports n in 1..={max}, got {n}")]
    UnsupportedN { suite: String, n: usize, max: usize },
}
