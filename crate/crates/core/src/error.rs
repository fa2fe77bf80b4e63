use thiserror::Error;

use crate::order::OrderKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::perm::MAX_DEGREE)]
    DegreeTooLarge(usize),

    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("generator index {index} is out of range for degree {degree}")]
    GeneratorOutOfRange { index: usize, degree: usize },

    #[error("cannot parse {0:?} as a permutation")]
    ParsePermutation(String),

    #[error("cannot parse {0:?} as a word")]
    ParseWord(String),

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("length {length} exceeds the reduced-word enumeration cap of {cap}")]
    LengthCap { length: usize, cap: usize },

    #[error("malformed pattern: {0}")]
    MalformedPattern(String),

    #[error("{bottom} is not below {top} in the {kind} order")]
    NotBelow {
        bottom: String,
        top: String,
        kind: OrderKind,
    },

    #[error("malformed poset: {0}")]
    Poset(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("n = {n} is outside the supported range {min}..={max} for this count")]
    DegreeOutOfRange { n: usize, min: usize, max: usize },
}
