use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field degree {0} outside supported range 1..=32")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} of degree {degree} is reducible: divisible by {factor:#x}")]
    Reducible { degree: u32, modulus: u64, factor: u64 },
    #[error("modulus {modulus:#x} does not have degree {degree}")]
    ModulusDegree { degree: u32, modulus: u64 },
    #[error("no default modulus for degree {0}")]
    NoDefaultModulus(u32),
    #[error("malformed modulus table line {line}: {reason}")]
    ModulusTable { line: usize, reason: String },
    #[error("degree {source_degree} does not divide degree {target_degree}")]
    NotSubfield { source_degree: u32, target_degree: u32 },
    #[error("elements from unrelated fields: GF(2^{0}) vs GF(2^{1})")]
    FieldMismatch(u32, u32),
    #[error("element is not in the image of the embedding")]
    NotInImage,
    #[error("quadratic forms have no common linear factor")]
    NoCommonFactor,
    #[error("invalid curve parameter: {0}")]
    InvalidCurve(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("divisor has nonzero degree {0}")]
    NonZeroDegree(i64),
    #[error("splitting field of degree {0} exceeds the supported cap")]
    SplittingFieldTooLarge(u32),
    #[error("lift requires a field extension (minimal extension degree: {minimal:?})")]
    LiftNeedsExtension { minimal: Option<u32> },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("matrix is not invertible")]
    Singular,
    #[error("module is not strictly Frobenius-periodic")]
    NotStrict,
    #[error("no trivialization witness: {0}")]
    NoWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
