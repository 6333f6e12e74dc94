use thiserror::Error;

/// Errors raised across the library.
///
/// Several variants mark conditions that are unreachable for valid inputs
/// (`NoSplittingElement`, `MethodMismatch`, `NotInjective`, ...). They exist
/// so that a broken invariant surfaces as a value instead of a panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation {images:?}: not a bijection")]
    InvalidPermutation { images: Vec<usize> },

    #[error("generators act on different numbers of points ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("closure exceeds cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown builtin: {0}")]
    UnknownBuiltin(String),

    #[error("invalid prime {p}: {reason}")]
    InvalidPrime { p: u64, reason: String },

    #[error("series expansion requires a nonzero constant term in the denominator")]
    PoleAtZero,

    #[error("a factor (1 - t) remains in the denominator after clearing {cleared}")]
    ResidualPole { cleared: usize },

    #[error("eigenspace refinement stalled at dimension {dim}")]
    SplitFailure { dim: usize },

    #[error("value {value} is not a plausible multiplicity (bound {bound})")]
    NotAMultiplicity { value: u64, bound: u64 },

    #[error("symmetric/exterior power {k} needs division by 2 in characteristic 2")]
    EvenCharacteristicHazard { k: usize },

    #[error("power {k} is not invertible in characteristic {p}")]
    PowerExceedsCharacteristic { k: usize, p: u64 },

    #[error("irrep {index} of degree {degree} has no splitting element")]
    NoSplittingElement { index: usize, degree: u64 },

    #[error("matrices do not define a homomorphism: word {word}")]
    NotAHomomorphism { word: String },

    #[error("matrix for generator {0} is singular")]
    SingularMatrix(usize),

    #[error("expected {expected} generator matrices, got {got}")]
    GeneratorCount { expected: usize, got: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("inconsistent multiplicity for irrep {index}: {detail}")]
    InconsistentMultiplicity { index: usize, detail: String },

    #[error("hom dimension mismatch: character method {by_character}, linear solve {by_solve}")]
    MethodMismatch { by_character: u64, by_solve: usize },

    #[error("evaluation map is not injective (rank {rank}, expected {expected})")]
    NotInjective { rank: usize, expected: usize },

    #[error("evaluation map image differs from the isotypical component")]
    WrongImage,

    #[error("action is not faithful: element {element} acts trivially")]
    NotFaithful { element: usize },

    #[error("Molien series for irrep {index} matches neither orientation at degree {degree}")]
    OrientationMismatch { index: usize, degree: usize },

    #[error("no normal basis element among {tried} candidates")]
    SearchExhausted { tried: usize },

    #[error("model error: {0}")]
    Model(String),
}

impl Error {
    /// Process exit status: 2 for rejected input, 1 for a failed check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidPermutation { .. }
            | Error::DegreeMismatch(..)
            | Error::ClosureExceedsCap { .. }
            | Error::Parse(_)
            | Error::UnknownBuiltin(_)
            | Error::InvalidPrime { .. }
            | Error::NotAHomomorphism { .. }
            | Error::SingularMatrix(_)
            | Error::GeneratorCount { .. }
            | Error::NotFaithful { .. }
            | Error::EvenCharacteristicHazard { .. }
            | Error::PowerExceedsCharacteristic { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
