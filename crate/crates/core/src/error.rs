use thiserror::Error;

/// Errors raised by the engine.
///
/// `NotDivisible` and `Inconsistent` never occur on valid input; seeing one
/// means the restriction data or the solver is wrong and the computation
/// must be abandoned.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("root closure exceeded {cap} roots; the matrix is not of finite type")]
    ClosureOverflow { cap: usize },
    #[error("Cartan matrix is singular")]
    SingularCartan,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("divisor must be a nonzero homogeneous linear form")]
    InvalidDivisor,
    #[error("polynomial is not divisible by the given linear form")]
    NotDivisible,
    #[error("matrix is not a Weyl group element (descent loop stopped after {iterations} steps)")]
    NotGroupElement { iterations: usize },
    #[error("element count exceeded the configured cap of {cap}")]
    ResourceCap { cap: usize },
    #[error("operation requires a root system of finite type")]
    NotFiniteType,
    #[error("length bound {bound} is too small; at least {needed} is required")]
    InsufficientBound { bound: usize, needed: usize },
    #[error("restriction table must be in the {expected} convention")]
    WrongConvention { expected: &'static str },
    #[error("element {word:?} is not in the enumerated range")]
    NotInRange { word: Vec<usize> },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("evaluation point must be strictly positive; coordinate {} is not", .index + 1)]
    DomainViolation { index: usize },
    #[error("internal inconsistency at u={u:?}, v={v:?}, w={w:?}: {reason}")]
    Inconsistent {
        u: Vec<usize>,
        v: Vec<usize>,
        w: Vec<usize>,
        reason: String,
    },
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
