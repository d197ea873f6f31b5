use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("{0} is not a prime")]
    InvalidModulus(u64),
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace does not live in the algebra's underlying space")]
    ParentMismatch,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("isomorphism search capped at dimension {cap}, got {dim}")]
    CapExceeded { cap: usize, dim: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("ideal is not abelian")]
    NotAbelianIdeal,
    #[error("linear map is not multiplicative on basis elements {0} and {1}")]
    NotHomomorphism(usize, usize),
    #[error("homomorphism is not surjective")]
    NotEpimorphism,
    #[error("homomorphisms have different targets")]
    TargetMismatch,
    #[error("operator {0} needs a universe of ambient algebras")]
    UniverseRequired(&'static str),
    #[error("`{0}` has no evaluator")]
    NotEvaluable(String),
    #[error("generator {0} is not isomorphic to any universe member")]
    GeneratorOutsideUniverse(usize),
    #[error("class is not closed under subdirect products here: quotients by the listed ideals lie in the class, their intersection's does not")]
    NotAFormationEvidence { ideals: Vec<String> },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
