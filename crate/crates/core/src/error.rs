use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("variable index {index} out of range for {n} variables")]
    VarOutOfRange { index: usize, n: usize },

    #[error("weight of variable {var} must be at least 1")]
    ZeroWeight { var: usize },

    #[error("equation {index} has {arity} variables; the 2-affine solver accepts at most 2")]
    NotTwoAffine { index: usize, arity: usize },

    #[error("formula is not (2,2)-CNF: {0}")]
    NotTwoTwoCnf(String),

    #[error("unit clause on variable {var} must be propagated before building the variable graph")]
    UnitClause { var: usize },

    #[error("formula is not a hitting formula: clauses {first} and {second} do not clash")]
    NotHitting { first: usize, second: usize },

    #[error("component structure violated: {0}")]
    Structure(String),

    #[error("solution space is inconsistent")]
    InconsistentSpace,

    #[error("variable {var} is not a free variable of the solution space")]
    NotFree { var: usize },

    #[error("{free} free variables exceed the enumeration cap of {cap}")]
    FreeVariableCap { free: usize, cap: usize },

    #[error("{n} variables exceed the brute-force cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported fragment: {0}")]
    UnsupportedFragment(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
