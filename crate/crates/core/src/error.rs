use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid modulus: n must be positive")]
    InvalidModulus,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("{0} is even; cyclotomic cosets need an odd modulus")]
    EvenModulus(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("circulant offsets are not closed under negation mod {0}")]
    AsymmetricOffsets(usize),
    #[error("adjacency matrix is not a simple graph: {0}")]
    InvalidGraph(String),
    #[error("classical code must be linear for this operation")]
    NonlinearCode,
    #[error("check polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("cyclic self-orthogonality condition violated")]
    NotSelfOrthogonal,
    #[error("generator polynomial q(x) is reducible")]
    ReducibleGenerator,
    #[error("no residue r(x) places this error in the dual")]
    NoSolution,
    #[error("error lies in the dual for every r(x)")]
    Unavoidable,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
