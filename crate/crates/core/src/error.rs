//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),

    #[error("pairing matrix is degenerate (rank {rank} < {dim})")]
    DegeneratePairing { rank: usize, dim: usize },

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("multiplication is not associative: (b{i}·b{j})·b{k} != b{i}·(b{j}·b{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("unit is not a two-sided identity on basis element b{0}")]
    BadUnit(usize),

    #[error("structure constant data is malformed: {0}")]
    BadStructConst(String),

    #[error("radical basis does not span a nilpotent two-sided ideal: {0}")]
    BadRadical(String),

    #[error("quiver relation {0} is not admissible: {1}")]
    BadRelation(usize, String),

    #[error("path basis did not stabilize below length {0}; the quotient is infinite-dimensional or exceeds the configured cap")]
    InfinitePathBasis(usize),

    #[error("coefficient vector has length {got}, algebra dimension is {want}")]
    BadElementLength { got: usize, want: usize },

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("side mismatch: expected {expected} module, got {got}")]
    SideMismatch { expected: &'static str, got: &'static str },

    #[error("module action is invalid: {0}")]
    BadAction(String),

    #[error("pp syntax error at byte {pos}: {msg}")]
    PpSyntax { pos: usize, msg: String },

    #[error("unknown algebra basis symbol `{name}` at byte {pos}")]
    UnknownBasisSymbol { name: String, pos: usize },

    #[error("free-variable arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("not a pp pair: psi does not imply phi; witness tuple in the free realization of psi: {witness}")]
    NotAPair { witness: String },

    #[error("algebra has no known radical; construct it from a quiver or supply radical_basis")]
    NoRadicalKnown,

    #[error("projective cover certificate failed: {0}")]
    MinimalityNotAchieved(String),

    #[error("unknown check name `{0}`")]
    UnknownCheck(String),

    #[error("instance generator exhausted after {0} retries")]
    GeneratorExhausted(usize),

    #[error("invalid input file: {0}")]
    BadFile(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
