use thiserror::Error;

/// Errors produced by the braid algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid strand count {0}: need at least 2 strands")]
    InvalidStrandCount(usize),

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {n} strands")]
    InvalidGeneratorIndex { index: usize, n: usize },

    #[error("word is not a permutation braid: letter at position {position} repeats a crossing")]
    NotPermutationBraid { position: usize },

    #[error("enumeration oracle refused: n = {n} exceeds bound {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },

    #[error("rigidity is undefined for elements of canonical length 0")]
    ZeroCanonicalLength,

    #[error("cyclic sliding did not reach a circuit within {cap} steps")]
    SlidingCapExceeded { cap: usize },

    #[error("cycling orbit did not close up within {cap} steps")]
    OrbitCapExceeded { cap: usize },

    #[error("cycling orbit revisited a non-initial element; input is not in its ultra summit set")]
    OrbitNotClosed,

    #[error("operation requires a rigid braid")]
    NotRigid,

    #[error("atom pullback did not stabilize within {cap} iterations")]
    PullbackCapExceeded { cap: usize },

    #[error("atom pullback produced a non-simple conjugator (canonical length {len})")]
    PullbackNotSimple { len: usize },

    #[error("join with the identity is not simple here (supremum {sup}); precondition violated")]
    JoinOneNotSimple { sup: i64 },

    #[error("ultra summit graph exceeded the vertex cap of {cap}")]
    VertexCapExceeded { cap: usize },

    #[error("brute-force minimal-element search refused: n = {n} exceeds bound {bound}")]
    BruteForceBoundExceeded { n: usize, bound: usize },

    #[error("orbit structure is not that of a minimal ultra summit set")]
    NotMinimalStructure,

    #[error("sampler exhausted {cap} redraws without hitting the target (inf, len)")]
    RedrawCapExceeded { cap: usize },

    #[error("invalid sample configuration: {0}")]
    InvalidSampleConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
