use thiserror::Error;

/// Errors raised by the combinatorial constructors and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text did not match the grammar of the requested object kind.
    #[error("{kind} syntax error at position {position}: {message}")]
    Syntax {
        kind: &'static str,
        position: usize,
        message: String,
    },

    /// A labeled tree violates one of the heap-order rules.
    #[error("heap-order violation: {0}")]
    HeapOrder(String),

    /// A sequence of values is not a permutation of `1..=n`.
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    /// A linear map was applied to a basis object it has no value for.
    #[error("map is undefined on basis object {0}")]
    Undefined(String),

    #[error("operands belong to different algebras: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },

    #[error("index {index} is outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("graft target node {node} does not exist (tree has {nodes} nodes)")]
    GraftTarget { node: usize, nodes: usize },

    #[error("graft needs one target per component: got {got}, expected {expected}")]
    GraftArity { got: usize, expected: usize },

    /// A word letter was expected to be `\`-irreducible.
    #[error("letter {0} is not \\-irreducible")]
    ReducibleLetter(String),

    #[error("degree {requested} exceeds the configured cap {cap} for {what}")]
    DegreeCap {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
