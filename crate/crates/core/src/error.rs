use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid {family} size: {reason}")]
    InvalidSize { family: &'static str, reason: String },

    #[error("{0} is not a chord of the cycle")]
    InvalidChord(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("illegal character {ch:?} at position {pos} in binary string")]
    IllegalSymbol { ch: char, pos: usize },

    #[error("binary string {0:?} is not canonical (first two symbols differ)")]
    NotCanonical(String),

    #[error("binary string {0:?} generates a disconnected threshold graph")]
    Disconnected(String),

    #[error("enumeration over {n} vertices exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("{what} is limited to {cap} vertices, got {n}")]
    SearchCap { what: &'static str, n: usize, cap: usize },

    #[error("exact division failed in {0}")]
    Divisibility(String),

    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
