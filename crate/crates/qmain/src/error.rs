use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph order {0} exceeds the supported maximum of 62")]
    TooLarge(usize),
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("malformed encoding: {0}")]
    MalformedEncoding(String),
    #[error("graph6 long-form length header is not supported (n must be at most 62)")]
    UnsupportedLength,
    #[error("pendant deletion leaves no usable core (star-like input)")]
    CoreEmpty,
    #[error("bad family parameters: {0}")]
    BadParameters(String),
    #[error("not a bicyclic core: {0}")]
    NotABicyclicCore(String),
    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,
    #[error(
        "lemma audit requires a graph whose parabolic check succeeds with the given parameters"
    )]
    NotParabolicInput,
    #[error("lemma audit requires a connected bicyclic graph")]
    NotBicyclic,
}

pub type Result<T> = std::result::Result<T, Error>;
