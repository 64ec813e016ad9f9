use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph too small: {0}")]
    TooSmall(String),
    #[error("empty vertex set")]
    EmptySet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("graph is not 3-connected")]
    NotTriconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("instance has {n} vertices, above the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("engine incomplete: {0}")]
    EngineIncomplete(String),
    #[error("witness check failed: {0}")]
    WitnessInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
