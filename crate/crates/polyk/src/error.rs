use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) is a loop")]
    LoopEdge(usize, usize),

    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("graph is disconnected: vertex {witness} is unreachable from vertex {start}")]
    Disconnected { start: usize, witness: usize },

    #[error("operation requires more than {t} vertices, graph has {n}")]
    TooFewVertices { n: usize, t: usize },

    #[error("unsupported size: exact solver handles at most {max} vertices, got {n}")]
    UnsupportedSize { n: usize, max: usize },

    #[error("enumeration supports {min} <= n <= {max}, got {n}")]
    OutsideEnvelope { n: usize, min: usize, max: usize },

    #[error("out of desk-scale envelope: would need all polyhedra on {needed} vertices (supported up to {max})")]
    OracleEnvelope { needed: usize, max: usize },

    #[error("unknown base graph `{0}`")]
    UnknownBaseGraph(String),

    #[error("invalid expansion site: {0}")]
    InvalidSite(String),

    #[error("vertex {v} has degree {degree}, collar insertion needs degree 3")]
    CollarDegree { v: usize, degree: usize },

    #[error("flip rejected: {0}")]
    FlipRejected(String),

    #[error("operation needs an embedding but the colored graph carries none")]
    MissingEmbedding,

    #[error("input graph is not polyhedral: {0}")]
    NotPolyhedral(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("construction self-check failed: {0}")]
    ConstructionCheck(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
