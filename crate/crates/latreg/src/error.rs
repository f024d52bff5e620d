use thiserror::Error;

/// Errors shared across the crate. Every fallible operation either succeeds
/// exactly or reports one of these; there are no silent approximations.
#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible dimensions or shapes (matrix sizes, point lengths, ...).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A parameter is outside its accepted range or otherwise malformed.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Geometrically degenerate input (singular system, point on a facet
    /// hyperplane, affinely dependent anchor points, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// The input is not a generalized octahedron in the sense required by
    /// the circumscribed-cube construction.
    #[error("not a generalized octahedron: {0}")]
    NotAnOctahedron(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
