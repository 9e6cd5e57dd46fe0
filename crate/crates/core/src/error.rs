use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    BadParameter(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph has a loop at vertex {0}")]
    LoopPresent(usize),

    #[error("not a graph homomorphism: edge ({0},{1}) not preserved")]
    NotHomomorphism(usize, usize),

    #[error("Z2-action is not free: cell {0} is fixed setwise")]
    NotFree(usize),

    #[error("not a chain map: fails to commute with the boundary in degree {0}")]
    NotChainMap(usize),

    #[error("map is not equivariant at cell {0}")]
    NotEquivariant(usize),

    #[error("complex is disconnected; the height of the first Stiefel-Whitney class is only defined per component — restrict to a component first")]
    Disconnected,

    #[error("empty Hom complex: {0}")]
    EmptyComplex(String),

    #[error("subbasis is not closed under the boundary: basis element {0}")]
    NotSubcomplex(usize),

    #[error("soundness violation: {0}")]
    Soundness(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
