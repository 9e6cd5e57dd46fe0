//! Exact computational topology of graph Hom complexes: construction,
//! homology over F2 and Z, Z2-equivariant quotients with Stiefel-Whitney
//! cup-power heights, support filtrations, and the resulting chromatic-number
//! lower bounds.

pub mod cache;
pub mod chain;
pub mod equivariant;
pub mod error;
pub mod filtration;
pub mod graph;
pub mod hom;
pub mod matrix;
pub mod obstruction;
pub mod poset;
pub mod simplicial;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{ComplementMode, Graph, VertexSet};
pub use hom::HomComplex;
pub use simplicial::SimplicialComplex;
