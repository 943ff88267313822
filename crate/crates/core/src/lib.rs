//! Seidel switching on small graphs: the symmetric-difference algebra,
//! switch-isomorphism classification and induced-subgraph invariants.

pub mod canonical;
pub mod classify;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod names;
pub mod switching;

pub use canonical::{Canonicalizer, ClassKey, Permutation};
pub use classify::{Catalog, InvariantProfile, Method, TypeRecord};
pub use error::{GraphError, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use invariants::{PatternClass, UnionShape};
pub use switching::BipartitionWitness;
