//! Clique coverings, compressed cliques graphs and positive zero forcing.
//!
//! The crate works on small simple graphs (at most 64 vertices) and favours
//! exact answers: clique cover numbers, zero forcing numbers and isomorphism
//! tests are all computed by exhaustive search with pruning.

pub mod budget;
pub mod checks;
pub mod compressed;
pub mod corpus;
pub mod cover;
pub mod detect;
pub mod error;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod io;
pub mod iso;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
