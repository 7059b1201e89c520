//! Uniform odd 2-factors and Hamilton cycles in vertex-transitive graphs of
//! odd order.

pub mod budget;
pub mod census;
pub mod error;
pub mod factor;
pub mod generators;
pub mod graph;
pub mod groups;
pub mod hamilton;
pub mod symmetry;

pub use budget::{Budget, Search, Verdict};
pub use error::{Error, Result};
pub use graph::{Cycle, Graph, Partition, VertexSet};
