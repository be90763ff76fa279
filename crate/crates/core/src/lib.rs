pub mod error;
pub mod bounds;
pub mod flip;
pub mod graph;
pub mod split;
pub mod tree;
pub mod trivially_perfect;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use tree::{Rotation, RotationSequence, SearchTree};
