//! Explicit partitions for degree-2 request graphs, bridgeless cubic graphs
//! and subcubic graphs with `C >= 5`.

mod cubic;
mod degree2;
mod linear_forest;

pub use cubic::decompose_bridgeless_cubic;
pub use degree2::{decompose_degree2, degree2_caps};
pub use linear_forest::{decompose_linear_forest, path_two_coloring};
