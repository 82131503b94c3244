pub mod bounds;
pub mod constructive;
pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod partition;
