//! Counterexample searches and conjecture scans, each reported as a
//! self-checking [`Certificate`].

mod certificate;
mod scan;
mod tightness;
mod verify;
mod witness;

pub use certificate::{compact_graph, parse_certificate, parse_compact_graph, Certificate, Claim, Evidence, Verdict};
pub use scan::{test_conjecture_43, test_thomassen_consistency, Checkpoint, ScanConfig, ScanOutcome};
pub use tightness::check_degree2_tightness;
pub use verify::verify_certificate;
pub use witness::{bridge_join, find_m33_witness, join_pieces, piece_library, piece_mu, Piece, WitnessConfig};
