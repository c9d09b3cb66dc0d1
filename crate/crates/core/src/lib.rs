//! Regular graphs with a minimal chordal sense of direction, which are exactly
//! the circulant graphs.
//!
//! The crate builds circulants from reduced label sets, verifies chordal
//! labelings and recovers their cyclic orderings, splits minimally labeled
//! graphs into 2-factors, constructs Hamiltonian cycles, transforms label
//! sets by units of `Z_n`, and recognizes circulant graphs with a verifiable
//! witness.

pub mod circulant;
pub mod cli;
pub mod csd;
pub mod equivalence;
pub mod error;
pub mod factorization;
pub mod graph;
pub mod hamiltonian;
pub mod io;
pub mod recognition;

pub use circulant::{build_circulant, circulant_graph, ReducedLabelSet};
pub use csd::CyclicOrdering;
pub use error::{Error, Result};
pub use graph::{Graph, Neighbors, PortLabeling};
