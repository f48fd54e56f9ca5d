//! Exact independent double Roman domination and related invariants.
//!
//! * [`graph`] — immutable simple graphs, edge-list I/O, seeded generators.
//! * [`labelings`] — the Roman-type labelings and their validators.
//! * [`solvers`] — exact invariant computation with witnesses.
//! * [`families`] — graph families, closed forms, tree classification and
//!   `(i, i_dR)` realization.
//! * [`bounds`] — inequality records and the bound fuzzer.

pub mod bounds;
pub mod error;
pub mod families;
pub mod graph;
pub mod labelings;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
