//! Exact computation of cop-throttling, capture times, positive
//! semidefinite zero forcing and related invariants on small graphs.
//!
//! Everything works on [`Graph`], a simple undirected graph on at most 64
//! vertices stored as bit sets. Distances and capture times that can be
//! unbounded are [`Extended`] values.

pub mod burning;
pub mod classification;
pub mod error;
pub mod extended;
pub mod families;
pub mod graph;
pub mod harness;
pub mod pursuit;
pub mod tree_throttling;
pub mod zero_forcing;

pub use error::{Error, Result};
pub use extended::{Extended, Finite, Infinite};
pub use graph::{Graph, VertexSet};
