//! Exact tools for t-perfect graphs: stable set polytopes and their relaxation by
//! edge and odd-cycle inequalities, t-minors, forbidden-subgraph recognisers,
//! and colouring.

pub mod bits;
pub mod colouring;
pub mod graph;
pub mod par;
pub mod polytope;
pub mod recognition;
pub mod tminor;

pub use graph::{Graph, GraphError};
