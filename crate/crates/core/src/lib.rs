//! Edge general position sets in graphs.
//!
//! An edge set is in *edge general position* when no shortest path of the
//! graph contains three of its edges; `gp_e(G)` is the size of a largest
//! such set. This crate computes `gp_e` exactly, implements the structural
//! machinery for block graphs (blocks, simplicial vertices, internal and
//! pendant paths, the path reduction), recognizes the graph families with
//! known closed forms, and sweeps small graphs to check those closed forms.

pub mod blocks;
pub mod classes;
pub mod distance;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod geodesic;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod named;
pub mod paths;
pub mod reduce;
pub mod solver;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use graph::{EdgeId, Graph, Vertex};
