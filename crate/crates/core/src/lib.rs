//! Exact enumeration of generalized outerplanar Turán quantities.
//!
//! The crate counts cycles, paths and trees in maximal outerplanar graphs
//! (triangulated convex polygons), relates cycle counts to subtree counts of
//! the weak dual, and computes the exact constants and bounds that describe
//! how those maxima grow.

pub mod error;
pub mod exactmath;
pub mod extremal;
pub mod graph;
pub mod numeral;
pub mod tree;

pub use error::{Error, Result};
