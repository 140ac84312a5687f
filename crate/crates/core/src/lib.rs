//! Certified path decompositions for graphs with bounded circumference.
//!
//! The crate builds explicit path decompositions for 2-connected graphs of
//! bounded circumference, composes decompositions along block-cut trees,
//! extracts complete-binary-tree minors from trees, and runs the
//! decomposition-or-packing dichotomy for highly connected graphs without
//! many disjoint long cycles. Every construction returns a certificate that
//! can be checked independently, and the [`oracles`] module provides exact
//! exponential-time solvers used to cross-check them on small inputs.

pub mod bounds;
pub mod cli;
pub mod corpus;
pub mod decomp;
pub mod ep;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod oracles;
pub mod trees;

pub use decomp::{PathDecomposition, ValidationReport};
pub use error::{Error, Result};
pub use graph::{BlockCutForest, Graph, RootedForest};
