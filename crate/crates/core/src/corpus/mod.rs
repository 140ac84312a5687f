//! Graph corpora for property tests: exhaustive isomorph-free enumeration
//! and seeded random families.

mod canon;
mod exhaustive;
mod random;

pub use exhaustive::{all_graphs, for_each_graph, GraphClass};
pub use random::{block_glued, random_graph, random_tree, random_two_connected};
