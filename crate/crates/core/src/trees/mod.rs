//! Complete binary trees, the rooted-pathwidth recursion on trees, and
//! binary-tree minor extraction.

mod cbt;
mod model;
mod rooted;
mod subdivision;

pub use cbt::{cbt, leaf_distance, LabeledCbt};
pub use model::MinorModel;
pub(crate) use rooted::{decomposition_from_map, extract_from_map};
pub use rooted::{extract_cbt_minor, root_tree, rooted_decomposition, rooted_pw_map, RootedPwMap};
pub use subdivision::{minor_to_subdivision, Subdivision};
