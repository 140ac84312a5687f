//! The two constructive pathwidth bounds: depth-first decompositions of
//! 2-connected graphs with bounded circumference, and the block-cut
//! composition.

mod lemma2;
mod thm1;

pub use lemma2::{canonical_block_decomposition, compose_blockwise, lemma2_bound, lemma2_compose, Lemma2Result};
pub use thm1::{thm1_bound, thm1_decompose, Thm1Certificate};
