//! Long-cycle packing versus decomposition for highly connected graphs.

mod hitting;
mod packing;
mod params;
mod pipeline;
mod reroute;

pub use hitting::{bbr_bound, min_hitting_set, EpBound, HittingSet};
pub use packing::CyclePacking;
pub use params::{pipeline_params, PipelineParams};
pub use pipeline::{thm2_pipeline, thm2_pipeline_with, Branch, GoodPair, PipelineOutcome, PipelineTrace};
pub use reroute::{reroute_cycles, TreeCycle};
