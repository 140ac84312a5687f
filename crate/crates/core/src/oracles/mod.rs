//! Exact exponential-time reference solvers.
//!
//! Every oracle returns a witness alongside its value and refuses inputs
//! above its vertex ceiling instead of answering approximately.

pub(crate) mod cycles;
mod minor;
mod packing;
mod pathwidth;
mod transversal;
mod treedepth;

use std::time::{Duration, Instant};

pub use cycles::{circumference, find_cycle_at_least, longest_cycle, longest_path, longest_path_edges};
pub use minor::minor_contains;
pub use packing::max_long_cycle_packing;
pub use pathwidth::{exact_pathwidth, PathwidthWitness};
pub use transversal::{transversal, transversal_number};
pub use treedepth::{exact_treedepth, TreedepthWitness};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size and time ceiling for one oracle call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub time_limit: Option<Duration>,
}

impl OracleBudget {
    pub const PATHWIDTH: OracleBudget = OracleBudget::vertices(20);
    pub const TREEDEPTH: OracleBudget = OracleBudget::vertices(16);
    pub const CYCLES: OracleBudget = OracleBudget::vertices(20);
    pub const TRANSVERSAL: OracleBudget = OracleBudget::vertices(18);
    pub const PACKING: OracleBudget = OracleBudget::vertices(14);
    pub const HITTING_SET: OracleBudget = OracleBudget::vertices(18);
    /// Host ceiling; patterns are capped separately at [`MINOR_PATTERN_MAX`].
    pub const MINOR_HOST: OracleBudget = OracleBudget::vertices(16);

    pub const fn vertices(max_vertices: usize) -> Self {
        OracleBudget { max_vertices, time_limit: None }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub(crate) fn admit(&self, what: &str, g: &Graph) -> Result<Deadline> {
        if g.n() > self.max_vertices {
            return Err(Error::Budget(format!(
                "{what}: {} vertices exceeds the ceiling of {}",
                g.n(),
                self.max_vertices
            )));
        }
        Ok(Deadline { what: what.to_string(), end: self.time_limit.map(|d| Instant::now() + d), ticks: 0 })
    }
}

pub const MINOR_PATTERN_MAX: usize = 6;

/// Wall-clock guard polled from inner loops.
pub(crate) struct Deadline {
    what: String,
    end: Option<Instant>,
    ticks: u32,
}

impl Deadline {
    #[cfg(test)]
    pub(crate) fn unlimited() -> Self {
        Deadline { what: String::new(), end: None, ticks: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0xfff == 0 {
            if let Some(end) = self.end {
                if Instant::now() > end {
                    return Err(Error::Budget(format!("{}: time limit exceeded", self.what)));
                }
            }
        }
        Ok(())
    }
}

/// Vertex set of a bitmask, ascending.
pub(crate) fn mask_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Connected components of the subgraph induced by `mask`.
pub(crate) fn mask_components(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & mask & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

pub(crate) fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut comp = mask & mask.wrapping_neg();
    let mut frontier = comp;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp == mask
}
