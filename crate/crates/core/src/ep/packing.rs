use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pairwise vertex-disjoint cycles, each of length at least `min_length`.
/// A cycle is listed as its vertex sequence; the closing edge is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePacking {
    pub cycles: Vec<Vec<usize>>,
    pub min_length: usize,
}

impl CyclePacking {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        let mut used = vec![usize::MAX; g.n()];
        for (i, c) in self.cycles.iter().enumerate() {
            if c.len() < 3 {
                out.push(format!("cycle {i} has only {} vertices", c.len()));
            }
            if c.len() < self.min_length {
                out.push(format!("cycle {i} has length {} < {}", c.len(), self.min_length));
            }
            for (j, &v) in c.iter().enumerate() {
                if v >= g.n() {
                    out.push(format!("cycle {i} mentions vertex {v} outside the graph"));
                    return out;
                }
                if used[v] == i {
                    out.push(format!("cycle {i} repeats vertex {v}"));
                } else if used[v] != usize::MAX {
                    out.push(format!("cycles {} and {i} share vertex {v}", used[v]));
                }
                used[v] = i;
                let w = c[(j + 1) % c.len()];
                if c.len() >= 2 && w < g.n() && !g.has_edge(v, w) {
                    out.push(format!("cycle {i} uses non-edge {v}-{w}"));
                }
            }
        }
        out
    }

    pub fn verify(&self, g: &Graph) -> Result<()> {
        let v = self.violations(g);
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Verification(format!("cycle packing: {}", v.join("; "))))
        }
    }
}
