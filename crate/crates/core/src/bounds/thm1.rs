use serde_json::json;

use crate::decomp::{forest_closure_decomposition, validate, PathDecomposition};
use crate::error::{Error, Result};
use crate::graph::{dfs_tree, is_k_connected, Graph, RootedForest};
use crate::oracles::{circumference, OracleBudget};

/// `floor(t/2) * (t-1)`.
pub fn thm1_bound(t: usize) -> usize {
    (t / 2) * t.saturating_sub(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm1Certificate {
    pub decomposition: PathDecomposition,
    pub circumference: usize,
    pub dfs_height: usize,
    pub bound: usize,
    pub tree: RootedForest,
}

impl Thm1Certificate {
    pub fn width(&self) -> usize {
        self.dfs_height
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "width": self.dfs_height,
            "bags": self.decomposition.bags(),
            "meta": {
                "t": self.circumference,
                "bound": self.bound,
                "dfsHeight": self.dfs_height,
            }
        })
    }
}

/// Decomposes a 2-connected graph along a depth-first tree rooted at 0.
///
/// `t` is the circumference; when absent it is computed exactly, which only
/// works on small graphs. A supplied `t` is cross-checked through the spans
/// of non-tree edges.
pub fn thm1_decompose(g: &Graph, t: Option<usize>) -> Result<Thm1Certificate> {
    if g.n() < 3 || !is_k_connected(g, 2) {
        return Err(Error::Precondition("needs a 2-connected graph on at least 3 vertices".into()));
    }
    let t = match t {
        Some(t) => t,
        None => circumference(g, &OracleBudget::CYCLES)?,
    };
    let tree = dfs_tree(g, 0)?;
    for (u, v) in g.edges() {
        let span = tree.depth(u).abs_diff(tree.depth(v));
        if span + 1 > t {
            return Err(Error::Contradiction(format!(
                "edge {u}-{v} has span {span}, so the graph has a cycle longer than t = {t}"
            )));
        }
    }
    let bound = thm1_bound(t);
    let dfs_height = tree.height();
    if dfs_height > bound {
        return Err(Error::Contradiction(format!(
            "depth-first tree has height {dfs_height} above {bound}"
        )));
    }
    let decomposition = forest_closure_decomposition(&tree);
    validate(g, &decomposition)?
        .into_result("depth-first closure decomposition")
        .map_err(|e| Error::Contradiction(e.to_string()))?;
    Ok(Thm1Certificate { decomposition, circumference: t, dfs_height, bound, tree })
}
