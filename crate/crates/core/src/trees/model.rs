use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A minor model: one connected, nonempty branch set per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub pattern: Graph,
    /// Indexed by pattern vertex; each set sorted.
    pub branch_sets: Vec<Vec<usize>>,
    /// `(pattern vertex, host vertex)` that must lie in that branch set.
    pub root_anchor: Option<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct MinorModelJson {
    pattern: Vec<[usize; 2]>,
    branch_sets: BTreeMap<String, Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    root_anchor: Option<[usize; 2]>,
}

impl MinorModel {
    pub fn new(pattern: Graph, mut branch_sets: Vec<Vec<usize>>) -> Self {
        for b in &mut branch_sets {
            b.sort_unstable();
            b.dedup();
        }
        MinorModel { pattern, branch_sets, root_anchor: None }
    }

    /// Every invariant violation found against `host` (empty when valid).
    pub fn violations(&self, host: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        if self.branch_sets.len() != self.pattern.n() {
            out.push(format!(
                "{} branch sets for a pattern on {} vertices",
                self.branch_sets.len(),
                self.pattern.n()
            ));
            return out;
        }
        let mut owner = vec![usize::MAX; host.n()];
        for (p, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                out.push(format!("branch set of {p} is empty"));
                continue;
            }
            for &v in set {
                if v >= host.n() {
                    out.push(format!("branch set of {p} mentions vertex {v} outside the host"));
                    return out;
                }
                if owner[v] != usize::MAX {
                    out.push(format!("host vertex {v} lies in branch sets {} and {p}", owner[v]));
                }
                owner[v] = p;
            }
            let (sub, _) = host.induced(set);
            if !sub.is_connected() {
                out.push(format!("branch set of {p} is not connected"));
            }
        }
        for (a, b) in self.pattern.edges() {
            let realized = self.branch_sets[a]
                .iter()
                .any(|&x| host.neighbors(x).iter().any(|&y| self.branch_sets[b].binary_search(&y).is_ok()));
            if !realized {
                out.push(format!("pattern edge {a}-{b} has no host edge between its branch sets"));
            }
        }
        if let Some((p, v)) = self.root_anchor {
            if self.branch_sets.get(p).is_none_or(|s| s.binary_search(&v).is_err()) {
                out.push(format!("anchor vertex {v} is not in the branch set of {p}"));
            }
        }
        out
    }

    pub fn is_valid(&self, host: &Graph) -> bool {
        self.violations(host).is_empty()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let raw = MinorModelJson {
            pattern: self.pattern.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            branch_sets: self
                .branch_sets
                .iter()
                .enumerate()
                .map(|(p, s)| (p.to_string(), s.clone()))
                .collect(),
            root_anchor: self.root_anchor.map(|(p, v)| [p, v]),
        };
        serde_json::to_value(raw).expect("minor model serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MinorModelJson = serde_json::from_str(text)?;
        let n = raw.branch_sets.len();
        let mut sets = vec![Vec::new(); n];
        for (k, s) in raw.branch_sets {
            let p: usize = k
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad pattern vertex key '{k}'")))?;
            if p >= n {
                return Err(Error::InvalidInput(format!("pattern vertex {p} out of range")));
            }
            sets[p] = s;
        }
        let pattern = Graph::from_edges(n, &raw.pattern.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())?;
        let mut m = MinorModel::new(pattern, sets);
        m.root_anchor = raw.root_anchor.map(|[p, v]| (p, v));
        Ok(m)
    }
}
