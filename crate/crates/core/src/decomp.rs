//! Path decompositions: validation, width, normalisation and the
//! forest-closure construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedForest};

/// An ordered sequence of bags. Bags are kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathDecomposition {
    bags: Vec<Vec<usize>>,
}

/// JSON certificate layout shared by every decomposition output.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionJson {
    pub width: i64,
    pub bags: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    MissingVertex { vertex: usize },
    UncoveredEdge { u: usize, v: usize },
    /// `bags` lists every bag index containing `vertex`.
    BrokenInterval { vertex: usize, bags: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport { valid: violations.is_empty(), violations }
    }

    /// Turns a failed report into a verification error.
    pub fn into_result(self, what: &str) -> Result<()> {
        if self.valid {
            Ok(())
        } else {
            Err(Error::Verification(format!("{what}: {:?}", self.violations)))
        }
    }
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn into_bags(self) -> Vec<Vec<usize>> {
        self.bags
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.iter().all(Vec::is_empty)
    }

    /// Largest bag size minus one. Fails when there is no nonempty bag.
    pub fn width(&self) -> Result<usize> {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .filter(|&s| s > 0)
            .map(|s| s - 1)
            .ok_or_else(|| Error::InvalidInput("width of an empty decomposition".into()))
    }

    /// Drops empty bags.
    pub fn canonical(mut self) -> Self {
        self.bags.retain(|b| !b.is_empty());
        self
    }

    /// Adds `extra` to every bag.
    pub fn with_added(&self, extra: &[usize]) -> Self {
        PathDecomposition::new(
            self.bags.iter().map(|b| b.iter().chain(extra).copied().collect()).collect(),
        )
    }

    /// Renames vertices through `map` (new id = `map[old]`).
    pub fn mapped(&self, map: &[usize]) -> Self {
        PathDecomposition::new(
            self.bags.iter().map(|b| b.iter().map(|&v| map[v]).collect()).collect(),
        )
    }

    /// Keeps only vertices accepted by `keep`, then drops empty bags.
    pub fn restricted(&self, keep: impl Fn(usize) -> bool) -> Self {
        PathDecomposition::new(
            self.bags.iter().map(|b| b.iter().copied().filter(|&v| keep(v)).collect()).collect(),
        )
        .canonical()
    }

    pub fn concat(parts: impl IntoIterator<Item = PathDecomposition>) -> Self {
        PathDecomposition { bags: parts.into_iter().flat_map(|d| d.bags).collect() }
    }

    /// Index of the first bag containing each vertex (`None` if absent).
    pub fn first_bags(&self, n: usize) -> Vec<Option<usize>> {
        let mut first = vec![None; n];
        for (i, b) in self.bags.iter().enumerate() {
            for &v in b {
                if v < n && first[v].is_none() {
                    first[v] = Some(i);
                }
            }
        }
        first
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            width: self.width().map(|w| w as i64).unwrap_or(-1),
            bags: self.bags.clone(),
        }
    }

    /// Reads a certificate, returning the decomposition and its claimed width.
    pub fn from_json(text: &str) -> Result<(Self, i64)> {
        let raw: DecompositionJson = serde_json::from_str(text)?;
        Ok((PathDecomposition::new(raw.bags), raw.width))
    }
}

/// Checks the three path decomposition axioms literally and reports every
/// violated instance.
pub fn validate(g: &Graph, d: &PathDecomposition) -> Result<ValidationReport> {
    let n = g.n();
    let mut occurs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::InvalidInput(format!(
                    "bag {i} mentions vertex {v}, graph has {n} vertices"
                )));
            }
            occurs[v].push(i);
        }
    }
    let mut violations = Vec::new();
    for (v, idx) in occurs.iter().enumerate() {
        match (idx.first(), idx.last()) {
            (None, _) => violations.push(Violation::MissingVertex { vertex: v }),
            (Some(&a), Some(&b)) if b - a + 1 != idx.len() => {
                violations.push(Violation::BrokenInterval { vertex: v, bags: idx.clone() })
            }
            _ => {}
        }
    }
    for (u, v) in g.edges() {
        let covered = d.bags.iter().any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok());
        if !covered {
            violations.push(Violation::UncoveredEdge { u, v });
        }
    }
    Ok(ValidationReport::from_violations(violations))
}

/// Splits bags until no two vertices share their first bag, without
/// changing the width. Within a bag the smallest clashing vertex is split
/// off first, so the output is deterministic.
pub fn normalise(g: &Graph, d: &PathDecomposition) -> Result<PathDecomposition> {
    let report = validate(g, d)?;
    if !report.valid {
        return Err(Error::Precondition(format!(
            "normalise needs a valid decomposition: {:?}",
            report.violations
        )));
    }
    let d = d.clone().canonical();
    let mut seen = vec![false; g.n()];
    let mut out = Vec::with_capacity(d.len());
    for bag in d.bags {
        let fresh: Vec<usize> = bag.iter().copied().filter(|&v| !seen[v]).collect();
        for &v in &fresh {
            seen[v] = true;
        }
        // Splitting off fresh[0], then fresh[1], ... yields, in order:
        // bag - fresh[..k-1], bag - fresh[..k-2], ..., bag.
        for cut in (0..fresh.len().max(1)).rev() {
            let removed = &fresh[..cut];
            out.push(bag.iter().copied().filter(|v| !removed.contains(v)).collect());
        }
    }
    Ok(PathDecomposition::new(out))
}

/// Path decomposition of the closure of `f`: one bag per vertex holding its
/// root path, vertices in depth-first preorder. Its width equals the height
/// of `f`.
pub fn forest_closure_decomposition(f: &RootedForest) -> PathDecomposition {
    PathDecomposition::new(f.preorder().into_iter().map(|v| f.path_to_root(v)).collect())
}
