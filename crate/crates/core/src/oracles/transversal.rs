use super::{mask_components, Deadline, OracleBudget};
use crate::error::Result;
use crate::graph::Graph;

pub(crate) fn is_forest_mask(adj: &[u64], allowed: u64) -> bool {
    let mut edges = 0u32;
    let mut rest = allowed;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        edges += (adj[v] & allowed).count_ones();
    }
    edges / 2 + mask_components(adj, allowed).len() as u32 == allowed.count_ones()
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns true; returns that subset.
pub(crate) fn find_combination(
    n: usize,
    k: usize,
    deadline: &mut Deadline,
    mut f: impl FnMut(&[usize]) -> bool,
) -> Result<Option<Vec<usize>>> {
    if k > n {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        deadline.tick()?;
        if f(&idx) {
            return Ok(Some(idx));
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(None);
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A minimum set whose removal leaves `g` acyclic (lexicographically first
/// among minimum sets).
pub fn transversal(g: &Graph, budget: &OracleBudget) -> Result<Vec<usize>> {
    let mut deadline = budget.admit("transversal_number", g)?;
    let adj = g.masks();
    let n = g.n();
    let full = super::cycles::full_mask(n);
    for k in 0..=n {
        let found = find_combination(n, k, &mut deadline, |set| {
            let removed = set.iter().fold(0u64, |m, &v| m | 1 << v);
            is_forest_mask(&adj, full & !removed)
        })?;
        if let Some(set) = found {
            return Ok(set);
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

pub fn transversal_number(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    transversal(g, budget).map(|s| s.len())
}
