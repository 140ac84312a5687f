//! Isomorph-free generation of all graphs on `n` vertices, optionally
//! restricted to connected, 2-connected or 3-connected graphs.
//!
//! Graphs on `n` vertices are grown from graphs on `n - 1` vertices by
//! adding a vertex. A child is kept only if the new vertex is, up to
//! automorphism, the canonical one to delete: a vertex of minimum
//! (degree, neighbor degree sum) with the largest canonical position.

use std::collections::HashSet;

use super::canon::{canonical, MAX_N};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    All,
    Connected,
    /// 2-connected with at least 3 vertices.
    Biconnected,
    /// 3-connected with at least 4 vertices.
    Triconnected,
}

impl GraphClass {
    /// Class containing every graph obtained by deleting a vertex of
    /// minimum degree.
    fn parent(self) -> GraphClass {
        match self {
            GraphClass::All | GraphClass::Connected => GraphClass::All,
            GraphClass::Biconnected => GraphClass::Connected,
            GraphClass::Triconnected => GraphClass::Biconnected,
        }
    }

    fn min_degree(self) -> usize {
        match self {
            GraphClass::All => 0,
            GraphClass::Connected => 1,
            GraphClass::Biconnected => 2,
            GraphClass::Triconnected => 3,
        }
    }

    fn min_order(self) -> usize {
        match self {
            GraphClass::All | GraphClass::Connected => 1,
            GraphClass::Biconnected => 3,
            GraphClass::Triconnected => 4,
        }
    }

    pub(crate) fn holds(self, adj: &[u32]) -> bool {
        let n = adj.len();
        if n < self.min_order() {
            return false;
        }
        let all = full(n);
        match self {
            GraphClass::All => true,
            GraphClass::Connected => connected(adj, all),
            GraphClass::Biconnected => connected(adj, all) && (0..n).all(|v| connected(adj, all & !(1 << v))),
            GraphClass::Triconnected => {
                connected(adj, all)
                    && (0..n).all(|u| {
                        let a = all & !(1 << u);
                        connected(adj, a) && (u + 1..n).all(|v| connected(adj, a & !(1 << v)))
                    })
            }
        }
    }
}

fn full(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn connected(adj: &[u32], mask: u32) -> bool {
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

pub(crate) fn to_graph(adj: &[u32]) -> Graph {
    let mut g = Graph::new(adj.len());
    for (u, &a) in adj.iter().enumerate() {
        let mut m = a & !full(u + 1);
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            g.insert(u, v);
        }
    }
    g
}

/// Calls `visit` once per isomorphism class of graphs on `n` vertices in
/// `class`. Order is deterministic.
pub fn for_each_graph(n: usize, class: GraphClass, mut visit: impl FnMut(&Graph)) {
    for_each_mask_graph(n, class, |adj| visit(&to_graph(adj)));
}

/// Like [`for_each_graph`] but hands out adjacency bitmasks.
pub(crate) fn for_each_mask_graph(n: usize, class: GraphClass, mut visit: impl FnMut(&[u32])) {
    assert!(n <= MAX_N, "exhaustive generation supports at most {MAX_N} vertices");
    if n == 0 {
        if class == GraphClass::All {
            visit(&[]);
        }
        return;
    }
    let parents = if n == 1 { vec![Vec::new()] } else { collect(n - 1, class.parent()) };
    extend(&parents, class, &mut visit);
}

/// All graphs on `n` vertices in `class`.
pub fn all_graphs(n: usize, class: GraphClass) -> Vec<Graph> {
    let mut out = Vec::new();
    for_each_graph(n, class, |g| out.push(g.clone()));
    out
}

fn collect(n: usize, class: GraphClass) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_mask_graph(n, class, |adj| out.push(adj.to_vec()));
    out
}

fn extend(parents: &[Vec<u32>], class: GraphClass, visit: &mut impl FnMut(&[u32])) {
    let min_deg = class.min_degree();
    let mut child: Vec<u32> = Vec::new();
    let mut seen: HashSet<u128> = HashSet::new();
    for parent in parents {
        let p = parent.len();
        let v = p;
        let deg: Vec<usize> = parent.iter().map(|a| a.count_ones() as usize).collect();
        let symmetric = p > 1 && !canonical(parent).asymmetric;
        seen.clear();
        for s in 0u32..1 << p {
            let d = s.count_ones() as usize;
            if d < min_deg.min(p) {
                continue;
            }
            // The new vertex must have minimum degree in the child.
            let mut ok = true;
            let mut nbr_sum = 0;
            for u in 0..p {
                let du = deg[u] + (s >> u & 1) as usize;
                if du < d {
                    ok = false;
                    break;
                }
                if s >> u & 1 == 1 {
                    nbr_sum += du;
                }
            }
            if !ok {
                continue;
            }
            child.clear();
            child.extend(parent.iter().enumerate().map(|(u, &a)| a | (s >> u & 1) << v));
            child.push(s);
            // Among minimum-degree vertices the new one must also minimize
            // the neighbor degree sum.
            let mut ties = 0;
            for u in 0..p {
                if child[u].count_ones() as usize != d {
                    continue;
                }
                let sum: usize = ones(child[u]).map(|w| child[w].count_ones() as usize).sum();
                if sum < nbr_sum {
                    ok = false;
                    break;
                }
                if sum == nbr_sum {
                    ties += 1;
                }
            }
            if !ok || !class.holds(&child) {
                continue;
            }
            let mut canon = None;
            if ties > 0 {
                let c = canonical(&child);
                let key = |x: usize| {
                    (child[x].count_ones(), ones(child[x]).map(|w| child[w].count_ones()).sum::<u32>())
                };
                let best = key(v);
                let chosen = c.order.iter().rev().map(|&x| x as usize).find(|&x| key(x) == best).unwrap();
                if c.orbit[chosen] != c.orbit[v] {
                    continue;
                }
                canon = Some(c.code);
            }
            if symmetric {
                let code = canon.unwrap_or_else(|| canonical(&child).code);
                if !seen.insert(code) {
                    continue;
                }
            }
            visit(&child);
        }
    }
}

fn ones(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, class: GraphClass) -> usize {
        let mut c = 0;
        for_each_mask_graph(n, class, |_| c += 1);
        c
    }

    #[test]
    fn known_counts() {
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &want) in all.iter().enumerate() {
            assert_eq!(count(n, GraphClass::All), want, "all graphs on {n}");
        }
        let conn = [1, 1, 1, 2, 6, 21, 112, 853];
        for (n, &want) in conn.iter().enumerate().skip(1) {
            assert_eq!(count(n, GraphClass::Connected), want, "connected on {n}");
        }
        assert_eq!(
            (3..=7).map(|n| count(n, GraphClass::Biconnected)).collect::<Vec<_>>(),
            vec![1, 3, 10, 56, 468]
        );
        assert_eq!(
            (4..=7).map(|n| count(n, GraphClass::Triconnected)).collect::<Vec<_>>(),
            vec![1, 3, 17, 136]
        );
    }

    #[test]
    fn outputs_are_pairwise_non_isomorphic() {
        let mut codes = HashSet::new();
        for_each_mask_graph(6, GraphClass::All, |adj| {
            assert!(codes.insert(canonical(adj).code));
        });
        assert_eq!(codes.len(), 156);
    }
}
