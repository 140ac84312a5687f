//! Vertex connectivity through unit-capacity disjoint-path search.

use std::collections::VecDeque;

use super::Graph;

/// Residual network of the vertex-split graph: vertex `v` becomes
/// `2v` (in) and `2v + 1` (out) joined by an arc of capacity one.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * g.n()],
        };
        const BIG: u32 = u32::MAX / 2;
        for v in 0..g.n() {
            let c = if v == s || v == t { BIG } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, BIG);
            net.arc(2 * v + 1, 2 * u, BIG);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// One BFS augmentation; returns false when no augmenting path remains.
    fn augment(&mut self, src: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.out[x] {
                let y = self.head[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    if y == sink {
                        let mut cur = sink;
                        while cur != src {
                            let e = via[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.head[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths between two
/// distinct non-adjacent vertices, stopping early once `cap` paths are found.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "local connectivity needs a non-adjacent pair");
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while flow < cap && net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    flow
}

/// The vertex connectivity of `g`: `n - 1` for complete graphs, 0 for
/// disconnected or single-vertex graphs, otherwise the minimum local
/// connectivity over non-adjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// True if `g` has at least `k + 1` vertices and no vertex cut of size `< k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    if n < k + 1 || !g.is_connected() {
        return false;
    }
    for s in 0..n {
        if g.degree(s) < k {
            return false;
        }
    }
    if k <= 3 && n <= 64 {
        return no_small_cut(&g.masks(), k - 1);
    }
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Bitmask check that deleting any `size <= 2` vertices leaves a connected
/// graph. Assumes at least `size + 2` vertices.
fn no_small_cut(adj: &[u64], size: usize) -> bool {
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let connected = |mask: u64| {
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
    };
    let n = adj.len();
    match size {
        0 => connected(all),
        1 => (0..n).all(|u| connected(all & !(1 << u))),
        _ => (0..n).all(|u| (u + 1..n).all(|v| connected(all & !(1 << u) & !(1 << v)))),
    }
}
