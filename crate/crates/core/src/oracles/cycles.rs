//! Backtracking searches for long cycles and long paths.

use super::{Deadline, OracleBudget};
use crate::error::Result;
use crate::graph::Graph;

/// Vertices reachable from `v` inside `free`, counting `v` itself.
fn reach(adj: &[u64], v: usize, free: u64) -> u64 {
    let mut comp = 1u64 << v;
    let mut frontier = comp;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[x] & free & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp
}

/// Cycle search rooted at the smallest cycle vertex `start`; only vertices
/// in `free` (all larger than `start`) may be used.
struct CycleSearch<'a> {
    adj: &'a [u64],
    start: usize,
    path: [u8; 64],
    len: usize,
    best: [u8; 64],
    best_len: usize,
    /// Stop as soon as a cycle of at least this many vertices is found.
    target: usize,
    /// Only accept cycles of at most this many vertices.
    cap: usize,
    deadline: &'a mut Deadline,
}

impl CycleSearch<'_> {
    fn run(&mut self, v: usize, free: u64) -> Result<bool> {
        self.deadline.tick()?;
        let len = self.len;
        if len >= 3 && len <= self.cap && self.adj[v] >> self.start & 1 == 1 && len > self.best_len {
            self.best[..len].copy_from_slice(&self.path[..len]);
            self.best_len = len;
            if len >= self.target {
                return Ok(true);
            }
        }
        if len >= self.cap {
            return Ok(false);
        }
        let reachable = reach(self.adj, v, free) & !(1u64 << v);
        if len + (reachable.count_ones() as usize) <= self.best_len {
            return Ok(false);
        }
        let mut next = self.adj[v] & free;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path[self.len] = w as u8;
            self.len += 1;
            let done = self.run(w, free & !(1u64 << w))?;
            self.len -= 1;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Longest cycle among the vertices of `allowed`, stopping early once one with
/// at least `target` vertices is found and ignoring cycles longer than `cap`.
pub(crate) fn cycle_search(
    adj: &[u64],
    allowed: u64,
    target: usize,
    cap: usize,
    deadline: &mut Deadline,
) -> Result<Vec<usize>> {
    let mut search =
        CycleSearch { adj, start: 0, path: [0; 64], len: 0, best: [0; 64], best_len: 0, target, cap, deadline };
    let mut rest = allowed;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (rest.count_ones() as usize) < search.best_len {
            break;
        }
        search.start = s;
        search.path[0] = s as u8;
        search.len = 1;
        if search.run(s, rest)? {
            break;
        }
    }
    Ok(search.best[..search.best_len].iter().map(|&v| v as usize).collect())
}

/// A longest cycle of `g` as a vertex sequence (empty if `g` is acyclic).
pub fn longest_cycle(g: &Graph, budget: &OracleBudget) -> Result<Vec<usize>> {
    let mut deadline = budget.admit("circumference", g)?;
    let adj = g.masks();
    cycle_search(&adj, full_mask(g.n()), usize::MAX, usize::MAX, &mut deadline)
}

/// Length of a longest cycle, or 0 when `g` is acyclic.
pub fn circumference(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    longest_cycle(g, budget).map(|c| c.len())
}

/// A shortest cycle among those of length at least `t` inside `allowed`.
pub(crate) fn shortest_long_cycle(
    adj: &[u64],
    allowed: u64,
    t: usize,
    deadline: &mut Deadline,
) -> Result<Option<Vec<usize>>> {
    let t = t.max(3);
    if is_forest(adj, allowed) {
        return Ok(None);
    }
    for len in t..=allowed.count_ones() as usize {
        let c = cycle_search(adj, allowed, len, len, deadline)?;
        if c.len() == len {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// A cycle of length at least `t` in `g`, preferring the shortest such cycle.
pub fn find_cycle_at_least(g: &Graph, t: usize, budget: &OracleBudget) -> Result<Option<Vec<usize>>> {
    let mut deadline = budget.admit("find_cycle_at_least", g)?;
    shortest_long_cycle(&g.masks(), full_mask(g.n()), t, &mut deadline)
}

fn is_forest(adj: &[u64], allowed: u64) -> bool {
    let mut edges = 0;
    let mut m = allowed;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        edges += (adj[v] & allowed).count_ones();
    }
    let mut comps = 0;
    let mut rest = allowed;
    while rest != 0 {
        rest &= !reach(adj, rest.trailing_zeros() as usize, rest);
        comps += 1;
    }
    edges / 2 + comps == allowed.count_ones()
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

struct PathSearch<'a> {
    adj: &'a [u64],
    path: Vec<usize>,
    best: Vec<usize>,
    n: usize,
    deadline: &'a mut Deadline,
}

impl PathSearch<'_> {
    fn run(&mut self, v: usize, free: u64) -> Result<()> {
        self.deadline.tick()?;
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.best.len() == self.n {
            return Ok(());
        }
        let reachable = reach(self.adj, v, free) & !(1u64 << v);
        if self.path.len() + reachable.count_ones() as usize <= self.best.len() {
            return Ok(());
        }
        let mut next = self.adj[v] & free;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path.push(w);
            self.run(w, free & !(1u64 << w))?;
            self.path.pop();
        }
        Ok(())
    }
}

/// A longest path of `g` as a vertex sequence.
pub fn longest_path(g: &Graph, budget: &OracleBudget) -> Result<Vec<usize>> {
    let mut deadline = budget.admit("longest_path", g)?;
    let adj = g.masks();
    let n = g.n();
    let mut search = PathSearch { adj: &adj, path: Vec::new(), best: Vec::new(), n, deadline: &mut deadline };
    for s in 0..n {
        search.path = vec![s];
        search.run(s, full_mask(n) & !(1u64 << s))?;
        if search.best.len() == n {
            break;
        }
    }
    Ok(search.best)
}

/// Number of edges on a longest path.
pub fn longest_path_edges(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    longest_path(g, budget).map(|p| p.len().saturating_sub(1))
}
