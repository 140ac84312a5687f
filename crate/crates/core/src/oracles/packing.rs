use super::OracleBudget;
use crate::ep::CyclePacking;
use crate::error::Result;
use crate::graph::Graph;

/// For every vertex set `S`, the endpoints `v` of Hamiltonian paths of
/// `G[S]` that start at the smallest vertex of `S`.
struct HamTable {
    ends: Vec<u32>,
}

impl HamTable {
    fn new(adj: &[u32], n: usize) -> Self {
        let mut ends = vec![0u32; 1usize << n];
        for s in 1u32..(1u32 << n) {
            let start = s.trailing_zeros();
            if s.count_ones() == 1 {
                ends[s as usize] = s;
                continue;
            }
            let mut acc = 0;
            let mut rest = s & !(1 << start);
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                if ends[(s & !(1 << v)) as usize] & adj[v as usize] != 0 {
                    acc |= 1 << v;
                }
            }
            ends[s as usize] = acc;
        }
        HamTable { ends }
    }

    fn has_cycle(&self, adj: &[u32], s: u32) -> bool {
        s.count_ones() >= 3 && self.ends[s as usize] & adj[s.trailing_zeros() as usize] != 0
    }

    /// A Hamiltonian cycle of `G[s]`, assuming [`has_cycle`](Self::has_cycle).
    fn cycle(&self, adj: &[u32], s: u32) -> Vec<usize> {
        let start = s.trailing_zeros() as usize;
        let mut cur = (self.ends[s as usize] & adj[start]).trailing_zeros() as usize;
        let mut set = s;
        let mut seq = vec![cur];
        while cur != start {
            set &= !(1 << cur);
            cur = (self.ends[set as usize] & adj[cur]).trailing_zeros() as usize;
            seq.push(cur);
        }
        seq.reverse();
        seq
    }
}

/// A maximum-cardinality set of vertex-disjoint cycles of length at least `t`.
///
/// Every vertex set carrying a spanning cycle is found with a subset
/// Hamiltonicity table; the packing is then a maximum family of disjoint
/// such sets, found by dynamic programming over subsets.
pub fn max_long_cycle_packing(g: &Graph, t: usize, budget: &OracleBudget) -> Result<CyclePacking> {
    let mut deadline = budget.admit("max_long_cycle_packing", g)?;
    let n = g.n();
    if n > 20 {
        return Err(crate::error::Error::Budget("max_long_cycle_packing: limited to 20 vertices".into()));
    }
    let adj: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
    let table = HamTable::new(&adj, n);
    let t = t.max(3) as u32;

    let size = 1usize << n;
    let mut best = vec![0u8; size];
    let mut choice = vec![0u32; size];
    for u in 1u32..(size as u32) {
        deadline.tick()?;
        let low = u & u.wrapping_neg();
        let mut value = best[(u & !low) as usize];
        let mut pick = 0;
        let rest = u & !low;
        let mut sub = rest;
        loop {
            let s = sub | low;
            if s.count_ones() >= t && table.has_cycle(&adj, s) {
                let cand = 1 + best[(u & !s) as usize];
                if cand > value {
                    value = cand;
                    pick = s;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[u as usize] = value;
        choice[u as usize] = pick;
    }

    let mut cycles = Vec::new();
    let mut u = (size - 1) as u32;
    while u != 0 {
        let pick = choice[u as usize];
        if pick == 0 {
            u &= u - 1;
        } else {
            cycles.push(table.cycle(&adj, pick));
            u &= !pick;
        }
    }
    Ok(CyclePacking { cycles, min_length: t as usize })
}
