use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::oracles::cycles::{full_mask, shortest_long_cycle};
use crate::oracles::{Deadline, OracleBudget};

/// A vertex set meeting every cycle of length at least `threshold`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HittingSet {
    pub vertices: Vec<usize>,
    pub threshold: usize,
}

/// `13t(k-1)(k-2) + (2t+3)(k-1)`.
pub fn bbr_bound(k: usize, t: usize) -> usize {
    if k == 0 {
        return 0;
    }
    13 * t * (k - 1) * k.saturating_sub(2) + (2 * t + 3) * (k - 1)
}

/// Which hitting-set budget function to report against.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EpBound {
    Bbr,
    /// `ceil(c * t * k * log2 k)` with the constant `c` supplied by the caller.
    Fh { constant: f64 },
}

impl EpBound {
    pub fn value(&self, k: usize, t: usize) -> usize {
        match *self {
            EpBound::Bbr => bbr_bound(k, t),
            EpBound::Fh { constant } => {
                let k = k as f64;
                (constant * t as f64 * k * k.log2().max(0.0)).ceil() as usize
            }
        }
    }
}

/// Minimum hitting set for cycles of length at least `t`; among minimum
/// sets the lexicographically smallest is returned.
pub fn min_hitting_set(g: &Graph, t: usize, budget: &OracleBudget) -> Result<HittingSet> {
    let mut deadline = budget.admit("min_hitting_set", g)?;
    let adj = g.masks();
    let all = full_mask(g.n());
    let start = greedy_packing(&adj, all, t, &mut deadline)?;
    for size in start..=g.n() {
        let mut best: Option<Vec<usize>> = None;
        let mut search = Search { adj: &adj, t, deadline: &mut deadline, best: &mut best };
        search.run(all, 0, size)?;
        if let Some(vertices) = best {
            return Ok(HittingSet { vertices, threshold: t });
        }
    }
    unreachable!("removing every vertex leaves no cycle")
}

struct Search<'a> {
    adj: &'a [u64],
    t: usize,
    deadline: &'a mut Deadline,
    best: &'a mut Option<Vec<usize>>,
}

impl Search<'_> {
    /// `alive`: vertices still present; `frozen`: vertices that may not be
    /// removed any more; `left`: removals still allowed.
    fn run(&mut self, alive: u64, frozen: u64, left: usize) -> Result<()> {
        self.deadline.tick()?;
        let Some(cycle) = shortest_long_cycle(self.adj, alive, self.t, self.deadline)? else {
            let removed = crate::oracles::mask_vertices(!alive & full_mask(self.adj.len()));
            if self.best.as_ref().is_none_or(|b| removed < *b) {
                *self.best = Some(removed);
            }
            return Ok(());
        };
        if left == 0 || (self.t == 3 && rank_bound(self.adj, alive) > left) {
            return Ok(());
        }
        // Every solution removes some cycle vertex; branch on the first one
        // removed in cycle order.
        let mut frozen = frozen;
        for &v in &cycle {
            if frozen >> v & 1 == 0 {
                self.run(alive & !(1 << v), frozen, left - 1)?;
                frozen |= 1 << v;
            }
        }
        Ok(())
    }
}

/// Number of vertex-disjoint long cycles found greedily; every hitting set
/// needs one vertex per cycle.
fn greedy_packing(adj: &[u64], alive: u64, t: usize, deadline: &mut Deadline) -> Result<usize> {
    let mut rest = alive;
    let mut count = 0;
    while let Some(c) = shortest_long_cycle(adj, rest, t, deadline)? {
        count += 1;
        for v in c {
            rest &= !(1u64 << v);
        }
    }
    Ok(count)
}

/// Removals needed to make `alive` acyclic: deleting a vertex of degree `d`
/// lowers the cycle rank by at most `d - 1`.
fn rank_bound(adj: &[u64], alive: u64) -> usize {
    let mut degs = [0u32; 64];
    let mut len = 0;
    let mut edges = 0;
    let mut m = alive;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (adj[v] & alive).count_ones();
        degs[len] = d;
        len += 1;
        edges += d as usize;
    }
    let comps = crate::oracles::mask_components(adj, alive).len();
    let mut rank = (edges / 2 + comps).saturating_sub(len);
    let degs = &mut degs[..len];
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut need = 0;
    for &d in degs.iter() {
        if rank == 0 {
            break;
        }
        rank = rank.saturating_sub(d.saturating_sub(1) as usize);
        need += 1;
    }
    need
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{circumference, transversal};

    #[test]
    fn bound_values() {
        assert_eq!(bbr_bound(1, 3), 0);
        assert_eq!(bbr_bound(2, 3), 9);
        assert_eq!(bbr_bound(3, 3), 96);
        assert_eq!(EpBound::Fh { constant: 2.0 }.value(1, 5), 0);
        assert_eq!(EpBound::Fh { constant: 1.0 }.value(4, 3), 24);
    }

    #[test]
    fn examples() {
        let b = OracleBudget::HITTING_SET;
        assert!(min_hitting_set(&Graph::cycle(5), 6, &b).unwrap().vertices.is_empty());
        assert_eq!(min_hitting_set(&Graph::cycle(5), 5, &b).unwrap().vertices, vec![0]);
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(min_hitting_set(&two, 3, &b).unwrap().vertices, vec![0, 3]);
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..60 {
            let n = rng.gen_range(1..=9);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.insert(u, v);
                    }
                }
            }
            let t = rng.gen_range(3..=5);
            let h = min_hitting_set(&g, t, &OracleBudget::HITTING_SET).unwrap().vertices;
            let ok = |set: &[usize]| {
                let (rest, _) = g.without(set);
                circumference(&rest, &OracleBudget::CYCLES).unwrap() < t
            };
            assert!(ok(&h));
            // Lexicographically first set of that size that works.
            let mut first = None;
            'outer: for mask in 0u32..1 << n {
                if mask.count_ones() as usize != h.len() {
                    continue;
                }
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if ok(&set) {
                    if first.as_ref().is_none_or(|f: &Vec<usize>| set < *f) {
                        first = Some(set);
                    }
                    continue 'outer;
                }
            }
            assert_eq!(first.unwrap(), h);
            if h.len() > 0 {
                for mask in 0u32..1 << n {
                    if (mask.count_ones() as usize) < h.len() {
                        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                        assert!(!ok(&set));
                    }
                }
            }
            if t == 3 {
                assert_eq!(h.len(), transversal(&g, &OracleBudget::TRANSVERSAL).unwrap().len());
            }
        }
    }
}
