//! Canonical labeling by partition refinement and individualization, with
//! automorphism pruning. Graphs are given as adjacency bitmasks, n <= 16.

pub(crate) const MAX_N: usize = 16;

/// Canonical code, canonical order and automorphism orbits of a graph.
pub(crate) struct CanonResult {
    pub code: u128,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<u8>,
    /// `orbit[v]` is the smallest vertex in the orbit of `v`.
    pub orbit: Vec<u8>,
    pub asymmetric: bool,
}

fn refine(adj: &[u32], cells: &mut Vec<u32>) {
    let mut queue: Vec<u32> = cells.clone();
    let mut qi = 0;
    while qi < queue.len() {
        let w = queue[qi];
        qi += 1;
        let mut c = 0;
        while c < cells.len() {
            let cell = cells[c];
            if cell.count_ones() == 1 {
                c += 1;
                continue;
            }
            // Group members by the number of neighbors in the splitter.
            let mut groups: [u32; MAX_N + 1] = [0; MAX_N + 1];
            let mut m = cell;
            let mut distinct = 0;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let k = (adj[v] & w).count_ones() as usize;
                if groups[k] == 0 {
                    distinct += 1;
                }
                groups[k] |= 1 << v;
            }
            if distinct == 1 {
                c += 1;
                continue;
            }
            let parts: Vec<u32> = groups.iter().copied().filter(|&g| g != 0).collect();
            cells.splice(c..c + 1, parts.iter().copied());
            queue.extend(parts.iter().copied());
            c += parts.len();
        }
    }
}

fn code_of(adj: &[u32], order: &[u8]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for i in 0..n {
        let row = adj[order[i] as usize];
        for &oj in &order[i + 1..n] {
            code = code << 1 | u128::from(row >> oj & 1);
        }
    }
    code
}

fn find(parent: &mut [u8], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

fn union(parent: &mut [u8], a: u8, b: u8) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    }
}

struct Search<'a> {
    adj: &'a [u32],
    n: usize,
    first: Option<(u128, Vec<u8>)>,
    best: Option<(u128, Vec<u8>)>,
    gens: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u32]) {
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let code = code_of(self.adj, &order);
        let Some((first_code, first_order)) = &self.first else {
            self.first = Some((code, order.clone()));
            self.best = Some((code, order));
            return;
        };
        let to_gen = |from: &[u8]| {
            let mut g = vec![0u8; self.n];
            for (i, &v) in from.iter().enumerate() {
                g[v as usize] = order[i];
            }
            g
        };
        if code == *first_code {
            let g = to_gen(first_order);
            self.gens.push(g);
            return;
        }
        let (best_code, best_order) = self.best.as_ref().unwrap();
        if code == *best_code {
            let g = to_gen(best_order);
            self.gens.push(g);
        } else if code > *best_code {
            self.best = Some((code, order));
        }
    }

    fn run(&mut self, cells: Vec<u32>, fixed: &mut Vec<u8>) {
        let Some(target_idx) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[target_idx];
        let mut explored: Vec<u8> = Vec::new();
        let mut m = target;
        while m != 0 {
            let w = m.trailing_zeros() as u8;
            m &= m - 1;
            if !explored.is_empty() {
                let mut parent: Vec<u8> = (0..self.n as u8).collect();
                for g in &self.gens {
                    if fixed.iter().all(|&f| g[f as usize] == f) {
                        for (x, &y) in g.iter().enumerate() {
                            union(&mut parent, x as u8, y);
                        }
                    }
                }
                let rw = find(&mut parent, w);
                if explored.iter().any(|&e| find(&mut parent, e) == rw) {
                    continue;
                }
            }
            explored.push(w);
            let mut next = cells.clone();
            next.splice(target_idx..target_idx + 1, [1u32 << w, target & !(1 << w)]);
            refine(self.adj, &mut next);
            fixed.push(w);
            self.run(next, fixed);
            fixed.pop();
        }
    }
}

pub(crate) fn canonical(adj: &[u32]) -> CanonResult {
    let n = adj.len();
    assert!(n <= MAX_N, "canonical labeling supports at most {MAX_N} vertices");
    if n == 0 {
        return CanonResult { code: 0, order: Vec::new(), orbit: Vec::new(), asymmetric: true };
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // Start from the degree partition, cells in increasing degree.
    let mut by_deg: [u32; MAX_N] = [0; MAX_N];
    for (v, a) in adj.iter().enumerate() {
        by_deg[a.count_ones() as usize] |= 1 << v;
    }
    let mut cells: Vec<u32> = by_deg.iter().copied().filter(|&c| c != 0).collect();
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), all);
    refine(adj, &mut cells);
    let mut s = Search { adj, n, first: None, best: None, gens: Vec::new() };
    s.run(cells, &mut Vec::new());
    let mut parent: Vec<u8> = (0..n as u8).collect();
    for g in &s.gens {
        for (x, &y) in g.iter().enumerate() {
            union(&mut parent, x as u8, y);
        }
    }
    let orbit = (0..n as u8).map(|v| find(&mut parent, v)).collect();
    let (code, order) = s.best.unwrap();
    CanonResult { code, order, orbit, asymmetric: s.gens.is_empty() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn masks(g: &Graph) -> Vec<u32> {
        g.masks().into_iter().map(|m| m as u32).collect()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..400 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.insert(u, v);
                    }
                }
            }
            let c = canonical(&masks(&g));
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            let d = canonical(&masks(&h));
            assert_eq!(c.code, d.code);
            // The orbit partition is carried along by the relabeling.
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(c.orbit[u] == c.orbit[v], d.orbit[perm[u]] == d.orbit[perm[v]]);
                }
            }
        }
    }

    #[test]
    fn distinguishes_and_finds_orbits() {
        let c6 = canonical(&masks(&Graph::cycle(6)));
        let two = canonical(&masks(&Graph::cycle(3).disjoint_union(&Graph::cycle(3))));
        assert_ne!(c6.code, two.code);
        assert!(c6.orbit.iter().all(|&o| o == 0));
        let p4 = canonical(&masks(&Graph::path(4)));
        assert_eq!(p4.orbit, vec![0, 1, 1, 0]);
        let k = canonical(&masks(&Graph::complete(10)));
        assert!(k.orbit.iter().all(|&o| o == 0));
        let asym = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (4, 1)]).unwrap();
        let _ = canonical(&masks(&asym));
        let petersen = crate::gadgets::petersen();
        assert!(canonical(&masks(&petersen)).orbit.iter().all(|&o| o == 0));
    }
}
