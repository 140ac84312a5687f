use super::{mask_components, mask_connected, mask_vertices, Deadline, OracleBudget, MINOR_PATTERN_MAX};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::trees::MinorModel;

/// Exhaustive branch-set search.
///
/// Any model can be grown until every host component it touches is fully
/// used (an unused vertex next to a branch set can join it), so the search
/// only looks for models whose union is a union of host components. That
/// turns the last branch set into a forced choice and gives a strong
/// component-count prune at every level.
struct Search<'a> {
    adj: &'a [u64],
    pattern: &'a Graph,
    order: Vec<usize>,
    /// Connected host vertex sets with their open neighborhoods, smallest first.
    sets: Vec<(u64, u64)>,
    host_comps: Vec<u64>,
    chosen: Vec<u64>,
    deadline: Deadline,
}

impl Search<'_> {
    fn nbr(&self, set: u64) -> u64 {
        mask_vertices(set).iter().fold(0, |m, &v| m | self.adj[v]) & !set
    }

    fn remainder(&self, used: u64) -> u64 {
        self.host_comps
            .iter()
            .filter(|&&k| k & used != 0)
            .fold(0, |r, &k| r | (k & !used))
    }

    fn fits(&self, p: usize, set: u64, nbr: u64) -> bool {
        self.pattern
            .neighbors(p)
            .iter()
            .all(|&q| self.chosen[q] == 0 || nbr & self.chosen[q] != 0)
            && self.chosen.iter().all(|&c| c & set == 0)
    }

    fn feasible(&self, level: usize, used: u64, live: u64) -> bool {
        let left = self.order.len() - level - 1;
        let rem = self.remainder(used);
        if mask_components(self.adj, rem).len() > left {
            return false;
        }
        let free = live & !used;
        let free_comps = mask_components(self.adj, free);
        for &u in &self.order[level + 1..] {
            let needs: Vec<u64> = self
                .pattern
                .neighbors(u)
                .iter()
                .filter(|&&q| self.chosen[q] != 0)
                .map(|&q| self.chosen[q])
                .collect();
            if needs.is_empty() {
                continue;
            }
            let ok = free_comps.iter().any(|&k| {
                let kn = self.nbr(k);
                needs.iter().all(|&b| kn & b != 0)
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn run(&mut self, level: usize, used: u64, live: u64) -> Result<bool> {
        self.deadline.tick()?;
        let p = self.order[level];
        if level + 1 == self.order.len() {
            let rem = self.remainder(used);
            let forced: Vec<u64> = if rem != 0 {
                vec![rem]
            } else {
                self.host_comps.iter().copied().filter(|&k| k & used == 0).collect()
            };
            for set in forced {
                if mask_connected(self.adj, set) && self.fits(p, set, self.nbr(set)) {
                    self.chosen[p] = set;
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        for i in 0..self.sets.len() {
            let (set, nbr) = self.sets[i];
            if set & used != 0 || !self.fits(p, set, nbr) {
                continue;
            }
            self.chosen[p] = set;
            if self.feasible(level, used | set, live) && self.run(level + 1, used | set, live)? {
                return Ok(true);
            }
            self.chosen[p] = 0;
        }
        Ok(false)
    }
}

/// Searches for `pattern` as a minor of `g`, returning a model if one exists.
pub fn minor_contains(g: &Graph, pattern: &Graph, budget: &OracleBudget) -> Result<Option<MinorModel>> {
    let deadline = budget.admit("minor_contains", g)?;
    if pattern.n() > MINOR_PATTERN_MAX {
        return Err(Error::Budget(format!(
            "minor_contains: pattern has {} vertices, ceiling is {MINOR_PATTERN_MAX}",
            pattern.n()
        )));
    }
    if g.n() > 24 {
        return Err(Error::Budget("minor_contains: host limited to 24 vertices".into()));
    }
    if pattern.n() == 0 {
        return Ok(Some(MinorModel::new(pattern.clone(), vec![])));
    }
    if pattern.n() > g.n() || pattern.m() > g.m() {
        return Ok(None);
    }
    let adj = g.masks();

    // With minimum pattern degree at least two, a host vertex of degree at
    // most one can always be dropped from its branch set.
    let min_pattern_degree = (0..pattern.n()).map(|v| pattern.degree(v)).min().unwrap_or(0);
    let mut live = super::cycles::full_mask(g.n());
    if min_pattern_degree >= 2 {
        loop {
            let weak = mask_vertices(live)
                .into_iter()
                .find(|&v| (adj[v] & live).count_ones() <= 1);
            match weak {
                Some(v) => live &= !(1u64 << v),
                None => break,
            }
        }
    }
    let live_adj: Vec<u64> = adj.iter().map(|&a| a & live).collect();
    if (live.count_ones() as usize) < pattern.n() {
        return Ok(None);
    }

    let mut sets: Vec<(u64, u64)> = Vec::new();
    let mut sub = live;
    loop {
        if sub != 0 && mask_connected(&live_adj, sub) {
            let nbr = mask_vertices(sub).iter().fold(0, |m, &v| m | live_adj[v]) & !sub;
            sets.push((sub, nbr));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & live;
    }
    sets.sort_by_key(|&(s, _)| (s.count_ones(), s));

    // Place high-degree pattern vertices first, then keep the placed part
    // as connected as possible.
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = vec![false; pattern.n()];
    while order.len() < pattern.n() {
        let next = (0..pattern.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }

    let mut search = Search {
        adj: &live_adj,
        pattern,
        order,
        sets,
        host_comps: mask_components(&live_adj, live),
        chosen: vec![0; pattern.n()],
        deadline,
    };
    if search.run(0, 0, live)? {
        let sets = search.chosen.iter().map(|&m| mask_vertices(m)).collect();
        Ok(Some(MinorModel::new(pattern.clone(), sets)))
    } else {
        Ok(None)
    }
}
