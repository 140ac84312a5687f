use super::{mask_components, Deadline, OracleBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedForest};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreedepthWitness {
    pub treedepth: usize,
    /// Elimination forest of height `treedepth - 1` whose closure contains the graph.
    pub forest: RootedForest,
}

struct Solver<'a> {
    adj: &'a [u64],
    memo: Vec<u8>,
    deadline: Deadline,
}

impl Solver<'_> {
    fn td(&mut self, s: u64) -> Result<u8> {
        if s.count_ones() <= 1 {
            return Ok(s.count_ones() as u8);
        }
        if self.memo[s as usize] != 0 {
            return Ok(self.memo[s as usize]);
        }
        self.deadline.tick()?;
        let comps = mask_components(self.adj, s);
        let value = if comps.len() > 1 {
            let mut worst = 0;
            for c in comps {
                worst = worst.max(self.td(c)?);
            }
            worst
        } else {
            let mut best = u8::MAX;
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                best = best.min(self.td(s & !(1 << v))?);
            }
            best + 1
        };
        self.memo[s as usize] = value;
        Ok(value)
    }

    fn build(&mut self, s: u64, parent: Option<usize>, parents: &mut [Option<usize>]) -> Result<()> {
        for c in mask_components(self.adj, s) {
            let target = self.td(c)?;
            let mut rest = c;
            let root = loop {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if c.count_ones() == 1 || self.td(c & !(1 << v))? + 1 == target {
                    break v;
                }
            };
            parents[root] = parent;
            self.build(c & !(1 << root), Some(root), parents)?;
        }
        Ok(())
    }
}

/// Exact treedepth: 1 for a single vertex, the maximum over components when
/// disconnected, otherwise 1 plus the best single-vertex deletion. Memoised
/// over vertex subsets.
pub fn exact_treedepth(g: &Graph, budget: &OracleBudget) -> Result<TreedepthWitness> {
    let deadline = budget.admit("exact_treedepth", g)?;
    let n = g.n();
    if n > 26 {
        return Err(Error::Budget("exact_treedepth: subset table limited to 26 vertices".into()));
    }
    let adj = g.masks();
    let mut solver = Solver { adj: &adj, memo: vec![0; 1usize << n], deadline };
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let td = solver.td(full)? as usize;
    let mut parents = vec![None; n];
    solver.build(full, None, &mut parents)?;
    let forest = RootedForest::from_parents(parents)?;
    Ok(TreedepthWitness { treedepth: td, forest })
}
