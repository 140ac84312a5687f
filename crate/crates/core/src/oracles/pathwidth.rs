use super::OracleBudget;
use crate::decomp::PathDecomposition;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathwidthWitness {
    pub width: usize,
    /// A vertex ordering whose vertex separation equals `width`.
    pub ordering: Vec<usize>,
    pub decomposition: PathDecomposition,
}

/// Exact pathwidth as the vertex separation number, by dynamic programming
/// over vertex subsets.
///
/// `best[S]` is the least possible maximum boundary over the prefixes of an
/// ordering whose first `|S|` vertices are `S`, where the boundary of a
/// prefix counts its vertices with a neighbor outside it.
pub fn exact_pathwidth(g: &Graph, budget: &OracleBudget) -> Result<PathwidthWitness> {
    let mut deadline = budget.admit("exact_pathwidth", g)?;
    let n = g.n();
    if n > 26 {
        return Err(crate::error::Error::Budget("exact_pathwidth: subset table limited to 26 vertices".into()));
    }
    if n == 0 {
        return Ok(PathwidthWitness { width: 0, ordering: vec![], decomposition: PathDecomposition::default() });
    }
    let adj: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let boundary = |s: u32| -> u8 {
        let mut count = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & !s != 0 {
                count += 1;
            }
        }
        count
    };

    let mut best = vec![u8::MAX; 1usize << n];
    best[0] = 0;
    for s in 1..=full {
        deadline.tick()?;
        let mut inner = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            inner = inner.min(best[(s & !(1 << v)) as usize]);
        }
        best[s as usize] = inner.max(boundary(s));
    }

    let width = best[full as usize] as usize;
    let mut ordering = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let b = boundary(s);
        let v = (0..n)
            .find(|&v| s >> v & 1 == 1 && best[(s & !(1 << v)) as usize].max(b) == best[s as usize])
            .expect("optimal predecessor exists");
        ordering.push(v);
        s &= !(1 << v);
    }
    ordering.reverse();

    let mut bags = Vec::with_capacity(n);
    let mut prefix = 0u32;
    for &v in &ordering {
        let mut bag: Vec<usize> = (0..n).filter(|&u| prefix >> u & 1 == 1 && adj[u] & !prefix != 0).collect();
        bag.push(v);
        bags.push(bag);
        prefix |= 1 << v;
    }
    Ok(PathwidthWitness { width, ordering, decomposition: PathDecomposition::new(bags) })
}
