use std::collections::VecDeque;

use serde::Serialize;

use super::packing::CyclePacking;
use crate::error::{Error, Result};
use crate::graph::{BlockCutForest, Graph};

/// A cycle in the block-cut forest closed through an outside vertex:
/// `nodes` alternates block and cut nodes and starts and ends at blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeCycle {
    pub anchor: usize,
    pub nodes: Vec<usize>,
}

/// Path from `from` to `to` inside `block` avoiding `banned`.
fn block_path(g: &Graph, block: &[usize], banned: &[usize], from: usize, to: usize) -> Option<Vec<usize>> {
    let inside = |v: usize| block.binary_search(&v).is_ok() && !banned.contains(&v);
    if !inside(from) || !inside(to) {
        return None;
    }
    let mut prev = std::collections::HashMap::from([(from, from)]);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = prev[&x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(v) {
            if inside(w) && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Turns tree cycles into disjoint cycles of `g`. `bcf` must describe a
/// subgraph of `g` in host ids (anchors lie outside it).
///
/// Inside each block the route avoids every vertex that also lies in a
/// block of another tree cycle, except its own cut vertices.
pub fn reroute_cycles(
    g: &Graph,
    bcf: &BlockCutForest,
    tree_cycles: &[TreeCycle],
    min_length: usize,
) -> Result<CyclePacking> {
    let mut owner_blocks: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (ci, tc) in tree_cycles.iter().enumerate() {
        if tc.nodes.len() % 2 == 0 {
            return Err(Error::InvalidInput(format!("tree cycle {ci} must start and end at blocks")));
        }
        for (pos, &node) in tc.nodes.iter().enumerate() {
            if node >= bcf.num_nodes() || bcf.is_block_node(node) != (pos % 2 == 0) {
                return Err(Error::InvalidInput(format!("tree cycle {ci} does not alternate blocks and cuts")));
            }
            if pos % 2 == 0 {
                for &v in bcf.block(node) {
                    owner_blocks[v].push(ci);
                }
            }
        }
    }
    let mut cycles = Vec::with_capacity(tree_cycles.len());
    for (ci, tc) in tree_cycles.iter().enumerate() {
        let cuts: Vec<usize> = tc.nodes.iter().skip(1).step_by(2).map(|&c| bcf.cut_vertex_of_node(c)).collect();
        let banned_in = |block: &[usize]| -> Vec<usize> {
            block
                .iter()
                .copied()
                .filter(|v| owner_blocks[*v].iter().any(|&o| o != ci) && !cuts.contains(v))
                .collect()
        };
        let blocks: Vec<&[usize]> = tc.nodes.iter().step_by(2).map(|&b| bcf.block(b)).collect();
        let r = blocks.len();
        let fail = |what: String| Error::Contradiction(format!("rerouting cycle {ci} at anchor {}: {what}", tc.anchor));

        let first_banned = banned_in(blocks[0]);
        let entry_skip: Vec<usize> = cuts.first().copied().into_iter().collect();
        let x = blocks[0]
            .iter()
            .copied()
            .find(|&v| g.has_edge(tc.anchor, v) && !first_banned.contains(&v) && !entry_skip.contains(&v))
            .ok_or_else(|| fail("no entry vertex in the first block".into()))?;
        let last_banned = banned_in(blocks[r - 1]);
        let exit_skip: Vec<usize> = cuts.last().copied().into_iter().chain([x]).collect();
        let y = blocks[r - 1]
            .iter()
            .copied()
            .find(|&v| g.has_edge(tc.anchor, v) && !last_banned.contains(&v) && !exit_skip.contains(&v))
            .ok_or_else(|| fail("no exit vertex in the last block".into()))?;

        let mut ends = vec![x];
        ends.extend(&cuts);
        ends.push(y);
        let mut cycle = vec![tc.anchor];
        for (bi, block) in blocks.iter().enumerate() {
            let banned = banned_in(block);
            let p = block_path(g, block, &banned, ends[bi], ends[bi + 1])
                .ok_or_else(|| fail(format!("no path {} -> {} in block {bi}", ends[bi], ends[bi + 1])))?;
            cycle.extend(&p[usize::from(bi > 0)..]);
        }
        cycles.push(cycle);
    }
    let packing = CyclePacking { cycles, min_length };
    packing.verify(g)?;
    Ok(packing)
}
