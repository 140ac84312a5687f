use std::collections::{BTreeMap, VecDeque};

use crate::decomp::{normalise, validate, PathDecomposition};
use crate::error::{Error, Result};
use super::thm1::thm1_decompose;
use crate::graph::{block_cut_forest, BlockCutForest, Graph};
use crate::trees::rooted_decomposition;

/// `(m+3)(n+1) - 3`.
pub fn lemma2_bound(m: usize, n: usize) -> usize {
    (m + 3) * (n + 1) - 3
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Result {
    pub decomposition: PathDecomposition,
    /// Largest block decomposition width.
    pub m: usize,
    /// Width of the block-cut forest decomposition.
    pub n: usize,
    pub bound: usize,
}

/// One bag per edge for a bridge, a single bag for an isolated vertex.
pub fn canonical_block_decomposition(block: &[usize]) -> PathDecomposition {
    PathDecomposition::new(vec![block.to_vec()])
}

struct Ctx<'a> {
    g: &'a Graph,
    bcf: &'a BlockCutForest,
    tree: Graph,
    blocks: Vec<PathDecomposition>,
}

/// Glues per-block decompositions into one for `g`, guided by a
/// decomposition of the block-cut forest.
///
/// `block_decomps` is keyed by block index and uses host vertex ids; it
/// must cover every 2-connected block, while bridges and isolated vertices
/// fall back to [`canonical_block_decomposition`].
pub fn lemma2_compose(
    g: &Graph,
    bcf: &BlockCutForest,
    forest_decomp: &PathDecomposition,
    block_decomps: &BTreeMap<usize, PathDecomposition>,
) -> Result<Lemma2Result> {
    if *bcf != block_cut_forest(g) {
        return Err(Error::InvalidInput("block-cut forest does not belong to the graph".into()));
    }
    let tree = bcf.forest_graph();
    validate(&tree, forest_decomp)?
        .into_result("block-cut forest decomposition")
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let n = forest_decomp.width()?;

    if let Some(&b) = block_decomps.keys().find(|&&b| b >= bcf.num_blocks()) {
        return Err(Error::InvalidInput(format!("no block {b}")));
    }
    let mut blocks = Vec::with_capacity(bcf.num_blocks());
    let mut m = 0;
    for b in 0..bcf.num_blocks() {
        let d = match block_decomps.get(&b) {
            Some(d) => d.clone().canonical(),
            None if !bcf.is_biconnected_block(b) => canonical_block_decomposition(bcf.block(b)),
            None => return Err(Error::Precondition(format!("missing decomposition for block {b}"))),
        };
        let (sub, map) = bcf.block_subgraph(g, b);
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        if d.bags().iter().flatten().any(|&v| v >= g.n() || local[v] == usize::MAX) {
            return Err(Error::Precondition(format!("decomposition of block {b} uses outside vertices")));
        }
        validate(&sub, &d.mapped(&local))?
            .into_result(&format!("decomposition of block {b}"))
            .map_err(|e| Error::Precondition(e.to_string()))?;
        m = m.max(d.width()?);
        blocks.push(d);
    }

    let ctx = Ctx { g, bcf, tree, blocks };
    let mut parts = Vec::new();
    for comp in ctx.tree.components() {
        let mut in_comp = vec![false; ctx.tree.n()];
        for &v in &comp {
            in_comp[v] = true;
        }
        let d = forest_decomp.restricted(|v| in_comp[v]).canonical();
        parts.push(ctx.compose(&comp, &d)?);
    }
    let decomposition = PathDecomposition::concat(parts);
    let bound = lemma2_bound(m, n);
    validate(g, &decomposition)?
        .into_result("composed decomposition")
        .map_err(|e| Error::Contradiction(e.to_string()))?;
    let width = decomposition.width()?;
    if width > bound {
        return Err(Error::Contradiction(format!("composed width {width} exceeds {bound}")));
    }
    Ok(Lemma2Result { decomposition, m, n, bound })
}

/// [`lemma2_compose`] with its inputs built from `g` alone: a depth-first
/// decomposition of every 2-connected block and a rooted decomposition of
/// every block-cut tree, each rooted at its smallest node.
pub fn compose_blockwise(g: &Graph) -> Result<Lemma2Result> {
    let bcf = block_cut_forest(g);
    let mut blocks = BTreeMap::new();
    for b in 0..bcf.num_blocks() {
        if bcf.is_biconnected_block(b) {
            let (sub, map) = bcf.block_subgraph(g, b);
            blocks.insert(b, thm1_decompose(&sub, None)?.decomposition.mapped(&map));
        }
    }
    let tree = bcf.forest_graph();
    let mut parts = Vec::new();
    for comp in tree.components() {
        let (sub, map) = tree.induced(&comp);
        parts.push(rooted_decomposition(&sub, 0)?.mapped(&map));
    }
    lemma2_compose(g, &bcf, &PathDecomposition::concat(parts), &blocks)
}

impl Ctx<'_> {
    /// Decomposition of the union of the blocks among `nodes`, a connected
    /// node set of the block-cut forest decomposed by `d`.
    fn compose(&self, nodes: &[usize], d: &PathDecomposition) -> Result<PathDecomposition> {
        if nodes.len() == 1 {
            let b = nodes[0];
            if !self.bcf.is_block_node(b) {
                return Err(Error::Contradiction(format!("lone cut node {b}")));
            }
            return Ok(self.blocks[b].clone());
        }
        let mut in_s = vec![false; self.tree.n()];
        for &v in nodes {
            in_s[v] = true;
        }
        let x = d.bags()[0][0];
        let y = d.bags()[d.len() - 1][0];
        let path = self.maximal_path(&in_s, x, y);
        if !self.bcf.is_block_node(path[0]) || !self.bcf.is_block_node(*path.last().unwrap()) {
            return Err(Error::Contradiction("maximal path ends at a cut node".into()));
        }
        let mut on_path = vec![false; self.tree.n()];
        for &v in &path {
            on_path[v] = true;
        }

        // G0: the path blocks with their cut vertices, and after each path
        // cut vertex the blocks hanging off it.
        let mut in_g0 = vec![false; self.tree.n()];
        let mut bags: Vec<Vec<usize>> = Vec::new();
        let s = path.len().div_ceil(2);
        for i in 0..s {
            let b = path[2 * i];
            in_g0[b] = true;
            let mut extra = Vec::new();
            if i > 0 {
                extra.push(self.bcf.cut_vertex_of_node(path[2 * i - 1]));
            }
            if i + 1 < s {
                extra.push(self.bcf.cut_vertex_of_node(path[2 * i + 1]));
            }
            bags.extend(self.blocks[b].with_added(&extra).into_bags());
            if i + 1 < s {
                let c = path[2 * i + 1];
                in_g0[c] = true;
                let v = self.bcf.cut_vertex_of_node(c);
                for &nb in self.tree.neighbors(c) {
                    if in_s[nb] && !on_path[nb] {
                        in_g0[nb] = true;
                        bags.extend(self.blocks[nb].with_added(&[v]).into_bags());
                    }
                }
            }
        }
        let g0_nodes: Vec<usize> = nodes.iter().copied().filter(|&v| in_g0[v]).collect();
        let mut g0_verts: Vec<usize> = g0_nodes
            .iter()
            .filter(|&&b| self.bcf.is_block_node(b))
            .flat_map(|&b| self.bcf.block(b).iter().copied())
            .collect();
        g0_verts.sort_unstable();
        g0_verts.dedup();
        let (g0, map) = self.g.induced(&g0_verts);
        let mut local = vec![usize::MAX; self.g.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let y0 = normalise(&g0, &PathDecomposition::new(bags).mapped(&local))
            .map_err(|e| Error::Contradiction(format!("G0 construction: {e}")))?
            .mapped(&map);

        // The rest: drop G0 nodes, then cut nodes left as leaves.
        let rest: Vec<usize> = nodes.iter().copied().filter(|&v| !in_g0[v]).collect();
        let mut in_rest = vec![false; self.tree.n()];
        for &v in &rest {
            in_rest[v] = true;
        }
        let keep: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&v| {
                self.bcf.is_block_node(v)
                    || self.tree.neighbors(v).iter().filter(|&&w| in_rest[w]).count() >= 2
            })
            .collect();
        let mut in_keep = vec![false; self.tree.n()];
        for &v in &keep {
            in_keep[v] = true;
        }
        let mut is_g0_vertex = vec![false; self.g.n()];
        for &v in &g0_verts {
            is_g0_vertex[v] = true;
        }

        let mut splices: BTreeMap<usize, PathDecomposition> = BTreeMap::new();
        let mut seen = vec![false; self.tree.n()];
        for &start in &keep {
            if seen[start] {
                continue;
            }
            let comp = component(&self.tree, &in_keep, &mut seen, start);
            let mut attach: Vec<usize> = comp
                .iter()
                .filter(|&&b| self.bcf.is_block_node(b))
                .flat_map(|&b| self.bcf.block(b).iter().copied())
                .filter(|&v| is_g0_vertex[v])
                .collect();
            attach.sort_unstable();
            attach.dedup();
            let [w] = attach[..] else {
                return Err(Error::Contradiction(format!(
                    "component of the residual forest meets G0 in {attach:?}"
                )));
            };
            let mut in_comp = vec![false; self.tree.n()];
            for &v in &comp {
                in_comp[v] = true;
            }
            let sub = d.restricted(|v| in_comp[v]).canonical();
            let h = self.compose(&comp, &sub)?;
            if splices.insert(w, h).is_some() {
                return Err(Error::Contradiction(format!("two residual components attach at {w}")));
            }
        }

        // Replace the first bag of each attachment vertex by that bag
        // joined with each bag of the attached component.
        let mut first_owner: BTreeMap<usize, usize> = BTreeMap::new();
        let mut seen_v = vec![false; self.g.n()];
        for (i, bag) in y0.bags().iter().enumerate() {
            for &v in bag {
                if !seen_v[v] {
                    seen_v[v] = true;
                    if splices.contains_key(&v) {
                        first_owner.insert(i, v);
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (i, bag) in y0.bags().iter().enumerate() {
            match first_owner.get(&i) {
                Some(w) => out.extend(splices[w].with_added(bag).into_bags()),
                None => out.push(bag.clone()),
            }
        }
        Ok(PathDecomposition::new(out))
    }

    /// A path through `x` and `y` in the node set, extended at both ends
    /// toward minimum-id neighbors until it cannot grow.
    fn maximal_path(&self, in_s: &[bool], x: usize, y: usize) -> Vec<usize> {
        let mut prev = vec![usize::MAX; self.tree.n()];
        prev[x] = x;
        let mut queue = VecDeque::from([x]);
        while let Some(v) = queue.pop_front() {
            for &w in self.tree.neighbors(v) {
                if in_s[w] && prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![y];
        while *path.last().unwrap() != x {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        let mut used = vec![false; self.tree.n()];
        for &v in &path {
            used[v] = true;
        }
        for front in [false, true] {
            let mut ext = Vec::new();
            let mut v = if front { path[0] } else { *path.last().unwrap() };
            while let Some(&w) = self.tree.neighbors(v).iter().find(|&&w| in_s[w] && !used[w]) {
                used[w] = true;
                ext.push(w);
                v = w;
            }
            if front {
                ext.reverse();
                ext.extend(path);
                path = ext;
            } else {
                path.extend(ext);
            }
        }
        path
    }
}

fn component(tree: &Graph, allowed: &[bool], seen: &mut [bool], start: usize) -> Vec<usize> {
    let mut out = vec![start];
    seen[start] = true;
    let mut i = 0;
    while i < out.len() {
        let v = out[i];
        i += 1;
        for &w in tree.neighbors(v) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{exact_pathwidth, OracleBudget};
    use crate::trees::rooted_decomposition;

    fn compose_default(g: &Graph) -> Lemma2Result {
        let bcf = block_cut_forest(g);
        let tree = bcf.forest_graph();
        let mut parts = Vec::new();
        for comp in tree.components() {
            let (sub, map) = tree.induced(&comp);
            parts.push(rooted_decomposition(&sub, 0).unwrap().mapped(&map));
        }
        let fd = PathDecomposition::concat(parts);
        let mut blocks = BTreeMap::new();
        for b in 0..bcf.num_blocks() {
            if bcf.is_biconnected_block(b) {
                let (sub, map) = bcf.block_subgraph(g, b);
                let w = exact_pathwidth(&sub, &OracleBudget::PATHWIDTH).unwrap();
                blocks.insert(b, w.decomposition.mapped(&map));
            }
        }
        lemma2_compose(g, &bcf, &fd, &blocks).unwrap()
    }

    #[test]
    fn single_block_is_unchanged() {
        let g = Graph::complete(4);
        let bcf = block_cut_forest(&g);
        let d = PathDecomposition::new(vec![vec![0, 1, 2, 3]]);
        let r = lemma2_compose(&g, &bcf, &PathDecomposition::new(vec![vec![0]]), &BTreeMap::from([(0, d.clone())]))
            .unwrap();
        assert_eq!(r.decomposition, d);
        assert_eq!((r.m, r.n, r.bound), (3, 0, 3));
    }

    #[test]
    fn two_triangles() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bcf = block_cut_forest(&g);
        let fd = PathDecomposition::new(vec![vec![0, 2], vec![1, 2]]);
        // A triangle has pathwidth 2, so each block gets a single bag.
        let blocks = BTreeMap::from([
            (0, PathDecomposition::new(vec![vec![0, 1, 2]])),
            (1, PathDecomposition::new(vec![vec![2, 3, 4]])),
        ]);
        let r = lemma2_compose(&g, &bcf, &fd, &blocks).unwrap();
        assert_eq!((r.m, r.n, r.bound), (2, 1, 7));
        assert!(r.decomposition.width().unwrap() <= 7);
    }

    #[test]
    fn star_of_bridges() {
        let r = compose_default(&Graph::star(3));
        assert_eq!((r.m, r.n, r.bound), (1, 1, 5));
        let w = r.decomposition.width().unwrap();
        assert!((1..=5).contains(&w));
    }

    #[test]
    fn mismatched_forest_is_rejected() {
        let g = Graph::path(3);
        let other = block_cut_forest(&Graph::path(4));
        let fd = PathDecomposition::new(vec![vec![0]]);
        assert!(matches!(
            lemma2_compose(&g, &other, &fd, &BTreeMap::new()),
            Err(Error::InvalidInput(_))
        ));
        let bcf = block_cut_forest(&Graph::cycle(4));
        assert!(matches!(
            lemma2_compose(&Graph::cycle(4), &bcf, &fd, &BTreeMap::new()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn random_glued_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let mut g = Graph::new(1);
            let pieces = rng.gen_range(1..8);
            for _ in 0..pieces {
                let at = rng.gen_range(0..g.n());
                let size = rng.gen_range(1..5);
                let base = g.n();
                for _ in 0..size {
                    g.add_vertex();
                }
                // A cycle through `at` and the new vertices, or a bridge.
                let mut ring = vec![at];
                ring.extend(base..base + size);
                for w in ring.windows(2) {
                    g.insert(w[0], w[1]);
                }
                if size >= 2 {
                    g.insert(*ring.last().unwrap(), at);
                    if size >= 3 && rng.gen_bool(0.5) {
                        g.insert(base, base + size - 1);
                    }
                }
            }
            if rng.gen_bool(0.3) {
                g = g.disjoint_union(&Graph::cycle(3));
            }
            let r = compose_default(&g);
            assert!(validate(&g, &r.decomposition).unwrap().valid);
            assert!(r.decomposition.width().unwrap() <= r.bound);
        }
    }
}
