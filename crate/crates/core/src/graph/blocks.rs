use super::Graph;

/// Blocks and cut vertices of a graph, with their incidence forest.
///
/// Forest node ids: block `b` is node `b`, cut vertex number `c` (an index
/// into [`cut_vertices`](Self::cut_vertices)) is node `num_blocks() + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutForest {
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    block_cuts: Vec<Vec<usize>>,
}

/// Block-cut forest of the whole graph.
pub fn block_cut_forest(g: &Graph) -> BlockCutForest {
    BlockCutForest::of_subgraph(g, &vec![true; g.n()])
}

impl BlockCutForest {
    /// Block-cut forest of the subgraph induced by the vertices with
    /// `keep[v]`, expressed in the host's vertex ids.
    pub fn of_subgraph(g: &Graph, keep: &[bool]) -> Self {
        let n = g.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut vstack: Vec<usize> = Vec::new();

        for root in (0..n).filter(|&v| keep[v]) {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            if !g.neighbors(root).iter().any(|&w| keep[w]) {
                blocks.push(vec![root]);
                continue;
            }
            vstack.push(root);
            // (vertex, parent, next neighbor index)
            let mut frames = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (v, parent, ref mut idx)) = frames.last_mut() {
                if let Some(&w) = g.neighbors(v).get(*idx) {
                    *idx += 1;
                    if !keep[w] || w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        vstack.push(w);
                        frames.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    frames.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            let mut block = vec![parent];
                            loop {
                                let x = vstack.pop().expect("vertex stack underflow");
                                block.push(x);
                                if x == v {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            vstack.clear();
        }
        blocks.sort();

        let mut count = vec![0usize; n];
        for b in &blocks {
            for &v in b {
                count[v] += 1;
            }
        }
        let cut_vertices: Vec<usize> = (0..n).filter(|&v| count[v] >= 2).collect();
        let mut cut_index = vec![usize::MAX; n];
        for (i, &c) in cut_vertices.iter().enumerate() {
            cut_index[c] = i;
        }
        let block_cuts = blocks
            .iter()
            .map(|b| b.iter().filter_map(|&v| (cut_index[v] != usize::MAX).then_some(cut_index[v])).collect())
            .collect();
        BlockCutForest { blocks, cut_vertices, block_cuts }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    /// Cut-vertex indices lying in block `b`.
    pub fn cuts_of_block(&self, b: usize) -> &[usize] {
        &self.block_cuts[b]
    }

    pub fn num_nodes(&self) -> usize {
        self.blocks.len() + self.cut_vertices.len()
    }

    pub fn is_block_node(&self, node: usize) -> bool {
        node < self.blocks.len()
    }

    /// Forest node of the cut vertex with host id `v`, if it is one.
    pub fn cut_node_of(&self, v: usize) -> Option<usize> {
        self.cut_vertices.binary_search(&v).ok().map(|i| self.blocks.len() + i)
    }

    /// Host vertex represented by a cut node.
    pub fn cut_vertex_of_node(&self, node: usize) -> usize {
        self.cut_vertices[node - self.blocks.len()]
    }

    /// (block node, cut node) incidences, sorted.
    pub fn incidences(&self) -> Vec<(usize, usize)> {
        let nb = self.blocks.len();
        let mut out = Vec::new();
        for (b, cuts) in self.block_cuts.iter().enumerate() {
            out.extend(cuts.iter().map(|&c| (b, nb + c)));
        }
        out
    }

    /// The incidence forest as a graph on node ids.
    pub fn forest_graph(&self) -> Graph {
        let mut g = Graph::new(self.num_nodes());
        for (b, c) in self.incidences() {
            g.insert(b, c);
        }
        g
    }

    /// Whether block `b` is 2-connected (as opposed to a bridge or an
    /// isolated vertex).
    pub fn is_biconnected_block(&self, b: usize) -> bool {
        self.blocks[b].len() >= 3
    }

    /// Edges of block `b`: all host edges between its vertices.
    pub fn block_edges(&self, g: &Graph, b: usize) -> Vec<(usize, usize)> {
        let verts = &self.blocks[b];
        let mut out = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if g.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Block `b` as a standalone graph, with the map back to host ids.
    pub fn block_subgraph(&self, g: &Graph, b: usize) -> (Graph, Vec<usize>) {
        g.induced(&self.blocks[b])
    }
}
