use super::Graph;
use crate::error::{Error, Result};

/// A rooted forest given by parent links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
    height: Vec<usize>,
    roots: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl RootedForest {
    /// Builds a forest from parent links, rejecting cycles and bad ids.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for (v, p) in parent.iter().enumerate() {
            match *p {
                None => roots.push(v),
                Some(p) if p >= n || p == v => {
                    return Err(Error::InvalidInput(format!("bad parent {p} for vertex {v}")))
                }
                Some(p) => children[p].push(v),
            }
        }
        let mut height = vec![usize::MAX; n];
        let mut stack: Vec<usize> = roots.clone();
        for &r in &roots {
            height[r] = 0;
        }
        let mut reached = roots.len();
        while let Some(v) = stack.pop() {
            for &c in &children[v] {
                height[c] = height[v] + 1;
                reached += 1;
                stack.push(c);
            }
        }
        if reached != n {
            return Err(Error::InvalidInput("parent links contain a cycle".into()));
        }
        Ok(RootedForest { parent, height, roots, children })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Depth of `v` in edges below its root.
    pub fn depth(&self, v: usize) -> usize {
        self.height[v]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// Children of `v` in ascending id order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Height of the forest: the largest vertex depth (0 when empty).
    pub fn height(&self) -> usize {
        self.height.iter().copied().max().unwrap_or(0)
    }

    pub fn is_ancestor(&self, a: usize, mut d: usize) -> bool {
        while self.height[d] > self.height[a] {
            d = self.parent[d].expect("non-root has a parent");
        }
        a == d
    }

    /// Vertices in depth-first preorder, trees in root order, children ascending.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        for &r in &self.roots {
            let mut stack = vec![r];
            while let Some(v) = stack.pop() {
                out.push(v);
                stack.extend(self.children[v].iter().rev());
            }
        }
        out
    }

    /// Root-to-`v` path, root first.
    pub fn path_to_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// The forest itself as an undirected graph.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                g.insert(v, p);
            }
        }
        g
    }

    /// The closure: every ancestor-descendant pair becomes an edge.
    pub fn closure(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for v in 0..self.n() {
            let mut cur = v;
            while let Some(p) = self.parent[cur] {
                g.insert(v, p);
                cur = p;
            }
        }
        g
    }
}

/// Depth-first spanning tree of a connected graph, visiting neighbors in
/// ascending id order.
pub fn dfs_tree(g: &Graph, root: usize) -> Result<RootedForest> {
    let n = g.n();
    if root >= n {
        return Err(Error::InvalidInput(format!("root {root} out of range")));
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![(root, 0usize)];
    let mut visited = 1;
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        if let Some(&w) = g.neighbors(v).get(i) {
            top.1 += 1;
            if !seen[w] {
                seen[w] = true;
                visited += 1;
                parent[w] = Some(v);
                stack.push((w, 0));
            }
        } else {
            stack.pop();
        }
    }
    if visited != n {
        return Err(Error::Precondition("dfs_tree needs a connected graph".into()));
    }
    RootedForest::from_parents(parent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree_edges(f: &RootedForest) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = (0..f.n())
            .filter_map(|v| f.parent(v).map(|p| (p.min(v), p.max(v))))
            .collect();
        e.sort_unstable();
        e
    }

    #[test]
    fn dfs_examples() {
        let t = dfs_tree(&Graph::complete(3), 0).unwrap();
        assert_eq!(tree_edges(&t), vec![(0, 1), (1, 2)]);
        assert_eq!(t.height(), 2);

        let star = dfs_tree(&Graph::star(3), 0).unwrap();
        assert_eq!(star.height(), 1);

        let p4 = dfs_tree(&Graph::path(4), 0).unwrap();
        assert_eq!(tree_edges(&p4), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.height(), 3);

        let disconnected = Graph::path(2).disjoint_union(&Graph::new(1));
        assert!(matches!(dfs_tree(&disconnected, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn non_tree_edges_join_ancestor_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..15);
            let mut g = Graph::path(n);
            for _ in 0..rng.gen_range(0..2 * n) {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v {
                    g.insert(u, v);
                }
            }
            let root = rng.gen_range(0..n);
            let t = dfs_tree(&g, root).unwrap();
            for (u, v) in g.edges() {
                assert!(t.is_ancestor(u, v) || t.is_ancestor(v, u));
            }
        }
    }

    #[test]
    fn from_parents_rejects_cycles() {
        assert!(RootedForest::from_parents(vec![Some(1), Some(0)]).is_err());
        assert!(RootedForest::from_parents(vec![Some(0)]).is_err());
        let f = RootedForest::from_parents(vec![None, Some(0), Some(0), None]).unwrap();
        assert_eq!(f.preorder(), vec![0, 1, 2, 3]);
        assert_eq!(f.closure().m(), 2);
        assert_eq!(f.path_to_root(2), vec![0, 2]);
    }
}
