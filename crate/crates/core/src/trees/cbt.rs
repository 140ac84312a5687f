use crate::error::{Error, Result};
use crate::graph::Graph;

/// Complete binary tree in level order: the root is 0 and the children of
/// `v` are `2v + 1` and `2v + 2`. Leaves are labeled `1..=2^h` from left to
/// right, which in level order is simply their position on the last level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledCbt {
    graph: Graph,
    height: usize,
}

pub fn cbt(height: usize) -> LabeledCbt {
    assert!(height < 31, "complete binary tree of height {height} is too large");
    let n = (1usize << (height + 1)) - 1;
    let mut graph = Graph::new(n);
    for v in 1..n {
        graph.insert((v - 1) / 2, v);
    }
    LabeledCbt { graph, height }
}

impl LabeledCbt {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn num_leaves(&self) -> usize {
        1 << self.height
    }

    /// Vertex carrying leaf label `label` (1-based).
    pub fn leaf(&self, label: usize) -> Result<usize> {
        if label == 0 || label > self.num_leaves() {
            return Err(Error::InvalidInput(format!(
                "leaf label {label} outside 1..={}",
                self.num_leaves()
            )));
        }
        Ok(self.num_leaves() + label - 2)
    }

    pub fn label_of(&self, v: usize) -> Option<usize> {
        let first = self.num_leaves() - 1;
        (first..self.graph.n()).contains(&v).then(|| v - first + 1)
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        (v > 0).then(|| (v - 1) / 2)
    }

    pub fn depth(&self, v: usize) -> usize {
        (usize::BITS - 1 - (v + 1).leading_zeros()) as usize
    }
}

/// Tree distance between the leaves labeled `a <= b`, checked against the
/// lower bound `2 log2(b - a + 1)`.
pub fn leaf_distance(t: &LabeledCbt, a: usize, b: usize) -> Result<usize> {
    if a > b {
        return Err(Error::InvalidInput(format!("leaf labels out of order: {a} > {b}")));
    }
    let (mut u, mut w) = (t.leaf(a)?, t.leaf(b)?);
    let mut dist = 0;
    while u != w {
        u = (u - 1) / 2;
        w = (w - 1) / 2;
        dist += 2;
    }
    // dist >= 2 log2(x)  <=>  2^dist >= x^2
    let x = (b - a + 1) as u128;
    if dist < 128 && (1u128 << dist) < x * x {
        return Err(Error::Contradiction(format!(
            "leaves {a} and {b} are only {dist} apart"
        )));
    }
    Ok(dist)
}
