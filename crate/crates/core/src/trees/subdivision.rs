use std::collections::VecDeque;

use serde::Serialize;

use super::model::MinorModel;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Topological embedding of a pattern: branch vertices plus one host path
/// per pattern edge, internally disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    #[serde(skip)]
    pub pattern: Graph,
    /// Pattern vertex to host vertex.
    pub image: Vec<usize>,
    /// `(a, b, path)` for each pattern edge `a < b`, path from `image[a]` to `image[b]`.
    pub edge_paths: Vec<(usize, usize, Vec<usize>)>,
}

impl Subdivision {
    /// Host vertices used by the embedding, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.image.clone();
        for (_, _, p) in &self.edge_paths {
            v.extend(p);
        }
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn violations(&self, host: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        if self.image.len() != self.pattern.n() {
            out.push("image size differs from pattern size".into());
            return out;
        }
        let mut owner = vec![None; host.n()];
        for (p, &v) in self.image.iter().enumerate() {
            if v >= host.n() {
                out.push(format!("image of {p} out of range"));
                return out;
            }
            if let Some(q) = owner[v].replace(p) {
                out.push(format!("pattern vertices {q} and {p} share image {v}"));
            }
        }
        let mut interior = vec![false; host.n()];
        if self.edge_paths.len() != self.pattern.m() {
            out.push("wrong number of edge paths".into());
        }
        for (a, b, path) in &self.edge_paths {
            if !self.pattern.has_edge(*a, *b) {
                out.push(format!("{a}-{b} is not a pattern edge"));
                continue;
            }
            if path.first() != Some(&self.image[*a]) || path.last() != Some(&self.image[*b]) {
                out.push(format!("path for {a}-{b} has wrong ends"));
                continue;
            }
            if path.windows(2).any(|w| w[0] >= host.n() || w[1] >= host.n() || !host.has_edge(w[0], w[1])) {
                out.push(format!("path for {a}-{b} is not a host path"));
            }
            for &v in &path[1..path.len() - 1] {
                if v >= host.n() {
                    continue;
                }
                if owner[v].is_some() || interior[v] {
                    out.push(format!("path for {a}-{b} reuses vertex {v}"));
                }
                interior[v] = true;
            }
        }
        out
    }

    pub fn is_valid(&self, host: &Graph) -> bool {
        self.violations(host).is_empty()
    }
}

/// Path between `from` and `to` inside `allowed`.
fn path_within(host: &Graph, allowed: &[bool], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; host.n()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &w in host.neighbors(v) {
            if allowed[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Turns a minor model of a max-degree-3 pattern in a tree into a
/// subdivision whose pattern leaves sit on leaves of the tree.
pub fn minor_to_subdivision(t: &Graph, m: &MinorModel) -> Result<Subdivision> {
    if m.pattern.max_degree() > 3 {
        return Err(Error::Precondition("pattern has a vertex of degree above 3".into()));
    }
    if !t.is_forest() {
        return Err(Error::Precondition("host must be acyclic".into()));
    }
    let bad = m.violations(t);
    if !bad.is_empty() {
        return Err(Error::Precondition(format!("invalid minor model: {}", bad.join("; "))));
    }
    let pattern = &m.pattern;
    let n = t.n();
    let mut in_set = vec![false; n];

    // Attachment point of each pattern edge inside each endpoint's set.
    let mut owner = vec![usize::MAX; n];
    for (p, set) in m.branch_sets.iter().enumerate() {
        for &v in set {
            owner[v] = p;
        }
    }
    let edges = pattern.edges();
    let mut attach: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for &(a, b) in &edges {
        let hit = m.branch_sets[a]
            .iter()
            .flat_map(|&x| t.neighbors(x).iter().map(move |&y| (x, y)))
            .find(|&(_, y)| owner[y] == b)
            .expect("valid model realizes every edge");
        attach.push(hit);
    }
    let mut points: Vec<Vec<usize>> = vec![Vec::new(); pattern.n()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        points[a].push(attach[i].0);
        points[b].push(attach[i].1);
    }

    let mut image = vec![0; pattern.n()];
    for (p, set) in m.branch_sets.iter().enumerate() {
        for &v in set {
            in_set[v] = true;
        }
        image[p] = match points[p].as_slice() {
            [] => set[0],
            [x] | [x, _] => *x,
            [x1, x2, x3] => {
                let spine = path_within(t, &in_set, *x1, *x2).expect("branch set is connected");
                let mut on_spine = vec![false; n];
                for &v in &spine {
                    on_spine[v] = true;
                }
                let to_x3 = path_within(t, &in_set, *x3, *x1).expect("branch set is connected");
                *to_x3.iter().find(|&&v| on_spine[v]).expect("reaches the spine")
            }
            _ => unreachable!(),
        };
        for &v in set {
            in_set[v] = false;
        }
    }

    let mut edge_paths = Vec::with_capacity(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        let (x, y) = attach[i];
        let mut path = Vec::new();
        for (p, from, to) in [(a, image[a], x), (b, y, image[b])] {
            for &v in &m.branch_sets[p] {
                in_set[v] = true;
            }
            path.extend(path_within(t, &in_set, from, to).expect("branch set is connected"));
            for &v in &m.branch_sets[p] {
                in_set[v] = false;
            }
        }
        edge_paths.push((a, b, path));
    }

    // Push every pattern leaf outward to a leaf of the host.
    let mut used = vec![false; n];
    for &v in &image {
        used[v] = true;
    }
    for (_, _, p) in &edge_paths {
        for &v in p {
            used[v] = true;
        }
    }
    for p in 0..pattern.n() {
        if pattern.degree(p) > 1 {
            continue;
        }
        let mut walk = Vec::new();
        let mut v = image[p];
        while let Some(&w) = t.neighbors(v).iter().find(|&&w| !used[w]) {
            used[w] = true;
            walk.push(w);
            v = w;
        }
        image[p] = v;
        if let Some(&q) = pattern.neighbors(p).first() {
            let entry = edge_paths
                .iter_mut()
                .find(|(a, b, _)| (*a, *b) == (p.min(q), p.max(q)))
                .expect("edge path exists");
            if entry.0 == p {
                walk.reverse();
                walk.extend(entry.2.drain(..));
                entry.2 = walk;
            } else {
                entry.2.extend(walk);
            }
        }
    }
    let s = Subdivision { pattern: pattern.clone(), image, edge_paths };
    debug_assert!(s.is_valid(t), "{:?}", s.violations(t));
    Ok(s)
}
