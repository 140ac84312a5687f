//! Deterministic generators for the example families: binary trees with
//! dominant vertices, the outerplanar family, disjoint cycles, a few named
//! graphs, and block trees with hubs for the packing branch.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_k_connected, Graph};
use crate::oracles::{minor_contains, transversal_number, OracleBudget};
use crate::trees::cbt;

/// `cbt(h)` plus `d` mutually adjacent vertices adjacent to everything.
pub fn cbt_plus_dominants(h: usize, d: usize) -> Graph {
    let mut g = cbt(h).into_graph();
    add_dominants(&mut g, d);
    g
}

fn add_dominants(g: &mut Graph, d: usize) -> Vec<usize> {
    let mut hubs = Vec::with_capacity(d);
    for _ in 0..d {
        let v = g.add_vertex();
        for u in 0..v {
            g.insert(u, v);
        }
        hubs.push(v);
    }
    hubs
}

/// `G_0 = K3`; `G_{i+1}` adds, for every edge `vw` of the outer cycle of
/// `G_i`, a new vertex adjacent to `v` and `w`.
pub fn outerplanar_family(i: usize) -> Result<Graph> {
    if i > 6 {
        return Err(Error::Budget(format!("outerplanar_family({i}) is too large; the limit is 6")));
    }
    let mut g = Graph::complete(3);
    let mut outer = vec![0, 1, 2];
    for _ in 0..i {
        let mut next = Vec::with_capacity(2 * outer.len());
        for idx in 0..outer.len() {
            let (v, w) = (outer[idx], outer[(idx + 1) % outer.len()]);
            let x = g.add_vertex();
            g.insert(v, x);
            g.insert(w, x);
            next.extend([v, x]);
        }
        outer = next;
    }
    Ok(g)
}

/// `k` disjoint copies of `C_t`.
pub fn disjoint_cycles(t: usize, k: usize) -> Result<Graph> {
    if t < 3 || k < 1 {
        return Err(Error::InvalidInput(format!("disjoint_cycles needs t >= 3 and k >= 1, got t={t}, k={k}")));
    }
    let mut g = Graph::new(0);
    for _ in 0..k {
        g = g.disjoint_union(&Graph::cycle(t));
    }
    Ok(g)
}

/// `K_{2,2,2}` on parts `{0,1}, {2,3}, {4,5}` minus the triangle `0-2-4`.
pub fn q_graph() -> Graph {
    let mut g = Graph::new(6);
    for u in 0..6 {
        for v in u + 1..6 {
            if u / 2 != v / 2 && ![(0, 2), (0, 4), (2, 4)].contains(&(u, v)) {
                g.insert(u, v);
            }
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.insert(i, (i + 1) % 5);
        g.insert(i, i + 5);
        g.insert(5 + i, 5 + (i + 2) % 5);
    }
    g
}

pub fn named(name: &str) -> Result<Graph> {
    Ok(match name.to_ascii_lowercase().as_str() {
        "q" => q_graph(),
        "k4" => Graph::complete(4),
        "k23" => Graph::complete_bipartite(2, 3),
        "k3uk3" => Graph::complete(3).disjoint_union(&Graph::complete(3)),
        "petersen" => petersen(),
        _ => return Err(Error::InvalidInput(format!("unknown graph name {name:?}"))),
    })
}

/// Shape of the blocks in [`hub_block_tree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockShape {
    /// The block tree is `cbt(depth)` itself, every block a bridge.
    Bridge,
    /// One triangle per node of `cbt(depth)`; a child triangle shares one
    /// vertex with its parent.
    Triangle,
}

/// A graph whose block-cut tree has the shape of `cbt(depth)`, plus `hubs`
/// mutually adjacent vertices adjacent to every other vertex. Returns the
/// graph and the hub ids, which form a hitting set for cycles longer than
/// the blocks.
pub fn hub_block_tree(depth: usize, hubs: usize, shape: BlockShape) -> (Graph, Vec<usize>) {
    let mut g = match shape {
        BlockShape::Bridge => cbt(depth).into_graph(),
        BlockShape::Triangle => {
            let nodes = (1usize << (depth + 1)) - 1;
            // Triangle of node u: top vertex, left corner, right corner.
            let mut g = Graph::new(3);
            let mut corners = vec![(1usize, 2usize); nodes];
            g.insert(0, 1);
            g.insert(1, 2);
            g.insert(0, 2);
            for u in 1..nodes {
                let p = (u - 1) / 2;
                let top = if u % 2 == 1 { corners[p].0 } else { corners[p].1 };
                let l = g.add_vertex();
                let r = g.add_vertex();
                g.insert(top, l);
                g.insert(l, r);
                g.insert(top, r);
                corners[u] = (l, r);
            }
            g
        }
    };
    let hub_ids = add_dominants(&mut g, hubs);
    (g, hub_ids)
}

/// Outcome of the lower-bound construction for a pattern: a
/// `tau`-connected graph with transversal number `tau - 1`, hence without
/// the pattern as a minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop1Certificate {
    #[serde(skip)]
    pub graph: Graph,
    pub height: usize,
    #[serde(rename = "tauPattern")]
    pub tau_pattern: usize,
    #[serde(rename = "tauGraph")]
    pub tau_graph: usize,
    pub connectivity: usize,
    #[serde(rename = "minorAbsent")]
    pub minor_absent: bool,
    pub explanation: String,
}

pub fn proposition1_certificate(pattern: &Graph, h: usize) -> Result<Prop1Certificate> {
    let tau = transversal_number(pattern, &OracleBudget::TRANSVERSAL)?;
    if tau == 0 {
        return Err(Error::Precondition("pattern is acyclic".into()));
    }
    let graph = cbt_plus_dominants(h, tau - 1);
    let tau_graph = transversal_number(&graph, &OracleBudget::TRANSVERSAL)?;
    if !is_k_connected(&graph, tau) {
        return Err(Error::Contradiction(format!("construction is not {tau}-connected")));
    }
    if tau_graph != tau - 1 {
        return Err(Error::Contradiction(format!("construction has transversal number {tau_graph}, expected {}", tau - 1)));
    }
    let found = minor_contains(&graph, pattern, &OracleBudget::MINOR_HOST)?;
    if let Some(m) = found {
        return Err(Error::Contradiction(format!("pattern found as a minor: {:?}", m.branch_sets)));
    }
    let explanation = format!(
        "cbt({h}) plus {} dominant vertices is {tau}-connected and has transversal number {}; \
         a minor of it has transversal number at most {} < {tau}, so the pattern is not a minor",
        tau - 1,
        tau - 1,
        tau - 1
    );
    Ok(Prop1Certificate {
        graph,
        height: h,
        tau_pattern: tau,
        tau_graph,
        connectivity: tau,
        minor_absent: true,
        explanation,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetName {
    CbtDominants,
    OuterplanarFamily,
    DisjointCycles,
    HubTree,
    HubTriangles,
    Q,
    K4,
    K23,
    K3uK3,
    Petersen,
}

impl FromStr for GadgetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "cbt_dominants" => GadgetName::CbtDominants,
            "outerplanar_family" | "outerplanar" => GadgetName::OuterplanarFamily,
            "disjoint_cycles" => GadgetName::DisjointCycles,
            "hub_tree" => GadgetName::HubTree,
            "hub_triangles" => GadgetName::HubTriangles,
            "q" => GadgetName::Q,
            "k4" => GadgetName::K4,
            "k23" => GadgetName::K23,
            "k3uk3" => GadgetName::K3uK3,
            "petersen" => GadgetName::Petersen,
            _ => return Err(Error::InvalidInput(format!("unknown gadget {s:?}"))),
        })
    }
}

/// A gadget name with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSpec {
    pub name: GadgetName,
    pub params: Vec<usize>,
}

impl GadgetSpec {
    pub fn build(&self) -> Result<Graph> {
        let want = match self.name {
            GadgetName::CbtDominants | GadgetName::DisjointCycles | GadgetName::HubTree | GadgetName::HubTriangles => 2,
            GadgetName::OuterplanarFamily => 1,
            _ => 0,
        };
        if self.params.len() != want {
            return Err(Error::InvalidInput(format!(
                "{:?} takes {want} parameters, got {}",
                self.name,
                self.params.len()
            )));
        }
        let p = &self.params;
        if matches!(self.name, GadgetName::CbtDominants | GadgetName::HubTree | GadgetName::HubTriangles)
            && p[0] > 16
        {
            return Err(Error::Budget(format!("height {} is too large; the limit is 16", p[0])));
        }
        Ok(match self.name {
            GadgetName::CbtDominants => cbt_plus_dominants(p[0], p[1]),
            GadgetName::OuterplanarFamily => outerplanar_family(p[0])?,
            GadgetName::DisjointCycles => disjoint_cycles(p[0], p[1])?,
            GadgetName::HubTree => hub_block_tree(p[0], p[1], BlockShape::Bridge).0,
            GadgetName::HubTriangles => hub_block_tree(p[0], p[1], BlockShape::Triangle).0,
            GadgetName::Q => q_graph(),
            GadgetName::K4 => Graph::complete(4),
            GadgetName::K23 => Graph::complete_bipartite(2, 3),
            GadgetName::K3uK3 => named("k3uk3")?,
            GadgetName::Petersen => petersen(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{block_cut_forest, vertex_connectivity};
    use crate::oracles::{circumference, exact_pathwidth};
    use crate::trees::rooted_pw_map;

    #[test]
    fn dominants() {
        assert_eq!(cbt_plus_dominants(1, 0), cbt(1).into_graph());
        let g = cbt_plus_dominants(2, 1);
        assert!(vertex_connectivity(&g) >= 2);
        assert_eq!(exact_pathwidth(&g, &OracleBudget::PATHWIDTH).unwrap().width, 2);
        for h in 1..=3 {
            for d in 0..=3 {
                assert_eq!(vertex_connectivity(&cbt_plus_dominants(h, d)), d + 1, "h={h} d={d}");
            }
        }
    }

    #[test]
    fn outerplanar() {
        assert_eq!(outerplanar_family(0).unwrap(), Graph::complete(3));
        assert_eq!(outerplanar_family(1).unwrap().n(), 6);
        assert_eq!(outerplanar_family(2).unwrap().n(), 12);
        for i in 0..=6 {
            let g = outerplanar_family(i).unwrap();
            assert!(is_k_connected(&g, 2));
            assert_eq!(g.m(), 2 * g.n() - 3);
        }
        assert!(matches!(outerplanar_family(7), Err(Error::Budget(_))));
    }

    #[test]
    fn cycles_and_names() {
        assert_eq!(disjoint_cycles(3, 1).unwrap(), Graph::complete(3));
        let g = disjoint_cycles(4, 2).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(circumference(&g, &OracleBudget::CYCLES).unwrap(), 4);
        let q = named("Q").unwrap();
        assert_eq!((q.n(), q.m()), (6, 9));
        assert_eq!(transversal_number(&q, &OracleBudget::TRANSVERSAL).unwrap(), 2);
        assert_eq!(named("petersen").unwrap().m(), 15);
        assert!(named("nope").is_err());
    }

    #[test]
    fn hub_gadgets_have_expected_shape() {
        for shape in [BlockShape::Bridge, BlockShape::Triangle] {
            let (g, hubs) = hub_block_tree(3, 2, shape);
            assert!(is_k_connected(&g, 3));
            let (rest, _) = g.without(&hubs);
            let bcf = block_cut_forest(&rest);
            let tree = bcf.forest_graph();
            assert!(tree.is_tree());
            // The cut node above each leaf triangle adds one level.
            let expected = if shape == BlockShape::Bridge { 3 } else { 4 };
            assert_eq!(rooted_pw_map(&tree, 0).unwrap().at(0), expected);
        }
        let (g, _) = hub_block_tree(2, 0, BlockShape::Triangle);
        assert_eq!(g.n(), 3 + 2 * 6);
    }

    #[test]
    fn spec_parsing() {
        let s = GadgetSpec { name: "cbt-dominants".parse().unwrap(), params: vec![2, 1] };
        assert_eq!(s.build().unwrap(), cbt_plus_dominants(2, 1));
        let bad = GadgetSpec { name: GadgetName::Q, params: vec![1] };
        assert!(bad.build().is_err());
    }

    #[test]
    fn proposition1_small() {
        let c = proposition1_certificate(&Graph::complete(3), 2).unwrap();
        assert_eq!(c.graph, cbt(2).into_graph());
        assert!(matches!(proposition1_certificate(&Graph::path(3), 2), Err(Error::Precondition(_))));
    }
}
