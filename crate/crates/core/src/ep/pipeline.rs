use serde::Serialize;
use serde_json::json;

use super::hitting::min_hitting_set;
use super::packing::CyclePacking;
use super::params::{pipeline_params, PipelineParams};
use super::reroute::{reroute_cycles, TreeCycle};
use crate::bounds::{lemma2_compose, thm1_bound, thm1_decompose};
use crate::decomp::{validate, PathDecomposition};
use crate::error::{Error, Result};
use crate::graph::{block_cut_forest, is_k_connected, BlockCutForest, Graph};
use crate::oracles::{find_cycle_at_least, OracleBudget};
use crate::trees::{decomposition_from_map, extract_from_map, minor_to_subdivision, rooted_pw_map, RootedPwMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Decomposition,
    Packing,
}

/// One hub matched to one height-`j` subtree, with the extreme adjacent
/// leaf labels inside that subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodPair {
    pub vertex: usize,
    pub subtree: usize,
    pub leaves: (usize, usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PipelineTrace {
    /// Largest recursion value over the components of the block-cut forest.
    #[serde(rename = "forestR")]
    pub forest_r: usize,
    #[serde(rename = "hOverride")]
    pub h_override: bool,
    /// Hubs chosen for the packing, with their leaf counts `d(v)`.
    pub hubs: Vec<(usize, usize)>,
    #[serde(rename = "goodPairs")]
    pub good_pairs: Vec<GoodPair>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOutcome {
    pub branch: Branch,
    pub hitting_set: Vec<usize>,
    pub params: Option<PipelineParams>,
    pub decomposition: Option<PathDecomposition>,
    pub packing: Option<CyclePacking>,
    /// Width budget of the decomposition branch.
    pub budget: Option<usize>,
    /// Block width used in the budget.
    pub m: Option<usize>,
    pub trace: PipelineTrace,
}

impl PipelineOutcome {
    pub fn to_json_value(&self) -> serde_json::Value {
        let certificate = match (&self.decomposition, &self.packing) {
            (Some(d), _) => serde_json::to_value(d.to_json()).expect("plain data"),
            (_, Some(p)) => serde_json::to_value(p).expect("plain data"),
            _ => serde_json::Value::Null,
        };
        json!({
            "branch": self.branch,
            "H": self.hitting_set,
            "params": self.params,
            "certificate": certificate,
            "budget": self.budget,
            "m": self.m,
            "trace": self.trace,
        })
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        match (&self.decomposition, &self.packing) {
            (Some(d), None) => {
                validate(g, d)?.into_result("pipeline decomposition")?;
                let w = d.width()?;
                if self.budget.is_some_and(|b| w > b) {
                    return Err(Error::Verification(format!("width {w} exceeds the budget")));
                }
                Ok(())
            }
            (None, Some(p)) => {
                p.verify(g)?;
                let k = self.params.map_or(1, |p| p.k);
                if p.len() < k {
                    return Err(Error::Verification(format!("{} cycles, expected {k}", p.len())));
                }
                Ok(())
            }
            _ => Err(Error::Verification("outcome must carry exactly one certificate".into())),
        }
    }
}

/// Runs the decomposition-or-packing dichotomy on a `(k+1)`-connected graph.
///
/// `h_override` replaces the exact minimum hitting set; it must still meet
/// every cycle of length at least `t`.
pub fn thm2_pipeline(g: &Graph, k: usize, t: usize, h_override: Option<&[usize]>) -> Result<PipelineOutcome> {
    thm2_pipeline_with(g, k, t, h_override, &OracleBudget::HITTING_SET)
}

pub fn thm2_pipeline_with(
    g: &Graph,
    k: usize,
    t: usize,
    h_override: Option<&[usize]>,
    hitting_budget: &OracleBudget,
) -> Result<PipelineOutcome> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if t < 3 {
        return Err(Error::InvalidInput(format!("t must be at least 3, got {t}")));
    }
    if !is_k_connected(g, k + 1) {
        return Err(Error::Precondition(format!("graph is not {}-connected", k + 1)));
    }
    let mut trace = PipelineTrace { h_override: h_override.is_some(), ..Default::default() };
    if k == 1 {
        let cert = thm1_decompose(g, None)?;
        trace.notes.push(format!("k = 1: depth-first decomposition with circumference {}", cert.circumference));
        return Ok(PipelineOutcome {
            branch: Branch::Decomposition,
            hitting_set: Vec::new(),
            params: None,
            budget: Some(cert.bound),
            m: None,
            decomposition: Some(cert.decomposition),
            packing: None,
            trace,
        });
    }

    let h_set = match h_override {
        Some(h) => {
            let mut h = h.to_vec();
            h.sort_unstable();
            h.dedup();
            if let Some(&v) = h.iter().find(|&&v| v >= g.n()) {
                return Err(Error::InvalidInput(format!("hitting-set vertex {v} out of range")));
            }
            check_hitting_set(g, &h, t)?;
            h
        }
        None => min_hitting_set(g, t, hitting_budget)?.vertices,
    };
    let params = pipeline_params(k, t, h_set.len())?;
    if params.floored() {
        trace.notes.push(format!("|H| = {} raised to h = k = {}", h_set.len(), k));
    }

    let (gh, map) = g.without(&h_set);
    let bcf = block_cut_forest(&gh);
    let tree = bcf.forest_graph();
    let mut comps = Vec::new();
    for comp in tree.components() {
        let (sub, nmap) = tree.induced(&comp);
        let rmap = rooted_pw_map(&sub, 0)?;
        comps.push((sub, nmap, rmap));
    }
    trace.forest_r = comps.iter().map(|(_, _, r)| r.at(0)).max().unwrap_or(0);
    let ij = params.i + params.j;

    if trace.forest_r <= ij {
        let m_budget = thm1_bound(t - 1).max(1);
        let budget = (m_budget + 3) * (ij + 1) - 3 + h_set.len();
        let decomposition = if gh.n() == 0 {
            PathDecomposition::new(vec![h_set.clone()])
        } else {
            let mut blocks = std::collections::BTreeMap::new();
            for b in 0..bcf.num_blocks() {
                if bcf.is_biconnected_block(b) {
                    let (bs, bmap) = bcf.block_subgraph(&gh, b);
                    blocks.insert(b, thm1_decompose(&bs, Some(t - 1))?.decomposition.mapped(&bmap));
                }
            }
            let fd = PathDecomposition::concat(
                comps.iter().map(|(_, nmap, rmap)| decomposition_from_map(rmap).mapped(nmap)),
            );
            let composed = lemma2_compose(&gh, &bcf, &fd, &blocks)?;
            composed.decomposition.mapped(&map).with_added(&h_set)
        };
        validate(g, &decomposition)?.into_result("decomposition branch")?;
        let width = decomposition.width()?;
        if width > budget {
            return Err(Error::Contradiction(format!("decomposition width {width} exceeds budget {budget}")));
        }
        return Ok(PipelineOutcome {
            branch: Branch::Decomposition,
            hitting_set: h_set,
            params: Some(params),
            decomposition: Some(decomposition),
            packing: None,
            budget: Some(budget),
            m: Some(m_budget),
            trace,
        });
    }

    let keep: Vec<bool> = {
        let mut keep = vec![true; g.n()];
        for &v in &h_set {
            keep[v] = false;
        }
        keep
    };
    let host_bcf = BlockCutForest::of_subgraph(g, &keep);
    debug_assert_eq!(host_bcf.forest_graph(), tree);
    let (sub, nmap, rmap) = comps.iter().find(|(_, _, r)| r.at(0) > ij).expect("some component exceeds i + j");
    let packing = packing_branch(g, &host_bcf, &h_set, &params, sub, nmap, rmap, &mut trace)?;
    Ok(PipelineOutcome {
        branch: Branch::Packing,
        hitting_set: h_set,
        params: Some(params),
        decomposition: None,
        packing: Some(packing),
        budget: None,
        m: None,
        trace,
    })
}

/// Fails unless every cycle of `g - h` is shorter than `t`, checked block by
/// block.
fn check_hitting_set(g: &Graph, h: &[usize], t: usize) -> Result<()> {
    let (gh, _) = g.without(h);
    let bcf = block_cut_forest(&gh);
    for b in 0..bcf.num_blocks() {
        if bcf.block(b).len() < t || !bcf.is_biconnected_block(b) {
            continue;
        }
        let (bs, _) = bcf.block_subgraph(&gh, b);
        if find_cycle_at_least(&bs, t, &OracleBudget::CYCLES)?.is_some() {
            return Err(Error::Precondition(format!("the supplied set leaves a cycle of length at least {t}")));
        }
    }
    Ok(())
}

fn tree_path(tree: &Graph, from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; tree.n()];
    prev[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in tree.neighbors(v) {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

#[allow(clippy::too_many_arguments)]
fn packing_branch(
    g: &Graph,
    bcf: &BlockCutForest,
    h_set: &[usize],
    params: &PipelineParams,
    sub: &Graph,
    nmap: &[usize],
    rmap: &RootedPwMap,
    trace: &mut PipelineTrace,
) -> Result<CyclePacking> {
    let (k, i, j) = (params.k, params.i, params.j);
    let q = i + j;
    let fail = |what: String| Error::Contradiction(format!("packing branch (k={k}, i={i}, j={j}): {what}"));

    let model = extract_from_map(rmap, q)?;
    let s = minor_to_subdivision(sub, &model)?;
    let mut deg = vec![0usize; sub.n()];
    for (_, _, p) in &s.edge_paths {
        for w in p.windows(2) {
            deg[w[0]] += 1;
            deg[w[1]] += 1;
        }
    }
    if let Some(d) = deg.iter().max().filter(|&&d| d > 3) {
        return Err(fail(format!("subdivision has a vertex of degree {d}")));
    }

    let num_leaves = 1usize << q;
    let leaf_node = |label: usize| nmap[s.image[num_leaves - 2 + label]];
    // adjacent[x][label - 1]: hub x sees a non-cut vertex of that leaf block.
    let mut adjacent = vec![vec![false; num_leaves]; h_set.len()];
    for label in 1..=num_leaves {
        let node = leaf_node(label);
        if !bcf.is_block_node(node) {
            return Err(fail(format!("leaf {label} of the subdivision is a cut node")));
        }
        let inner: Vec<usize> =
            bcf.block(node).iter().copied().filter(|&v| bcf.cut_node_of(v).is_none()).collect();
        let mut seen = 0;
        for (x, &hv) in h_set.iter().enumerate() {
            if inner.iter().any(|&v| g.has_edge(hv, v)) {
                adjacent[x][label - 1] = true;
                seen += 1;
            }
        }
        if seen < k {
            return Err(fail(format!("leaf block {node} sees only {seen} hitting-set vertices")));
        }
    }

    let d: Vec<usize> = adjacent.iter().map(|row| row.iter().filter(|&&a| a).count()).collect();
    let mut order: Vec<usize> = (0..h_set.len()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(d[x]), h_set[x]));
    let hubs = &order[..k];
    let dk = d[hubs[k - 1]];
    if (dk as u128) * ((params.h - k + 1) as u128) < 1u128 << q {
        return Err(fail(format!("d_k = {dk} is below 2^(i+j)/(h-k+1)")));
    }
    trace.hubs = hubs.iter().map(|&x| (h_set[x], d[x])).collect();

    let span = 1usize << j;
    let labels_in = |x: usize, m: usize| -> Vec<usize> {
        (m * span + 1..=(m + 1) * span).filter(|&l| adjacent[x][l - 1]).collect()
    };
    let good: Vec<Vec<usize>> =
        hubs.iter().map(|&x| (0..1usize << i).filter(|&m| params.is_good(labels_in(x, m).len())).collect()).collect();
    let mut by_scarcity: Vec<usize> = (0..k).collect();
    by_scarcity.sort_by_key(|&r| (good[r].len(), h_set[hubs[r]]));
    let mut taken = vec![false; 1 << i];
    let mut cycles = Vec::with_capacity(k);
    for r in by_scarcity {
        let x = hubs[r];
        if good[r].len() < k {
            return Err(fail(format!("hub {} is in only {} good pairs", h_set[x], good[r].len())));
        }
        let m = *good[r].iter().find(|&&m| !taken[m]).ok_or_else(|| fail("greedy matching ran out".into()))?;
        taken[m] = true;
        let labels = labels_in(x, m);
        let (a, b) = (labels[0], *labels.last().unwrap());
        if a == b {
            return Err(fail(format!("hub {} sees a single leaf of subtree {m}", h_set[x])));
        }
        let local_a = s.image[num_leaves - 2 + a];
        let local_b = s.image[num_leaves - 2 + b];
        let nodes: Vec<usize> = tree_path(sub, local_a, local_b).into_iter().map(|v| nmap[v]).collect();
        trace.good_pairs.push(GoodPair { vertex: h_set[x], subtree: m, leaves: (a, b) });
        cycles.push(TreeCycle { anchor: h_set[x], nodes });
    }
    let packing = reroute_cycles(g, bcf, &cycles, params.t)?;
    if packing.len() != k {
        return Err(fail(format!("produced {} cycles", packing.len())));
    }
    Ok(packing)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_takes_decomposition_branch() {
        let g = Graph::complete(5);
        let out = thm2_pipeline(&g, 2, 3, None).unwrap();
        assert_eq!(out.branch, Branch::Decomposition);
        assert_eq!(out.hitting_set.len(), 3);
        assert_eq!(out.m, Some(1));
        let p = out.params.unwrap();
        assert_eq!(out.budget, Some(4 * (p.i + p.j + 1) - 3 + 3));
        out.verify(&g).unwrap();
    }

    #[test]
    fn k1_routes_to_depth_first_bound() {
        let g = Graph::cycle(5);
        let out = thm2_pipeline(&g, 1, 3, None).unwrap();
        assert_eq!(out.branch, Branch::Decomposition);
        assert_eq!(out.budget, Some(thm1_bound(5)));
        out.verify(&g).unwrap();
    }

    #[test]
    fn connectivity_is_checked() {
        assert!(matches!(thm2_pipeline(&Graph::cycle(5), 2, 3, None), Err(Error::Precondition(_))));
        assert!(matches!(
            thm2_pipeline(&Graph::complete(5), 2, 3, Some(&[0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn packing_branch_on_hub_gadgets() {
        use crate::gadgets::{hub_block_tree, BlockShape};
        for (shape, t, depth) in [(BlockShape::Bridge, 3, 4), (BlockShape::Triangle, 4, 3)] {
            let (g, hubs) = hub_block_tree(depth, 2, shape);
            let out = thm2_pipeline(&g, 2, t, Some(&hubs)).unwrap();
            assert_eq!(out.branch, Branch::Packing, "{shape:?}");
            let p = out.packing.as_ref().unwrap();
            assert_eq!(p.len(), 2);
            assert!(p.cycles.iter().all(|c| c.len() >= t));
            out.verify(&g).unwrap();
        }
    }
}
