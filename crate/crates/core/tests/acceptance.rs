//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Runs without the libtest harness so the
//! lines are always shown.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use circumwidth::bounds::{compose_blockwise, thm1_bound, thm1_decompose};
use circumwidth::corpus::{
    block_glued, for_each_graph, random_graph, random_tree, random_two_connected, GraphClass,
};
use circumwidth::decomp::validate;
use circumwidth::ep::{bbr_bound, min_hitting_set, pipeline_params, thm2_pipeline, Branch};
use circumwidth::gadgets::{
    cbt_plus_dominants, hub_block_tree, named, outerplanar_family, proposition1_certificate, q_graph, BlockShape,
};
use circumwidth::graph::vertex_connectivity;
use circumwidth::oracles::{
    circumference, exact_pathwidth, exact_treedepth, longest_path_edges, max_long_cycle_packing, minor_contains,
    transversal_number, OracleBudget,
};
use circumwidth::trees::{cbt, extract_cbt_minor, leaf_distance, rooted_pw_map};
use circumwidth::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

/// Collects violations and keeps the first few messages.
#[derive(Default)]
struct Tally {
    checked: usize,
    violations: usize,
    first: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first.len() < 3 {
                self.first.push(msg());
            }
        }
    }

    fn finish(self, what: &str) -> Check {
        if self.violations == 0 {
            Ok(format!("{} {what}, 0 violations", self.checked))
        } else {
            Err(format!("{} of {} {what} violated; first: {}", self.violations, self.checked, self.first.join(" | ")))
        }
    }
}

fn within(limit: Duration, start: Instant, res: Check) -> Check {
    let took = start.elapsed();
    match res {
        Ok(s) if took < limit => Ok(s),
        Ok(s) => Err(format!("{s}, but took {took:.1?} (limit {limit:?})")),
        Err(e) => Err(e),
    }
}

/// All 2-connected graphs with 3 to 8 vertices, then 200 random ones with
/// at most 12 vertices.
fn two_connected_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=8 {
        for_each_graph(n, GraphClass::Biconnected, |g| out.push(g.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    for _ in 0..200 {
        let n = rng.gen_range(3..=12);
        let extra = rng.gen_range(0..=n);
        out.push(random_two_connected(&mut rng, n, extra));
    }
    out
}

fn c1_thm1_bound(corpus: &[Graph]) -> Check {
    let start = Instant::now();
    let mut tally = Tally::default();
    for g in corpus {
        let t = circumference(g, &OracleBudget::CYCLES).map_err(|e| e.to_string())?;
        match thm1_decompose(g, Some(t)) {
            Ok(cert) => {
                let valid = validate(g, &cert.decomposition).map(|r| r.valid).unwrap_or(false);
                let width = cert.decomposition.width().unwrap_or(usize::MAX);
                tally.check(valid && width <= thm1_bound(t), || format!("{g:?}: width {width}, t {t}"));
            }
            Err(e) => tally.check(false, || format!("{g:?}: {e}")),
        }
    }
    within(Duration::from_secs(300), start, tally.finish("graphs"))
}

fn c2_dfs_internals(corpus: &[Graph]) -> Check {
    let mut tally = Tally::default();
    for g in corpus {
        let t = circumference(g, &OracleBudget::CYCLES).map_err(|e| e.to_string())?;
        let cert = thm1_decompose(g, Some(t)).map_err(|e| e.to_string())?;
        let f = &cert.tree;
        let mut worst_span = 0;
        for (u, v) in g.edges() {
            if f.parent(u) != Some(v) && f.parent(v) != Some(u) {
                worst_span = worst_span.max(f.depth(u).abs_diff(f.depth(v)));
            }
        }
        let height = f.height();
        let td = exact_treedepth(g, &OracleBudget::TREEDEPTH).map_err(|e| e.to_string())?.treedepth;
        tally.check(worst_span < t && height <= thm1_bound(t) && td <= height + 1, || {
            format!("{g:?}: span {worst_span}, height {height}, td {td}, t {t}")
        });
    }
    tally.finish("graphs")
}

fn c3_lemma2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC3);
    let mut tally = Tally::default();
    for _ in 0..200 {
        let g = block_glued(&mut rng, 40);
        match compose_blockwise(&g) {
            Ok(r) => {
                let valid = validate(&g, &r.decomposition).map(|v| v.valid).unwrap_or(false);
                let width = r.decomposition.width().unwrap_or(usize::MAX);
                let bound = (r.m + 3) * (r.n + 1) - 3;
                tally.check(valid && width <= bound, || format!("{g:?}: width {width}, m {}, n {}", r.m, r.n));
            }
            Err(e) => tally.check(false, || format!("{g:?}: {e}")),
        }
    }
    tally.finish("glued graphs")
}

fn bfs_distance(g: &Graph, a: usize, b: usize) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    dist[a] = 0;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist[b]
}

fn c4_leaf_distance() -> Check {
    let mut tally = Tally::default();
    let mut equalities = 0;
    for h in 0..=8 {
        let t = cbt(h);
        let leaves = t.num_leaves();
        for a in 1..=leaves {
            for b in a + 1..=leaves {
                let d = leaf_distance(&t, a, b).map_err(|e| e.to_string())?;
                let bfs = bfs_distance(t.graph(), t.leaf(a).unwrap(), t.leaf(b).unwrap());
                let lower = (2.0 * ((b - a + 1) as f64).log2() - 1e-9).ceil() as usize;
                tally.check(d == bfs && d >= lower, || format!("h {h}, ({a},{b}): {d} vs bfs {bfs}, bound {lower}"));
                let sibling = a % 2 == 1 && b == a + 1;
                let extreme = a == 1 && b == leaves;
                if sibling || extreme {
                    let want = if sibling { 2 } else { 2 * h };
                    tally.check(d == want && d == lower, || format!("h {h}, ({a},{b}): {d}, expected equality at {want}"));
                    equalities += 1;
                }
            }
        }
    }
    tally.finish("leaf pairs").map(|s| format!("{s}; {equalities} equality cases"))
}

fn c5_extraction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC5);
    let mut tally = Tally::default();
    let mut small = 0;
    for i in 0..500 {
        let n = if i % 2 == 0 { rng.gen_range(2..=16) } else { rng.gen_range(2..=60) };
        let t = random_tree(&mut rng, n);
        let r = rooted_pw_map(&t, 0).map_err(|e| e.to_string())?.at(0);
        match extract_cbt_minor(&t, 0, r - 1) {
            Ok(m) => {
                let shape = m.pattern == *cbt(r - 1).graph();
                let problems = m.violations(&t);
                tally.check(shape && problems.is_empty(), || format!("{t:?}: {problems:?}"));
            }
            Err(e) => tally.check(false, || format!("{t:?}: {e}")),
        }
        if n <= 16 {
            small += 1;
            let pw = exact_pathwidth(&t, &OracleBudget::PATHWIDTH).map_err(|e| e.to_string())?.width;
            tally.check(pw <= r, || format!("{t:?}: pathwidth {pw} > R {r}"));
        }
    }
    tally.finish("checks").map(|s| format!("{s}; {small} trees with pathwidth cross-check"))
}

fn c6_cbt_pathwidth() -> Check {
    let mut tally = Tally::default();
    for h in 1..=3 {
        let pw = exact_pathwidth(cbt(h).graph(), &OracleBudget::PATHWIDTH).map_err(|e| e.to_string())?.width;
        tally.check(pw == h.div_ceil(2), || format!("cbt({h}): {pw}"));
        for d in 0..=2 {
            let g = cbt_plus_dominants(h, d);
            let pw = exact_pathwidth(&g, &OracleBudget::PATHWIDTH).map_err(|e| e.to_string())?.width;
            tally.check(pw == h.div_ceil(2) + d, || format!("cbt({h}) + {d}: {pw}"));
        }
    }
    tally.finish("exact values")
}

fn c7_closed_forms() -> Check {
    let p = pipeline_params(2, 3, 9).map_err(|e| e.to_string())?;
    let got = (bbr_bound(2, 3), bbr_bound(3, 3), p.i, p.j);
    if got == (9, 96, 4, 5) {
        Ok("bbr(2,3)=9, bbr(3,3)=96, (i,j)=(4,5) for k=2,t=3,h=9".into())
    } else {
        Err(format!("got bbr(2,3)={}, bbr(3,3)={}, (i,j)=({},{})", got.0, got.1, got.2, got.3))
    }
}

/// Hitting-set sizes seen in the 3-connected sweep, for the inequality check.
#[derive(Default)]
struct EpTally {
    graphs: usize,
    violations: usize,
    first: Vec<String>,
}

fn c8_thm2_sweep(ep: &mut EpTally) -> Check {
    let start = Instant::now();
    let mut tally = Tally::default();
    let (mut decomposition, mut packing) = (0, 0);
    let k = 2;
    for n in 4..=10 {
        for_each_graph(n, GraphClass::Triconnected, |g| {
            for t in [3, 4] {
                let out = match thm2_pipeline(g, k, t, None) {
                    Ok(out) => out,
                    Err(e) => {
                        tally.check(false, || format!("{g:?} t={t}: {e}"));
                        continue;
                    }
                };
                let verified = out.verify(g);
                let ok = match out.branch {
                    Branch::Decomposition => {
                        decomposition += 1;
                        let p = out.params.expect("k >= 2 has parameters");
                        let m = out.m.expect("decomposition branch records m");
                        let width = out.decomposition.as_ref().and_then(|d| d.width().ok()).unwrap_or(usize::MAX);
                        verified.is_ok() && width <= (m + 3) * (p.i + p.j + 1) - 3 + out.hitting_set.len()
                    }
                    Branch::Packing => {
                        packing += 1;
                        verified.is_ok() && out.packing.as_ref().is_some_and(|p| p.len() >= k)
                    }
                };
                tally.check(ok, || format!("{g:?} t={t}: {:?}", verified.err()));
                // A violation needs both |H| above the bound and no k disjoint
                // long cycles; the packing oracle is consulted only when the
                // size test fails.
                ep.graphs += 1;
                if out.hitting_set.len() > bbr_bound(k, t) {
                    let pack = max_long_cycle_packing(g, t, &OracleBudget::PACKING).map(|p| p.len()).unwrap_or(0);
                    if pack < k {
                        ep.violations += 1;
                        if ep.first.len() < 3 {
                            ep.first.push(format!("{g:?} t={t}: |H| = {}", out.hitting_set.len()));
                        }
                    }
                }
            }
        });
    }
    let res = tally
        .finish("pipeline runs")
        .map(|s| format!("{s}; {decomposition} decomposition, {packing} packing"));
    within(Duration::from_secs(900), start, res)
}

fn c9_packing_branch() -> Check {
    let (g, hubs) = hub_block_tree(4, 2, BlockShape::Bridge);
    let out = thm2_pipeline(&g, 2, 3, Some(&hubs)).map_err(|e| e.to_string())?;
    if out.branch != Branch::Packing {
        return Err(format!("branch {:?}", out.branch));
    }
    let p = out.packing.as_ref().ok_or("no packing")?;
    p.verify(&g).map_err(|e| e.to_string())?;
    let params = out.params.ok_or("no parameters")?;
    if p.len() != 2 || p.cycles.iter().any(|c| c.len() < 3) {
        return Err(format!("cycles {:?}", p.cycles));
    }
    Ok(format!(
        "2 disjoint cycles of lengths {:?} (i={}, j={}, forest R={})",
        p.cycles.iter().map(Vec::len).collect::<Vec<_>>(),
        params.i,
        params.j,
        out.trace.forest_r
    ))
}

fn c10_ep_inequality(sweep: &EpTally) -> Check {
    let mut tally = Tally::default();
    let mut below = 0;
    for n in 0..=8 {
        for_each_graph(n, GraphClass::All, |g| {
            for (k, t) in [(2, 3), (2, 4), (3, 3)] {
                let pack = max_long_cycle_packing(g, t, &OracleBudget::PACKING).expect("n <= 8").len();
                if pack < k {
                    below += 1;
                    let h = min_hitting_set(g, t, &OracleBudget::HITTING_SET).expect("n <= 8").vertices.len();
                    tally.check(h <= bbr_bound(k, t), || format!("{g:?} k={k} t={t}: |H| = {h}"));
                }
            }
        });
    }
    if sweep.violations > 0 {
        return Err(format!("3-connected sweep: {} violations; first: {}", sweep.violations, sweep.first.join(" | ")));
    }
    tally
        .finish("graphs below k disjoint cycles (all graphs n <= 8)")
        .map(|s| format!("{s}; {} 3-connected runs with n <= 10 also within bound", sweep.graphs))
}

fn c11_section5() -> Check {
    let mut tally = Tally::default();
    let q = q_graph();
    let tau_q = transversal_number(&q, &OracleBudget::TRANSVERSAL).map_err(|e| e.to_string())?;
    tally.check(tau_q == 2, || format!("tau(Q) = {tau_q}"));
    let minor = |g: &Graph, p: &str| minor_contains(g, &named(p).unwrap(), &OracleBudget::MINOR_HOST).map(|m| m.is_some());
    for p in ["k4", "k23", "k3uk3"] {
        let found = minor(&q, p).map_err(|e| e.to_string())?;
        tally.check(!found, || format!("Q has a {p} minor"));
    }
    for i in 0..=2 {
        let g = outerplanar_family(i).map_err(|e| e.to_string())?;
        for p in ["k4", "k23"] {
            let found = minor(&g, p).map_err(|e| e.to_string())?;
            tally.check(!found, || format!("G_{i} has a {p} minor"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xC11);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let tau = transversal_number(&g, &OracleBudget::TRANSVERSAL).map_err(|e| e.to_string())?;
        let mut excluded = true;
        for p in ["k4", "k3uk3", "q"] {
            if minor(&g, p).map_err(|e| e.to_string())? {
                excluded = false;
                break;
            }
        }
        tally.check((tau <= 1) == excluded, || format!("{g:?}: tau {tau}, minors excluded {excluded}"));
    }
    for pat in ["k3uk3", "q"] {
        let pattern = named(pat).unwrap();
        let tau = transversal_number(&pattern, &OracleBudget::TRANSVERSAL).map_err(|e| e.to_string())?;
        for h in 1..=2 {
            let cert = proposition1_certificate(&pattern, h).map_err(|e| e.to_string())?;
            let g = &cert.graph;
            let kappa = vertex_connectivity(g);
            let tau_g = transversal_number(g, &OracleBudget::TRANSVERSAL).map_err(|e| e.to_string())?;
            let found = minor_contains(g, &pattern, &OracleBudget::MINOR_HOST).map_err(|e| e.to_string())?;
            tally.check(kappa >= tau && tau_g + 1 == tau && found.is_none() && cert.minor_absent, || {
                format!("{pat}, h={h}: connectivity {kappa}, tau {tau_g}, minor {}", found.is_some())
            });
        }
    }
    tally.finish("checks")
}

fn c12_dirac(corpus: &[Graph]) -> Check {
    let mut tally = Tally::default();
    for g in corpus {
        let t = circumference(g, &OracleBudget::CYCLES).map_err(|e| e.to_string())?;
        let p = longest_path_edges(g, &OracleBudget::CYCLES).map_err(|e| e.to_string())?;
        tally.check(t * t > 2 * p, || format!("{g:?}: t {t}, p {p}"));
    }
    tally.finish("2-connected graphs")
}

fn report(id: usize, name: &str, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let took = start.elapsed();
    match &res {
        Ok(detail) => println!("criterion {id:>2} {name}: PASS ({took:.1?}) {detail}"),
        Err(detail) => println!("criterion {id:>2} {name}: FAIL ({took:.1?}) {detail}"),
    }
    res.is_ok()
}

fn main() {
    // libtest flags such as --nocapture or a name filter are ignored.
    let corpus = two_connected_corpus();
    let mut ep = EpTally::default();
    let results = [
        report(1, "depth-first width bound", || c1_thm1_bound(&corpus)),
        report(2, "depth-first tree internals", || c2_dfs_internals(&corpus)),
        report(3, "block-cut composition bound", c3_lemma2),
        report(4, "binary tree leaf distances", c4_leaf_distance),
        report(5, "binary tree minor extraction", c5_extraction),
        report(6, "binary tree pathwidth", c6_cbt_pathwidth),
        report(7, "closed-form values", c7_closed_forms),
        report(8, "3-connected dichotomy sweep", || c8_thm2_sweep(&mut ep)),
        report(9, "packing branch end to end", c9_packing_branch),
        report(10, "hitting-set inequality", || c10_ep_inequality(&ep)),
        report(11, "minor and transversal facts", c11_section5),
        report(12, "circumference versus longest path", || c12_dirac(&corpus)),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
