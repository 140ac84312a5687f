//! Command-line front end. Every emitted certificate is re-checked before
//! the process exits 0.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::bounds::{compose_blockwise, thm1_decompose};
use crate::corpus::{block_glued, random_tree, random_two_connected};
use crate::decomp::{validate, PathDecomposition};
use crate::ep::{bbr_bound, min_hitting_set, pipeline_params, thm2_pipeline_with, Branch, CyclePacking, EpBound};
use crate::error::{Error, Result};
use crate::gadgets::{hub_block_tree, BlockShape, GadgetName, GadgetSpec};
use crate::graph::io::{parse_graph, to_dot, to_edgelist, to_graph6, Format};
use crate::graph::{vertex_connectivity, Graph};
use crate::oracles::{self, OracleBudget};
use crate::trees::{extract_cbt_minor, minor_to_subdivision, rooted_pw_map};

#[derive(Parser, Debug)]
#[command(name = "circumwidth", version, about = "Certified path decompositions for graphs of bounded circumference")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph format for input, and for output of `gadget`.
    #[arg(long, value_enum, global = true, default_value = "edgelist")]
    format: GraphFormat,

    /// Output mode; defaults to json, or text for `oracle` and `gadget`.
    #[arg(long, value_enum, global = true)]
    out: Option<Out>,

    /// Vertex ceiling for exact oracles (the hitting-set search in `pipeline-thm2`).
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Seed for the randomized gadgets.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EpBoundKind {
    Bbr,
    Fh,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    Pathwidth,
    Treedepth,
    Circumference,
    LongestPath,
    Transversal,
    Packing,
    HittingSet,
    Minor,
    Connectivity,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Depth-first decomposition of a 2-connected graph.
    DecomposeThm1 {
        /// Circumference bound; the exact circumference when omitted.
        #[arg(long)]
        t: Option<usize>,
        input: Option<PathBuf>,
    },
    /// Block-by-block decomposition glued along the block-cut forest.
    ComposeLemma2 { input: Option<PathBuf> },
    /// Decomposition-or-packing dichotomy for a (k+1)-connected graph.
    PipelineThm2 {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Use this set instead of a minimum hitting set, e.g. `--hitting-set 0,4,7`.
        #[arg(long, value_delimiter = ',')]
        hitting_set: Option<Vec<usize>>,
        /// Hitting-set budget the report compares |H| against.
        #[arg(long, value_enum, default_value = "bbr")]
        ep_bound: EpBoundKind,
        #[arg(long, default_value_t = 1.0)]
        fh_constant: f64,
        input: Option<PathBuf>,
    },
    /// Complete binary tree minor of a tree, and its subdivision when the tree has degree at most 3.
    ExtractCbt {
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Height of the binary tree; defaults to R(root) - 1.
        #[arg(long)]
        height: Option<usize>,
        input: Option<PathBuf>,
    },
    /// Checks a decomposition or cycle-packing certificate against a graph.
    #[command(group(ArgGroup::new("certificate").required(true).args(["decomposition", "packing"])))]
    Verify {
        #[arg(long)]
        decomposition: Option<PathBuf>,
        #[arg(long)]
        packing: Option<PathBuf>,
        input: Option<PathBuf>,
    },
    /// Exact reference solvers.
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        /// Cycle length threshold for `packing` and `hitting-set`.
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Pattern for `minor`: q, k4, k23, k3uk3 or petersen.
        #[arg(long)]
        pattern: Option<String>,
        input: Option<PathBuf>,
    },
    /// Named graphs and generator families.
    Gadget {
        /// cbt_dominants, outerplanar_family, disjoint_cycles, hub_tree, hub_triangles,
        /// q, k4, k23, k3uk3, petersen, random_tree, random_two_connected, block_glued
        name: String,
        params: Vec<usize>,
    },
    /// The pipeline parameters h, i, j and the hitting-set bound.
    Params {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        h: usize,
    },
}

/// What a subcommand produced: the text for standard output and the exit code.
struct Emit {
    body: String,
    code: i32,
}

impl Emit {
    fn ok(body: String) -> Self {
        Emit { body, code: 0 }
    }
}

/// Runs the tool on `argv` (program name first) with the process streams.
pub fn run(argv: &[String]) -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] over explicit streams.
pub fn run_with(argv: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(text.as_bytes());
                0
            } else {
                let _ = stderr.write_all(text.as_bytes());
                2
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(emit) => {
            if let Err(e) = stdout.write_all(emit.body.as_bytes()) {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            emit.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_text(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graph(cli: &Cli, path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Graph> {
    let format = match cli.format {
        GraphFormat::Edgelist => Format::EdgeList,
        GraphFormat::Graph6 => Format::Graph6,
    };
    parse_graph(&read_text(path, stdin)?, format)
}

fn budget(cli: &Cli, default: OracleBudget) -> OracleBudget {
    match cli.budget {
        Some(n) => OracleBudget { max_vertices: n, ..default },
        None => default,
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn decomposition_dot(d: &PathDecomposition) -> String {
    let mut s = String::from("graph decomposition {\n  node [shape=box];\n");
    for (i, bag) in d.bags().iter().enumerate() {
        let label: Vec<String> = bag.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "  b{i} [label=\"{}\"];", label.join(" "));
    }
    for i in 1..d.len() {
        let _ = writeln!(s, "  b{} -- b{i};", i - 1);
    }
    s.push_str("}\n");
    s
}

fn decomposition_text(d: &PathDecomposition) -> String {
    let mut s = format!("width {}\n", d.width().map_or(-1, |w| w as i64));
    for bag in d.bags() {
        let line: Vec<String> = bag.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

fn packing_dot(g: &Graph, p: &CyclePacking) -> String {
    let mut on_cycle = std::collections::BTreeMap::new();
    for (i, c) in p.cycles.iter().enumerate() {
        for j in 0..c.len() {
            let (a, b) = (c[j], c[(j + 1) % c.len()]);
            on_cycle.insert((a.min(b), a.max(b)), i);
        }
    }
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        match on_cycle.get(&(u, v)) {
            Some(i) => {
                let _ = writeln!(s, "  {u} -- {v} [penwidth=3, label=\"c{i}\"];");
            }
            None => {
                let _ = writeln!(s, "  {u} -- {v};");
            }
        }
    }
    s.push_str("}\n");
    s
}

fn no_dot(what: &str) -> Error {
    Error::InvalidInput(format!("dot output is not available for {what}"))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Emit> {
    match &cli.command {
        Command::DecomposeThm1 { t, input } => {
            let g = read_graph(cli, input, stdin)?;
            let cert = thm1_decompose(&g, *t)?;
            validate(&g, &cert.decomposition)?.into_result("depth-first decomposition")?;
            if cert.width() > cert.bound {
                return Err(Error::Verification(format!("width {} exceeds {}", cert.width(), cert.bound)));
            }
            Ok(Emit::ok(match cli.out.unwrap_or(Out::Json) {
                Out::Json => pretty(&cert.to_json_value()),
                Out::Dot => decomposition_dot(&cert.decomposition),
                Out::Text => format!(
                    "circumference {} bound {} dfs-height {}\n{}",
                    cert.circumference,
                    cert.bound,
                    cert.dfs_height,
                    decomposition_text(&cert.decomposition)
                ),
            }))
        }
        Command::ComposeLemma2 { input } => {
            let g = read_graph(cli, input, stdin)?;
            let r = compose_blockwise(&g)?;
            validate(&g, &r.decomposition)?.into_result("composed decomposition")?;
            if r.decomposition.width()? > r.bound {
                return Err(Error::Verification(format!("width exceeds {}", r.bound)));
            }
            Ok(Emit::ok(match cli.out.unwrap_or(Out::Json) {
                Out::Json => {
                    let d = r.decomposition.to_json();
                    pretty(&json!({"width": d.width, "bags": d.bags, "m": r.m, "n": r.n, "bound": r.bound}))
                }
                Out::Dot => decomposition_dot(&r.decomposition),
                Out::Text => format!("m {} n {} bound {}\n{}", r.m, r.n, r.bound, decomposition_text(&r.decomposition)),
            }))
        }
        Command::PipelineThm2 { k, t, hitting_set, ep_bound, fh_constant, input } => {
            let g = read_graph(cli, input, stdin)?;
            let b = budget(cli, OracleBudget::HITTING_SET);
            let outcome = thm2_pipeline_with(&g, *k, *t, hitting_set.as_deref(), &b)?;
            outcome.verify(&g)?;
            let bound = match ep_bound {
                EpBoundKind::Bbr => EpBound::Bbr,
                EpBoundKind::Fh => EpBound::Fh { constant: *fh_constant },
            };
            let limit = bound.value(*k, *t);
            match cli.out.unwrap_or(Out::Json) {
                Out::Json => {
                    let mut v = outcome.to_json_value();
                    v["epBound"] = json!({
                        "kind": match ep_bound { EpBoundKind::Bbr => "bbr", EpBoundKind::Fh => "fh" },
                        "value": limit,
                        "withinBound": outcome.hitting_set.len() <= limit,
                    });
                    Ok(Emit::ok(pretty(&v)))
                }
                Out::Dot => Ok(Emit::ok(match (&outcome.decomposition, &outcome.packing) {
                    (Some(d), _) => decomposition_dot(d),
                    (_, Some(p)) => packing_dot(&g, p),
                    _ => unreachable!("verified outcomes carry a certificate"),
                })),
                Out::Text => {
                    let hs: Vec<String> = outcome.hitting_set.iter().map(usize::to_string).collect();
                    let mut s = format!("H {}\n", hs.join(" "));
                    match outcome.branch {
                        Branch::Decomposition => {
                            let d = outcome.decomposition.as_ref().expect("decomposition branch");
                            let _ = writeln!(s, "branch decomposition budget {}", outcome.budget.unwrap_or(0));
                            s.push_str(&decomposition_text(d));
                        }
                        Branch::Packing => {
                            s.push_str("branch packing\n");
                            for c in &outcome.packing.as_ref().expect("packing branch").cycles {
                                let line: Vec<String> = c.iter().map(usize::to_string).collect();
                                let _ = writeln!(s, "{}", line.join(" "));
                            }
                        }
                    }
                    Ok(Emit::ok(s))
                }
            }
        }
        Command::ExtractCbt { root, height, input } => {
            let g = read_graph(cli, input, stdin)?;
            let map = rooted_pw_map(&g, *root)?;
            let r = map.at(*root);
            let q = match height {
                Some(q) => *q,
                None => r.checked_sub(1).ok_or_else(|| Error::Precondition("the tree is a single vertex".into()))?,
            };
            let model = extract_cbt_minor(&g, *root, q)?;
            let problems = model.violations(&g);
            if !problems.is_empty() {
                return Err(Error::Verification(format!("minor model: {}", problems.join("; "))));
            }
            let subdivision = if g.max_degree() <= 3 {
                let s = minor_to_subdivision(&g, &model)?;
                let problems = s.violations(&g);
                if !problems.is_empty() {
                    return Err(Error::Verification(format!("subdivision: {}", problems.join("; "))));
                }
                Some(s)
            } else {
                None
            };
            Ok(Emit::ok(match cli.out.unwrap_or(Out::Json) {
                Out::Json => pretty(&json!({
                    "R": r,
                    "height": q,
                    "model": model.to_json_value(),
                    "subdivision": subdivision,
                })),
                Out::Dot => {
                    let mut owner = vec![None; g.n()];
                    for (p, set) in model.branch_sets.iter().enumerate() {
                        for &v in set {
                            owner[v] = Some(p);
                        }
                    }
                    let mut s = String::from("graph G {\n");
                    for (v, o) in owner.iter().enumerate() {
                        match o {
                            Some(p) => {
                                let _ = writeln!(s, "  {v} [label=\"{v}:{p}\"];");
                            }
                            None => {
                                let _ = writeln!(s, "  {v} [style=dotted];");
                            }
                        }
                    }
                    for (u, v) in g.edges() {
                        let _ = writeln!(s, "  {u} -- {v};");
                    }
                    s.push_str("}\n");
                    s
                }
                Out::Text => {
                    let mut s = format!("R {r} height {q}\n");
                    for (p, set) in model.branch_sets.iter().enumerate() {
                        let line: Vec<String> = set.iter().map(usize::to_string).collect();
                        let _ = writeln!(s, "{p}: {}", line.join(" "));
                    }
                    s
                }
            }))
        }
        Command::Verify { decomposition, packing, input } => {
            let g = read_graph(cli, input, stdin)?;
            if cli.out == Some(Out::Dot) {
                return Err(no_dot("verify"));
            }
            let (valid, report) = if let Some(path) = decomposition {
                let (d, claimed) = PathDecomposition::from_json(&std::fs::read_to_string(path)?)?;
                let rep = validate(&g, &d)?;
                let width = d.width().map_or(-1, |w| w as i64);
                let valid = rep.valid && width == claimed;
                (valid, json!({"valid": valid, "width": width, "claimedWidth": claimed, "violations": rep.violations}))
            } else {
                let path = packing.as_ref().expect("clap requires one certificate");
                let p: CyclePacking = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                let problems = p.violations(&g);
                (problems.is_empty(), json!({"valid": problems.is_empty(), "cycles": p.len(), "violations": problems}))
            };
            let body = match cli.out.unwrap_or(Out::Json) {
                Out::Text => {
                    let mut s = String::from(if valid { "valid\n" } else { "invalid\n" });
                    for v in report["violations"].as_array().into_iter().flatten() {
                        let _ = writeln!(s, "{v}");
                    }
                    s
                }
                _ => pretty(&report),
            };
            Ok(Emit { body, code: if valid { 0 } else { 1 } })
        }
        Command::Oracle { which, t, pattern, input } => {
            let g = read_graph(cli, input, stdin)?;
            if cli.out == Some(Out::Dot) {
                return Err(no_dot("oracle"));
            }
            let (value, witness) = run_oracle(cli, &g, *which, *t, pattern.as_deref())?;
            Ok(Emit::ok(match cli.out.unwrap_or(Out::Text) {
                Out::Text => format!("{value}\n"),
                _ => pretty(&json!({"oracle": format!("{which:?}").to_lowercase(), "value": value, "witness": witness})),
            }))
        }
        Command::Gadget { name, params } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed);
            let arity = |want: usize| {
                if params.len() == want {
                    Ok(())
                } else {
                    Err(Error::InvalidInput(format!("{name} takes {want} parameters, got {}", params.len())))
                }
            };
            let mut hubs = None;
            let g = match name.as_str() {
                "random_tree" => {
                    arity(1)?;
                    random_tree(&mut rng, params[0])
                }
                "random_two_connected" => {
                    arity(2)?;
                    if params[0] < 3 {
                        return Err(Error::InvalidInput("a 2-connected graph needs at least 3 vertices".into()));
                    }
                    random_two_connected(&mut rng, params[0], params[1])
                }
                "block_glued" => {
                    arity(1)?;
                    block_glued(&mut rng, params[0])
                }
                other => {
                    let spec = GadgetSpec { name: other.parse::<GadgetName>()?, params: params.clone() };
                    let g = spec.build()?;
                    if let GadgetName::HubTree | GadgetName::HubTriangles = spec.name {
                        let shape =
                            if spec.name == GadgetName::HubTree { BlockShape::Bridge } else { BlockShape::Triangle };
                        hubs = Some(hub_block_tree(params[0], params[1], shape).1);
                    }
                    g
                }
            };
            Ok(Emit::ok(match cli.out.unwrap_or(Out::Text) {
                Out::Text => match cli.format {
                    GraphFormat::Edgelist => to_edgelist(&g),
                    GraphFormat::Graph6 => format!("{}\n", to_graph6(&g)),
                },
                Out::Dot => to_dot(&g),
                Out::Json => pretty(&json!({
                    "n": g.n(),
                    "edges": g.edges(),
                    "graph6": to_graph6(&g),
                    "hubs": hubs,
                })),
            }))
        }
        Command::Params { k, t, h } => {
            let p = pipeline_params(*k, *t, *h)?;
            let bbr = bbr_bound(*k, *t);
            Ok(Emit::ok(match cli.out.unwrap_or(Out::Json) {
                Out::Json => {
                    let mut v = serde_json::to_value(p)?;
                    v["bbrBound"] = json!(bbr);
                    pretty(&v)
                }
                Out::Text => format!("h {} i {} j {} bbr {bbr}\n", p.h, p.i, p.j),
                Out::Dot => return Err(no_dot("params")),
            }))
        }
    }
}

fn is_path(g: &Graph, p: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    p.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
        && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Runs one oracle and re-checks its witness.
fn run_oracle(cli: &Cli, g: &Graph, which: OracleKind, t: usize, pattern: Option<&str>) -> Result<(Value, Value)> {
    let fail = |what: &str| Error::Verification(format!("oracle witness rejected: {what}"));
    Ok(match which {
        OracleKind::Pathwidth => {
            let w = oracles::exact_pathwidth(g, &budget(cli, OracleBudget::PATHWIDTH))?;
            validate(g, &w.decomposition)?.into_result("pathwidth witness")?;
            if w.decomposition.width()? != w.width {
                return Err(fail("decomposition width differs from the reported value"));
            }
            (json!(w.width), json!({"ordering": w.ordering, "decomposition": w.decomposition.to_json()}))
        }
        OracleKind::Treedepth => {
            let w = oracles::exact_treedepth(g, &budget(cli, OracleBudget::TREEDEPTH))?;
            let f = &w.forest;
            let covered = g.edges().into_iter().all(|(u, v)| f.is_ancestor(u, v) || f.is_ancestor(v, u));
            let depth = if g.n() == 0 { 0 } else { f.height() + 1 };
            if f.n() != g.n() || !covered || depth != w.treedepth {
                return Err(fail("elimination forest does not certify the value"));
            }
            (json!(w.treedepth), json!({"parents": f.parents()}))
        }
        OracleKind::Circumference => {
            let c = oracles::longest_cycle(g, &budget(cli, OracleBudget::CYCLES))?;
            if !c.is_empty() {
                CyclePacking { cycles: vec![c.clone()], min_length: 3 }.verify(g)?;
            }
            (json!(c.len()), json!({"cycle": c}))
        }
        OracleKind::LongestPath => {
            let p = oracles::longest_path(g, &budget(cli, OracleBudget::CYCLES))?;
            if !is_path(g, &p) {
                return Err(fail("not a path"));
            }
            (json!(p.len().saturating_sub(1)), json!({"path": p}))
        }
        OracleKind::Transversal => {
            let x = oracles::transversal(g, &budget(cli, OracleBudget::TRANSVERSAL))?;
            if !g.without(&x).0.is_forest() {
                return Err(fail("removal leaves a cycle"));
            }
            (json!(x.len()), json!({"set": x}))
        }
        OracleKind::Packing => {
            let p = oracles::max_long_cycle_packing(g, t, &budget(cli, OracleBudget::PACKING))?;
            p.verify(g)?;
            (json!(p.len()), serde_json::to_value(&p)?)
        }
        OracleKind::HittingSet => {
            let h = min_hitting_set(g, t, &budget(cli, OracleBudget::HITTING_SET))?;
            let rest = g.without(&h.vertices).0;
            if oracles::find_cycle_at_least(&rest, t, &OracleBudget::CYCLES)?.is_some() {
                return Err(fail("removal leaves a long cycle"));
            }
            (json!(h.vertices.len()), serde_json::to_value(&h)?)
        }
        OracleKind::Minor => {
            let name = pattern.ok_or_else(|| Error::InvalidInput("minor needs --pattern".into()))?;
            let pat = crate::gadgets::named(name)?;
            let found = oracles::minor_contains(g, &pat, &budget(cli, OracleBudget::MINOR_HOST))?;
            if let Some(m) = &found {
                let problems = m.violations(g);
                if !problems.is_empty() {
                    return Err(fail(&problems.join("; ")));
                }
            }
            (json!(found.is_some()), found.map_or(Value::Null, |m| m.to_json_value()))
        }
        OracleKind::Connectivity => (json!(vertex_connectivity(g)), Value::Null),
    })
}
