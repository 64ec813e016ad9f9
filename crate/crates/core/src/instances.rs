//! Graph file formats, result JSON, and instance generators.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::solver::SolveResult;

/// Attempts made by the resampling generators before reporting failure.
const MAX_RESAMPLES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Edgelist,
    Dimacs,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| parse_err(line, format!("invalid vertex id {tok:?}")))
}

/// Parses a graph from text in the given format.
pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|_| parse_err(0, "input is not UTF-8"))?;
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks[0] == "n" {
            if toks.len() != 2 || declared.is_some() || !edges.is_empty() {
                return Err(parse_err(line, "malformed header, expected \"n <count>\" before any edge"));
            }
            declared = Some(parse_id(toks[1], line)?);
            continue;
        }
        if toks.len() != 2 {
            return Err(parse_err(line, format!("expected \"u v\", got {body:?}")));
        }
        let (u, v) = (parse_id(toks[0], line)?, parse_id(toks[1], line)?);
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
        lines.push(line);
    }
    let n = match declared {
        Some(n) => {
            if let Some(i) = edges.iter().position(|&(u, v)| u.max(v) >= n) {
                return Err(parse_err(lines[i], format!("vertex id out of range (n = {n})")));
            }
            n
        }
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    Graph::from_edges(n, &edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if n.is_some() || toks.len() != 4 || (toks[1] != "edge" && toks[1] != "col") {
                    return Err(parse_err(line, "malformed problem line, expected \"p edge <n> <m>\""));
                }
                n = Some(parse_id(toks[2], line)?);
                parse_id(toks[3], line)?;
            }
            Some(&"e") => {
                let Some(n) = n else {
                    return Err(parse_err(line, "edge before problem line"));
                };
                if toks.len() != 3 {
                    return Err(parse_err(line, "expected \"e <u> <v>\""));
                }
                let (u, v) = (parse_id(toks[1], line)?, parse_id(toks[2], line)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line, format!("vertex id out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(t) => return Err(parse_err(line, format!("unknown line type {t:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing problem line"))?;
    Graph::from_edges(n, &edges)
}

/// Writes `g` in the given format; edges as u < v in increasing order.
pub fn write_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Edgelist => {
            let _ = writeln!(out, "n {}", g.n());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        Format::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

/// Canonical JSON for a solver result, newline-terminated.
pub fn emit_result(r: &SolveResult) -> Vec<u8> {
    let mut v = serde_json::to_vec(r).expect("result serializes");
    v.push(b'\n');
    v
}

/// Attaches a clique of n − 2 fresh vertices to every vertex of `g`.
/// Original ids are kept; the clique of v occupies n + v(n − 2) .. n + (v + 1)(n − 2).
pub fn gen_hardness_gadget(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall("gadget needs at least three vertices".into()));
    }
    let eg = g.eg_bound()?;
    if eg > Rational::from_integer(n as i64 - 1) {
        return Err(Error::Precondition(format!("need ℓ_EG(G) <= n - 1, got {eg}")));
    }
    let size = n - 2;
    let mut edges = g.edges();
    for v in 0..n {
        let base = n + v * size;
        for i in 0..size {
            edges.push((v, base + i));
            for j in i + 1..size {
                edges.push((base + i, base + j));
            }
        }
    }
    Graph::from_edges(n * (n - 1), &edges)
}

/// Generator families.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// G(n, prob) resampled until 2-connected.
    Gnp2c { n: usize, prob: f64 },
    /// K_n minus up to `missing` random edges, keeping δ ≥ `min_degree`. With `k`,
    /// the result must meet the strict Hamiltonian-routing preconditions for k.
    NearComplete { n: usize, min_degree: usize, missing: usize, k: Option<usize> },
    /// A = 0..p independent of B = p..p+q; every B vertex misses at most k of A.
    BipartiteDense { p: usize, k: usize, q: usize },
    /// Instances that drive the dense-subgraph pipeline into a given branch:
    /// "separator", "dirac", "small_dense" or "bipartite".
    BranchTrace { branch: String, size: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub meta: BTreeMap<String, Value>,
}

fn unsat(msg: impl Into<String>) -> Error {
    Error::Precondition(format!("unsatisfiable parameters: {}", msg.into()))
}

/// Generates an instance of `family` from `seed`.
pub fn gen_instance(family: &Family, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut meta = BTreeMap::new();
    meta.insert("seed".to_string(), json!(seed));
    let graph = match family {
        Family::Gnp2c { n, prob } => {
            if *n < 3 || !(0.0..=1.0).contains(prob) {
                return Err(unsat("need n >= 3 and 0 <= prob <= 1"));
            }
            let mut attempt = 0;
            loop {
                attempt += 1;
                let g = gnp(*n, *prob, &mut rng);
                if g.is_biconnected() {
                    meta.insert("attempts".into(), json!(attempt));
                    break g;
                }
                if attempt >= MAX_RESAMPLES {
                    return Err(unsat("no 2-connected sample found"));
                }
            }
        }
        Family::NearComplete { n, min_degree, missing, k } => {
            if *min_degree >= *n {
                return Err(unsat("min_degree must be below n"));
            }
            let mut missing = *missing;
            if let Some(k) = *k {
                // ad + k > n forces fewer than (k − 1)·n/2 missing edges
                if k == 0 || (k - 1) * n == 0 {
                    return Err(unsat(format!("ad + {k} > n cannot hold since ad <= n - 1")));
                }
                missing = missing.min(((k - 1) * n).div_ceil(2) - 1);
                if 60 * k > n - 1 {
                    return Err(unsat(format!("k <= ad/60 needs n >= {}", 60 * k + 2)));
                }
            }
            let mut attempt = 0;
            loop {
                attempt += 1;
                let g = near_complete(*n, *min_degree, missing, &mut rng);
                let ok = k.is_none_or(|k| dense_strict_ok(&g, k));
                if ok {
                    meta.insert("attempts".into(), json!(attempt));
                    break g;
                }
                if attempt >= MAX_RESAMPLES {
                    return Err(unsat("strict preconditions not met after resampling"));
                }
            }
        }
        Family::BipartiteDense { p, k, q } => {
            if *p == 0 || *k > *p {
                return Err(unsat("need p >= 1 and k <= p"));
            }
            if *q < 2 * p {
                return Err(unsat("need q >= 2p"));
            }
            let mut attempt = 0;
            loop {
                attempt += 1;
                let g = bipartite_dense(*p, *k, *q, &mut rng);
                if bipartite_ok(&g, *p, *k) {
                    meta.insert("attempts".into(), json!(attempt));
                    break g;
                }
                if attempt >= MAX_RESAMPLES {
                    return Err(unsat("degree floors not met after resampling"));
                }
            }
        }
        Family::BranchTrace { branch, size } => {
            let g = branch_trace(branch, *size, &mut rng)?;
            meta.insert("expected_branch".into(), json!(branch));
            g
        }
    };
    meta.insert("n".into(), json!(graph.n()));
    meta.insert("m".into(), json!(graph.m()));
    meta.insert("min_degree".into(), json!(graph.min_degree()));
    meta.insert("family".into(), serde_json::to_value(family).expect("family serializes")["family"].clone());
    Ok(Instance { graph, meta })
}

fn gnp(n: usize, prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("ids in range")
}

fn near_complete(n: usize, min_degree: usize, missing: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Graph::complete(n).edges();
    edges.shuffle(rng);
    let mut deg = vec![n - 1; n];
    let mut keep = Vec::with_capacity(edges.len());
    let mut removed = 0;
    for (u, v) in edges {
        if removed < missing && deg[u] > min_degree && deg[v] > min_degree {
            deg[u] -= 1;
            deg[v] -= 1;
            removed += 1;
        } else {
            keep.push((u, v));
        }
    }
    Graph::from_edges(n, &keep).expect("ids in range")
}

fn dense_strict_ok(g: &Graph, k: usize) -> bool {
    let Ok(ad) = g.avg_degree() else { return false };
    let kr = Rational::from_integer(k as i64);
    kr * 60 <= ad && Rational::from_integer(2 * g.min_degree() as i64) >= ad && ad + kr > Rational::from_integer(g.n() as i64)
}

fn bipartite_dense(p: usize, k: usize, q: usize, rng: &mut ChaCha8Rng) -> Graph {
    let a: Vec<usize> = (0..p).collect();
    // edges each A vertex may still lose without falling below 2p
    let mut slack = vec![q - 2 * p; p];
    let mut edges = Vec::new();
    for b in p..p + q {
        let mut nb = a.clone();
        nb.shuffle(rng);
        let mut drop = rng.gen_range(0..=k);
        for &x in &nb {
            if drop > 0 && slack[x] > 0 {
                drop -= 1;
                slack[x] -= 1;
            } else {
                edges.push((x, b));
            }
        }
    }
    Graph::from_edges(p + q, &edges).expect("ids in range")
}

fn bipartite_ok(g: &Graph, p: usize, k: usize) -> bool {
    (0..p).all(|v| g.degree(v) >= 2 * p) && (p..g.n()).all(|v| g.degree(v) + k >= p)
}

fn branch_trace(branch: &str, size: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    match branch {
        // two cliques glued along two vertices
        "separator" => {
            if size < 4 {
                return Err(unsat("separator instances need size >= 4"));
            }
            let n = 2 * size - 2;
            let mut edges = Vec::new();
            let second: Vec<usize> = [0, 1].into_iter().chain(size..n).collect();
            for clique in [(0..size).collect::<Vec<_>>(), second] {
                for i in 0..clique.len() {
                    for j in i + 1..clique.len() {
                        edges.push((clique[i], clique[j]));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        "dirac" => Ok(Graph::complete(size.max(3))),
        // K_n minus a perfect matching
        "small_dense" => {
            let n = size.max(4) & !1;
            let edges: Vec<(usize, usize)> = Graph::complete(n).edges().into_iter().filter(|&(u, v)| !(u % 2 == 0 && v == u + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        // clique on A, complete to a ten times larger independent B, randomly relabelled
        "bipartite" => {
            let p = size.max(2);
            let q = 10 * p;
            let mut label: Vec<usize> = (0..p + q).collect();
            label.shuffle(rng);
            let mut edges = Vec::new();
            for x in 0..p {
                for y in x + 1..p {
                    edges.push((label[x], label[y]));
                }
                for b in p..p + q {
                    edges.push((label[x], label[b]));
                }
            }
            Graph::from_edges(p + q, &edges)
        }
        other => Err(unsat(format!("unknown branch {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn parse_examples() {
        let g = parse_graph(b"0 1\n1 2\n2 0\n", Format::Edgelist).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        let g = parse_graph(b"p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n", Format::Dimacs).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.has_edge(0, 2));
        match parse_graph(b"0 0\n", Format::Edgelist) {
            Err(Error::Parse { line: 1, msg }) => assert!(msg.contains("self-loop")),
            r => panic!("unexpected {r:?}"),
        }
        assert!(matches!(parse_graph(b"# c\n0 1\n1 x\n", Format::Edgelist), Err(Error::Parse { line: 3, .. })));
        let g = parse_graph(b"n 5\n0 1 # comment\n", Format::Edgelist).unwrap();
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn round_trip() {
        let g = Graph::petersen();
        for f in [Format::Edgelist, Format::Dimacs] {
            let text = write_graph(&g, f);
            assert_eq!(parse_graph(text.as_bytes(), f).unwrap(), g);
        }
    }

    #[test]
    fn gadget_examples() {
        let g = gen_hardness_gadget(&Graph::cycle(4)).unwrap();
        assert_eq!((g.n(), g.m()), (12, 16));
        assert_eq!(g.eg_bound().unwrap(), rat(32, 11));
        assert!(gen_hardness_gadget(&Graph::complete(3)).is_err());
        let g = gen_hardness_gadget(&Graph::cycle(5)).unwrap();
        assert_eq!((g.n(), g.m()), (20, 35));
        assert_eq!(g.eg_bound().unwrap(), rat(70, 19));
    }

    #[test]
    fn generators_meet_their_floors() {
        let inst = gen_instance(&Family::BipartiteDense { p: 20, k: 2, q: 60 }, 3).unwrap();
        let g = &inst.graph;
        assert!((0..20).all(|v| g.degree(v) >= 40));
        assert!((20..80).all(|v| g.degree(v) >= 18));
        assert!(g.edges().iter().all(|&(u, v)| u < 20 || v < 20));

        let inst = gen_instance(&Family::Gnp2c { n: 10, prob: 0.5 }, 1).unwrap();
        assert!(inst.graph.is_biconnected());

        let k1 = Family::NearComplete { n: 64, min_degree: 36, missing: 10, k: Some(1) };
        assert!(gen_instance(&k1, 0).is_err());
        let k2 = Family::NearComplete { n: 130, min_degree: 72, missing: 1000, k: Some(2) };
        let inst = gen_instance(&k2, 0).unwrap();
        assert!(dense_strict_ok(&inst.graph, 2));
    }

    #[test]
    fn deterministic_given_seed() {
        let f = Family::Gnp2c { n: 12, prob: 0.4 };
        assert_eq!(gen_instance(&f, 9).unwrap(), gen_instance(&f, 9).unwrap());
    }
}
