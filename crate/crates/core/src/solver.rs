//! Deciding "cycle of length ≥ mad(G) + k" with certificates.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dense_extract::{find_dense, DenseWitness};
use crate::dense_routing::{cover_side_through_pairs, hamiltonian_through_pairs, Mode};
use crate::density::mad_with_witness;
use crate::error::{Error, Result};
use crate::graph::{normalize_cycle, CycleCertificate, Graph, PathCertificate};
use crate::long_paths::{cycle_at_least_exact, dirac_cycle, st_path_search, ColorCoding};
use crate::rational::{ceil, floor, Rational};
use crate::reduce::{reduce_from, ReductionTrace};
use crate::segments::{find_segments, find_segments_partitioned, SegmentSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    K0,
    Fallback,
    FindDense,
    CaseIi,
    CaseIii,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub mode: Mode,
    /// Ask for a path with ≥ mad + k vertices instead of a cycle.
    pub path: bool,
    pub seed: u64,
    /// Explicit color-coding trial count per search.
    pub trials: Option<u64>,
    /// Cap on color-coding trials per search.
    pub budget: u64,
    /// Largest n handled by the exact fallback.
    pub fallback_cap: usize,
    /// Search-node budget of the exact fallback.
    pub fallback_nodes: u64,
    pub jobs: usize,
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: Mode::Strict,
            path: false,
            seed: 0,
            trials: None,
            budget: 2000,
            fallback_cap: 24,
            fallback_nodes: 50_000_000,
            jobs: 1,
            trace: false,
        }
    }
}

impl SolveOptions {
    fn coloring(&self) -> ColorCoding {
        ColorCoding { seed: self.seed, trials: self.trials, budget: self.budget, first_trial: 0 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub mad_probes: usize,
    pub k_prime: Option<i64>,
    pub engine_rounds: usize,
    pub st_searches: usize,
    pub segment_searches: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: Answer,
    pub k: usize,
    pub mad: Rational,
    /// Smallest integer length meeting the bound (vertex count in path mode).
    pub threshold_len: usize,
    pub cycle: Option<CycleCertificate>,
    pub path: Option<PathCertificate>,
    pub branch: Branch,
    pub stats: Stats,
    pub trace: Option<ReductionTrace>,
}

#[derive(Serialize)]
struct MadJson {
    num: i64,
    den: i64,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    answer: Answer,
    k: usize,
    mad: MadJson,
    threshold_len: usize,
    cycle: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<&'a [usize]>,
    branch: Branch,
    stats: &'a Stats,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a ReductionTrace>,
}

impl Serialize for SolveResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ResultJson {
            answer: self.answer,
            k: self.k,
            mad: MadJson { num: *self.mad.numer(), den: *self.mad.denom() },
            threshold_len: self.threshold_len,
            cycle: self.cycle.as_ref().map(|c| c.vertices.as_slice()),
            path: self.path.as_ref().map(|p| p.vertices.as_slice()),
            branch: self.branch,
            stats: &self.stats,
            trace: self.trace.as_ref(),
        }
        .serialize(s)
    }
}

/// What a case driver or the fallback decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    pub answer: Answer,
    pub cycle: Option<CycleCertificate>,
    pub st_searches: usize,
    pub segment_searches: usize,
    pub reason: Option<String>,
}

impl CaseOutcome {
    fn yes(cycle: CycleCertificate) -> Self {
        CaseOutcome { answer: Answer::Yes, cycle: Some(cycle), st_searches: 0, segment_searches: 0, reason: None }
    }

    fn unknown(reason: impl Into<String>) -> Self {
        CaseOutcome { answer: Answer::Unknown, cycle: None, st_searches: 0, segment_searches: 0, reason: Some(reason.into()) }
    }
}

/// Decides whether `g` has a cycle (or, in path mode, a path) above mad(g) + k.
pub fn solve(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    if opts.path {
        return solve_path(g, k, opts);
    }
    if g.n() < 3 || !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let densest = mad_with_witness(g)?;
    let mad = densest.mad;
    let threshold = mad + Rational::from_integer(k as i64);
    let mut res = SolveResult {
        answer: Answer::Unknown,
        k,
        mad,
        // k = 0 certifies a cycle strictly longer than mad
        threshold_len: if k == 0 { floor(mad) as usize + 1 } else { ceil(threshold) as usize },
        cycle: None,
        path: None,
        branch: Branch::K0,
        stats: Stats { mad_probes: densest.probes, ..Default::default() },
        trace: None,
    };
    if k == 0 {
        let (c, trace) = eg_cycle_from(g, &densest.vertices)?;
        res.trace = opts.trace.then_some(trace);
        return finish(g, res, CaseOutcome::yes(c));
    }
    let in_regime = Rational::from_integer(88 * (k as i64 + 1)) <= mad;
    if opts.mode == Mode::Strict && !in_regime {
        res.branch = Branch::Fallback;
        let out = exact_longest_cycle_fallback(g, threshold, opts);
        return finish(g, res, out);
    }
    let out = pipeline(g, k, mad, opts, &mut res);
    if opts.mode == Mode::Relaxed && out.answer != Answer::Yes {
        if g.n() <= opts.fallback_cap {
            res.branch = Branch::Fallback;
            let out = exact_longest_cycle_fallback(g, threshold, opts);
            return finish(g, res, out);
        }
        let why = out.reason.clone().unwrap_or_else(|| "guarantees void outside the strict regime".into());
        return finish(g, res, CaseOutcome::unknown(format!("relaxed mode: {why}")));
    }
    finish(g, res, out)
}

/// Runs find_dense and the matching case driver, filling branch and stats.
fn pipeline(g: &Graph, k: usize, mad: Rational, opts: &SolveOptions, res: &mut SolveResult) -> CaseOutcome {
    res.branch = Branch::FindDense;
    let report = match find_dense(g, k, opts.mode) {
        Ok(r) => r,
        Err(e) => return CaseOutcome::unknown(e.to_string()),
    };
    res.stats.engine_rounds = report.engine_rounds;
    res.stats.k_prime = report.k_prime;
    if opts.trace {
        res.trace = Some(report.trace.clone());
    }
    let top = ceil(mad) + k as i64;
    match report.witness {
        DenseWitness::FoundCycle(c) => CaseOutcome::yes(c),
        DenseWitness::SmallDense { vertices } => {
            res.branch = Branch::CaseIi;
            let kp = top - vertices.len() as i64;
            res.stats.k_prime = Some(kp);
            case_small_dense(g, &vertices, kp, k + 1, opts).unwrap_or_else(|e| CaseOutcome::unknown(e.to_string()))
        }
        DenseWitness::BipartiteDense { a, b, .. } => {
            res.branch = Branch::CaseIii;
            let kp = top - 2 * a.len() as i64;
            res.stats.k_prime = Some(kp);
            case_bipartite_dense(g, &a, &b, kp, 4 * k, opts).unwrap_or_else(|e| CaseOutcome::unknown(e.to_string()))
        }
    }
}

/// Fills the result from a case outcome, re-verifying any certificate.
fn finish(g: &Graph, mut res: SolveResult, out: CaseOutcome) -> Result<SolveResult> {
    res.stats.st_searches += out.st_searches;
    res.stats.segment_searches += out.segment_searches;
    res.stats.reason = out.reason;
    res.answer = out.answer;
    if let Some(mut c) = out.cycle {
        normalize_cycle(&mut c.vertices);
        c.claimed_min_length = res.threshold_len;
        if let Err(v) = c.verify(g) {
            res.answer = Answer::Unknown;
            res.stats.reason = Some(format!("discarded certificate: {v}"));
        } else {
            res.cycle = Some(c);
        }
    } else if res.answer == Answer::Yes {
        res.answer = Answer::Unknown;
        res.stats.reason = Some("yes without certificate".into());
    }
    Ok(res)
}

/// A cycle longer than mad(g): densest subgraph, reductions, then a Dirac cycle.
pub fn eg_cycle(g: &Graph) -> Result<CycleCertificate> {
    let densest = mad_with_witness(g)?;
    Ok(eg_cycle_from(g, &densest.vertices)?.0)
}

fn eg_cycle_from(g: &Graph, densest: &[usize]) -> Result<(CycleCertificate, ReductionTrace)> {
    let trace = reduce_from(g, densest)?;
    let sub = g.induced(&trace.final_vertices);
    let c = dirac_cycle(&sub.graph)?;
    let mut v = sub.to_parent(&c.vertices);
    normalize_cycle(&mut v);
    let len = v.len();
    Ok((CycleCertificate::new(v, len), trace))
}

/// Exact decision of "cycle of length ≥ threshold" for small graphs.
pub fn exact_longest_cycle_fallback(g: &Graph, threshold: Rational, opts: &SolveOptions) -> CaseOutcome {
    if g.n() > opts.fallback_cap {
        return CaseOutcome::unknown(format!("exact fallback capped at n <= {}, got n = {}", opts.fallback_cap, g.n()));
    }
    let len = ceil(threshold).max(3) as usize;
    let s = cycle_at_least_exact(g, len, Some(opts.fallback_nodes));
    match (s.found, s.exact) {
        (Some(c), _) => CaseOutcome::yes(CycleCertificate::new(c, len)),
        (None, true) => CaseOutcome { answer: Answer::No, cycle: None, st_searches: 0, segment_searches: 0, reason: None },
        (None, false) => CaseOutcome::unknown("exact fallback ran out of search budget"),
    }
}

/// Inserts the interior of `path` between its two ends, which must be consecutive on `cycle`.
fn splice(cycle: &mut Vec<usize>, path: &[usize]) -> bool {
    let l = cycle.len();
    let (a, b) = (path[0], path[path.len() - 1]);
    let Some(i) = cycle.iter().position(|&v| v == a) else { return false };
    let inner = &path[1..path.len() - 1];
    if cycle[(i + 1) % l] == b {
        cycle.splice(i + 1..i + 1, inner.iter().copied());
    } else if cycle[(i + l - 1) % l] == b {
        cycle.splice(i..i, inner.iter().rev().copied());
    } else {
        return false;
    }
    true
}

/// `(s, t, component index)`
type Candidate = (usize, usize, usize);

/// Pair candidates for the outside-path searches: (s, t, component of G − H), sorted.
fn outside_pairs(g: &Graph, in_h: &[bool]) -> (Vec<Vec<usize>>, Vec<Candidate>) {
    let comps = g.components_avoiding(in_h);
    let mut cands = Vec::new();
    for (qi, comp) in comps.iter().enumerate() {
        let mut attach: Vec<usize> = comp.iter().flat_map(|&v| g.neighbors(v).iter().copied().filter(|&u| in_h[u])).collect();
        attach.sort_unstable();
        attach.dedup();
        for (i, &s) in attach.iter().enumerate() {
            for &t in &attach[i + 1..] {
                cands.push((s, t, qi));
            }
        }
    }
    cands.sort_unstable();
    (comps, cands)
}

struct Probe {
    inexact: AtomicBool,
    count: AtomicUsize,
}

impl Probe {
    fn new() -> Self {
        Probe { inexact: AtomicBool::new(false), count: AtomicUsize::new(0) }
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// First (s, t) pair with an outside path of at least `min_internal` internal vertices.
fn outside_path(g: &Graph, in_h: &[bool], min_internal: usize, opts: &SolveOptions, probe: &Probe) -> Option<Vec<usize>> {
    let (comps, cands) = outside_pairs(g, in_h);
    let cc = opts.coloring();
    with_pool(opts.jobs, || {
        cands.par_iter().find_map_first(|&(s, t, qi)| {
            let comp = &comps[qi];
            if comp.len() < min_internal {
                return None;
            }
            probe.count.fetch_add(1, Ordering::Relaxed);
            let mut verts = comp.clone();
            verts.extend([s, t]);
            verts.sort_unstable();
            let sub = g.induced(&verts);
            let (ls, lt) = (sub.local(s)?, sub.local(t)?);
            match st_path_search(&sub.graph, ls, lt, min_internal + 2, &cc) {
                Ok(r) => {
                    if !r.exact {
                        probe.inexact.store(true, Ordering::Relaxed);
                    }
                    r.found.map(|p| sub.to_parent(&p.vertices))
                }
                Err(_) => {
                    probe.inexact.store(true, Ordering::Relaxed);
                    None
                }
            }
        })
    })
}

/// First segment system over the (ordered) parameter list.
fn segment_system<P: Copy + Send + Sync>(
    params: &[P],
    opts: &SolveOptions,
    probe: &Probe,
    run: impl Fn(P) -> Result<crate::long_paths::Search<SegmentSystem>> + Send + Sync,
) -> Option<SegmentSystem> {
    with_pool(opts.jobs, || {
        params.par_iter().find_map_first(|&p| {
            probe.count.fetch_add(1, Ordering::Relaxed);
            match run(p) {
                Ok(r) => {
                    if !r.exact {
                        probe.inexact.store(true, Ordering::Relaxed);
                    }
                    r.found
                }
                Err(_) => {
                    probe.inexact.store(true, Ordering::Relaxed);
                    None
                }
            }
        })
    })
}

fn local_pairs(sub: &crate::graph::Subgraph, pairs: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    pairs.iter().map(|&(u, v)| Some((sub.local(u)?, sub.local(v)?))).collect()
}

/// Routes `pairs` through H, maps to host ids, and splices in every path.
fn assemble(
    sub: &crate::graph::Subgraph,
    pairs: &[(usize, usize)],
    paths: &[Vec<usize>],
    route: impl Fn(&[(usize, usize)]) -> Result<CycleCertificate>,
) -> Result<CycleCertificate> {
    let local = local_pairs(sub, pairs).ok_or_else(|| Error::ConstructionFailed("pair outside H".into()))?;
    let base = route(&local)?;
    let mut cycle = sub.to_parent(&base.vertices);
    let base_len = cycle.len();
    for p in paths {
        if !splice(&mut cycle, p) {
            return Err(Error::ConstructionFailed("segment ends not consecutive on the routed cycle".into()));
        }
    }
    let added: usize = paths.iter().map(|p| p.len() - 2).sum();
    debug_assert_eq!(cycle.len(), base_len + added);
    let len = cycle.len();
    Ok(CycleCertificate::new(cycle, len))
}

fn decide(found: Option<Result<CycleCertificate>>, st: &Probe, seg: &Probe) -> CaseOutcome {
    let counts = (st.count.load(Ordering::Relaxed), seg.count.load(Ordering::Relaxed));
    let mut out = match found {
        Some(Ok(c)) => CaseOutcome::yes(c),
        Some(Err(e)) => CaseOutcome::unknown(format!("assembly failed: {e}")),
        None if st.inexact.load(Ordering::Relaxed) || seg.inexact.load(Ordering::Relaxed) => {
            CaseOutcome::unknown("randomized search budget exhausted")
        }
        None => CaseOutcome { answer: Answer::No, cycle: None, st_searches: 0, segment_searches: 0, reason: None },
    };
    out.st_searches = counts.0;
    out.segment_searches = counts.1;
    out
}

/// Case of a small dense H: is there a cycle of length ≥ |H| + k′?
/// `routing_k` is the pair budget handed to the Hamiltonian routing.
pub fn case_small_dense(g: &Graph, h: &[usize], k_prime: i64, routing_k: usize, opts: &SolveOptions) -> Result<CaseOutcome> {
    let mut hv = h.to_vec();
    hv.sort_unstable();
    hv.dedup();
    let sub = g.induced(&hv);
    let route = |pairs: &[(usize, usize)]| hamiltonian_through_pairs(&sub.graph, pairs, routing_k, opts.mode);
    if k_prime <= 0 {
        let c = assemble(&sub, &[], &[], route)?;
        return Ok(CaseOutcome::yes(c));
    }
    let kp = k_prime as usize;
    let mut in_h = vec![false; g.n()];
    for &v in &hv {
        in_h[v] = true;
    }
    let (st, seg) = (Probe::new(), Probe::new());
    if let Some(p) = outside_path(g, &in_h, kp, opts, &st) {
        let found = assemble(&sub, &[(p[0], p[p.len() - 1])], &[p], route);
        return Ok(decide(Some(found), &st, &seg));
    }
    let mut params = Vec::new();
    for r in 1..=kp {
        for p in kp..=(2 * kp).saturating_sub(2) {
            if p >= r {
                params.push((r, p));
            }
        }
    }
    let cc = opts.coloring();
    let sys = segment_system(&params, opts, &seg, |(r, p)| find_segments(g, &hv, r, p, &cc));
    let found = sys.map(|s| {
        let paths: Vec<Vec<usize>> = s.paths.iter().map(|p| p.vertices.clone()).collect();
        assemble(&sub, &s.pairs(), &paths, route)
    });
    Ok(decide(found, &st, &seg))
}

/// Case of a bipartite-dense H = A ∪ B: is there a cycle of length ≥ 2|A| + k′?
/// `routing_k` is the parameter handed to the A-covering routing.
pub fn case_bipartite_dense(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    k_prime: i64,
    routing_k: usize,
    opts: &SolveOptions,
) -> Result<CaseOutcome> {
    let mut hv: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    hv.sort_unstable();
    hv.dedup();
    let sub = g.induced(&hv);
    let la: Vec<usize> = a.iter().filter_map(|&v| sub.local(v)).collect();
    let lb: Vec<usize> = b.iter().filter_map(|&v| sub.local(v)).collect();
    let route = |pairs: &[(usize, usize)]| cover_side_through_pairs(&sub.graph, &la, &lb, pairs, routing_k, opts.mode);
    if k_prime <= 0 {
        let c = assemble(&sub, &[], &[], route)?;
        return Ok(CaseOutcome::yes(c));
    }
    let kp = k_prime as usize;
    let mut in_h = vec![false; g.n()];
    for &v in &hv {
        in_h[v] = true;
    }
    let (st, seg) = (Probe::new(), Probe::new());
    if let Some(p) = outside_path(g, &in_h, kp + 1, opts, &st) {
        let found = assemble(&sub, &[(p[0], p[p.len() - 1])], &[p], route);
        return Ok(decide(Some(found), &st, &seg));
    }
    let mut params = Vec::new();
    for r in 1..=kp {
        for s in 0..=kp {
            for t in 0..=kp {
                if s + t > r {
                    continue;
                }
                let lo = (kp + s).saturating_sub(t).max(r).max(1);
                for p in lo..=(3 * kp).saturating_sub(2) {
                    params.push((r, s, t, p));
                }
            }
        }
    }
    let cc = opts.coloring();
    let sys = segment_system(&params, opts, &seg, |(r, s, t, p)| find_segments_partitioned(g, &hv, a, b, r, p, s, t, &cc));
    let found = sys.map(|s| {
        let paths: Vec<Vec<usize>> = s.paths.iter().map(|p| p.vertices.clone()).collect();
        assemble(&sub, &s.pairs(), &paths, route)
    });
    Ok(decide(found, &st, &seg))
}

/// Path mode: a path with ≥ mad(g) + k vertices, via a cycle in g plus a universal vertex.
fn solve_path(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let densest = mad_with_witness(g)?;
    let mad = densest.mad;
    let need = ceil(mad + Rational::from_integer(k as i64)) as usize;
    let gu = g.with_universal_vertex();
    let mad_u = mad_with_witness(&gu)?.mad;
    let inner_k = (need as i64 + 1 - ceil(mad_u)).max(0) as usize;
    let inner = solve(&gu, inner_k, &SolveOptions { path: false, ..opts.clone() })?;
    let u = g.n();
    let path = inner.cycle.as_ref().map(|c| {
        let l = c.vertices.len();
        let at = c.vertices.iter().position(|&v| v == u).unwrap_or(l - 1);
        let p: Vec<usize> = (1..l).map(|i| c.vertices[(at + i) % l]).collect();
        PathCertificate::new(p)
    });
    let mut answer = inner.answer;
    let mut stats = inner.stats;
    if let Some(p) = &path {
        if p.verify(g).is_err() || p.vertices.len() < need {
            answer = Answer::Unknown;
            stats.reason = Some("path extraction failed".into());
        }
    }
    Ok(SolveResult {
        answer,
        k,
        mad,
        threshold_len: need,
        cycle: None,
        path: if answer == Answer::Yes { path } else { None },
        branch: inner.branch,
        stats,
        trace: inner.trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn clique_plus_outside_path(internals: usize) -> Graph {
        let mut e = Graph::complete(6).edges();
        let mut prev = 0;
        for i in 0..internals {
            e.push((prev, 6 + i));
            prev = 6 + i;
        }
        e.push((prev, 1));
        Graph::from_edges(6 + internals, &e).unwrap()
    }

    #[test]
    fn solve_examples() {
        let opts = SolveOptions::default();
        let r = solve(&Graph::complete(4), 0, &opts).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.cycle.as_ref().unwrap().len(), 4);
        assert_eq!(r.mad, rat(3, 1));
        assert_eq!(r.threshold_len, 4);

        let r = solve(&Graph::complete(4), 2, &opts).unwrap();
        assert_eq!(r.answer, Answer::No);
        assert_eq!(r.branch, Branch::Fallback);

        let r = solve(&Graph::petersen(), 1, &opts).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert!(r.cycle.unwrap().len() >= 4);
    }

    #[test]
    fn fallback_examples() {
        let opts = SolveOptions::default();
        let out = exact_longest_cycle_fallback(&Graph::petersen(), rat(4, 1), &opts);
        assert_eq!(out.answer, Answer::Yes);
        let out = exact_longest_cycle_fallback(&Graph::cycle(5), rat(3, 1), &opts);
        assert_eq!(out.cycle.unwrap().len(), 5);
        let out = exact_longest_cycle_fallback(&Graph::path(5), rat(3, 1), &opts);
        assert_eq!(out.answer, Answer::No);
    }

    #[test]
    fn small_dense_driver() {
        let opts = SolveOptions { mode: Mode::Relaxed, ..Default::default() };
        let h: Vec<usize> = (0..6).collect();
        let g = clique_plus_outside_path(2);
        let out = case_small_dense(&g, &h, 2, 3, &opts).unwrap();
        assert_eq!(out.answer, Answer::Yes);
        let c = out.cycle.unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.verify(&g).is_ok());

        let g = clique_plus_outside_path(4);
        let out = case_small_dense(&g, &h, 2, 3, &opts).unwrap();
        let c = out.cycle.unwrap();
        assert!(c.len() >= 8);
        assert!(c.verify(&g).is_ok());

        let out = case_small_dense(&Graph::complete(6), &h, 1, 2, &opts).unwrap();
        assert_eq!(out.answer, Answer::No);
    }

    #[test]
    fn bipartite_driver() {
        let opts = SolveOptions { mode: Mode::Relaxed, ..Default::default() };
        let (p, q) = (20, 80);
        let mut e = Vec::new();
        for x in 0..p {
            for y in p..p + q {
                e.push((x, y));
            }
        }
        let h_n = p + q;
        // outside B–B path with three internals
        e.extend([(p, h_n), (h_n, h_n + 1), (h_n + 1, h_n + 2), (h_n + 2, p + 1)]);
        let g = Graph::from_edges(h_n + 3, &e).unwrap();
        let a: Vec<usize> = (0..p).collect();
        let b: Vec<usize> = (p..p + q).collect();
        let out = case_bipartite_dense(&g, &a, &b, 3, 4, &opts).unwrap();
        assert_eq!(out.answer, Answer::Yes);
        let c = out.cycle.unwrap();
        assert!(c.len() >= 2 * p + 3);
        assert!(c.verify(&g).is_ok());

        // no outside vertices
        let hb = g.induced(&(0..h_n).collect::<Vec<_>>()).graph;
        let out = case_bipartite_dense(&hb, &a, &b, 1, 4, &opts).unwrap();
        assert_eq!(out.answer, Answer::No);
    }

    #[test]
    fn a_segment_needs_two_internals() {
        let opts = SolveOptions { mode: Mode::Relaxed, ..Default::default() };
        let (p, q) = (4, 12);
        let mut e = Vec::new();
        for x in 0..p {
            for y in p..p + q {
                e.push((x, y));
            }
        }
        let o = p + q;
        e.extend([(0, o), (o, 1)]);
        let g = Graph::from_edges(o + 1, &e).unwrap();
        let a: Vec<usize> = (0..p).collect();
        let b: Vec<usize> = (p..p + q).collect();
        let out = case_bipartite_dense(&g, &a, &b, 1, 1, &opts).unwrap();
        assert_eq!(out.answer, Answer::No);
    }

    #[test]
    fn large_clique_goes_through_find_dense() {
        let g = Graph::complete(200);
        let r = solve(&g, 1, &SolveOptions::default()).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.branch, Branch::FindDense);
        assert_eq!(r.cycle.unwrap().len(), 200);
    }

    #[test]
    fn path_mode() {
        let opts = SolveOptions { path: true, ..Default::default() };
        let g = Graph::path(5);
        let r = solve(&g, 0, &opts).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert!(r.path.as_ref().unwrap().verify(&g).is_ok());
        // mad(P5) = 8/5, so k = 3 asks for 5 vertices, k = 4 for 6
        let r = solve(&g, 3, &opts).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.path.unwrap().vertices.len(), 5);
        let r = solve(&g, 4, &opts).unwrap();
        assert_eq!(r.answer, Answer::No);
    }

    #[test]
    fn json_shape() {
        let r = solve(&Graph::complete(4), 0, &SolveOptions::default()).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"answer":"yes","k":0,"mad":{"num":3,"den":1},"threshold_len":4,"cycle":[0,1,2,3],"branch":"k0""#), "{s}");
        let r = solve(&Graph::complete(4), 2, &SolveOptions::default()).unwrap();
        assert!(serde_json::to_string(&r).unwrap().contains(r#""cycle":null"#));
    }
}
