//! Dirac cycles, Fan paths and color-coded s–t paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{ad_of, normalize_cycle, CycleCertificate, Graph, PathCertificate};
use crate::rational::ceil;
use crate::search::{self, Budget, Outcome};

/// Universes up to this size are searched with the identity coloring, which is exact.
pub const DETERMINISTIC_UNIVERSE: usize = 16;

/// Seeded color-coding settings shared by the randomized searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorCoding {
    pub seed: u64,
    /// Explicit trial count; `None` uses ⌈5·e^x⌉ for the search's exponent x.
    pub trials: Option<u64>,
    /// Upper bound on trials.
    pub budget: u64,
    /// Index of the first trial, so runs can cover disjoint seed streams.
    pub first_trial: u64,
}

impl Default for ColorCoding {
    fn default() -> Self {
        ColorCoding { seed: 0, trials: None, budget: 2000, first_trial: 0 }
    }
}

impl ColorCoding {
    pub fn with_seed(seed: u64) -> Self {
        ColorCoding { seed, ..Default::default() }
    }

    pub fn trial_count(&self, exponent: usize) -> u64 {
        let default = (5.0 * (exponent as f64).exp()).ceil();
        let default = if default.is_finite() && default < u64::MAX as f64 { default as u64 } else { u64::MAX };
        self.trials.unwrap_or(default).min(self.budget)
    }

    /// Random coloring for trial `i` (relative to `first_trial`).
    pub fn coloring(&self, i: u64, n: usize, q: usize) -> Vec<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.first_trial + i);
        (0..n).map(|_| rng.gen_range(0..q)).collect()
    }
}

/// Result of a search that may or may not have been exhaustive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Search<T> {
    pub found: Option<T>,
    /// True when a negative answer is certain.
    pub exact: bool,
}

/// A cycle of length at least min(n, 2δ).
pub fn dirac_cycle(g: &Graph) -> Result<CycleCertificate> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let n = g.n();
    let target = n.min(2 * g.min_degree());
    let mut budget = Budget::steps(200 * n as u64);
    let mut best: Vec<usize> = Vec::new();
    for start in 0..n.min(4) {
        if let Some(c) = search::heuristic_cycle(g, start, target, &mut budget) {
            if c.len() > best.len() {
                best = c;
            }
        }
        if best.len() >= target {
            break;
        }
    }
    if best.len() < target {
        best = search::cycle_at_least(g, target, &mut Budget::unlimited())
            .found()
            .expect("2-connected graphs have a cycle of length min(n, 2δ)");
    }
    normalize_cycle(&mut best);
    Ok(CycleCertificate::new(best, target))
}

/// An s–t path of length at least ad_G(V∖{s,t}).
pub fn fan_path(g: &Graph, s: usize, t: usize) -> Result<PathCertificate> {
    if s == t {
        return Err(Error::Precondition("s must differ from t".into()));
    }
    if s >= g.n() || t >= g.n() {
        return Err(Error::VertexOutOfRange { id: s.max(t), n: g.n() });
    }
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| v != s && v != t).collect();
    let target = ceil(ad_of(g, &rest)).max(1) as usize;
    let mut path = search::bfs_path(g, s, t, &vec![false; g.n()]).expect("2-connected");
    while path.len() - 1 < target && search::improve_sequence(g, &mut path, false) {}
    if path.len() - 1 < target {
        path = search::st_path_exact(g, s, t, target + 1, &mut Budget::unlimited()).found().expect("Fan's bound guarantees such a path");
    }
    Ok(PathCertificate::new(path))
}

/// An s–t path with at least `target_vertices` vertices, if one is found.
pub fn st_path_at_least(g: &Graph, s: usize, t: usize, target_vertices: usize, cc: &ColorCoding) -> Option<PathCertificate> {
    st_path_search(g, s, t, target_vertices, cc).ok()?.found
}

/// Like [`st_path_at_least`], reporting whether a negative answer is exact.
pub fn st_path_search(g: &Graph, s: usize, t: usize, target_vertices: usize, cc: &ColorCoding) -> Result<Search<PathCertificate>> {
    let n = g.n();
    if s >= n || t >= n {
        return Err(Error::VertexOutOfRange { id: s.max(t), n });
    }
    if s == t {
        return Err(Error::Precondition("s must differ from t".into()));
    }
    // only the component of s matters
    let comp = g.components().into_iter().find(|c| c.binary_search(&s).is_ok()).expect("s lies in some component");
    if comp.binary_search(&t).is_err() || target_vertices > comp.len() {
        return Ok(Search { found: None, exact: true });
    }
    let sub = g.induced(&comp);
    let (ls, lt) = (sub.local(s).unwrap(), sub.local(t).unwrap());
    let h = &sub.graph;
    let target = target_vertices.max(2);
    if h.n() <= DETERMINISTIC_UNIVERSE {
        let colors: Vec<usize> = (0..h.n()).collect();
        let found = colorful_st_path(h, ls, lt, target, &colors, h.n(), true);
        return Ok(Search { found: found.map(|p| PathCertificate::new(sub.to_parent(&p))), exact: true });
    }
    for i in 0..cc.trial_count(target) {
        let colors = cc.coloring(i, h.n(), target);
        if let Some(p) = colorful_st_path(h, ls, lt, target, &colors, target, false) {
            return Ok(Search { found: Some(PathCertificate::new(sub.to_parent(&p))), exact: false });
        }
    }
    Ok(Search { found: None, exact: false })
}

/// Colorful-path DP from `s`. With `exact_sets` the colors are vertex ids and every
/// mask of size ≥ target is inspected; otherwise a colorful prefix of exactly
/// `target` vertices is extended to `t` by BFS.
fn colorful_st_path(g: &Graph, s: usize, t: usize, target: usize, colors: &[usize], q: usize, exact_sets: bool) -> Option<Vec<usize>> {
    let n = g.n();
    let words = n.div_ceil(64);
    let full = 1usize << q;
    let mut ends = vec![0u64; full * words];
    let set = |e: &mut [u64], mask: usize, v: usize| e[mask * words + v / 64] |= 1 << (v % 64);
    let get = |e: &[u64], mask: usize, v: usize| e[mask * words + v / 64] >> (v % 64) & 1 == 1;
    set(&mut ends, 1 << colors[s], s);
    // masks in increasing numeric order: supersets come later
    for mask in 1..full {
        let size = mask.count_ones() as usize;
        for v in 0..n {
            if !get(&ends, mask, v) {
                continue;
            }
            if size >= target && (v == t || (!exact_sets && size == target)) {
                let path = backtrack(g, &ends, words, mask, v, colors, s, t);
                if v == t {
                    return Some(path);
                }
                let mut blocked = vec![false; n];
                for &x in &path[..path.len() - 1] {
                    blocked[x] = true;
                }
                if let Some(rest) = search::bfs_path(g, v, t, &blocked) {
                    let mut full_path = path;
                    full_path.extend(&rest[1..]);
                    return Some(full_path);
                }
                continue;
            }
            if v == t || (!exact_sets && size >= target) {
                continue;
            }
            for &u in g.neighbors(v) {
                let c = colors[u];
                if mask & (1 << c) == 0 {
                    set(&mut ends, mask | (1 << c), u);
                }
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn backtrack(g: &Graph, ends: &[u64], words: usize, mask: usize, v: usize, colors: &[usize], s: usize, t: usize) -> Vec<usize> {
    let get = |mask: usize, v: usize| ends[mask * words + v / 64] >> (v % 64) & 1 == 1;
    let mut path = vec![v];
    let mut mask = mask;
    let mut v = v;
    while v != s || mask.count_ones() > 1 {
        mask &= !(1 << colors[v]);
        v = g.neighbors(v).iter().copied().find(|&u| u != t && get(mask, u)).expect("dp predecessor exists");
        path.push(v);
    }
    path.reverse();
    path
}

/// Shared by the solver's exact fallback.
pub(crate) fn cycle_at_least_exact(g: &Graph, min_len: usize, node_budget: Option<u64>) -> Search<Vec<usize>> {
    match search::cycle_at_least(g, min_len, &mut Budget(node_budget)) {
        Outcome::Found(c) => Search { found: Some(c), exact: true },
        Outcome::NotFound => Search { found: None, exact: true },
        Outcome::OutOfBudget => Search { found: None, exact: false },
    }
}
