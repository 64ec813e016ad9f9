//! Color-coded search for systems of T-segments.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, PathCertificate};
use crate::long_paths::{ColorCoding, Search, DETERMINISTIC_UNIVERSE};

/// Internally disjoint T-segments whose endpoint pairs form a linear forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentSystem {
    pub paths: Vec<PathCertificate>,
    pub terminals: Vec<usize>,
    /// `(s, t)`: A-segment and B-segment counts when a partition was supplied.
    pub counts: Option<(usize, usize)>,
}

impl SegmentSystem {
    /// Endpoint pairs, one per path.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.paths.iter().map(|p| (p.first(), p.last())).collect()
    }

    pub fn internal_count(&self) -> usize {
        self.paths.iter().map(|p| p.vertices.len() - 2).sum()
    }

    /// Checks every system invariant, plus the counts `r`, `p` and, with `side_a`,
    /// the A/B split and the two-internal rule for A-segments.
    pub fn check(&self, g: &Graph, r: usize, p: usize, side_a: Option<&[usize]>) -> std::result::Result<(), String> {
        let n = g.n();
        let mut in_t = vec![false; n];
        for &v in &self.terminals {
            if v >= n {
                return Err(format!("terminal {v} out of range"));
            }
            in_t[v] = true;
        }
        let mut used = vec![0usize; n];
        for path in &self.paths {
            path.verify(g).map_err(|e| e.to_string())?;
            let vs = &path.vertices;
            if vs.len() < 3 {
                return Err("segment shorter than two edges".into());
            }
            if !in_t[vs[0]] || !in_t[vs[vs.len() - 1]] {
                return Err("segment endpoint outside T".into());
            }
            for &v in &vs[1..vs.len() - 1] {
                if in_t[v] {
                    return Err(format!("internal vertex {v} lies in T"));
                }
                used[v] += 1;
            }
        }
        if let Some(v) = (0..n).find(|&v| used[v] > 1) {
            return Err(format!("segments share internal vertex {v}"));
        }
        let mut deg = vec![0; n];
        let mut root: Vec<usize> = (0..n).collect();
        for (x, y) in self.pairs() {
            deg[x] += 1;
            deg[y] += 1;
            if deg[x] > 2 || deg[y] > 2 {
                return Err("endpoint in three segments".into());
            }
            let (mut a, mut b) = (x, y);
            while root[a] != a {
                a = root[a];
            }
            while root[b] != b {
                b = root[b];
            }
            if a == b {
                return Err("endpoint pairs contain a cycle".into());
            }
            root[a] = b;
        }
        if self.paths.len() != r {
            return Err(format!("{} segments, expected {r}", self.paths.len()));
        }
        if self.internal_count() != p {
            return Err(format!("{} internal vertices, expected {p}", self.internal_count()));
        }
        if let Some(a) = side_a {
            let in_a = |v: usize| a.contains(&v);
            let mut s = 0;
            let mut t = 0;
            for path in &self.paths {
                match (in_a(path.first()), in_a(path.last())) {
                    (true, true) => {
                        if path.vertices.len() < 4 {
                            return Err("A-segment with fewer than two internal vertices".into());
                        }
                        s += 1;
                    }
                    (false, false) => t += 1,
                    _ => {}
                }
            }
            if let Some(expected) = self.counts {
                if expected != (s, t) {
                    return Err(format!("counts (s,t)=({s},{t}), expected {expected:?}"));
                }
            }
        }
        Ok(())
    }
}

/// A system with exactly `r` segments and `p` internal vertices, if found.
pub fn find_segments(g: &Graph, terminals: &[usize], r: usize, p: usize, cc: &ColorCoding) -> Result<Search<SegmentSystem>> {
    let mut sys = search(g, terminals, &[], r, p, 0, r, cc)?;
    if let Some(s) = sys.found.as_mut() {
        s.counts = None;
    }
    Ok(sys)
}

/// As [`find_segments`] with `s` A-segments (each with ≥ 2 internal vertices)
/// and `t` B-segments for the partition `{side_a, side_b}` of `terminals`.
#[allow(clippy::too_many_arguments)]
pub fn find_segments_partitioned(
    g: &Graph,
    terminals: &[usize],
    side_a: &[usize],
    side_b: &[usize],
    r: usize,
    p: usize,
    s: usize,
    t: usize,
    cc: &ColorCoding,
) -> Result<Search<SegmentSystem>> {
    let mut a = side_a.to_vec();
    a.sort_unstable();
    let mut b = side_b.to_vec();
    b.sort_unstable();
    let mut union: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    union.sort_unstable();
    let mut term = terminals.to_vec();
    term.sort_unstable();
    term.dedup();
    if union.windows(2).any(|w| w[0] == w[1]) || union != term {
        return Err(Error::Precondition("A and B must partition T".into()));
    }
    if s + t > r {
        return Err(Error::Precondition(format!("s + t = {} exceeds r = {r}", s + t)));
    }
    search(g, terminals, &a, r, p, s, t, cc)
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    terminals: &[usize],
    side_a: &[usize],
    r: usize,
    p: usize,
    s: usize,
    t: usize,
    cc: &ColorCoding,
) -> Result<Search<SegmentSystem>> {
    if r == 0 || p == 0 {
        return Err(Error::Precondition("r and p must be positive".into()));
    }
    if r > p {
        return Err(Error::Precondition(format!("r = {r} exceeds p = {p}: every segment needs an internal vertex")));
    }
    let n = g.n();
    let mut in_t = vec![false; n];
    for &v in terminals {
        if v >= n {
            return Err(Error::VertexOutOfRange { id: v, n });
        }
        in_t[v] = true;
    }
    // vertices that can lie on a segment
    let universe: Vec<usize> = (0..n).filter(|&v| !in_t[v] || g.neighbors(v).iter().any(|&u| !in_t[u])).collect();
    let sub = g.induced(&universe);
    let h = &sub.graph;
    let local_t: Vec<bool> = sub.map.iter().map(|&v| in_t[v]).collect();
    let local_a: Vec<bool> = sub.map.iter().map(|&v| side_a.binary_search(&v).is_ok()).collect();
    let term_of_terminals: Vec<usize> = terminals.to_vec();
    let finish = |paths: Vec<Vec<usize>>| SegmentSystem {
        paths: paths.into_iter().map(|p| PathCertificate::new(sub.to_parent(&p))).collect(),
        terminals: term_of_terminals.clone(),
        counts: Some((s, t)),
    };
    if h.n() <= DETERMINISTIC_UNIVERSE {
        let colors: Vec<usize> = (0..h.n()).collect();
        let mut dp = Dp::new(h, &local_t, &local_a, colors, h.n(), p);
        let found = dp.solve(r, p, s, t);
        return Ok(Search { found: found.map(finish), exact: true });
    }
    let q = p + 2 * r;
    if q > 30 {
        return Err(Error::Precondition(format!("p + 2r = {q} colors is too many")));
    }
    for i in 0..cc.trial_count(3 * p) {
        let colors = cc.coloring(i, h.n(), q);
        let mut dp = Dp::new(h, &local_t, &local_a, colors, q, p);
        if let Some(paths) = dp.solve(r, p, s, t) {
            return Ok(Search { found: Some(finish(paths)), exact: false });
        }
    }
    Ok(Search { found: None, exact: false })
}

type Key = (usize, usize, usize, usize, usize, u32);

struct Dp<'a> {
    g: &'a Graph,
    in_t: &'a [bool],
    in_a: &'a [bool],
    colors: Vec<usize>,
    q: usize,
    /// α(x, y, Y) true entries, grouped by x
    alpha: HashMap<usize, Vec<(usize, u32)>>,
    memo: HashMap<Key, bool>,
}

impl<'a> Dp<'a> {
    fn new(g: &'a Graph, in_t: &'a [bool], in_a: &'a [bool], colors: Vec<usize>, q: usize, p: usize) -> Self {
        let mut dp = Dp { g, in_t, in_a, colors, q, alpha: HashMap::new(), memo: HashMap::new() };
        for (x, _) in in_t.iter().enumerate().filter(|(_, &t)| t) {
            let entries = dp.alpha_from(x, p);
            dp.alpha.insert(x, entries);
        }
        dp
    }

    /// Colorful paths from `x` through non-T vertices: level by level,
    /// `levels[k]` maps a color set of size k+1 to its possible end vertices.
    fn walks(&self, x: usize, p: usize) -> Vec<HashMap<u32, Vec<bool>>> {
        let n = self.g.n();
        let mut levels: Vec<HashMap<u32, Vec<bool>>> = Vec::new();
        let mut first = HashMap::new();
        let mut ends = vec![false; n];
        ends[x] = true;
        first.insert(1u32 << self.colors[x], ends);
        levels.push(first);
        for _ in 0..p {
            let mut next: HashMap<u32, Vec<bool>> = HashMap::new();
            for (&mask, ends) in levels.last().unwrap() {
                for v in (0..n).filter(|&v| ends[v]) {
                    for &u in self.g.neighbors(v) {
                        let c = 1u32 << self.colors[u];
                        if self.in_t[u] || mask & c != 0 {
                            continue;
                        }
                        next.entry(mask | c).or_insert_with(|| vec![false; n])[u] = true;
                    }
                }
            }
            levels.push(next);
        }
        levels
    }

    fn alpha_from(&self, x: usize, p: usize) -> Vec<(usize, u32)> {
        let levels = self.walks(x, p);
        let mut out = Vec::new();
        for level in levels.iter().skip(1) {
            for (&mask, ends) in level {
                for v in (0..self.g.n()).filter(|&v| ends[v]) {
                    for &y in self.g.neighbors(v) {
                        let c = 1u32 << self.colors[y];
                        if self.in_t[y] && y != x && mask & c == 0 {
                            out.push((y, mask | c));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// α*: α with the gate for short A-segments.
    fn gate(&self, x: usize, y: usize, set: u32) -> bool {
        let size = set.count_ones();
        !(size <= 2 || (self.in_a[x] && self.in_a[y] && size == 3))
    }

    /// (A-segment, B-segment) contribution of a segment x..y.
    fn class(&self, x: usize, y: usize) -> (usize, usize) {
        match (self.in_a[x], self.in_a[y]) {
            (true, true) => (1, 0),
            (false, false) => (0, 1),
            _ => (0, 0),
        }
    }

    fn beta(&mut self, x: usize, p: usize, r: usize, s: usize, t: usize, set: u32) -> bool {
        let key = (x, p, r, s, t, set);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = self.beta_choice(x, p, r, s, t, set).is_some();
        self.memo.insert(key, v);
        v
    }

    /// First (y, Y, next root) realizing β, in deterministic order.
    fn beta_choice(&mut self, x: usize, p: usize, r: usize, s: usize, t: usize, set: u32) -> Option<(usize, u32, Option<usize>)> {
        let size = set.count_ones() as usize;
        if r == 0 || size < p + r + 1 || size > p + 2 * r || set & (1 << self.colors[x]) == 0 {
            return None;
        }
        let entries = self.alpha.get(&x).cloned().unwrap_or_default();
        if r == 1 {
            return entries
                .iter()
                .find(|&&(y, y_set)| {
                    y_set == set && self.gate(x, y, y_set) && self.class(x, y) == (s, t) && y_set.count_ones() as usize - 2 == p
                })
                .map(|&(y, y_set)| (y, y_set, None));
        }
        for (y, y_set) in entries {
            if y_set & !set != 0 || y_set == set || !self.gate(x, y, y_set) {
                continue;
            }
            let (ds, dt) = self.class(x, y);
            if ds > s || dt > t {
                continue;
            }
            let inner = y_set.count_ones() as usize - 2;
            if inner + (r - 1) > p {
                continue;
            }
            let rest = p - inner;
            let cy = 1u32 << self.colors[y];
            let shared = (set & !y_set) | cy;
            if self.beta(y, rest, r - 1, s - ds, t - dt, shared) {
                return Some((y, y_set, Some(y)));
            }
            let fresh = set & !y_set;
            for z in 0..self.g.n() {
                if !self.in_t[z] || z == x || z == y || fresh & (1 << self.colors[z]) == 0 {
                    continue;
                }
                if self.beta(z, rest, r - 1, s - ds, t - dt, fresh) {
                    return Some((y, y_set, Some(z)));
                }
            }
        }
        None
    }

    fn solve(&mut self, r: usize, p: usize, s: usize, t: usize) -> Option<Vec<Vec<usize>>> {
        let n = self.g.n();
        let lo = p + r + 1;
        let hi = (p + 2 * r).min(self.q);
        if lo > hi {
            return None;
        }
        for x in 0..n {
            if !self.in_t[x] {
                continue;
            }
            let mut found = None;
            for_each_subset(self.q, lo, hi, 1 << self.colors[x], &mut |set| {
                if found.is_none() && self.beta(x, p, r, s, t, set) {
                    found = Some(set);
                }
                found.is_some()
            });
            if let Some(set) = found {
                return Some(self.reconstruct(x, p, r, s, t, set));
            }
        }
        None
    }

    fn reconstruct(&mut self, x: usize, p: usize, r: usize, s: usize, t: usize, set: u32) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let (mut x, mut p, mut r, mut s, mut t, mut set) = (x, p, r, s, t, set);
        loop {
            let (y, y_set, next) = self.beta_choice(x, p, r, s, t, set).expect("β entry holds");
            out.push(self.segment(x, y, y_set));
            let (ds, dt) = self.class(x, y);
            let Some(z) = next else { break };
            let cy = 1u32 << self.colors[y];
            set = if z == y { (set & !y_set) | cy } else { set & !y_set };
            p -= y_set.count_ones() as usize - 2;
            r -= 1;
            s -= ds;
            t -= dt;
            x = z;
        }
        out
    }

    /// The colorful x..y segment with color set `y_set`.
    fn segment(&self, x: usize, y: usize, y_set: u32) -> Vec<usize> {
        let inner = y_set.count_ones() as usize - 2;
        let levels = self.walks(x, inner);
        let mut mask = y_set & !(1 << self.colors[y]);
        let mut path = vec![y];
        let mut k = inner;
        let mut v =
            *self.g.neighbors(y).iter().find(|&&v| !self.in_t[v] && levels[k].get(&mask).is_some_and(|e| e[v])).expect("α witness exists");
        loop {
            path.push(v);
            if k == 0 {
                break;
            }
            mask &= !(1 << self.colors[v]);
            k -= 1;
            v = *self.g.neighbors(v).iter().find(|&&u| levels[k].get(&mask).is_some_and(|e| e[u])).expect("walk predecessor exists");
        }
        path.reverse();
        path
    }
}

/// Calls `f` on every subset of `0..q` containing `required` with size in `lo..=hi`;
/// stops when `f` returns true.
fn for_each_subset(q: usize, lo: usize, hi: usize, required: u32, f: &mut dyn FnMut(u32) -> bool) {
    fn rec(i: usize, q: usize, cur: u32, lo: usize, hi: usize, f: &mut dyn FnMut(u32) -> bool) -> bool {
        let size = cur.count_ones() as usize;
        if size > hi {
            return false;
        }
        if i == q {
            return size >= lo && f(cur);
        }
        if size + (q - i) < lo {
            return false;
        }
        if cur & (1 << i) != 0 {
            return rec(i + 1, q, cur, lo, hi, f);
        }
        rec(i + 1, q, cur | (1 << i), lo, hi, f) || rec(i + 1, q, cur, lo, hi, f)
    }
    rec(0, q, required, lo, hi, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_examples() {
        let cc = ColorCoding::default();
        let p3 = Graph::path(3);
        let r = find_segments(&p3, &[0, 2], 1, 1, &cc).unwrap();
        let sys = r.found.unwrap();
        assert_eq!(sys.paths[0].vertices, vec![0, 1, 2]);
        assert!(sys.check(&p3, 1, 1, None).is_ok());
        let r = find_segments(&p3, &[0, 2], 1, 2, &cc).unwrap();
        assert!(r.exact && r.found.is_none());
        let c6 = Graph::cycle(6);
        assert!(find_segments(&c6, &[0, 3], 2, 4, &cc).unwrap().found.is_none());
        let sys = find_segments(&c6, &[0, 3], 1, 2, &cc).unwrap().found.unwrap();
        assert!(sys.check(&c6, 1, 2, None).is_ok());
        assert!(find_segments(&c6, &[0, 3], 3, 2, &cc).is_err());
    }

    #[test]
    fn partitioned_examples() {
        let cc = ColorCoding::default();
        let c6 = Graph::cycle(6);
        let sys = find_segments_partitioned(&c6, &[0, 3], &[0], &[3], 1, 2, 0, 0, &cc).unwrap().found.unwrap();
        let v = &sys.paths[0].vertices;
        assert!(v == &vec![0, 1, 2, 3] || v == &vec![3, 2, 1, 0] || v == &vec![0, 5, 4, 3] || v == &vec![3, 4, 5, 0]);
        let sys = find_segments_partitioned(&c6, &[0, 3], &[0, 3], &[], 1, 2, 1, 0, &cc).unwrap().found.unwrap();
        assert!(sys.check(&c6, 1, 2, Some(&[0, 3])).is_ok());
        // A-segment with one internal vertex is gated off
        let tri_path = Graph::path(3);
        let r = find_segments_partitioned(&tri_path, &[0, 2], &[0, 2], &[], 1, 1, 1, 0, &cc).unwrap();
        assert!(r.found.is_none());
        assert!(find_segments_partitioned(&c6, &[0, 3], &[0], &[0, 3], 1, 2, 0, 0, &cc).is_err());
        assert!(find_segments_partitioned(&c6, &[0, 3], &[0], &[3], 1, 2, 1, 1, &cc).is_err());
    }

    #[test]
    fn two_segments_share_endpoint() {
        let cc = ColorCoding::default();
        // 0-a-1-b-2 with T = {0,1,2}
        let g = Graph::path(5);
        let sys = find_segments(&g, &[0, 2, 4], 2, 2, &cc).unwrap().found.unwrap();
        assert!(sys.check(&g, 2, 2, None).is_ok());
    }
}
