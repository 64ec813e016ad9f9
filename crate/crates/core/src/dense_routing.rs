//! Cycles through prescribed vertex pairs in dense graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, Graph};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Check the construction's hypotheses first.
    Strict,
    /// Run the construction regardless; failure is reported.
    Relaxed,
}

/// Potentially cyclable set of pairs: its pair graph is a linear forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSet {
    pairs: Vec<(usize, usize)>,
}

impl PairSet {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<PairSet> {
        let mut norm = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("pair ({u},{u}) is not of distinct vertices")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("duplicate pair".into()));
        }
        let mut deg = vec![0; n];
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], mut v: usize) -> usize {
            while root[v] != v {
                root[v] = root[root[v]];
                v = root[v];
            }
            v
        }
        for &(u, v) in &norm {
            deg[u] += 1;
            deg[v] += 1;
            let (a, b) = (find(&mut root, u), find(&mut root, v));
            if deg[u] > 2 || deg[v] > 2 || a == b {
                return Err(Error::Precondition("pairs are not potentially cyclable".into()));
            }
            root[a] = b;
        }
        Ok(PairSet { pairs: norm })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn endpoints(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Path components of the pair graph, each from its smaller end, ordered by smallest vertex.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let mut nb: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &(u, v) in &self.pairs {
            nb.entry(u).or_default().push(v);
            nb.entry(v).or_default().push(u);
        }
        let mut done = std::collections::BTreeSet::new();
        let mut chains: Vec<Vec<usize>> = Vec::new();
        for (&v, list) in &nb {
            if done.contains(&v) || list.len() != 1 {
                continue;
            }
            let mut chain = vec![v];
            done.insert(v);
            let mut cur = v;
            while let Some(&next) = nb[&cur].iter().find(|u| !done.contains(*u)) {
                chain.push(next);
                done.insert(next);
                cur = next;
            }
            chains.push(chain);
        }
        chains.sort_by_key(|c| *c.iter().min().unwrap());
        chains
    }

    /// True if every pair appears as consecutive vertices of `cycle`.
    pub fn on_cycle(&self, cycle: &[usize]) -> bool {
        let l = cycle.len();
        let mut pos = std::collections::HashMap::new();
        for (i, &v) in cycle.iter().enumerate() {
            pos.insert(v, i);
        }
        self.pairs.iter().all(|&(u, v)| match (pos.get(&u), pos.get(&v)) {
            (Some(&i), Some(&j)) => (i + 1) % l == j || (j + 1) % l == i,
            _ => false,
        })
    }
}

/// Intermediate vertices of a short connection `from → to` avoiding `blocked`;
/// `wide` additionally excludes the first and last hop from low-degree vertices.
fn jump(g: &Graph, from: usize, to: usize, blocked: &[bool], wide: &[bool], allow_edge: bool) -> Option<Vec<usize>> {
    if allow_edge && g.has_edge(from, to) {
        return Some(Vec::new());
    }
    if let Some(&z) = g.neighbors(from).iter().find(|&&z| z != to && !blocked[z] && g.has_edge(z, to)) {
        return Some(vec![z]);
    }
    let us: Vec<usize> = g.neighbors(from).iter().copied().filter(|&u| u != to && !blocked[u] && !wide[u]).collect();
    let vs: Vec<usize> = g.neighbors(to).iter().copied().filter(|&v| v != from && !blocked[v] && !wide[v]).collect();
    for &u in &us {
        if let Some(&v) = vs.iter().find(|&&v| v != u && g.has_edge(u, v)) {
            return Some(vec![u, v]);
        }
    }
    for &u in &us {
        for &v in &vs {
            if u == v {
                continue;
            }
            if let Some(&w) = g.neighbors(u).iter().find(|&&w| w != v && w != from && w != to && !blocked[w] && g.has_edge(w, v)) {
                return Some(vec![u, w, v]);
            }
        }
    }
    None
}

/// Hamiltonian cycle of h+S through every pair of S.
pub fn hamiltonian_through_pairs(h: &Graph, pairs: &[(usize, usize)], k: usize, mode: Mode) -> Result<CycleCertificate> {
    let n = h.n();
    if n < 3 {
        return Err(Error::TooSmall("need at least three vertices".into()));
    }
    let mut s = PairSet::new(n, pairs)?;
    let ad = h.avg_degree()?;
    if mode == Mode::Strict {
        let kr = Rational::from_integer(k as i64);
        if k == 0 || kr * 60 > ad {
            return Err(Error::Precondition(format!("need 0 < k <= ad/60, got k={k}, ad={ad}")));
        }
        if Rational::from_integer(2 * h.min_degree() as i64) < ad {
            return Err(Error::Precondition("minimum degree below ad/2".into()));
        }
        if ad + kr <= Rational::from_integer(n as i64) {
            return Err(Error::Precondition(format!("need ad + k > n, got ad={ad}, k={k}, n={n}")));
        }
        if s.len() > k {
            return Err(Error::Precondition(format!("|S| = {} exceeds k = {k}", s.len())));
        }
    }
    if s.is_empty() {
        let e = *h.edges().first().ok_or_else(|| Error::Precondition("graph has no edges".into()))?;
        s = PairSet::new(n, &[e])?;
    }
    let gp = h.with_pairs(s.pairs())?;
    let low_limit = ad * Rational::new(4, 5);
    let low: Vec<bool> = (0..n).map(|v| Rational::from_integer(h.degree(v) as i64) <= low_limit).collect();
    let fail = |what: &str| Error::ConstructionFailed(what.to_string());

    // chain the pairs
    let chains = s.chains();
    let mut blocked = vec![false; n];
    for v in s.endpoints() {
        blocked[v] = true;
    }
    let mut path: Vec<usize> = chains[0].clone();
    for chain in &chains[1..] {
        let end = *path.last().unwrap();
        let mid = jump(&gp, end, chain[0], &blocked, &low, true).ok_or_else(|| fail("cannot connect consecutive pairs"))?;
        for &v in &mid {
            blocked[v] = true;
        }
        path.extend(mid);
        path.extend(chain.iter().copied());
    }
    // absorb the low-degree vertices
    for z in 0..n {
        if !low[z] || blocked[z] {
            continue;
        }
        let end = *path.last().unwrap();
        let mid = jump(&gp, end, z, &blocked, &low, true).ok_or_else(|| fail("cannot absorb a low-degree vertex"))?;
        for &v in &mid {
            blocked[v] = true;
        }
        blocked[z] = true;
        path.extend(mid);
        path.push(z);
    }
    // close
    let end = *path.last().unwrap();
    let mid = jump(&gp, end, path[0], &blocked, &low, path.len() >= 3).ok_or_else(|| fail("cannot close the cycle"))?;
    path.extend(mid);
    let mut cycle = path;
    let half = ad / 2;
    // extend to a Hamiltonian cycle, keeping S pairs adjacent
    while cycle.len() < n {
        let mut on = vec![false; n];
        for &v in &cycle {
            on[v] = true;
        }
        let small = Rational::from_integer(cycle.len() as i64) <= half;
        let order: [Extend; 2] = if small { [extend_case_one, extend_case_two] } else { [extend_case_two, extend_case_one] };
        let grown = order.iter().any(|f| f(&gp, &s, &mut cycle, &on));
        if !grown {
            return Err(fail("cannot extend the cycle"));
        }
    }
    let cert = CycleCertificate::new(cycle, n);
    if cert.verify(&gp).is_err() || !s.on_cycle(&cert.vertices) {
        return Err(fail("assembled cycle failed verification"));
    }
    Ok(cert)
}

/// Replaces a non-S cycle edge xy by a path through one to three new vertices.
type Extend = fn(&Graph, &PairSet, &mut Vec<usize>, &[bool]) -> bool;

fn extend_case_one(g: &Graph, s: &PairSet, cycle: &mut Vec<usize>, on: &[bool]) -> bool {
    let l = cycle.len();
    for i in 0..l {
        let (x, y) = (cycle[i], cycle[(i + 1) % l]);
        if s.contains(x, y) {
            continue;
        }
        let none = vec![false; g.n()];
        if let Some(mid) = jump(g, x, y, on, &none, false) {
            cycle.splice(i + 1..i + 1, mid);
            return true;
        }
    }
    false
}

/// Inserts an outside vertex adjacent to both ends of a non-S cycle edge.
fn extend_case_two(g: &Graph, s: &PairSet, cycle: &mut Vec<usize>, on: &[bool]) -> bool {
    let l = cycle.len();
    for (v, _) in on.iter().enumerate().filter(|(_, &o)| !o) {
        for i in 0..l {
            let (x, y) = (cycle[i], cycle[(i + 1) % l]);
            if !s.contains(x, y) && g.has_edge(v, x) && g.has_edge(v, y) {
                cycle.insert(i + 1, v);
                return true;
            }
        }
    }
    false
}

/// Cycle of h+S through every pair of S covering all of `side_a`, of length 2|A|−s+t.
pub fn cover_side_through_pairs(
    h: &Graph,
    side_a: &[usize],
    side_b: &[usize],
    pairs: &[(usize, usize)],
    k: usize,
    mode: Mode,
) -> Result<CycleCertificate> {
    let n = h.n();
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    for &v in side_a {
        if v >= n {
            return Err(Error::VertexOutOfRange { id: v, n });
        }
        in_a[v] = true;
    }
    for &v in side_b {
        if v >= n {
            return Err(Error::VertexOutOfRange { id: v, n });
        }
        if in_a[v] || in_b[v] {
            return Err(Error::Precondition(format!("vertex {v} listed twice in the partition")));
        }
        in_b[v] = true;
    }
    if (0..n).any(|v| !in_a[v] && !in_b[v]) {
        return Err(Error::Precondition("A and B must cover every vertex".into()));
    }
    if let Some((u, v)) = h.edges().into_iter().find(|&(u, v)| in_b[u] && in_b[v]) {
        return Err(Error::Precondition(format!("B is not independent: edge ({u},{v})")));
    }
    let p = side_a.len();
    // the construction uses only A–B edges
    let adj: Vec<Vec<usize>> = (0..n).map(|v| h.neighbors(v).iter().copied().filter(|&u| in_a[u] != in_a[v]).collect()).collect();
    let gb = Graph::from_adjacency(adj);
    let mut s = PairSet::new(n, pairs)?;
    if mode == Mode::Strict {
        if k == 0 || 10 * k > p {
            return Err(Error::Precondition(format!("need 0 < k <= p/10, got k={k}, p={p}")));
        }
        if let Some(&v) = side_a.iter().find(|&&v| gb.degree(v) < 2 * p) {
            return Err(Error::Precondition(format!("A-vertex {v} has fewer than 2p neighbours in B")));
        }
        if let Some(&v) = side_b.iter().find(|&&v| gb.degree(v) + k < p) {
            return Err(Error::Precondition(format!("B-vertex {v} has degree below p-k")));
        }
        if 4 * s.len() > 9 * k {
            return Err(Error::Precondition(format!("|S| = {} exceeds 9k/4", s.len())));
        }
    }
    if s.is_empty() {
        let e = *gb.edges().first().ok_or_else(|| Error::Precondition("no A-B edge".into()))?;
        s = PairSet::new(n, &[e])?;
    }
    let gp = gb.with_pairs(s.pairs())?;
    let fail = |what: &str| Error::ConstructionFailed(what.to_string());

    let chains = s.chains();
    let mut used = vec![false; n];
    for v in s.endpoints() {
        used[v] = true;
    }
    let mut path: Vec<usize> = chains[0].clone();
    for chain in &chains[1..] {
        let end = *path.last().unwrap();
        let mid = bip_jump(&gp, &in_a, end, chain[0], &used, true).ok_or_else(|| fail("cannot connect consecutive pairs"))?;
        for &v in &mid {
            used[v] = true;
        }
        path.extend(mid);
        path.extend(chain.iter().copied());
    }
    let end = *path.last().unwrap();
    let mid = bip_jump(&gp, &in_a, end, path[0], &used, path.len() >= 3).ok_or_else(|| fail("cannot close the cycle"))?;
    path.extend(mid);
    let mut cycle = path;
    loop {
        let mut on = vec![false; n];
        for &v in &cycle {
            on[v] = true;
        }
        let missing = side_a.iter().filter(|&&v| !on[v]).count();
        if missing == 0 {
            break;
        }
        let order: [BipExtend; 2] = if missing > 2 * k { [bip_case_one, bip_case_two] } else { [bip_case_two, bip_case_one] };
        let grown = order.iter().any(|f| f(&gp, &in_a, &s, &mut cycle, &on));
        if !grown {
            return Err(fail("cannot cover A"));
        }
    }
    let a_pairs = s.pairs().iter().filter(|&&(u, v)| in_a[u] && in_a[v]).count();
    let b_pairs = s.pairs().iter().filter(|&&(u, v)| in_b[u] && in_b[v]).count();
    let expected = 2 * p - a_pairs + b_pairs;
    let cert = CycleCertificate::new(cycle, expected);
    if cert.verify(&gp).is_err() || !s.on_cycle(&cert.vertices) || cert.len() != expected {
        return Err(fail("assembled cycle failed verification"));
    }
    Ok(cert)
}

/// Endpoint cases of the bipartite chaining: intermediate vertices from `from` to `to`.
fn bip_jump(g: &Graph, in_a: &[bool], from: usize, to: usize, used: &[bool], allow_edge: bool) -> Option<Vec<usize>> {
    if allow_edge && g.has_edge(from, to) {
        return Some(Vec::new());
    }
    let fresh = |v: usize, want_a: bool| !used[v] && v != from && v != to && in_a[v] == want_a;
    let common = |x: usize, y: usize, want_a: bool, avoid: &[usize]| {
        g.neighbors(x).iter().copied().find(|&v| fresh(v, want_a) && !avoid.contains(&v) && g.has_edge(v, y))
    };
    match (in_a[from], in_a[to]) {
        (false, false) => common(from, to, true, &[]).map(|v| vec![v]),
        (true, false) => {
            for &u in g.neighbors(from) {
                if fresh(u, false) {
                    if let Some(v) = common(u, to, true, &[]) {
                        return Some(vec![u, v]);
                    }
                }
            }
            None
        }
        (false, true) => {
            for &v in g.neighbors(to) {
                if fresh(v, false) {
                    if let Some(u) = common(from, v, true, &[]) {
                        return Some(vec![u, v]);
                    }
                }
            }
            None
        }
        (true, true) => {
            if let Some(v) = common(from, to, false, &[]) {
                return Some(vec![v]);
            }
            for &u in g.neighbors(from) {
                if !fresh(u, false) {
                    continue;
                }
                for &v in g.neighbors(to) {
                    if v == u || !fresh(v, false) {
                        continue;
                    }
                    if let Some(w) = common(u, v, true, &[]) {
                        return Some(vec![u, w, v]);
                    }
                }
            }
            None
        }
    }
}

/// Replaces an A–B cycle edge xy (not in S) by x u v y with u ∈ B and v ∈ A off the cycle.
type BipExtend = fn(&Graph, &[bool], &PairSet, &mut Vec<usize>, &[bool]) -> bool;

fn bip_case_one(g: &Graph, in_a: &[bool], s: &PairSet, cycle: &mut Vec<usize>, on: &[bool]) -> bool {
    let l = cycle.len();
    for i in 0..l {
        let (c0, c1) = (cycle[i], cycle[(i + 1) % l]);
        if s.contains(c0, c1) || in_a[c0] == in_a[c1] {
            continue;
        }
        let (x, y) = if in_a[c0] { (c0, c1) } else { (c1, c0) };
        for &u in g.neighbors(x) {
            if on[u] || in_a[u] {
                continue;
            }
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| in_a[v] && !on[v] && g.has_edge(v, y)) {
                let mid = if x == c0 { [u, v] } else { [v, u] };
                cycle.splice(i + 1..i + 1, mid);
                return true;
            }
        }
    }
    false
}

/// Replaces a segment x z y (x, y ∈ A, z ∈ B, no S edge) by x v u w y with u ∈ A off the cycle.
fn bip_case_two(g: &Graph, in_a: &[bool], s: &PairSet, cycle: &mut Vec<usize>, on: &[bool]) -> bool {
    let l = cycle.len();
    if l < 3 {
        return false;
    }
    for u in 0..g.n() {
        if on[u] || !in_a[u] {
            continue;
        }
        let outs: Vec<usize> = g.neighbors(u).iter().copied().filter(|&v| !on[v] && !in_a[v]).collect();
        for i in 0..l {
            let (x, z, y) = (cycle[i], cycle[(i + 1) % l], cycle[(i + 2) % l]);
            if !in_a[x] || !in_a[y] || in_a[z] || s.contains(x, z) || s.contains(z, y) {
                continue;
            }
            for &v in &outs {
                if !g.has_edge(x, v) {
                    continue;
                }
                if let Some(&w) = outs.iter().find(|&&w| w != v && g.has_edge(y, w)) {
                    // cycle positions i+1 (z) replaced by v u w
                    let zi = (i + 1) % l;
                    cycle.splice(zi..zi + 1, [v, u, w]);
                    return true;
                }
            }
        }
    }
    false
}
