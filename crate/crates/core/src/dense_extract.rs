//! Dense-subgraph trichotomy: a long cycle, a small dense subgraph, or a
//! bipartite-dense subgraph.

use serde::Serialize;

use crate::dense_routing::Mode;
use crate::density::mad_with_witness;
use crate::error::{Error, Result};
use crate::graph::{normalize_cycle, CycleCertificate, Graph, PathCertificate};
use crate::long_paths::{dirac_cycle, fan_path};
use crate::rational::{ceil, Rational};
use crate::reduce::{reduce_from, ReductionTrace};
use crate::search::{self, Budget, Outcome};

/// Nodes explored by the exact vertex-cover search before giving up.
const COVER_NODE_BUDGET: u64 = 200_000;

/// Outcome of [`find_dense`]; vertex ids refer to the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DenseWitness {
    FoundCycle(CycleCertificate),
    SmallDense { vertices: Vec<usize> },
    BipartiteDense { vertices: Vec<usize>, a: Vec<usize>, b: Vec<usize> },
}

impl DenseWitness {
    /// Checks the invariants of the variant against the host graph, exactly.
    pub fn check(&self, g: &Graph, k: usize, mad: Rational) -> std::result::Result<(), String> {
        let kr = Rational::from_integer(k as i64);
        match self {
            DenseWitness::FoundCycle(c) => {
                c.verify(g).map_err(|v| v.to_string())?;
                if Rational::from_integer(c.len() as i64) < mad + kr {
                    return Err(format!("cycle of length {} is below mad + k = {}", c.len(), mad + kr));
                }
                Ok(())
            }
            DenseWitness::SmallDense { vertices } => {
                let h = g.induced(vertices).graph;
                let ad = h.avg_degree().map_err(|e| e.to_string())?;
                if ad < mad - 1 {
                    return Err(format!("ad(H) = {ad} is below mad - 1"));
                }
                if Rational::from_integer(2 * h.min_degree() as i64) < ad {
                    return Err("minimum degree below ad(H)/2".into());
                }
                #[allow(clippy::int_plus_one)] // ad is rational
                if Rational::from_integer(h.n() as i64) >= ad + kr + 1 {
                    return Err(format!("|V(H)| = {} is not below ad(H) + k + 1", h.n()));
                }
                Ok(())
            }
            DenseWitness::BipartiteDense { vertices, a, b } => {
                let mut all: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                all.sort_unstable();
                if all != *vertices || all.windows(2).any(|w| w[0] == w[1]) {
                    return Err("A and B do not partition V(H)".into());
                }
                check_partition(g, a, b, k, mad)
            }
        }
    }
}

fn check_partition(g: &Graph, a: &[usize], b: &[usize], k: usize, mad: Rational) -> std::result::Result<(), String> {
    let mut in_b = vec![false; g.n()];
    let mut in_h = vec![false; g.n()];
    for &v in b {
        in_b[v] = true;
        in_h[v] = true;
    }
    for &v in a {
        in_h[v] = true;
    }
    for &v in b {
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| in_b[u]) {
            return Err(format!("B is not independent: edge ({v},{u})"));
        }
    }
    if Rational::from_integer(a.len() as i64) < mad / 2 - Rational::from_integer(4 * k as i64) {
        return Err(format!("|A| = {} is below mad/2 - 4k", a.len()));
    }
    for &v in a {
        let into_b = g.neighbors(v).iter().filter(|&&u| in_b[u]).count();
        if into_b < 2 * a.len() {
            return Err(format!("A-vertex {v} has {into_b} neighbours in B, fewer than 2|A|"));
        }
    }
    for &v in b {
        let d = g.neighbors(v).iter().filter(|&&u| in_h[u]).count();
        if d + 2 * k + 2 < a.len() {
            return Err(format!("B-vertex {v} has degree {d}, below |A| - 2k - 2"));
        }
    }
    Ok(())
}

/// Result of one engine call.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EngineOutcome {
    LongerCycle(CycleCertificate),
    VertexCover(Vec<usize>),
    Hamiltonian,
}

/// Full report of [`find_dense`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseReport {
    pub witness: DenseWitness,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub mad: Rational,
    /// ⌈mad⌉ + k − 2δ(H), when the pipeline got that far.
    pub k_prime: Option<i64>,
    pub trace: ReductionTrace,
    pub engine_rounds: usize,
}

/// Longer cycle, small vertex cover, or Hamiltonicity of `c` in a 3-connected `h`.
/// `Err(EngineIncomplete)` means no outcome was found within budget.
pub fn cycle_or_cover_engine(h: &Graph, k: usize, c: &CycleCertificate, mode: Mode) -> Result<EngineOutcome> {
    let n = h.n();
    c.verify(h).map_err(|v| Error::Precondition(format!("input cycle: {v}")))?;
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let delta = h.min_degree();
    if mode == Mode::Strict {
        if !h.is_triconnected() {
            return Err(Error::NotTriconnected);
        }
        if 24 * k > delta {
            return Err(Error::Precondition(format!("need k <= δ/24, got k={k}, δ={delta}")));
        }
        if c.len() >= 2 * delta + k {
            return Err(Error::Precondition("cycle already has length at least 2δ + k".into()));
        }
    }
    if c.len() == n {
        return Ok(EngineOutcome::Hamiltonian);
    }
    if 2 * delta >= n {
        let mut ham = dirac_cycle(h)?.vertices;
        normalize_cycle(&mut ham);
        let len = ham.len();
        return Ok(EngineOutcome::LongerCycle(CycleCertificate::new(ham, len)));
    }
    let mut seq = c.vertices.clone();
    let mut grown = search::improve_sequence(h, &mut seq, true);
    if !grown {
        let mut budget = Budget::steps(200 * n as u64);
        for start in 0..n.min(4) {
            if let Some(cand) = search::heuristic_cycle(h, start, c.len() + 1, &mut budget) {
                if cand.len() > c.len() {
                    seq = cand;
                    grown = true;
                    break;
                }
            }
        }
    }
    if grown {
        normalize_cycle(&mut seq);
        let len = seq.len();
        return Ok(EngineOutcome::LongerCycle(CycleCertificate::new(seq, len)));
    }
    let bound = delta + 2 * k;
    let approx = matching_cover(h, &vec![false; n]);
    if approx.len() <= bound {
        return Ok(EngineOutcome::VertexCover(approx));
    }
    match vertex_cover_at_most(h, bound, COVER_NODE_BUDGET) {
        Outcome::Found(x) => Ok(EngineOutcome::VertexCover(x)),
        _ => Err(Error::EngineIncomplete(format!("no longer cycle than {} and no vertex cover of size <= {bound} found", c.len()))),
    }
}

/// Both ends of a greedy maximal matching on the non-removed vertices.
fn matching_cover(h: &Graph, removed: &[bool]) -> Vec<usize> {
    let mut taken = removed.to_vec();
    let mut cover = Vec::new();
    for (u, v) in h.edges() {
        if !taken[u] && !taken[v] {
            taken[u] = true;
            taken[v] = true;
            cover.push(u);
            cover.push(v);
        }
    }
    cover.sort_unstable();
    cover
}

/// Exact search for a vertex cover of size at most `bound`.
fn vertex_cover_at_most(h: &Graph, bound: usize, nodes: u64) -> Outcome<Vec<usize>> {
    fn go(h: &Graph, removed: &mut Vec<bool>, chosen: &mut Vec<usize>, bound: usize, budget: &mut Budget) -> Outcome<()> {
        if !budget.tick() {
            return Outcome::OutOfBudget;
        }
        let live_deg = |v: usize, removed: &[bool]| h.neighbors(v).iter().filter(|&&u| !removed[u]).count();
        let pick = (0..h.n()).filter(|&v| !removed[v]).max_by_key(|&v| (live_deg(v, removed), std::cmp::Reverse(v)));
        let Some(v) = pick.filter(|&v| live_deg(v, removed) > 0) else {
            return Outcome::Found(());
        };
        let left = bound - chosen.len();
        // each matching edge needs its own cover vertex
        if matching_cover(h, removed).len() / 2 > left {
            return Outcome::NotFound;
        }
        let mut exhausted = false;
        if left >= 1 {
            removed[v] = true;
            chosen.push(v);
            match go(h, removed, chosen, bound, budget) {
                Outcome::Found(()) => return Outcome::Found(()),
                Outcome::OutOfBudget => exhausted = true,
                Outcome::NotFound => {}
            }
            chosen.pop();
            removed[v] = false;
        }
        let nb: Vec<usize> = h.neighbors(v).iter().copied().filter(|&u| !removed[u]).collect();
        if nb.len() <= left {
            for &u in &nb {
                removed[u] = true;
                chosen.push(u);
            }
            match go(h, removed, chosen, bound, budget) {
                Outcome::Found(()) => return Outcome::Found(()),
                Outcome::OutOfBudget => exhausted = true,
                Outcome::NotFound => {}
            }
            for &u in &nb {
                removed[u] = false;
                chosen.pop();
            }
        }
        if exhausted {
            Outcome::OutOfBudget
        } else {
            Outcome::NotFound
        }
    }
    let mut removed = vec![false; h.n()];
    let mut chosen = Vec::new();
    let mut budget = Budget::steps(nodes);
    match go(h, &mut removed, &mut chosen, bound, &mut budget) {
        Outcome::Found(()) => {
            chosen.sort_unstable();
            Outcome::Found(chosen)
        }
        Outcome::NotFound => Outcome::NotFound,
        Outcome::OutOfBudget => Outcome::OutOfBudget,
    }
}

/// Splits `V(h)` into `A ⊆ X` (vertices with ≥ 2|X| neighbours outside X) and `B = V∖X`.
pub fn refine_vertex_cover_to_partition(h: &Graph, x: &[usize], k: usize, mad: Rational) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = h.n();
    let mut in_x = vec![false; n];
    for &v in x {
        if v >= n {
            return Err(Error::VertexOutOfRange { id: v, n });
        }
        in_x[v] = true;
    }
    if let Some((u, v)) = h.edges().into_iter().find(|&(u, v)| !in_x[u] && !in_x[v]) {
        return Err(Error::Precondition(format!("not a vertex cover: edge ({u},{v}) uncovered")));
    }
    let p = in_x.iter().filter(|&&b| b).count();
    let b: Vec<usize> = (0..n).filter(|&v| !in_x[v]).collect();
    let a: Vec<usize> = (0..n).filter(|&v| in_x[v] && h.neighbors(v).iter().filter(|&&u| !in_x[u]).count() >= 2 * p).collect();
    check_partition(h, &a, &b, k, mad).map_err(Error::WitnessInvalid)?;
    Ok((a, b))
}

/// The dense-subgraph trichotomy for `(g, k)`.
pub fn find_dense(g: &Graph, k: usize, mode: Mode) -> Result<DenseReport> {
    if g.n() < 2 {
        return Err(Error::TooSmall("need at least two vertices".into()));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let densest = mad_with_witness(g)?;
    let mad = densest.mad;
    let kr = Rational::from_integer(k as i64);
    if mode == Mode::Strict && (kr + 1) * 80 > mad {
        return Err(Error::Precondition(format!("need k <= mad/80 - 1, got k={k}, mad={mad}")));
    }
    let trace = reduce_from(g, &densest.vertices)?;
    let sub = g.induced(&trace.final_vertices);
    let h = &sub.graph;
    let long_enough = |len: usize| Rational::from_integer(len as i64) >= mad + kr;
    let report = |witness, k_prime, rounds| DenseReport { witness, mad, k_prime, trace: trace.clone(), engine_rounds: rounds };

    if let Some(&(x, y)) = h.two_separators()?.first() {
        if let Some(c) = separator_cycle(h, x, y)? {
            if long_enough(c.len()) {
                let c = host_cycle(&sub.to_parent(&c), g)?;
                return Ok(report(DenseWitness::FoundCycle(c), None, 0));
            }
        }
        if mode == Mode::Strict {
            return Err(Error::ConstructionFailed("two-separator cycle is below mad + k".into()));
        }
    }

    let delta = h.min_degree() as i64;
    let k_prime = ceil(mad) + k as i64 - 2 * delta;
    let mut cycle = dirac_cycle(h)?;
    if k_prime <= 0 {
        let w = if long_enough(cycle.len()) {
            DenseWitness::FoundCycle(host_cycle(&sub.to_parent(&cycle.vertices), g)?)
        } else {
            DenseWitness::SmallDense { vertices: trace.final_vertices.clone() }
        };
        return Ok(report(w, Some(k_prime), 0));
    }
    let mut rounds = 0;
    loop {
        if long_enough(cycle.len()) {
            let c = host_cycle(&sub.to_parent(&cycle.vertices), g)?;
            return Ok(report(DenseWitness::FoundCycle(c), Some(k_prime), rounds));
        }
        rounds += 1;
        match cycle_or_cover_engine(h, k_prime as usize, &cycle, mode)? {
            EngineOutcome::LongerCycle(c) => cycle = c,
            EngineOutcome::Hamiltonian => {
                let w = DenseWitness::SmallDense { vertices: trace.final_vertices.clone() };
                return Ok(report(w, Some(k_prime), rounds));
            }
            EngineOutcome::VertexCover(x) => {
                let (a, b) = refine_vertex_cover_to_partition(h, &x, k, mad)?;
                let a = sub.to_parent(&a);
                let b = sub.to_parent(&b);
                let mut vertices: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                vertices.sort_unstable();
                let w = DenseWitness::BipartiteDense { vertices, a, b };
                return Ok(report(w, Some(k_prime), rounds));
            }
        }
    }
}

fn host_cycle(vertices: &[usize], g: &Graph) -> Result<CycleCertificate> {
    let mut v = vertices.to_vec();
    normalize_cycle(&mut v);
    let len = v.len();
    let c = CycleCertificate::new(v, len);
    c.verify(g).map_err(|e| Error::ConstructionFailed(format!("assembled cycle: {e}")))?;
    Ok(c)
}

/// Glues Fan paths through two components of `h − {x, y}` into one cycle.
fn separator_cycle(h: &Graph, x: usize, y: usize) -> Result<Option<Vec<usize>>> {
    let mut removed = vec![false; h.n()];
    removed[x] = true;
    removed[y] = true;
    let comps = h.components_avoiding(&removed);
    if comps.len() < 2 {
        return Ok(None);
    }
    let mut halves = Vec::new();
    for comp in &comps[..2] {
        let mut side = comp.clone();
        side.extend([x, y]);
        side.sort_unstable();
        let part = h.induced(&side);
        let (lx, ly) = (part.local(x).unwrap(), part.local(y).unwrap());
        let with_xy = part.graph.with_pairs(&[(lx, ly)])?;
        let path = fan_path(&with_xy, lx, ly)?;
        if path.len() < 2 {
            return Ok(None);
        }
        halves.push(part.to_parent(&path.vertices));
    }
    let mut cycle = halves[0].clone();
    let back = &halves[1];
    cycle.extend(back[1..back.len() - 1].iter().rev());
    Ok(Some(cycle))
}

/// Result of [`check_dirac_decomposition`]: `None` when every clause holds,
/// otherwise the first violated clause.
pub type DiracViolation = Option<&'static str>;

/// Checks whether `p1`, `p2` induce a Dirac decomposition for `c` in `g`.
pub fn check_dirac_decomposition(g: &Graph, c: &CycleCertificate, p1: &PathCertificate, p2: &PathCertificate) -> Result<DiracViolation> {
    let n = g.n();
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    c.verify(g).map_err(|v| Error::Precondition(format!("cycle: {v}")))?;
    let delta = g.min_degree();
    if c.len() < 2 * delta {
        return Err(Error::Precondition(format!("cycle length {} is below 2δ = {}", c.len(), 2 * delta)));
    }
    for p in [p1, p2] {
        if p.vertices.is_empty() {
            return Err(Error::Precondition("empty path".into()));
        }
        if p.vertices.len() > 1 {
            p.verify(g).map_err(|v| Error::Precondition(format!("path: {v}")))?;
        } else if p.vertices[0] >= n {
            return Err(Error::VertexOutOfRange { id: p.vertices[0], n });
        }
    }
    let mut on1 = vec![false; n];
    let mut on2 = vec![false; n];
    for &v in &p1.vertices {
        on1[v] = true;
    }
    for &v in &p2.vertices {
        if on1[v] {
            return Ok(Some("disjoint paths"));
        }
        on2[v] = true;
    }

    // (i): C = P1 P' P2 P''
    let Some((inner1, inner2)) = connectors(&c.vertices, &p1.vertices, &p2.vertices) else {
        return Ok(Some("cycle form"));
    };
    if inner1.len() + 1 + 2 < delta || inner2.len() + 1 + 2 < delta {
        return Ok(Some("connector length"));
    }

    // (ii)
    let mut removed = vec![false; n];
    for v in 0..n {
        removed[v] = on1[v] || on2[v];
    }
    let comps = g.components_avoiding(&removed);
    for comp in &comps {
        if !component_ok(g, comp, &on1, &on2) {
            return Ok(Some("component structure"));
        }
    }

    // (iii)
    for mut inner in [inner1, inner2] {
        inner.sort_unstable();
        if !comps.contains(&inner) {
            return Ok(Some("connector components"));
        }
    }
    Ok(None)
}

/// Interiors of the two connector paths, if `cycle` reads P1, P', P2, P'' in some rotation and direction.
fn connectors(cycle: &[usize], p1: &[usize], p2: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let l = cycle.len();
    let start = cycle.iter().position(|&v| v == p1[0])?;
    for dir in [1, l - 1] {
        let at = |i: usize| cycle[(start + i * dir) % l];
        if (0..p1.len()).any(|i| at(i) != p1[i]) {
            continue;
        }
        // P2 somewhere after P1, either orientation
        let rest: Vec<usize> = (p1.len()..l).map(at).collect();
        for p2o in [p2.to_vec(), p2.iter().rev().copied().collect::<Vec<_>>()] {
            if let Some(off) = rest.iter().position(|&v| v == p2o[0]) {
                if off + p2o.len() <= rest.len() && rest[off..off + p2o.len()] == p2o[..] {
                    let inner1 = rest[..off].to_vec();
                    let inner2 = rest[off + p2o.len()..].to_vec();
                    if inner1.is_empty() || inner2.is_empty() {
                        return None;
                    }
                    return Some((inner1, inner2));
                }
            }
        }
    }
    None
}

fn component_ok(g: &Graph, comp: &[usize], on1: &[bool], on2: &[bool]) -> bool {
    let sub = g.induced(comp);
    let h = &sub.graph;
    if h.n() >= 3 && h.is_biconnected() {
        return matching_size(g, comp, on1) == 1 && matching_size(g, comp, on2) == 1;
    }
    if h.n() < 3 {
        return false;
    }
    let attach = |on: &[bool]| {
        let mut seen: Vec<usize> = comp.iter().flat_map(|&v| g.neighbors(v).iter().copied().filter(|&u| on[u])).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    let Ok((blocks, cuts)) = h.blocks_and_cut_vertices() else { return false };
    let leaf_inner: Vec<usize> = blocks
        .iter()
        .filter(|b| b.iter().filter(|v| cuts.contains(v)).count() == 1)
        .flat_map(|b| b.iter().copied().filter(|v| !cuts.contains(v)))
        .map(|v| sub.map[v])
        .collect();
    let touches = |on: &[bool]| leaf_inner.iter().any(|&v| g.neighbors(v).iter().any(|&u| on[u]));
    (attach(on1) == 1 && !touches(on2)) || (attach(on2) == 1 && !touches(on1))
}

/// Maximum matching between `comp` and the marked vertices (augmenting paths).
fn matching_size(g: &Graph, comp: &[usize], marked: &[bool]) -> usize {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    fn augment(g: &Graph, v: usize, marked: &[bool], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &u in g.neighbors(v) {
            if !marked[u] || seen[u] {
                continue;
            }
            seen[u] = true;
            if mate[u].is_none_or(|w| augment(g, w, marked, seen, mate)) {
                mate[u] = Some(v);
                return true;
            }
        }
        false
    }
    let mut size = 0;
    for &v in comp {
        let mut seen = vec![false; n];
        if augment(g, v, marked, &mut seen, &mut mate) {
            size += 1;
        }
    }
    size
}

/// A graph with a Dirac decomposition by construction: two paths of `len1` and
/// `len2` vertices joined by two cliques of `q` vertices into a cycle.
pub fn dirac_decomposition_instance(len1: usize, len2: usize, q: usize) -> (Graph, CycleCertificate, PathCertificate, PathCertificate) {
    assert!(len1 >= 1 && len2 >= 1 && q >= 3);
    let p1: Vec<usize> = (0..len1).collect();
    let q1: Vec<usize> = (len1..len1 + q).collect();
    let p2: Vec<usize> = (len1 + q..len1 + q + len2).collect();
    let q2: Vec<usize> = (len1 + q + len2..len1 + 2 * q + len2).collect();
    let n = len1 + 2 * q + len2;
    let mut edges = Vec::new();
    let cycle: Vec<usize> = p1.iter().chain(&q1).chain(&p2).chain(&q2).copied().collect();
    for i in 0..n {
        edges.push((cycle[i], cycle[(i + 1) % n]));
    }
    for clique in [&q1, &q2] {
        for i in 0..q {
            for j in i + 2..q {
                edges.push((clique[i], clique[j]));
            }
        }
    }
    edges.retain(|&(u, v)| u != v);
    edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
    edges.dedup_by_key(|e| (e.0.min(e.1), e.0.max(e.1)));
    let g = Graph::from_edges(n, &edges).expect("valid construction");
    let len = cycle.len();
    (g, CycleCertificate::new(cycle, len), PathCertificate::new(p1), PathCertificate::new(p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn k_minus_matching(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !(u % 2 == 0 && v == u + 1) {
                    e.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut e = Vec::new();
        for a in 0..p {
            for b in p..p + q {
                e.push((a, b));
            }
        }
        Graph::from_edges(p + q, &e).unwrap()
    }

    #[test]
    fn find_dense_on_large_clique() {
        let g = Graph::complete(200);
        let r = find_dense(&g, 1, Mode::Strict).unwrap();
        match &r.witness {
            DenseWitness::FoundCycle(c) => assert_eq!(c.len(), 200),
            w => panic!("unexpected {w:?}"),
        }
        assert!(r.witness.check(&g, 1, r.mad).is_ok());
    }

    #[test]
    fn find_dense_small_dense() {
        let g = k_minus_matching(350);
        let r = find_dense(&g, 3, Mode::Strict).unwrap();
        assert_eq!(r.mad, rat(348, 1));
        assert_eq!(r.witness, DenseWitness::SmallDense { vertices: (0..350).collect() });
        assert!(r.witness.check(&g, 3, r.mad).is_ok());
    }

    #[test]
    fn find_dense_rejects_k_zero() {
        let mut e: Vec<(usize, usize)> = Graph::complete(5).edges();
        e.push((4, 5));
        let g = Graph::from_edges(6, &e).unwrap();
        assert!(matches!(find_dense(&g, 0, Mode::Strict), Err(Error::Precondition(_))));
        assert!(matches!(find_dense(&g, 1, Mode::Strict), Err(Error::Precondition(_))));
    }

    #[test]
    fn engine_examples() {
        let k60 = Graph::complete(60);
        let ham = CycleCertificate::new((0..60).collect(), 60);
        assert_eq!(cycle_or_cover_engine(&k60, 1, &ham, Mode::Relaxed).unwrap(), EngineOutcome::Hamiltonian);
        let short = CycleCertificate::new((0..59).collect(), 59);
        match cycle_or_cover_engine(&k60, 1, &short, Mode::Strict).unwrap() {
            EngineOutcome::LongerCycle(c) => {
                assert_eq!(c.len(), 60);
                assert!(c.verify(&k60).is_ok());
            }
            o => panic!("unexpected {o:?}"),
        }
    }

    #[test]
    fn engine_returns_small_cover() {
        // split graph: clique X of 4, independent B of 40, complete between
        let mut e = Graph::complete(4).edges();
        for x in 0..4 {
            for b in 4..44 {
                e.push((x, b));
            }
        }
        let h = Graph::from_edges(44, &e).unwrap();
        let c = CycleCertificate::new(vec![0, 4, 1, 5, 2, 6, 3, 7], 8);
        match cycle_or_cover_engine(&h, 1, &c, Mode::Relaxed).unwrap() {
            EngineOutcome::VertexCover(x) => {
                assert!(x.len() <= h.min_degree() + 2);
                assert!(h.edges().iter().all(|&(u, v)| x.contains(&u) || x.contains(&v)));
            }
            o => panic!("unexpected {o:?}"),
        }
    }

    #[test]
    fn exact_cover_search() {
        let pet = Graph::petersen();
        assert!(matches!(vertex_cover_at_most(&pet, 5, 10_000), Outcome::NotFound));
        match vertex_cover_at_most(&pet, 6, 10_000) {
            Outcome::Found(x) => {
                assert_eq!(x.len(), 6);
                assert!(pet.edges().iter().all(|&(u, v)| x.contains(&u) || x.contains(&v)));
            }
            _ => panic!("Petersen has a vertex cover of size 6"),
        }
    }

    #[test]
    fn refine_examples() {
        let h = complete_bipartite(5, 60);
        let mad = h.avg_degree().unwrap();
        let (a, b) = refine_vertex_cover_to_partition(&h, &[0, 1, 2, 3, 4], 1, mad).unwrap();
        assert_eq!(a, vec![0, 1, 2, 3, 4]);
        assert_eq!(b, (5..65).collect::<Vec<_>>());

        // cover vertex 5 has no neighbours in B
        let mut e = complete_bipartite(5, 60).edges();
        e.retain(|&(u, _)| u != 0);
        e.extend([(0, 1), (0, 2)]);
        let h = Graph::from_edges(65, &e).unwrap();
        let (a, _) = refine_vertex_cover_to_partition(&h, &[0, 1, 2, 3, 4], 1, rat(8, 1)).unwrap();
        assert_eq!(a, vec![1, 2, 3, 4]);

        assert!(matches!(refine_vertex_cover_to_partition(&h, &[1, 2, 3], 1, rat(8, 1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn dirac_decomposition_checks() {
        let (g, c, p1, p2) = dirac_decomposition_instance(3, 3, 4);
        assert_eq!(check_dirac_decomposition(&g, &c, &p1, &p2).unwrap(), None);
        let shared = PathCertificate::new(vec![2, 3]);
        assert_eq!(check_dirac_decomposition(&g, &c, &p1, &shared).unwrap(), Some("disjoint paths"));

        let k5 = Graph::complete(5);
        let short = CycleCertificate::new(vec![2, 3, 4], 3);
        let (a, b) = (PathCertificate::new(vec![0]), PathCertificate::new(vec![1]));
        assert!(matches!(check_dirac_decomposition(&k5, &short, &a, &b), Err(Error::Precondition(_))));

        // a chord from clique Q1 back to P1 enlarges the matching
        let mut e = g.edges();
        e.push((0, 5));
        let g2 = Graph::from_edges(g.n(), &e).unwrap();
        assert_eq!(check_dirac_decomposition(&g2, &c, &p1, &p2).unwrap(), Some("component structure"));
    }
}
