use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m, self.edges())
    }
}

/// Induced subgraph together with the map back to parent ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `map[local] = parent id`, sorted ascending.
    pub map: Vec<usize>,
}

impl Subgraph {
    pub fn to_parent(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&v| self.map[v]).collect()
    }

    pub fn local(&self, parent: usize) -> Option<usize> {
        self.map.binary_search(&parent).ok()
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Builds from possibly unsorted, possibly duplicated symmetric lists.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut deg_sum = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            deg_sum += list.len();
        }
        Graph { adj, m: deg_sum / 2 }
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut map = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let adj = map.iter().map(|&v| self.adj[v].iter().filter(|&&u| local[u] != usize::MAX).map(|&u| local[u]).collect()).collect();
        Subgraph { graph: Graph::from_adjacency(adj), map }
    }

    /// The graph with the given pairs added as edges.
    pub fn with_pairs(&self, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &(u, v) in pairs {
            for id in [u, v] {
                if id >= self.n() {
                    return Err(Error::VertexOutOfRange { id, n: self.n() });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Adds vertex `n` adjacent to every other vertex.
    pub fn with_universal_vertex(&self) -> Graph {
        let n = self.n();
        let mut adj = self.adj.clone();
        for list in adj.iter_mut() {
            list.push(n);
        }
        adj.push((0..n).collect());
        Graph { adj, m: self.m + n }
    }

    /// Number of edges with both ends in `set`.
    pub fn induced_edge_count(&self, set: &[usize]) -> usize {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut twice = 0;
        for &v in set {
            twice += self.adj[v].iter().filter(|&&u| inside[u]).count();
        }
        twice / 2
    }

    /// ℓ_EG = 2m/(n−1).
    pub fn eg_bound(&self) -> Result<Rational> {
        if self.n() < 2 {
            return Err(Error::TooSmall("eg_bound needs n >= 2".into()));
        }
        Ok(Rational::new(2 * self.m as i64, self.n() as i64 - 1))
    }

    /// ad = 2m/n.
    pub fn avg_degree(&self) -> Result<Rational> {
        if self.n() == 0 {
            return Err(Error::EmptySet);
        }
        Ok(Rational::new(2 * self.m as i64, self.n() as i64))
    }

    /// Mean degree over `set`, degrees taken in the whole graph.
    pub fn avg_degree_of_set(&self, set: &[usize]) -> Result<Rational> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let sum: usize = set.iter().map(|&v| self.degree(v)).sum();
        Ok(Rational::new(sum as i64, set.len() as i64))
    }

    /// Smallest d such that every subgraph has a vertex of degree ≤ d.
    pub fn degeneracy(&self) -> usize {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut gone = vec![false; n];
        let mut best = 0;
        for _ in 0..n {
            let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| deg[v]).unwrap();
            best = best.max(deg[v]);
            gone[v] = true;
            for &u in &self.adj[v] {
                if !gone[u] {
                    deg[u] -= 1;
                }
            }
        }
        best
    }

    /// Connected components of the graph minus `removed`, each sorted,
    /// ordered by smallest vertex.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        seen.resize(n, false);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Connected, at least three vertices, no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.n() >= 3 && self.is_connected() && biconnected(self, None).1.is_empty()
    }

    /// At least four vertices and no separator of size two.
    pub fn is_triconnected(&self) -> bool {
        self.n() >= 4 && self.is_biconnected() && self.two_separators().unwrap_or_default().is_empty()
    }

    /// Blocks (sorted vertex lists, lexicographically ordered) and cut vertices.
    pub fn blocks_and_cut_vertices(&self) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n() == 1 {
            return Ok((vec![vec![0]], Vec::new()));
        }
        Ok(biconnected(self, None))
    }

    /// All pairs `{x, y}`, `x < y`, whose removal disconnects the graph.
    pub fn two_separators(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_biconnected() {
            return Err(Error::NotBiconnected);
        }
        let n = self.n();
        let mut out = Vec::new();
        let mut removed = vec![false; n];
        for x in 0..n {
            removed[x] = true;
            let (_, cuts) = biconnected(self, Some(&removed));
            for y in cuts {
                if x < y {
                    out.push((x, y));
                } else {
                    out.push((y, x));
                }
            }
            removed[x] = false;
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// A cycle as a vertex sequence, if the graph has one.
    pub fn find_any_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if u == parent[v] {
                        continue;
                    }
                    if depth[u] == usize::MAX {
                        depth[u] = depth[v] + 1;
                        parent[u] = v;
                        stack.push(u);
                    } else {
                        // non-tree edge: walk both ends up to the common ancestor
                        let (mut a, mut b) = (v, u);
                        let mut left = vec![a];
                        let mut right = vec![b];
                        while a != b {
                            if depth[a] >= depth[b] {
                                a = parent[a];
                                left.push(a);
                            } else {
                                b = parent[b];
                                right.push(b);
                            }
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        if left.len() >= 3 {
                            return Some(left);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Hopcroft–Tarjan on the graph minus `removed`: blocks and cut vertices.
fn biconnected(g: &Graph, removed: Option<&[bool]>) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.n();
    let gone = |v: usize| removed.is_some_and(|r| r[v]);
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if gone(root) || disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        if g.adj[root].iter().all(|&w| gone(w)) {
            blocks.push(vec![root]);
            continue;
        }
        while let Some(top) = stack.last_mut() {
            let (v, p, i) = *top;
            if i < g.adj[v].len() {
                top.2 += 1;
                let w = g.adj[v][i];
                if gone(w) {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u != root {
                            is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (blocks, cuts)
}

/// First violated invariant of a cycle or path certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    VertexOutOfRange(usize),
    RepeatedVertex(usize),
    TooFewVertices(usize),
    MissingEdge(usize, usize),
    BelowClaim { length: usize, claim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::RepeatedVertex(v) => write!(f, "repeated vertex {v}"),
            Violation::TooFewVertices(l) => write!(f, "only {l} vertices"),
            Violation::MissingEdge(u, v) => write!(f, "missing edge ({u},{v})"),
            Violation::BelowClaim { length, claim } => {
                write!(f, "length {length} below claimed minimum {claim}")
            }
        }
    }
}

/// Vertex sequence claimed to be a simple cycle of at least `claimed_min_length` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub vertices: Vec<usize>,
    pub claimed_min_length: usize,
}

impl CycleCertificate {
    pub fn new(vertices: Vec<usize>, claimed_min_length: usize) -> Self {
        CycleCertificate { vertices, claimed_min_length }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn verify(&self, g: &Graph) -> std::result::Result<(), Violation> {
        check_simple(g, &self.vertices)?;
        let l = self.vertices.len();
        if l < 3 {
            return Err(Violation::TooFewVertices(l));
        }
        for i in 0..l {
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % l]);
            if !g.has_edge(u, v) {
                return Err(Violation::MissingEdge(u, v));
            }
        }
        if l < self.claimed_min_length {
            return Err(Violation::BelowClaim { length: l, claim: self.claimed_min_length });
        }
        Ok(())
    }
}

pub fn verify_cycle_certificate(g: &Graph, c: &CycleCertificate) -> std::result::Result<(), Violation> {
    c.verify(g)
}

/// Vertex sequence claimed to be a simple path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCertificate {
    pub vertices: Vec<usize>,
}

impl PathCertificate {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathCertificate { vertices }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn verify(&self, g: &Graph) -> std::result::Result<(), Violation> {
        check_simple(g, &self.vertices)?;
        if self.vertices.is_empty() {
            return Err(Violation::TooFewVertices(0));
        }
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Violation::MissingEdge(w[0], w[1]));
            }
        }
        Ok(())
    }
}

fn check_simple(g: &Graph, seq: &[usize]) -> std::result::Result<(), Violation> {
    let mut seen = vec![false; g.n()];
    for &v in seq {
        if v >= g.n() {
            return Err(Violation::VertexOutOfRange(v));
        }
        if seen[v] {
            return Err(Violation::RepeatedVertex(v));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Rotates a cycle to start at its smallest vertex, second vertex smaller than the last.
pub fn normalize_cycle(cycle: &mut [usize]) {
    if cycle.len() < 3 {
        return;
    }
    let pos = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(pos);
    if cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
}

pub fn degree_sum(g: &Graph, set: &[usize]) -> usize {
    set.iter().map(|&v| g.degree(v)).sum()
}

pub fn ad_of(g: &Graph, set: &[usize]) -> Rational {
    if set.is_empty() {
        return int(0);
    }
    Rational::new(degree_sum(g, set) as i64, set.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn build_examples() {
        let t = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(t.m(), 3);
        let k2 = Graph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(k2.m(), 1);
        assert_eq!(Graph::from_edges(1, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange { id: 2, n: 2 }));
    }

    #[test]
    fn eg_bound_examples() {
        assert_eq!(Graph::complete(4).eg_bound().unwrap(), rat(4, 1));
        assert_eq!(Graph::path(3).eg_bound().unwrap(), rat(2, 1));
        assert_eq!(Graph::petersen().eg_bound().unwrap(), rat(10, 3));
        assert!(Graph::empty(1).eg_bound().is_err());
    }

    #[test]
    fn avg_degree_examples() {
        let p = Graph::petersen();
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(p.avg_degree_of_set(&all).unwrap(), rat(3, 1));
        assert_eq!(Graph::complete(4).avg_degree_of_set(&[2]).unwrap(), rat(3, 1));
        assert_eq!(bowtie().avg_degree_of_set(&[0, 1, 2, 3, 4]).unwrap(), rat(12, 5));
        assert_eq!(bowtie().avg_degree_of_set(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn blocks_examples() {
        let (b, c) = bowtie().blocks_and_cut_vertices().unwrap();
        assert_eq!(b, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(c, vec![2]);
        let (b, c) = Graph::complete(4).blocks_and_cut_vertices().unwrap();
        assert_eq!(b, vec![vec![0, 1, 2, 3]]);
        assert!(c.is_empty());
        let (b, c) = Graph::path(3).blocks_and_cut_vertices().unwrap();
        assert_eq!(b, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(c, vec![1]);
        assert!(Graph::empty(2).blocks_and_cut_vertices().is_err());
    }

    #[test]
    fn separator_examples() {
        assert_eq!(Graph::cycle(4).two_separators().unwrap(), vec![(0, 2), (1, 3)]);
        assert!(Graph::complete(4).two_separators().unwrap().is_empty());
        // two K5 glued on {0,1}
        let mut edges = Vec::new();
        let a = [0, 1, 2, 3, 4];
        let b = [0, 1, 5, 6, 7];
        for side in [a, b] {
            for i in 0..5 {
                for j in i + 1..5 {
                    edges.push((side[i], side[j]));
                }
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        assert_eq!(g.two_separators().unwrap(), vec![(0, 1)]);
        assert_eq!(Graph::path(3).two_separators(), Err(Error::NotBiconnected));
    }

    #[test]
    fn verify_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(CycleCertificate::new(vec![0, 1, 2, 3], 4).verify(&k4), Ok(()));
        assert_eq!(CycleCertificate::new(vec![0, 1, 2], 3).verify(&Graph::path(3)), Err(Violation::MissingEdge(2, 0)));
        assert_eq!(CycleCertificate::new(vec![0, 1, 0, 2], 3).verify(&k4), Err(Violation::RepeatedVertex(0)));
        assert_eq!(CycleCertificate::new(vec![0, 1, 2], 4).verify(&k4), Err(Violation::BelowClaim { length: 3, claim: 4 }));
    }

    #[test]
    fn induced_and_universal() {
        let s = bowtie().induced(&[2, 3, 4]);
        assert_eq!(s.graph.m(), 3);
        assert_eq!(s.map, vec![2, 3, 4]);
        let u = Graph::path(3).with_universal_vertex();
        assert_eq!(u.m(), 5);
        assert!(u.has_edge(3, 0));
    }

    #[test]
    fn normalize() {
        let mut c = vec![3, 2, 1, 0];
        normalize_cycle(&mut c);
        assert_eq!(c, vec![0, 1, 2, 3]);
    }

    #[test]
    fn any_cycle() {
        let c = Graph::petersen().find_any_cycle().unwrap();
        assert!(CycleCertificate::new(c, 3).verify(&Graph::petersen()).is_ok());
        assert!(Graph::path(5).find_any_cycle().is_none());
    }
}
