//! Exact maximum average degree via parametric minimum cuts.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Dinic's algorithm on integer capacities.
struct FlowNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i64>,
    next: Vec<usize>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![NIL; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    /// Arc u→v with capacity `c` and reverse capacity `rc`.
    fn add(&mut self, u: usize, v: usize, c: i64, rc: i64) {
        for (a, b, cc) in [(u, v, c), (v, u, rc)] {
            self.to.push(b);
            self.cap.push(cc);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    q.push_back(v);
                }
                e = self.next[e];
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.iter[u] != NIL {
            let e = self.iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] = self.next[e];
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.clone_from(&self.head);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

/// A densest induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityWitness {
    pub vertices: Vec<usize>,
    /// |E(G[S])| / |S|
    #[serde(serialize_with = "crate::rational::serialize")]
    pub density: Rational,
    /// 2 · density
    #[serde(serialize_with = "crate::rational::serialize")]
    pub mad: Rational,
    /// Number of minimum-cut probes spent.
    pub probes: usize,
}

/// Some S with |E(G[S])|/|S| > guess, or `None` when no such set exists.
pub fn densest_decision(g: &Graph, guess: Rational) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if guess < Rational::from_integer(0) {
        return Some(vec![0]);
    }
    let a = *guess.numer();
    let b = *guess.denom();
    let m = g.m() as i64;
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    // Goldberg's network: cut(S) = m·b·n + 2|S|(a − b·density(S))
    for v in 0..n {
        net.add(s, v, m * b, 0);
        net.add(v, t, m * b + 2 * a - g.degree(v) as i64 * b, 0);
    }
    for (u, v) in g.edges() {
        net.add(u, v, b, b);
    }
    let flow = net.max_flow(s, t);
    if flow >= n as i64 * m * b {
        return None;
    }
    let side = net.source_side(s);
    let set: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    debug_assert!(!set.is_empty());
    Some(set)
}

/// Exact mad(G) with a densest witness.
pub fn mad_with_witness(g: &Graph) -> Result<DensityWitness> {
    let n = g.n() as i64;
    if g.m() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    // two densities with denominators ≤ n differ by more than 1/n²
    let grid = n * n;
    let m = g.m() as i64;
    let mut probes = 0;
    // lo: a grid point strictly below m/n, hence feasible
    let mut lo = (m * grid).div_euclid(n);
    if lo * n == m * grid {
        lo -= 1;
    }
    let mut hi = (n - 1) * grid / 2 + 1; // density ≤ (n−1)/2, infeasible
    let mut best: Option<Vec<usize>> = None;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        probes += 1;
        match densest_decision(g, Rational::new(mid, grid)) {
            Some(set) => {
                lo = mid;
                best = Some(set);
            }
            None => hi = mid,
        }
    }
    let set = match best {
        Some(set) => set,
        None => {
            probes += 1;
            densest_decision(g, Rational::new(lo, grid)).expect("lower grid point is feasible")
        }
    };
    let density = Rational::new(g.induced_edge_count(&set) as i64, set.len() as i64);
    Ok(DensityWitness { vertices: set, density, mad: density * 2, probes })
}
