#![allow(dead_code)]

use longcycle::dense_routing::PairSet;
use longcycle::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gnp(n: usize, prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// G(n, p) with at least one edge.
pub fn gnp_nonempty(n: usize, prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = gnp(n, prob, rng);
        if g.m() > 0 {
            return g;
        }
    }
}

pub fn gnp_biconnected(n: usize, prob: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = gnp(n, prob, rng);
        if g.is_biconnected() {
            return g;
        }
    }
}

/// Random spanning tree plus random edges until 2m/n ≥ `min_ad`.
pub fn connected_with_density(n: usize, min_ad: f64, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    let mut g = Graph::from_edges(n, &edges).unwrap();
    let mut added = 0;
    while (2 * g.m()) as f64 / (n as f64) < min_ad || added < extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.has_edge(u, v) {
            edges.push((u, v));
            g = Graph::from_edges(n, &edges).unwrap();
            added += 1;
        }
    }
    g
}

/// Random potentially cyclable pairs over `vertices`, at most `max` of them.
pub fn random_pairs(n: usize, vertices: &[usize], max: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let want = rng.gen_range(0..=max);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut tries = 0;
    while pairs.len() < want && tries < 1000 {
        tries += 1;
        let u = *vertices.choose(rng).unwrap();
        let v = *vertices.choose(rng).unwrap();
        if u == v {
            continue;
        }
        let mut cand = pairs.clone();
        cand.push((u, v));
        if PairSet::new(n, &cand).is_ok() {
            pairs = cand;
        }
    }
    pairs
}
