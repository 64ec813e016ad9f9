//! Exponential reference implementations for small graphs.
//!
//! Nothing here is shared with the fast paths; tests compare the two.

use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, Graph};
use crate::rational::Rational;

pub const CYCLE_CAP: usize = 18;
pub const PATH_CAP: usize = 18;
pub const MAD_CAP: usize = 14;
pub const SEGMENT_CAP: usize = 10;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect()
}

/// Circumference with a witness; `(0, None)` for forests.
pub fn oracle_longest_cycle(g: &Graph) -> Result<(usize, Option<CycleCertificate>)> {
    oracle_longest_cycle_capped(g, CYCLE_CAP)
}

/// Subset DP: `ends[mask]` holds the vertices `v` such that a path from the
/// lowest vertex of `mask` through exactly `mask` ends at `v`.
pub fn oracle_longest_cycle_capped(g: &Graph, cap: usize) -> Result<(usize, Option<CycleCertificate>)> {
    let n = g.n();
    if n > cap || n > 30 {
        return Err(Error::CapExceeded { n, cap });
    }
    if n < 3 {
        return Ok((0, None));
    }
    let adj = adjacency_masks(g);
    let full = 1usize << n;
    let mut ends = vec![0u32; full];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best: Option<(usize, usize, usize)> = None; // (len, mask, end)
    for mask in 1..full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let root = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        let mut bits = e;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if size >= 3 && adj[root] & (1 << v) != 0 && best.is_none_or(|b| size > b.0) {
                best = Some((size, mask, v));
            }
            // extend only with vertices above the root
            let mut next = adj[v] & !(mask as u32) & !((1u32 << root) - 1) & !(1u32 << root);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    let Some((len, mask, end)) = best else {
        return Ok((0, None));
    };
    let mut cycle = vec![end];
    let mut mask = mask;
    let mut v = end;
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        let prev = ends[mask] & adj[v];
        v = prev.trailing_zeros() as usize;
        cycle.push(v);
    }
    cycle.reverse();
    Ok((len, Some(CycleCertificate::new(cycle, len))))
}

/// Maximum vertex count of a simple s–t path; 0 when none exists.
pub fn oracle_longest_st_path(g: &Graph, s: usize, t: usize) -> Result<usize> {
    let n = g.n();
    if n > PATH_CAP {
        return Err(Error::CapExceeded { n, cap: PATH_CAP });
    }
    if s >= n || t >= n {
        return Err(Error::VertexOutOfRange { id: s.max(t), n });
    }
    if s == t {
        return Err(Error::Precondition("s must differ from t".into()));
    }
    let adj = adjacency_masks(g);
    let full = 1usize << n;
    let mut ends = vec![0u32; full];
    ends[1 << s] = 1 << s;
    let mut best = 0;
    for mask in 1..full {
        if mask & (1 << s) == 0 || ends[mask] == 0 {
            continue;
        }
        if ends[mask] & (1 << t) != 0 {
            best = best.max(mask.count_ones() as usize);
        }
        let mut bits = ends[mask] & !(1 << t);
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    Ok(best)
}

/// max over nonempty S of 2|E(G[S])|/|S|.
pub fn oracle_mad(g: &Graph) -> Result<Rational> {
    let n = g.n();
    if n > MAD_CAP {
        return Err(Error::CapExceeded { n, cap: MAD_CAP });
    }
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let adj = adjacency_masks(g);
    let mut best = Rational::from_integer(0);
    for mask in 1u32..(1 << n) {
        let mut twice = 0;
        for (v, a) in adj.iter().enumerate() {
            if mask & (1 << v) != 0 {
                twice += (a & mask).count_ones() as i64;
            }
        }
        let r = Rational::new(twice, mask.count_ones() as i64);
        if r > best {
            best = r;
        }
    }
    Ok(best)
}

/// Vertex-set witnesses achieving the maximum density.
pub fn oracle_densest_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let best = oracle_mad(g)?;
    let adj = adjacency_masks(g);
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let mut twice = 0;
        for (v, a) in adj.iter().enumerate() {
            if mask & (1 << v) != 0 {
                twice += (a & mask).count_ones() as i64;
            }
        }
        if Rational::new(twice, mask.count_ones() as i64) == best {
            out.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    Ok(out)
}

/// Parameters of a segment query; `side_a` empty and `counts` none means the plain version.
#[derive(Clone, Debug)]
pub struct SegmentQuery<'a> {
    pub terminals: &'a [usize],
    pub side_a: &'a [usize],
    pub r: usize,
    pub p: usize,
    /// `(s, t)`: required numbers of A-segments and B-segments.
    pub counts: Option<(usize, usize)>,
}

/// Exhaustive search for a system of T-segments.
pub fn oracle_segments(g: &Graph, q: &SegmentQuery) -> Result<bool> {
    let n = g.n();
    if n > SEGMENT_CAP {
        return Err(Error::CapExceeded { n, cap: SEGMENT_CAP });
    }
    if q.p > 5 {
        return Err(Error::Precondition("oracle_segments supports p <= 5".into()));
    }
    let mut in_t = vec![false; n];
    for &v in q.terminals {
        in_t[v] = true;
    }
    let mut in_a = vec![false; n];
    for &v in q.side_a {
        in_a[v] = true;
    }
    // every T-segment with at most p internal vertices, one orientation each
    let mut segs: Vec<Vec<usize>> = Vec::new();
    for &x in q.terminals {
        let mut path = vec![x];
        grow_segments(g, &in_t, q.p, &mut path, &mut segs);
    }
    segs.retain(|s| s[0] < *s.last().unwrap());
    let mut chosen = Vec::new();
    Ok(choose(g, &segs, 0, q, &in_a, &mut chosen))
}

fn grow_segments(g: &Graph, in_t: &[bool], p: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if path.contains(&w) {
            continue;
        }
        if in_t[w] {
            if path.len() >= 2 {
                let mut s = path.clone();
                s.push(w);
                out.push(s);
            }
        } else if path.len() - 1 < p {
            path.push(w);
            grow_segments(g, in_t, p, path, out);
            path.pop();
        }
    }
}

fn choose(g: &Graph, segs: &[Vec<usize>], from: usize, q: &SegmentQuery, in_a: &[bool], chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == q.r {
        let internal: usize = chosen.iter().map(|&i| segs[i].len() - 2).sum();
        if internal != q.p {
            return false;
        }
        if let Some((s, t)) = q.counts {
            let mut a_count = 0;
            let mut b_count = 0;
            for &i in chosen.iter() {
                let seg = &segs[i];
                let (x, y) = (seg[0], *seg.last().unwrap());
                if in_a[x] && in_a[y] {
                    if seg.len() - 2 < 2 {
                        return false;
                    }
                    a_count += 1;
                } else if !in_a[x] && !in_a[y] {
                    b_count += 1;
                }
            }
            if (a_count, b_count) != (s, t) {
                return false;
            }
        }
        return endpoint_pairs_form_linear_forest(g.n(), chosen.iter().map(|&i| &segs[i]));
    }
    for i in from..segs.len() {
        let used: usize = chosen.iter().map(|&j| segs[j].len() - 2).sum();
        if used + segs[i].len() - 2 > q.p {
            continue;
        }
        let clash = chosen.iter().any(|&j| segs[j][1..segs[j].len() - 1].iter().any(|v| segs[i][1..segs[i].len() - 1].contains(v)));
        if clash {
            continue;
        }
        chosen.push(i);
        if choose(g, segs, i + 1, q, in_a, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn endpoint_pairs_form_linear_forest<'a>(n: usize, segs: impl Iterator<Item = &'a Vec<usize>>) -> bool {
    let mut deg = vec![0; n];
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], v: usize) -> usize {
        let mut v = v;
        while root[v] != v {
            v = root[v];
        }
        v
    }
    for s in segs {
        let (x, y) = (s[0], *s.last().unwrap());
        deg[x] += 1;
        deg[y] += 1;
        if deg[x] > 2 || deg[y] > 2 {
            return false;
        }
        let (rx, ry) = (find(&mut root, x), find(&mut root, y));
        if rx == ry {
            return false;
        }
        root[rx] = ry;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn k5_pendant() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                e.push((i, j));
            }
        }
        e.push((4, 5));
        Graph::from_edges(6, &e).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn longest_cycle_examples() {
        let (l, c) = oracle_longest_cycle(&Graph::petersen()).unwrap();
        assert_eq!(l, 9);
        assert!(c.unwrap().verify(&Graph::petersen()).is_ok());
        assert_eq!(oracle_longest_cycle(&Graph::complete(4)).unwrap().0, 4);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(oracle_longest_cycle(&star).unwrap(), (0, None));
        assert!(oracle_longest_cycle(&Graph::cycle(19)).is_err());
        assert_eq!(oracle_longest_cycle_capped(&Graph::cycle(19), 20).unwrap().0, 19);
    }

    #[test]
    fn st_path_examples() {
        assert_eq!(oracle_longest_st_path(&Graph::path(4), 0, 3).unwrap(), 4);
        assert_eq!(oracle_longest_st_path(&Graph::cycle(5), 0, 1).unwrap(), 5);
        assert_eq!(oracle_longest_st_path(&Graph::petersen(), 0, 1).unwrap(), 9);
        assert_eq!(oracle_longest_st_path(&Graph::empty(3), 0, 1).unwrap(), 0);
    }

    #[test]
    fn mad_examples() {
        assert_eq!(oracle_mad(&Graph::cycle(5)).unwrap(), rat(2, 1));
        assert_eq!(oracle_mad(&k5_pendant()).unwrap(), rat(4, 1));
        assert_eq!(oracle_mad(&bowtie()).unwrap(), rat(12, 5));
        assert_eq!(oracle_densest_sets(&k5_pendant()).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn segment_examples() {
        let p3 = Graph::path(3);
        let q = SegmentQuery { terminals: &[0, 2], side_a: &[], r: 1, p: 1, counts: None };
        assert!(oracle_segments(&p3, &q).unwrap());
        let c6 = Graph::cycle(6);
        let q = SegmentQuery { terminals: &[0, 3], side_a: &[], r: 2, p: 4, counts: None };
        assert!(!oracle_segments(&c6, &q).unwrap());
        let q = SegmentQuery { terminals: &[0, 3], side_a: &[], r: 1, p: 2, counts: None };
        assert!(oracle_segments(&c6, &q).unwrap());
        let q = SegmentQuery { terminals: &[0, 3], side_a: &[0, 3], r: 1, p: 1, counts: Some((1, 0)) };
        assert!(!oracle_segments(&c6, &q).unwrap());
        let q = SegmentQuery { terminals: &[0, 3], side_a: &[0, 3], r: 1, p: 2, counts: Some((1, 0)) };
        assert!(oracle_segments(&c6, &q).unwrap());
    }
}
