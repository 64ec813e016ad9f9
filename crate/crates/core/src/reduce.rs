//! Reduction Rules 1–4 on induced subgraphs.
//!
//! Vertex sets always carry ids of the host graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub rule: u8,
    pub removed: Vec<usize>,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub eg_before: Rational,
    #[serde(serialize_with = "crate::rational::serialize")]
    pub eg_after: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub final_vertices: Vec<usize>,
}

/// ℓ_EG of a graph; graphs with fewer than two vertices rank below everything.
fn eg_or_min(h: &Graph) -> Option<Rational> {
    h.eg_bound().ok()
}

fn eg_of_set(g: &Graph, set: &[usize]) -> Option<Rational> {
    if set.len() < 2 {
        return None;
    }
    Some(Rational::new(2 * g.induced_edge_count(set) as i64, set.len() as i64 - 1))
}

fn minus(set: &[usize], removed: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|v| removed.binary_search(v).is_err()).collect()
}

/// One application of `rule` to G[vertices]: the surviving set and the removed set.
pub fn apply_rule(g: &Graph, vertices: &[usize], rule: u8) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let mut vertices = vertices.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let sub = g.induced(&vertices);
    let h = &sub.graph;
    let to_host = |local: &[usize]| -> Vec<usize> { local.iter().map(|&v| sub.map[v]).collect() };
    let keep = |kept_local: &[usize]| -> (Vec<usize>, Vec<usize>) {
        let kept = to_host(kept_local);
        let removed = minus(&vertices, &kept);
        (kept, removed)
    };
    match rule {
        1 => {
            let comps = h.components();
            if comps.len() <= 1 {
                return Ok(None);
            }
            // first component of maximal ℓ_EG; components are ordered by smallest id
            let mut best = 0;
            for i in 1..comps.len() {
                if eg_or_min(&h.induced(&comps[i]).graph) > eg_or_min(&h.induced(&comps[best]).graph) {
                    best = i;
                }
            }
            Ok(Some(keep(&comps[best])))
        }
        2 => {
            if !h.is_connected() {
                return Err(Error::Disconnected);
            }
            let (blocks, _) = h.blocks_and_cut_vertices()?;
            if blocks.len() <= 1 {
                return Ok(None);
            }
            let mut best = 0;
            for i in 1..blocks.len() {
                if eg_of_set(h, &blocks[i]) > eg_of_set(h, &blocks[best]) {
                    best = i;
                }
            }
            Ok(Some(keep(&blocks[best])))
        }
        3 => {
            if h.n() < 3 {
                return Ok(None);
            }
            let eg = h.eg_bound()?;
            let found = (0..h.n()).find(|&v| Rational::from_integer(2 * h.degree(v) as i64) <= eg);
            Ok(found.map(|v| {
                let removed = vec![sub.map[v]];
                (minus(&vertices, &removed), removed)
            }))
        }
        4 => {
            if !h.is_biconnected() {
                return Err(Error::NotBiconnected);
            }
            let eg = h.eg_bound()?;
            let limit = eg * Rational::new(2, 3);
            let mut removed_mask = vec![false; h.n()];
            for (x, y) in h.two_separators()? {
                removed_mask[x] = true;
                removed_mask[y] = true;
                let comps = h.components_avoiding(&removed_mask);
                removed_mask[x] = false;
                removed_mask[y] = false;
                for comp in comps {
                    let ad = h.avg_degree_of_set(&comp)?;
                    if ad > limit {
                        continue;
                    }
                    let rest: Vec<usize> = (0..h.n()).filter(|v| comp.binary_search(v).is_err()).collect();
                    // keep ℓ_EG from dropping when it is small
                    if eg_of_set(h, &rest).is_none_or(|after| after < eg) {
                        continue;
                    }
                    return Ok(Some(keep(&rest)));
                }
            }
            Ok(None)
        }
        _ => Err(Error::Precondition(format!("unknown rule {rule}"))),
    }
}

/// Applies the rules in order 1, 2, 3, 4 until none applies, starting from `start`.
pub fn reduce_from(g: &Graph, start: &[usize]) -> Result<ReductionTrace> {
    let mut current = start.to_vec();
    current.sort_unstable();
    current.dedup();
    if current.len() < 2 || g.induced_edge_count(&current) == 0 {
        return Err(Error::TooSmall("reduction needs at least two vertices and one edge".into()));
    }
    let mut trace = ReductionTrace::default();
    'outer: loop {
        for rule in 1..=4u8 {
            if rule == 4 && !g.induced(&current).graph.is_biconnected() {
                continue;
            }
            if let Some((kept, removed)) = apply_rule(g, &current, rule)? {
                let eg_before = eg_of_set(g, &current).expect("at least two vertices");
                let eg_after = eg_of_set(g, &kept).expect("survivor keeps an edge");
                trace.steps.push(ReductionStep { rule, removed, eg_before, eg_after });
                current = kept;
                continue 'outer;
            }
        }
        break;
    }
    trace.final_vertices = current;
    Ok(trace)
}

/// Exhaustive reduction of the whole graph.
pub fn reduce_exhaustive(g: &Graph) -> Result<ReductionTrace> {
    let all: Vec<usize> = (0..g.n()).collect();
    reduce_from(g, &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    fn clique_edges(vs: &[usize]) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                e.push((vs[i], vs[j]));
            }
        }
        e
    }

    #[test]
    fn rule_two_bowtie() {
        let g = bowtie();
        let (kept, removed) = apply_rule(&g, &[0, 1, 2, 3, 4], 2).unwrap().unwrap();
        assert_eq!(kept, vec![0, 1, 2]);
        assert_eq!(removed, vec![3, 4]);
    }

    #[test]
    fn rule_three_k4_plus_vertex() {
        let mut e = clique_edges(&[0, 1, 2, 3]);
        e.extend([(4, 0), (4, 1)]);
        let g = Graph::from_edges(5, &e).unwrap();
        assert_eq!(g.eg_bound().unwrap(), rat(4, 1));
        let (kept, removed) = apply_rule(&g, &[0, 1, 2, 3, 4], 3).unwrap().unwrap();
        assert_eq!(removed, vec![4]);
        assert_eq!(kept, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rule_four_k6_plus_path() {
        let mut e = clique_edges(&[0, 1, 2, 3, 4, 5]);
        e.extend([(0, 6), (6, 1)]);
        let g = Graph::from_edges(7, &e).unwrap();
        assert_eq!(g.eg_bound().unwrap(), rat(34, 6));
        let (kept, removed) = apply_rule(&g, &(0..7).collect::<Vec<_>>(), 4).unwrap().unwrap();
        assert_eq!(removed, vec![6]);
        assert_eq!(kept, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn rule_preconditions() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(apply_rule(&g, &[0, 1, 2, 3], 2), Err(Error::Disconnected));
        assert_eq!(apply_rule(&bowtie(), &[0, 1, 2, 3, 4], 4), Err(Error::NotBiconnected));
    }

    #[test]
    fn exhaustive_examples() {
        let t = reduce_exhaustive(&Graph::complete(4)).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.final_vertices, vec![0, 1, 2, 3]);

        let t = reduce_exhaustive(&bowtie()).unwrap();
        assert_eq!(t.final_vertices, vec![0, 1, 2]);
        assert_eq!(t.steps[0].rule, 2);

        let mut e = clique_edges(&[0, 1, 2, 3, 4]);
        e.push((4, 5));
        let t = reduce_exhaustive(&Graph::from_edges(6, &e).unwrap()).unwrap();
        assert_eq!(t.final_vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(t.steps[0].rule, 2);
        assert_eq!(t.steps[0].eg_before, rat(22, 5));
        assert_eq!(t.steps[0].eg_after, rat(5, 1));

        assert!(reduce_exhaustive(&Graph::empty(3)).is_err());
    }

    #[test]
    fn idempotent_on_survivor() {
        let t = reduce_exhaustive(&bowtie()).unwrap();
        let again = reduce_from(&bowtie(), &t.final_vertices).unwrap();
        assert!(again.steps.is_empty());
    }
}
