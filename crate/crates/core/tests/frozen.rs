//! Expectations obtained from the exhaustive oracles first, then frozen here.

use longcycle::density::mad_with_witness;
use longcycle::instances::{emit_result, gen_hardness_gadget, parse_graph, Format};
use longcycle::oracle::{oracle_longest_cycle, oracle_longest_st_path, oracle_mad};
use longcycle::rational::rat;
use longcycle::solver::{solve, Answer, Branch, SolveOptions};
use longcycle::Graph;

fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
}

fn k4_plus_pendant_path() -> Graph {
    let mut e = Graph::complete(4).edges();
    e.extend([(3, 4), (4, 5), (5, 6)]);
    Graph::from_edges(7, &e).unwrap()
}

#[test]
fn oracle_values() {
    let table: Vec<(&str, Graph, (i64, i64), usize)> = vec![
        ("petersen", Graph::petersen(), (3, 1), 9),
        ("bowtie", bowtie(), (12, 5), 3),
        ("k4", Graph::complete(4), (3, 1), 4),
        ("c7", Graph::cycle(7), (2, 1), 7),
        ("k4+path", k4_plus_pendant_path(), (3, 1), 4),
    ];
    for (name, g, (num, den), circ) in table {
        assert_eq!(oracle_mad(&g).unwrap(), rat(num, den), "{name}");
        assert_eq!(mad_with_witness(&g).unwrap().mad, rat(num, den), "{name}");
        assert_eq!(oracle_longest_cycle(&g).unwrap().0, circ, "{name}");
    }
}

#[test]
fn petersen_threshold_boundary() {
    // circumference 9, mad 3: yes up to k = 6
    let g = Graph::petersen();
    let opts = SolveOptions::default();
    for k in 0..=6 {
        let r = solve(&g, k, &opts).unwrap();
        assert_eq!(r.answer, Answer::Yes, "k={k}");
        assert!(r.cycle.unwrap().len() >= 3 + k);
    }
    let r = solve(&g, 7, &opts).unwrap();
    assert_eq!(r.answer, Answer::No);
    assert_eq!(r.branch, Branch::Fallback);
}

#[test]
fn rational_threshold() {
    // K4 minus an edge: mad 5/2, circumference 4
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    assert_eq!(oracle_mad(&g).unwrap(), rat(5, 2));
    let opts = SolveOptions::default();
    let expect = [(0, Answer::Yes, 3), (1, Answer::Yes, 4), (2, Answer::No, 5)];
    for (k, answer, threshold) in expect {
        let r = solve(&g, k, &opts).unwrap();
        assert_eq!((r.answer, r.threshold_len), (answer, threshold), "k={k}");
    }
}

#[test]
fn cut_vertex_rejected() {
    assert_eq!(solve(&bowtie(), 1, &SolveOptions::default()).unwrap_err(), longcycle::Error::NotBiconnected);
}

#[test]
fn st_paths() {
    assert_eq!(oracle_longest_st_path(&Graph::petersen(), 0, 1).unwrap(), 9);
    assert_eq!(oracle_longest_st_path(&bowtie(), 0, 3).unwrap(), 5);
    assert_eq!(oracle_longest_st_path(&Graph::path(4), 0, 3).unwrap(), 4);
}

#[test]
fn gadget_counts() {
    let g = gen_hardness_gadget(&Graph::cycle(4)).unwrap();
    assert_eq!((g.n(), g.m()), (12, 16));
    assert_eq!(g.eg_bound().unwrap(), rat(32, 11));
    let g = gen_hardness_gadget(&Graph::cycle(5)).unwrap();
    assert_eq!((g.n(), g.m()), (20, 35));
    assert_eq!(g.eg_bound().unwrap(), rat(70, 19));
}

#[test]
fn k4_json_output() {
    let g = parse_graph(b"0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", Format::Edgelist).unwrap();
    let r = solve(&g, 0, &SolveOptions::default()).unwrap();
    let text = String::from_utf8(emit_result(&r)).unwrap();
    assert!(text.starts_with(r#"{"answer":"yes","k":0,"mad":{"num":3,"den":1},"threshold_len":4,"cycle":"#), "{text}");
    let r = solve(&g, 2, &SolveOptions::default()).unwrap();
    let text = String::from_utf8(emit_result(&r)).unwrap();
    assert!(text.starts_with(r#"{"answer":"no","k":2,"mad":{"num":3,"den":1},"threshold_len":5,"cycle":null"#), "{text}");
}
