//! Mutated witnesses and out-of-regime inputs must be rejected.

use longcycle::dense_extract::{check_dirac_decomposition, dirac_decomposition_instance, DenseWitness};
use longcycle::dense_routing::{cover_side_through_pairs, hamiltonian_through_pairs, Mode, PairSet};
use longcycle::rational::rat;
use longcycle::{CycleCertificate, Error, Graph, PathCertificate};

fn complete_bipartite(p: usize, q: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..p).flat_map(|a| (p..p + q).map(move |b| (a, b))).collect();
    Graph::from_edges(p + q, &edges).unwrap()
}

#[test]
fn dirac_decomposition_constructed_is_valid() {
    for (l1, l2, q) in [(1, 1, 3), (3, 2, 4), (5, 5, 6)] {
        let (g, c, p1, p2) = dirac_decomposition_instance(l1, l2, q);
        assert_eq!(check_dirac_decomposition(&g, &c, &p1, &p2).unwrap(), None, "{l1} {l2} {q}");
    }
}

#[test]
fn dirac_decomposition_mutations() {
    let (g, c, p1, p2) = dirac_decomposition_instance(3, 3, 4);

    let overlap = PathCertificate::new(vec![p1.vertices[2]]);
    assert_eq!(check_dirac_decomposition(&g, &c, &p1, &overlap).unwrap(), Some("disjoint paths"));

    // a second path glued to the first leaves no connector on one side
    let adjacent = PathCertificate::new(vec![3]);
    assert_eq!(check_dirac_decomposition(&g, &c, &p1, &adjacent).unwrap(), Some("cycle form"));

    // dropping an end of P1 hangs a pendant vertex off a clique component
    let short = PathCertificate::new(p1.vertices[..2].to_vec());
    assert_eq!(check_dirac_decomposition(&g, &c, &short, &p2).unwrap(), Some("component structure"));

    // a chord between the two cliques merges the connector components
    let mut e = g.edges();
    e.push((3, 10));
    let merged = Graph::from_edges(g.n(), &e).unwrap();
    assert!(check_dirac_decomposition(&merged, &c, &p1, &p2).unwrap().is_some());
}

#[test]
fn dirac_decomposition_input_errors() {
    let (g, c, p1, p2) = dirac_decomposition_instance(2, 2, 3);
    let broken = CycleCertificate::new(c.vertices[1..].to_vec(), 3);
    assert!(matches!(check_dirac_decomposition(&g, &broken, &p1, &p2), Err(Error::Precondition(_))));
    let bad_path = PathCertificate::new(vec![0, 5]);
    assert!(check_dirac_decomposition(&g, &c, &bad_path, &p2).is_err());
    let tree = Graph::path(4);
    let cyc = CycleCertificate::new(vec![0, 1, 2], 3);
    assert_eq!(check_dirac_decomposition(&tree, &cyc, &p1, &p2).unwrap_err(), Error::NotBiconnected);
}

#[test]
fn pair_sets_rejected() {
    assert!(PairSet::new(5, &[(0, 1), (1, 2), (2, 0)]).is_err());
    assert!(PairSet::new(5, &[(0, 1), (0, 2), (0, 3)]).is_err());
    assert!(PairSet::new(5, &[(0, 1), (1, 0)]).is_err());
    assert!(PairSet::new(5, &[(2, 2)]).is_err());
    assert!(PairSet::new(5, &[(0, 7)]).is_err());
    let ps = PairSet::new(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
    assert!(ps.on_cycle(&[0, 1, 2, 3, 4, 5]));
    assert!(!ps.on_cycle(&[0, 2, 1, 3, 4, 5]));
}

#[test]
fn strict_routing_out_of_regime() {
    // K6 is far below ad ≥ 60k
    let err = hamiltonian_through_pairs(&Graph::complete(6), &[], 1, Mode::Strict).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{err}");
    let c = hamiltonian_through_pairs(&Graph::complete(6), &[(0, 3)], 1, Mode::Relaxed).unwrap();
    assert_eq!(c.len(), 6);
    let err = cover_side_through_pairs(&complete_bipartite(2, 4), &[0, 1], &[2, 3, 4, 5], &[], 1, Mode::Strict).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{err}");
}

#[test]
fn cover_side_rejects_bad_partitions() {
    let mut e = complete_bipartite(2, 4).edges();
    e.push((2, 3));
    let g = Graph::from_edges(6, &e).unwrap();
    assert!(cover_side_through_pairs(&g, &[0, 1], &[2, 3, 4, 5], &[], 1, Mode::Relaxed).is_err());
    let g = complete_bipartite(2, 4);
    assert!(cover_side_through_pairs(&g, &[0, 1], &[2, 3, 4], &[], 1, Mode::Relaxed).is_err());
    assert!(cover_side_through_pairs(&g, &[0, 1, 2], &[2, 3, 4, 5], &[], 1, Mode::Relaxed).is_err());
}

#[test]
fn dense_witness_mutations() {
    let k10 = Graph::complete(10);
    let mad = rat(9, 1);
    let all: Vec<usize> = (0..10).collect();
    assert!(DenseWitness::SmallDense { vertices: all.clone() }.check(&k10, 1, mad).is_ok());
    assert!(DenseWitness::SmallDense { vertices: all.clone() }.check(&k10, 0, mad).is_err());
    // a much sparser subset misses ad(H) ≥ mad - 1
    assert!(DenseWitness::SmallDense { vertices: all[..5].to_vec() }.check(&k10, 1, mad).is_err());

    // ad = 5/2: four vertices are below ad + k + 1 = 9/2 but not below ad + k
    let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    assert!(DenseWitness::SmallDense { vertices: vec![0, 1, 2, 3] }.check(&diamond, 1, rat(5, 2)).is_ok());

    let short = CycleCertificate::new((0..9).collect(), 3);
    assert!(DenseWitness::FoundCycle(short).check(&k10, 1, mad).is_err());
    let full = CycleCertificate::new(all.clone(), 10);
    assert!(DenseWitness::FoundCycle(full).check(&k10, 1, mad).is_ok());

    let kb = complete_bipartite(2, 4);
    let mad = rat(8, 3);
    let good = DenseWitness::BipartiteDense { vertices: (0..6).collect(), a: vec![0, 1], b: vec![2, 3, 4, 5] };
    assert!(good.check(&kb, 0, mad).is_ok());
    let moved = DenseWitness::BipartiteDense { vertices: (0..6).collect(), a: vec![0, 1, 2], b: vec![3, 4, 5] };
    assert!(moved.check(&kb, 0, mad).is_err());
    let overlapping = DenseWitness::BipartiteDense { vertices: (0..6).collect(), a: vec![0, 1, 2], b: vec![2, 3, 4, 5] };
    assert!(overlapping.check(&kb, 0, mad).is_err());
    let mut e = kb.edges();
    e.push((2, 3));
    let kb_chord = Graph::from_edges(6, &e).unwrap();
    assert!(good.check(&kb_chord, 0, mad).is_err());
}
