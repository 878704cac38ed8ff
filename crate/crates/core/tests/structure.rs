use std::collections::BTreeSet;

use sgcrit::criticality::{check_lambda_bounds, is_critical, CriticalityMethod};
use sgcrit::families::{anti_complete, generate, neg_loops, petersen, petersen_sigma1, petersen_sigma2, plus_minus_cycle, FamilyKind, FamilySpec};
use sgcrit::frustration::{frustration_index, SolveOptions};
use sgcrit::structure::{
    cyclic_edge_connectivity, decompose_exhaustive, edge_sum_2, edge_sum_3, in_s_star, subdivide_multiedge,
    suppress_vertex, switch_isomorphic, trivially_decomposable, two_edge_disjoint_negative_circuits,
    verify_s_star_structure, DecomposeCaps, DecompositionWitness,
};
use sgcrit::{switch, Edge, EdgeId, Signature, SignedGraph, SwitchSet};

const CAP: usize = 1_000_000;

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn positive(g: &SignedGraph) -> SignedGraph {
    g.with_signature(&Signature::new()).unwrap()
}

fn has_disjoint_circuits(g: &SignedGraph) -> bool {
    two_edge_disjoint_negative_circuits(g, CAP).unwrap().is_some()
}

/// Every part meets the rest of the graph in a vertex of degree at least 4.
fn parts_meet_at_high_degree(g: &SignedGraph, w: &DecompositionWitness) -> bool {
    let verts = |ids: &[EdgeId]| -> BTreeSet<String> {
        ids.iter()
            .flat_map(|e| {
                let e = g.edge(e.as_str()).unwrap();
                [e.u.to_string(), e.v.to_string()]
            })
            .collect()
    };
    (0..w.parts.len()).all(|i| {
        let mine = verts(&w.parts[i]);
        let rest: Vec<EdgeId> = w.parts.iter().enumerate().filter(|&(j, _)| j != i).flat_map(|(_, p)| p.clone()).collect();
        verts(&rest).intersection(&mine).any(|v| g.degree(v.as_str()).unwrap() >= 4)
    })
}

#[test]
fn petersen_fixtures() {
    let (s1, s2) = (petersen_sigma1(), petersen_sigma2());
    assert_eq!(cyclic_edge_connectivity(&petersen(), 40).unwrap(), 5);
    assert!(!switch_isomorphic(&s1, &s2).unwrap());
    let u: SwitchSet = ["o0", "i2", "i3"].into_iter().collect();
    let moved = s1.with_signature(&switch(&s1, &s1.signature(), &u).unwrap()).unwrap();
    assert!(switch_isomorphic(&s1, &moved).unwrap());

    let r2 = verify_s_star_structure(&s2, &opts(), CAP, 40).unwrap();
    assert!(r2.applicable() && r2.passed());
    let r1 = verify_s_star_structure(&s1, &opts(), CAP, 40).unwrap();
    assert!(r1.applicable() && !r1.passed());
    assert!(r1.cubic && r1.cyclic_edge_connectivity == Some(5) && r1.disjoint_circuits.is_some());

    let b = check_lambda_bounds(&s2, &opts()).unwrap();
    assert!(b.holds && b.lambda == 3 && b.index == 3);
}

#[test]
fn petersen_sigma2_is_not_decomposable() {
    let g = petersen_sigma2();
    assert!(decompose_exhaustive(&g, DecomposeCaps::default(), &opts()).unwrap().is_none());
    assert!(trivially_decomposable(&g, &opts()).unwrap().is_none());
}

#[test]
fn decompositions_meet_at_high_degree_vertices() {
    for g in [neg_loops(2), neg_loops(3), plus_minus_cycle(2), plus_minus_cycle(3)] {
        let w = decompose_exhaustive(&g, DecomposeCaps::default(), &opts()).unwrap().expect("decomposable");
        assert_eq!(w.indices.iter().sum::<usize>(), frustration_index(&g).unwrap());
        let all: BTreeSet<&EdgeId> = w.parts.iter().flatten().collect();
        assert_eq!(all.len(), g.edge_count());
        assert!(parts_meet_at_high_degree(&g, &w));
    }
    assert!(trivially_decomposable(&plus_minus_cycle(3), &opts()).unwrap().is_some());
}

#[test]
fn subdivision_keeps_decomposability() {
    let (h, _) = subdivide_multiedge(&neg_loops(2), "a", "a").unwrap();
    assert_eq!(h.vertex_count(), 2);
    assert!(decompose_exhaustive(&h, DecomposeCaps::default(), &opts()).unwrap().is_some());
    let (h, _) = subdivide_multiedge(&anti_complete(4), "v0", "v1").unwrap();
    assert!(decompose_exhaustive(&h, DecomposeCaps::default(), &opts()).unwrap().is_none());
}

#[test]
fn subdivide_then_suppress_is_the_identity() {
    let g = petersen_sigma1();
    for e in g.edges() {
        let (h, v) = subdivide_multiedge(&g, e.u.as_str(), e.v.as_str()).unwrap();
        assert_eq!(suppress_vertex(&h, v.as_str()).unwrap(), g);
    }
}

#[test]
fn two_sums() {
    let k4 = anti_complete(4);
    let c4 = SignedGraph::new(
        ["c0", "c1", "c2", "c3"],
        (0..4).map(|i| Edge::positive(format!("c{i}"), format!("c{i}"), format!("c{}", (i + 1) % 4))),
    )
    .unwrap();
    // one positive edge of -K4 after switching at v0
    let u: SwitchSet = ["v0"].into_iter().collect();
    let k4s = k4.with_signature(&switch(&k4, &k4.signature(), &u).unwrap()).unwrap();
    let e1 = EdgeId::from("v0-v1");
    assert!(!k4s.signature().contains(e1.as_str()));
    let s = edge_sum_2(&k4s, &e1, &c4, &EdgeId::from("c0")).unwrap();
    let r = is_critical(&s, CriticalityMethod::Auto, &opts()).unwrap();
    assert!(r.critical && r.index == 2);

    let s = edge_sum_2(&k4s, &e1, &positive(&k4), &EdgeId::from("v0-v1")).unwrap();
    let r = is_critical(&s, CriticalityMethod::Auto, &opts()).unwrap();
    assert!(!r.critical && r.index == 2);

    assert!(edge_sum_2(&k4, &e1, &c4, &EdgeId::from("c0")).is_err());

    // the sum with a balanced circuit keeps the disjoint-circuit status
    for (h, expect) in [(petersen_sigma1(), true), (petersen_sigma2(), false)] {
        let e = h.edge_ids().iter().find(|e| !h.signature().contains(e.as_str())).unwrap().clone();
        let s = edge_sum_2(&h, &e, &c4, &EdgeId::from("c0")).unwrap();
        assert_eq!(has_disjoint_circuits(&s), expect);
    }
}

#[test]
fn three_sums() {
    let k4 = positive(&anti_complete(4));
    let theta = SignedGraph::new(
        ["a", "b", "c", "d"],
        [
            Edge::positive("ab", "a", "b"),
            Edge::positive("ac", "a", "c"),
            Edge::positive("cb", "c", "b"),
            Edge::positive("ad", "a", "d"),
            Edge::positive("db", "d", "b"),
        ],
    )
    .unwrap();
    for (h, expect) in [(petersen_sigma1(), true), (petersen_sigma2(), false)] {
        let s = edge_sum_3(&h, "o2", &k4, "v0").unwrap();
        assert!(s.is_cubic());
        assert_eq!(s.signature().len(), 3);
        assert_eq!(has_disjoint_circuits(&s), expect);
        let t = edge_sum_3(&h, "o2", &theta, "a").unwrap();
        let r = is_critical(&t, CriticalityMethod::Auto, &opts()).unwrap();
        assert!(r.critical && r.index == 3);
    }
    assert!(edge_sum_3(&petersen_sigma2(), "o0", &k4, "v0").is_err());
    assert!(edge_sum_3(&petersen_sigma2(), "o2", &theta, "c").is_err());
}

#[test]
fn s_star_membership() {
    assert!(in_s_star(&anti_complete(4), &opts(), CAP).unwrap());
    assert!(!in_s_star(&neg_loops(2), &opts(), CAP).unwrap());
    let w = two_edge_disjoint_negative_circuits(&neg_loops(2), CAP).unwrap().unwrap();
    let mut loops = [w.first, w.second].concat();
    loops.sort();
    assert_eq!(loops, vec![EdgeId::from("l1"), EdgeId::from("l2")]);
    let e4 = generate(FamilySpec::new(FamilyKind::EscherWall, 4)).unwrap().graph;
    assert!(cyclic_edge_connectivity(&e4, 40).unwrap() >= 4);
}
