mod common;

use std::collections::HashSet;

use defset::construct::*;
use defset::engine::{chromatic_number, count_extensions, is_defining_set, SearchBudget};
use defset::trace::LabeledEdge;
use defset::{ColorAssignment, Family, Graph, VertexLabel};

fn lbl(s: &str) -> VertexLabel {
    s.parse().unwrap()
}

fn deleted_by(res: &ConstructionResult, v: &str) -> HashSet<(VertexLabel, VertexLabel)> {
    let step = res.trace.step_for(&lbl(v)).unwrap();
    step.deleted_edges.iter().map(|&(a, b)| if a <= b { (a, b) } else { (b, a) }).collect()
}

fn edge_set(text: &[&str]) -> HashSet<(VertexLabel, VertexLabel)> {
    text.iter()
        .map(|e| {
            let (a, b) = e.split_once(' ').unwrap();
            let (a, b) = (lbl(a), lbl(b));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

fn labeled_ids(g: &Graph, edges: &[LabeledEdge]) -> Vec<(usize, usize)> {
    edges.iter().filter_map(|(a, b)| Some((g.id(a)?, g.id(b)?))).filter(|&(a, b)| g.has_edge(a, b)).collect()
}

#[test]
fn join_of_triangles_is_octahedron() {
    let k3 = Graph::complete(3);
    let c = ColorAssignment::from_slice(3, &[1, 2, 3]).unwrap();
    let other = Graph::from_labels(
        (1..=3).map(|i| VertexLabel::new(Family::V, i)).collect(),
        &[(lbl("v1"), lbl("v2")), (lbl("v1"), lbl("v3")), (lbl("v2"), lbl("v3"))],
    )
    .unwrap();
    let g = chromatic_join(&k3, &c, &other, &c).unwrap();
    assert_eq!(g.n(), 6);
    assert!(g.is_regular(4));
    assert_eq!(chromatic_number(&g, &SearchBudget::default()).unwrap(), 3);
}

#[test]
fn join_degree_law() {
    let g = build_glk(2, 3).unwrap();
    let h = Graph::from_labels((1..=4).map(|i| VertexLabel::new(Family::W, i)).collect(), &[(lbl("w1"), lbl("w2"))])
        .unwrap();
    let ch = ColorAssignment::from_slice(3, &[1, 2, 1, 3]).unwrap();
    let j = chromatic_join(&g.graph, &g.canonical_coloring, &h, &ch).unwrap();
    for x in 0..g.graph.n() {
        let cx = g.canonical_coloring.get(x);
        let extra = (0..h.n()).filter(|&y| ch.get(y) != cx).count();
        assert_eq!(j.degree(x), g.graph.degree(x) + extra);
    }
}

#[test]
fn glk_examples() {
    let oct = build_glk(2, 3).unwrap();
    assert!(oct.graph.is_regular(4));
    assert_eq!(oct.defining_set.len(), 2);
    assert_eq!(common::backtrack_count(&oct.graph, &oct.defining_set, 3, u64::MAX), 1);

    let g = build_glk(3, 5).unwrap();
    assert_eq!((g.graph.n(), g.claimed_r, g.defining_set.len()), (15, 8, 4));

    let c4 = build_glk(2, 2).unwrap();
    assert!(c4.graph.is_regular(2));
    assert_eq!(c4.defining_set.iter().collect::<Vec<_>>(), vec![(0, 1)]);
}

#[test]
fn glk_regular_over_range() {
    for l in 2..=5 {
        for k in 2..=8 {
            assert!(build_glk(l, k).unwrap().graph.is_regular(2 * (k - 1)), "l={l} k={k}");
        }
    }
}

#[test]
fn theorem1_examples() {
    let h = build_theorem1(5, 0).unwrap();
    assert_eq!((h.graph.n(), h.claimed_r, h.defining_set.len()), (14, 8, 4));
    assert!(matches!(build_theorem1(5, 3), Err(ConstructError::TEqualsKMinus2 { k: 5 })));
    let h = build_theorem1(3, 0).unwrap();
    assert_eq!(h.graph.n(), 8);
    assert!(h.graph.is_regular(4));
    assert_eq!(common::backtrack_count(&h.graph, &h.defining_set, 3, u64::MAX), 1);
}

#[test]
fn theorem2_examples() {
    let h = build_theorem2(7, 1).unwrap();
    assert_eq!(h.graph.n(), 15);
    assert!(h.graph.is_regular(12));
    assert_eq!(deleted_by(&h, "x1"), edge_set(&["u1 u1'", "u2 u2'", "u3 u3'", "v1 v1'", "v2 v2'", "v3 v3'"]));

    let h = build_theorem2(7, 5).unwrap();
    assert_eq!((h.graph.n(), h.defining_set.len()), (19, 6));

    let h = build_theorem2(3, 1).unwrap();
    assert_eq!(h.graph.n(), 7);
    assert_eq!(common::backtrack_count(&h.graph, &h.defining_set, 3, u64::MAX), 1);
}

#[test]
fn theorem3_examples() {
    let h = build_theorem3(8, 1).unwrap();
    assert_eq!(h.graph.n(), 17);
    assert!(h.graph.is_regular(14));
    let expect = edge_set(&["u1 u2'", "u2 u3'", "u4 u1'", "v1 v1'", "v2 v2'", "v3 v3'", "u3 v4"]);
    assert_eq!(deleted_by(&h, "x1"), expect);

    let h = build_theorem3(8, 6).unwrap();
    assert_eq!((h.graph.n(), h.defining_set.len()), (22, 7));

    let h = build_theorem3(4, 1).unwrap();
    assert_eq!(h.graph.n(), 9);
    assert_eq!(common::backtrack_count(&h.graph, &h.defining_set, 4, u64::MAX), 1);
}

#[test]
fn theorem4_examples() {
    let h = build_theorem4(4, 2, 1).unwrap();
    assert_eq!((h.graph.n(), h.claimed_r, h.defining_set.len()), (10, 7, 3));
    let h = build_theorem4(5, 3, 2).unwrap();
    assert_eq!((h.graph.n(), h.claimed_r, h.defining_set.len()), (13, 10, 4));
    assert!(matches!(build_theorem4(5, 3, 3), Err(ConstructError::ParamOutOfRange(_))));
}

#[test]
fn theorem4_defining_set_is_x_and_v() {
    let h = build_theorem4(7, 4, 2).unwrap();
    let mut names: Vec<String> = h.defining_set.vertices().map(|v| h.graph.label(v).to_string()).collect();
    names.sort();
    assert_eq!(names, ["v5", "v6", "v7", "x2", "x3", "x4"]);
}

#[test]
fn claimed_forced_colors() {
    // y_t colors stated for each case are the unique extension's colors
    for (k, s) in [(5, 3), (7, 5), (6, 4), (8, 6)] {
        let h = Construction::build(&if k % 2 == 1 { Construction::T2 { k, s } } else { Construction::T3 { k, s } })
            .unwrap();
        assert_eq!(count_extensions(&h.graph, &h.canonical_coloring, k, 2).unwrap(), 1);
        for v in 0..h.graph.n() {
            if h.graph.label(v).family == Family::X {
                assert_eq!(h.canonical_coloring.get(v), Some(k as u32));
            }
        }
    }
}

#[test]
fn builders_never_emit_infeasible_parameters() {
    for c in Construction::sweep(8) {
        let (n, r, k) = c.target();
        assert!(feasibility(n, r, k).feasible, "{c}");
    }
    for k in 3..=8 {
        let (n, r) = (3 * k - 1, 3 * k - 4);
        assert_eq!(feasibility(n, r, k).reason, FeasibilityReason::TEqualsKMinus2);
        assert!(build_theorem1(k, k - 2).is_err());
    }
    for k in 4..=8 {
        for s in 2..=k - 2 {
            for t in 1..s {
                let (n, r) = (2 * k + s, 2 * (k - 1) + t);
                let verdict = feasibility(n, r, k);
                let built = build_theorem4(k, s, t);
                if !verdict.feasible {
                    assert!(built.is_err(), "k={k} s={s} t={t}");
                }
                if built.is_ok() {
                    assert!(verdict.feasible);
                }
            }
        }
    }
}

#[test]
fn nonessential_empty_set() {
    let g = build_glk(2, 3).unwrap();
    assert!(nonessential_check(&g.graph, &g.defining_set, &[], &SearchBudget::default()).unwrap());
}

#[test]
fn nonessential_edge_not_in_graph() {
    let g = build_glk(2, 3).unwrap();
    let (u3, v3) = (g.graph.id(&lbl("u3")).unwrap(), g.graph.id(&lbl("v3")).unwrap());
    let r = nonessential_check(&g.graph, &g.defining_set, &[(u3, v3)], &SearchBudget::default());
    assert!(matches!(r, Err(ConstructError::EdgeNotInGraph(..))));
}

#[test]
fn nonessential_single_octahedron_edge_matches_definition() {
    let g = build_glk(2, 3).unwrap();
    let budget = SearchBudget::default();
    for (a, b) in g.graph.edges() {
        let reduced = g.graph.without_edges(&[(a, b)]).unwrap();
        let red_edges = reduced.edges();
        let chi_same = common::naive_chi(6, &red_edges) == 3;
        let unique = common::backtrack_count(&reduced, &g.defining_set, 3, u64::MAX) == 1;
        let got = nonessential_check(&g.graph, &g.defining_set, &[(a, b)], &budget).unwrap();
        assert_eq!(got, chi_same && unique, "{}{}", g.graph.label(a), g.graph.label(b));
    }
}

#[test]
fn nonessential_set_before_y_vertices() {
    // k = 7, s = 3: the graph to which the y vertices are added
    let h = build_theorem2(7, 3).unwrap();
    let (k, half) = (7usize, 3usize);
    let u = |i: usize| h.trace.naming.label(Family::U, i);
    let v = |i: usize| h.trace.naming.label(Family::V, i);
    let x = |i: usize| VertexLabel::new(Family::X, i);
    let mut f: Vec<LabeledEdge> = Vec::new();
    for i in 1..=half {
        for j in i + 1..=half {
            f.push((v(i), v(j)));
            f.push((u(half + i), u(half + j)));
        }
        f.push((x(1), v(i)));
    }
    for i in 2..=half {
        for j in 1..k {
            f.push((x(i), u(j)));
        }
    }
    for i in 1..k {
        f.push((u(i), v(k)));
    }
    let ids = labeled_ids(&h.graph, &f);
    assert_eq!(ids.len(), 3 + 3 + 3 + 2 * 6 + 6);
    assert!(nonessential_check(&h.graph, &h.defining_set, &ids, &SearchBudget::default()).unwrap());
}

#[test]
fn recipe_failure_carries_trace() {
    match build_theorem3(4, 2) {
        Err(ConstructError::InternalRecipeInconsistency { trace, .. }) => {
            assert_eq!(trace.steps.len(), 2);
            assert!(trace.replay().is_ok());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn every_output_is_defining_and_clique_colored() {
    for c in Construction::sweep(6) {
        let Ok(h) = c.build() else { continue };
        assert!(is_defining_set(&h.graph, &h.defining_set, h.claimed_k).unwrap(), "{c}");
        let colors: HashSet<_> = h.clique.iter().map(|&v| h.canonical_coloring.get(v)).collect();
        assert_eq!(colors.len(), h.claimed_k, "{c}");
    }
}
