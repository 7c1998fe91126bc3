use homgraph::graph::analysis::{diameter, is_connected, is_regular, is_tree, universal_vertices};
use homgraph::graph::chordal::is_chordal;
use homgraph::graph::export::{to_dot, to_json};
use homgraph::graph::iso::{are_isomorphic, is_vertex_transitive};
use homgraph::graph::spectrum::{iterative_spectrum, spectrum};
use homgraph::{Caps, Graph, GraphProperties, HomGraph, ModulePresentation, SpectrumMode};

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.vertex_count(), g.edges().into_iter().map(|(a, b)| (perm[a], perm[b])))
}

#[test]
fn shapes() {
    let p5 = Graph::path(5);
    assert!(is_tree(&p5) && is_connected(&p5) && !is_regular(&p5));
    assert_eq!(diameter(&p5), Some(4));
    let c6 = Graph::cycle(6);
    assert!(is_regular(&c6) && !is_tree(&c6));
    assert_eq!(diameter(&c6), Some(3));
    let star = Graph::star(4);
    assert_eq!(universal_vertices(&star), vec![0]);
    assert_eq!(diameter(&star), Some(2));
    let split = Graph::from_edges(4, [(0, 1), (2, 3)]);
    assert!(!is_connected(&split));
    assert_eq!(diameter(&split), None);
}

#[test]
fn holes_are_induced_cycles() {
    for n in 4..=9 {
        let g = Graph::cycle(n);
        let r = is_chordal(&g);
        assert!(!r.chordal);
        let hole = r.hole.unwrap();
        assert_eq!(hole.len(), n);
    }
    // A 5-cycle with one chord still holds a 4-hole.
    let mut g = Graph::cycle(5);
    g.add_edge(0, 2);
    let hole = is_chordal(&g).hole.unwrap();
    assert_eq!(hole.len(), 4);
    for i in 0..4 {
        assert!(g.has_edge(hole[i], hole[(i + 1) % 4]));
        assert!(!g.has_edge(hole[i], hole[(i + 2) % 4]));
    }
}

#[test]
fn spectra_of_cycles_and_paths() {
    let caps = Caps::default();
    for n in 3..=12 {
        let s = iterative_spectrum(&Graph::cycle(n), &caps).unwrap();
        let mut expected: Vec<f64> =
            (0..n).map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos()).collect();
        expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (x, y) in s.eigenvalues.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-9, "C_{n}: {x} vs {y}");
        }
        let path = iterative_spectrum(&Graph::path(n), &caps).unwrap();
        let top = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((path.lambda_max - top).abs() < 1e-9);
    }
}

#[test]
fn complete_graphs_use_closed_form() {
    let caps = Caps::default();
    let s = spectrum(&Graph::complete(6), &caps).unwrap();
    assert_eq!(s.mode, SpectrumMode::ClosedForm);
    assert_eq!(s.eigenvalues, vec![5.0, -1.0, -1.0, -1.0, -1.0, -1.0]);
    let big = Caps { max_spectrum: 4, ..Caps::default() };
    let partial = iterative_spectrum(&Graph::cycle(8), &big).unwrap();
    assert_eq!(partial.mode, SpectrumMode::Partial);
    assert!((partial.lambda_max - 2.0).abs() < 1e-6);
}

#[test]
fn isomorphism_under_relabeling() {
    let caps = Caps::default();
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]);
    let h = relabel(&g, &[5, 3, 1, 0, 2, 4]);
    assert!(are_isomorphic(&g, &h, &caps).unwrap().is_isomorphic());
    let moved_tail = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5)]);
    assert!(are_isomorphic(&g, &moved_tail, &caps).unwrap().is_isomorphic());
    let forked = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 5)]);
    assert!(!are_isomorphic(&g, &forked, &caps).unwrap().is_isomorphic());
    assert!(!are_isomorphic(&Graph::cycle(6), &relabel(&Graph::path(6), &[0, 1, 2, 3, 4, 5]), &caps)
        .unwrap()
        .is_isomorphic());
    // Same degree sequence, different graphs: C6 against two triangles.
    let triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
    assert!(!are_isomorphic(&Graph::cycle(6), &triangles, &caps).unwrap().is_isomorphic());
}

#[test]
fn vertex_transitivity() {
    let caps = Caps::default();
    assert!(is_vertex_transitive(&Graph::cycle(7), &caps).unwrap());
    assert!(is_vertex_transitive(&Graph::complete(5), &caps).unwrap());
    assert!(!is_vertex_transitive(&Graph::star(3), &caps).unwrap());
    assert!(!is_vertex_transitive(&Graph::path(4), &caps).unwrap());
}

#[test]
fn hom_graphs_of_small_modules() {
    let caps = Caps::default();
    let cases = [
        (ModulePresentation::zmod(2, 2, &[2]).unwrap(), 2, 1),
        (ModulePresentation::vector_space(2, 2).unwrap(), 4, 6),
        (ModulePresentation::zmod(2, 2, &[2, 1]).unwrap(), 7, 21),
        (ModulePresentation::product_semisimple(2, 1, 1).unwrap(), 3, 3),
        (ModulePresentation::vector_space(2, 1).unwrap(), 1, 0),
    ];
    for (m, t, edges) in cases {
        let g = HomGraph::build(&m, &caps).unwrap();
        assert_eq!((g.vertex_count(), g.graph().edge_count()), (t, edges), "{:?}", m.orders());
        assert_eq!(g.label(0), "0");
        assert_eq!(g.order(0), 1);
    }
}

#[test]
fn product_of_fields_is_complete() {
    // M/S2 is S1 and M/S1 is S2, so the two simples are adjacent.
    let m = ModulePresentation::product_semisimple(2, 1, 1).unwrap();
    let g = HomGraph::build(&m, &Caps::default()).unwrap();
    assert_eq!(g.graph().edges(), vec![(0, 1), (0, 2), (1, 2)]);
    let props = GraphProperties::compute(g.graph(), &Caps::default()).unwrap();
    assert!(props.complete && !props.tree);
}

#[test]
fn exports() {
    let caps = Caps::default();
    let g = HomGraph::build(&ModulePresentation::zmod(2, 2, &[2]).unwrap(), &caps).unwrap();
    assert_eq!(to_dot(&g), "graph G {\n  0 [label=\"0\"];\n  1 [label=\"<(2)>\"];\n  0 -- 1;\n}\n");
    let props = GraphProperties::compute(g.graph(), &caps).unwrap();
    let json: serde_json::Value = serde_json::from_str(&to_json(&g, &props)).unwrap();
    assert_eq!(json["edges"], serde_json::json!([[0, 1]]));
    assert_eq!(json["vertices"][1]["order"], 2);
    assert_eq!(json["properties"]["complete"], true);
}
