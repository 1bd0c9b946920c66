mod common;

use exturan::graph6::decode_graph6_lines;
use exturan::{decode_graph6, encode_graph6, BipartiteGraph, Error, Graph, Side};
use proptest::prelude::*;

/// Straight-from-the-definition graph6 writer for orders up to 62.
fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while bits.len() % 6 != 0 {
        bits.push('0');
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(16)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(&text, &reference_graph6(&g));
        prop_assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive(g in graph_strategy(12)) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.edges().count(), g.size());
    }

    #[test]
    fn connectivity_predicates(g in graph_strategy(9)) {
        prop_assert_eq!(g.is_connected(), common::uf_connected(&g));
        let bic = g.is_biconnected();
        prop_assert_eq!(bic, common::naive_biconnected(&g));
        if bic {
            prop_assert!(g.is_connected());
            prop_assert!(g.min_degree().unwrap() >= 2);
        }
    }

    #[test]
    fn two_coloring_is_proper(g in graph_strategy(10)) {
        if let Some(parts) = g.two_coloring() {
            prop_assert!(BipartiteGraph::new(g.clone(), parts).is_ok());
        } else {
            // No proper 2-colouring means an odd cycle.
            let lengths = exturan::structure::cycle_lengths(&g).unwrap();
            prop_assert!((3..64).step_by(2).any(|l| lengths >> l & 1 == 1));
        }
    }
}

#[test]
fn wide_graphs_use_multiword_rows() {
    let g = Graph::cycle(130);
    assert_eq!(g.words(), 3);
    assert!(g.is_biconnected());
    assert_eq!(g.min_degree().unwrap(), 2);
    let text = encode_graph6(&g);
    assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
}

#[test]
fn mutation_rejects_loops_and_range() {
    let mut g = Graph::new(4);
    assert!(g.add_edge(1, 1).is_err());
    assert!(g.add_edge(0, 4).is_err());
    assert!(g.add_edge(0, 1).unwrap());
    assert!(!g.add_edge(1, 0).unwrap());
}

#[test]
fn invalid_bipartition_names_edge() {
    let g = Graph::from_edges(4, [(0, 2), (0, 1)]).unwrap();
    let parts = vec![Side::X, Side::X, Side::Y, Side::Y];
    match BipartiteGraph::new(g, parts) {
        Err(Error::InvalidBipartition { u, v }) => assert_eq!((u, v), (0, 1)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn parse_errors_carry_offsets() {
    match decode_graph6_lines("A_\nC~~\n") {
        Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
        other => panic!("{other:?}"),
    }
    match decode_graph6(b"C~~") {
        Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
        other => panic!("{other:?}"),
    }
}
