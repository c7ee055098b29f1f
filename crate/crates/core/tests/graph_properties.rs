use proptest::prelude::*;

use trdom_core::graph::{canonical_form, enumerate_graphs, parse_graph6, to_graph6, EnumFilter};
use trdom_core::solvers::{gamma, gamma_t, gamma_tr};
use trdom_core::{DomValue, Graph};

fn enumerated(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_graphs(n, EnumFilter::all()).unwrap()).collect()
}

#[test]
fn codec_round_trip_on_enumerated_graphs() {
    for g in enumerated(6) {
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn complement_swaps_addition_and_removal() {
    for g in enumerated(5) {
        for e in g.non_edges() {
            assert_eq!(g.add_edge(e).unwrap().complement(), g.complement().remove_edge(e).unwrap());
        }
    }
}

#[test]
fn diameter_two_iff_complement_has_an_edge() {
    for g in enumerated(6).into_iter().filter(|g| g.is_connected()) {
        let wide = matches!(g.diameter(), DomValue::Finite(d) if d >= 2);
        assert_eq!(wide, g.complement().edge_count() > 0, "{}", to_graph6(&g));
    }
}

#[test]
fn handshake() {
    for g in enumerated(6) {
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_identity(g in arb_graph(12)) {
        for e in g.non_edges() {
            prop_assert_eq!(g.add_edge(e).unwrap().complement(), g.complement().remove_edge(e).unwrap());
        }
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn invariants_ignore_labels((g, perm) in arb_relabelled(9)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(gamma(&g), gamma(&h));
        if !g.has_isolated() {
            prop_assert_eq!(gamma_t(&g).unwrap(), gamma_t(&h).unwrap());
            prop_assert_eq!(gamma_tr(&g).unwrap(), gamma_tr(&h).unwrap());
        }
    }

    #[test]
    fn domination_chain(g in arb_graph(10)) {
        prop_assume!(!g.has_isolated());
        let (d, t, tr) = (gamma(&g), gamma_t(&g).unwrap(), gamma_tr(&g).unwrap());
        prop_assert!(d <= t && t <= 2 * d);
        prop_assert!(2 * d <= tr && tr <= 3 * d);
        prop_assert!(t <= tr && tr <= 2 * t);
    }
}
