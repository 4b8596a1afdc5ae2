use irregularity::constructions::max_irr_bound;
use irregularity::degseq::{erdos_gallai_violation, havel_hakimi, irr_upper_bound};
use irregularity::graph::{read_edge_list, read_graph6, report, write_edge_list, write_graph6, zagreb1};
use irregularity::{irregularity, DegreeSequence, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0).prop_flat_map(|(n, density)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(density.clamp(0.0, 1.0)), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #[test]
    fn indices_survive_relabeling((g, perm) in graph_and_permutation(32)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(report(&h), report(&g));
        prop_assert_eq!(h.degree_sequence(), g.degree_sequence());
        prop_assert_eq!(h.is_connected(), g.is_connected());
    }

    #[test]
    fn edge_list_round_trip(g in graph(32)) {
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph(32)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(read_graph6(&text).unwrap(), g);
    }

    #[test]
    fn irregularity_at_most_extremal_value(g in graph(32)) {
        prop_assert!(irregularity(&g) <= max_irr_bound(g.order()));
    }

    #[test]
    fn degree_sequence_bound_is_sound(g in graph(32)) {
        let s = DegreeSequence::new(g.degree_sequence()).unwrap();
        prop_assert!(irregularity(&g) <= irr_upper_bound(&s).total);
    }

    #[test]
    fn irregularity_has_parity_of_first_zagreb(g in graph(32)) {
        prop_assert_eq!(irregularity(&g) % 2, zagreb1(&g) % 2);
    }

    #[test]
    fn degrees_of_a_graph_are_graphic(g in graph(32)) {
        let d = g.degree_sequence();
        prop_assert_eq!(erdos_gallai_violation(&d), None);
        let h = havel_hakimi(&d).expect("graphic sequences are realizable");
        prop_assert_eq!(h.degrees(), d);
    }

    #[test]
    fn disjoint_union_adds_irregularity(a in graph(12), b in graph(12)) {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(u.order(), a.order() + b.order());
        prop_assert_eq!(irregularity(&u), irregularity(&a) + irregularity(&b));
    }
}

#[test]
fn complete_and_empty_graphs_are_regular() {
    for n in 2..10 {
        let g = Graph::complete(n);
        assert_eq!(irregularity(&g), 0);
        assert_eq!(irregularity(&Graph::empty(n)), 0);
    }
}
