use matchkit_core::{canonical_form, from_graph6, to_graph6, EdgeRef, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = vec![];
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy(40)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn certificate_is_label_invariant((g, p) in with_perm(12)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&p)));
    }

    #[test]
    fn subdivision_adds_degree_two_vertices(g in graph_strategy(12), pick in any::<prop::sample::Index>(), j in 0usize..6) {
        let edges: Vec<EdgeRef> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let e = edges[pick.index(edges.len())];
        let h = g.subdivide(e, j).unwrap();
        prop_assert_eq!(h.n(), g.n() + j);
        prop_assert_eq!(h.m(), g.m() + j);
        for v in g.n()..h.n() {
            prop_assert_eq!(h.degree(v), 2);
        }
        if j > 0 {
            prop_assert!(!h.has_edge(e.u, e.v));
        }
    }

    #[test]
    fn vertex_deletion_compacts(g in graph_strategy(12), v in 0usize..12) {
        prop_assume!(v < g.n());
        let h = g.delete_vertices(&[v]).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert_eq!(h.m(), g.m() - g.degree(v));
    }
}

#[test]
fn subdivision_capacity_is_enforced() {
    let g = Graph::from_edges(60, &[(0, 1)]).unwrap();
    let e = EdgeRef::new(0, 1).unwrap();
    assert!(g.subdivide(e, 4).is_ok());
    assert!(g.subdivide(e, 5).is_err());
}
