use proptest::prelude::*;

use maxnik::construct::clique_sum_graphs;
use maxnik::iso::{are_isomorphic, canonical_form, find_isomorphism};
use maxnik::{graph6, Graph};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
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

fn relabeled(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_order).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(20)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.size() + g.complement().size(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn graph6_round_trips(g in graph(64)) {
        let text = graph6::encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabeled(12)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let map = find_isomorphism(&g, &h).expect("relabeling is an isomorphism");
        prop_assert_eq!(g.permute(&map), h);
    }

    #[test]
    fn removing_an_edge_changes_the_class(g in graph(9)) {
        if let Some(e) = g.edges().next() {
            prop_assert!(!are_isomorphic(&g, &g.without_edge(e)));
        }
    }

    #[test]
    fn clique_sum_counts(a in 1usize..8, b in 1usize..8, k in 0usize..6, extra in graph(5)) {
        // K_a + extra and K_b + extra glued over a common k-clique
        let k = k.min(a).min(b);
        let g1 = Graph::complete(a).unwrap().disjoint_union(&extra).unwrap();
        let g2 = Graph::complete(b).unwrap().disjoint_union(&extra).unwrap();
        let c: Vec<usize> = (0..k).collect();
        let s = clique_sum_graphs(&g1, &c, &g2, &c).unwrap();
        prop_assert_eq!(s.order(), g1.order() + g2.order() - k);
        prop_assert_eq!(s.size(), g1.size() + g2.size() - k * k.saturating_sub(1) / 2);
    }
}
