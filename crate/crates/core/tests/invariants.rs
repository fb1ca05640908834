use maxnik::certify::{certify_ik, certify_maxnik, certify_nik, validate, Verdict};
use maxnik::construct::{npp5_family, size_construct};
use maxnik::iso::are_isomorphic;
use maxnik::library::{k7_minus, named_graph, NAMES};
use maxnik::planarity::is_two_apex;
use maxnik::primality::{check_lemma_comp_k2, check_lemma_npp9, clique_cutsets, decompose, is_prime};
use maxnik::survey::{enumerate_maxnik, enumerate_triangulations, graph_classes};
use maxnik::Graph;

#[test]
fn ik_and_nik_never_disagree() {
    for n in 0..=7 {
        for g in graph_classes(n) {
            let ik = certify_ik(g);
            let nik = certify_nik(g);
            assert!(nik.verdict.is_definite(), "{g:?}");
            assert!(!(ik.verdict == Verdict::Ik && nik.verdict == Verdict::Nik), "{g:?}");
            // through order 8 knotless is the same as 2-apex
            assert_eq!(nik.verdict == Verdict::Nik, is_two_apex(g));
            if ik.verdict == Verdict::Ik {
                validate(&ik).unwrap();
            }
        }
    }
}

#[test]
fn order8_knotted_graphs_are_certified_both_ways() {
    for g in graph_classes(8).iter().filter(|g| !is_two_apex(g)) {
        let ik = certify_ik(g);
        assert_eq!(ik.verdict, Verdict::Ik);
        validate(&ik).unwrap();
        assert_eq!(certify_nik(g).verdict, Verdict::Ik);
    }
}

#[test]
fn join_with_k2_is_prime_exactly_for_prime_triangulations() {
    let k2 = Graph::complete(2).unwrap();
    for n in 3..=8 {
        for h in enumerate_triangulations(n) {
            let g = h.join(&k2).unwrap();
            let cert = certify_maxnik(&g);
            assert_eq!(cert.verdict, Verdict::Maxnik);
            assert_eq!(is_prime(&g).prime, is_prime(&h).prime, "order {n}");
        }
    }
}

#[test]
fn one_prime_maximal_2apex_graph_of_order_9() {
    let prime: Vec<&str> = ["Big-Y", "Long-Y", "Hat", "House", "Pentagon-bar"]
        .into_iter()
        .filter(|name| is_prime(&named_graph(name).unwrap().graph).prime)
        .collect();
    assert_eq!(prime, ["Pentagon-bar"]);
}

#[test]
fn decompositions_reglue_exactly() {
    for name in NAMES {
        let g = named_graph(name).unwrap().graph;
        let d = decompose(&g);
        assert_eq!(d.reglue(), g, "{name}");
        let verdict = is_prime(&g);
        if verdict.prime {
            assert!(clique_cutsets(&g).is_empty());
        } else {
            let cut: u64 = verdict.cutset.unwrap().iter().fold(0, |m, &v| m | 1 << v);
            assert!(g.components_within(g.vertex_mask() & !cut).len() >= 2, "{name}");
        }
    }
}

#[test]
fn two_cuts_of_maxnik_graphs() {
    let g = npp5_family(1).unwrap().graph;
    let r = check_lemma_npp9(&g);
    assert!(r.holds, "{:?}", r.detail);
    assert!(r.detail.iter().any(|d| d.contains("order 3 is MAXNIK")));
    let (_, cert) = size_construct(26).unwrap();
    assert!(check_lemma_npp9(&cert.graph).holds);
    assert_eq!(check_lemma_npp9(&k7_minus()).detail, ["no 2-vertex cut"]);
}

#[test]
fn complement_with_k2_component() {
    for name in ["K8-3K2", "G9,29", "K7-"] {
        let g = named_graph(name).unwrap().graph;
        let r = check_lemma_comp_k2(&g).expect("complement has a K2 component");
        assert!(r.holds, "{name}");
    }
    assert!(check_lemma_comp_k2(&named_graph("E9").unwrap().graph).is_none());
}

#[test]
fn degree_three_vertices_sit_on_triangles() {
    let mut three_regular = Vec::new();
    for n in 1..=8 {
        for g in enumerate_maxnik(n) {
            for v in (0..n).filter(|&v| g.degree(v) == 3) {
                let nb = g.neighbors(v);
                assert!(g.is_clique(nb), "order {n}");
            }
            if n > 0 && (0..n).all(|v| g.degree(v) == 3) {
                three_regular.push(g);
            }
        }
    }
    assert_eq!(three_regular.len(), 1);
    assert!(are_isomorphic(&three_regular[0], &Graph::complete(4).unwrap()));
}

#[test]
fn k7_minus_is_the_only_size_20_maxnik_graph() {
    let r = maxnik::survey::verify_size20();
    assert_eq!(r.unknown, 0);
    assert!(r.unique_is_k7_minus);
    assert!(r.at_most_20_are_small);
}
