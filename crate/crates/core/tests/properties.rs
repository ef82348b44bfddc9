//! Invariants checked on random graphs (proptest) and by exhaustive sweeps
//! over the small corpus, each against a slow reference in `common`.

mod common;

use compressed_cliques::compressed;
use compressed_cliques::corpus::Corpus;
use compressed_cliques::families::{self, FamilySpec};
use compressed_cliques::{cover, forcing, io, iso, Graph, VertexSet};
use proptest::prelude::*;

use common::adj;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected", Graph::is_connected)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn subset_induces(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    (0..1u64 << g.n())
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let sub = g.induced_subgraph(VertexSet::from_bits(m)).unwrap().graph;
            common::isomorphic(&adj(&sub), &adj(pattern))
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn single_vertex_contraction_and_full_induced_subgraph_are_identities(g in graph_strategy(9)) {
        let a = adj(&g);
        for v in 0..g.n() {
            let c = g.contract_set(VertexSet::singleton(v)).unwrap();
            prop_assert!(common::isomorphic(&adj(&c.graph), &a));
        }
        let s = g.induced_subgraph(g.vertices()).unwrap();
        prop_assert!(common::isomorphic(&adj(&s.graph), &a));
    }

    #[test]
    fn isomorphism_bijections_preserve_adjacency(g in graph_strategy(9), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        for (x, y) in [(&g, &h), (&h, &g), (&g, &g)] {
            let map = iso::are_isomorphic(x, y).expect("permuted copies are isomorphic");
            for u in 0..x.n() {
                for v in 0..x.n() {
                    prop_assert_eq!(x.has_edge(u, v), y.has_edge(map[u], map[v]));
                }
            }
        }
    }

    #[test]
    fn find_induced_matches_subset_scan(g in graph_strategy(8), p in graph_strategy(4)) {
        let found = iso::find_induced(&g, &p);
        if let Some(map) = &found {
            prop_assert!(iso::is_induced_embedding(&p, &g, map));
        }
        prop_assert_eq!(found.is_some(), p.n() <= g.n() && subset_induces(&g, &p));
    }

    #[test]
    fn maximalized_minimum_cover_is_certified(g in graph_strategy(9)) {
        let c = cover::maximalize_cover(&g, &cover::minimum_cover(&g)).unwrap();
        let f = c.flags();
        prop_assert!(f.covers_all_edges.is_true() && f.all_maximal.is_true() && f.minimum_size.is_true());
        prop_assert!(c.covers(&g) && c.all_maximal(&g));
        prop_assert_eq!(c.len(), cover::clique_cover_number(&g));
    }

    #[test]
    fn simply_intersecting_covers_have_multiplicity_at_most_two(g in graph_strategy(8)) {
        for c in cover::enumerate_minmax_si_covers(&g) {
            prop_assert!((0..g.n()).all(|v| c.multiplicity(v) <= 2));
        }
        let cc = cover::clique_cover_number(&g);
        for c in cover::simply_intersecting_covers(&g, cc) {
            prop_assert!((0..g.n()).all(|v| c.multiplicity(v) <= 2));
        }
    }

    #[test]
    fn inequalities_and_reduction(g in graph_strategy(9)) {
        let zp = forcing::zplus(&g);
        prop_assert!(zp.record.validate(&g) && zp.record.is_complete(&g));
        prop_assert_eq!(zp.set.len(), zp.value);
        let cc = cover::clique_cover_number(&g) as i64;
        prop_assert!(g.n() as i64 - cc <= zp.value as i64);
        prop_assert!(zp.value <= forcing::standard_zero_forcing(&g));
        prop_assert_eq!(forcing::zplus(&forcing::reduced_graph(&g)).value, zp.value);
        for (u, v) in forcing::closed_twins(&g) {
            prop_assert!(zp.set.contains(u) || zp.set.contains(v));
        }
    }

    #[test]
    fn vertex_clique_graphs_are_self_compressed(g in connected_strategy(5)) {
        // vc(K2) is K2 itself, a complete graph, which compresses to K1.
        prop_assume!(g.n() >= 3);
        let h = families::vertex_clique_graph(&g).unwrap();
        prop_assert!(!cover::enumerate_minmax_si_covers(&h).is_empty());
        let cg = compressed::compressed_cliques_graph(&h).unwrap();
        prop_assert!(common::isomorphic(&adj(cg.graph()), &adj(&h)));
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(8)) {
        let s = io::to_graph6(&g).unwrap();
        prop_assert_eq!(io::parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_invariants(g in graph_strategy(8).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let (g, perm) = g;
        let h = g.permuted(&perm);
        prop_assert_eq!(cover::clique_cover_number(&g), cover::clique_cover_number(&h));
        prop_assert_eq!(forcing::zplus(&g).value, forcing::zplus(&h).value);
        prop_assert_eq!(cover::enumerate_minmax_si_covers(&g).len(), cover::enumerate_minmax_si_covers(&h).len());
    }
}

#[test]
fn clique_cover_number_matches_set_cover_oracle_up_to_seven_vertices() {
    for g in Corpus::generated(7).unwrap().iter() {
        assert_eq!(
            cover::clique_cover_number(g),
            common::clique_cover_number(&adj(g)),
            "{}",
            io::to_graph6(g).unwrap()
        );
    }
}

#[test]
fn closed_neighbourhood_law_on_source_graphs() {
    for g in Corpus::generated(7).unwrap().iter() {
        for c in cover::enumerate_minmax_si_covers(g) {
            let cl = c.cliques();
            for (i, &a) in cl.iter().enumerate() {
                for &b in &cl[i + 1..] {
                    for v in 0..g.n() {
                        let in_both = a.contains(v) && b.contains(v);
                        let law = g.closed_neighborhood(v).unwrap() == a.union(b);
                        assert_eq!(
                            in_both,
                            law,
                            "{} cover {c} v={v}",
                            io::to_graph6(g).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn several_covers_force_an_induced_circulant() {
    let circ = "circ:6:1,2"
        .parse::<FamilySpec>()
        .unwrap()
        .generate()
        .unwrap();
    let mut seen = 0;
    for g in Corpus::generated(7).unwrap().iter() {
        if cover::enumerate_minmax_si_covers(g).len() >= 2 {
            seen += 1;
            assert!(
                iso::find_induced(g, &circ).is_some(),
                "{}",
                io::to_graph6(g).unwrap()
            );
        }
    }
    assert!(seen > 0);
}

#[test]
fn graph6_round_trips_on_the_corpus() {
    for g in Corpus::generated(7).unwrap().iter() {
        assert_eq!(&io::parse_graph6(&io::to_graph6(g).unwrap()).unwrap(), g);
    }
}

#[test]
fn family_sizes() {
    for m in 2..=8 {
        let j = FamilySpec::Johnson(m).generate().unwrap();
        let jp = FamilySpec::JohnsonPrime(m).generate().unwrap();
        assert_eq!(j.n(), common::binom2(m));
        assert_eq!(jp.n(), common::binom2(m) + m);
    }
    for n in 3..=10 {
        let g = FamilySpec::Musical(n).generate().unwrap();
        assert_eq!((g.n(), g.edge_count()), (2 * n, 5 * n), "M_{n}");
    }
}

#[test]
fn jprime_star_cover_is_simple_minmax() {
    for m in 3..=7 {
        let g = FamilySpec::JohnsonPrime(m).generate().unwrap();
        let c = cover::CliqueCover::new(families::johnson_prime_star_cover(m))
            .certify(&g)
            .unwrap();
        assert!(c.flags().is_simple_minmax(), "m={m}");
    }
}

#[test]
fn xgraph_cover_number_formula() {
    // Each attached cycle of length l adds l-1 edge cliques, except that a
    // triangle shares its clique-side edge with nothing else and is covered by
    // one clique instead of two.
    for spec in [
        "X:8:4,4,4,4",
        "X:10:3,4,5",
        "X:6:5,6",
        "X:6:3,3",
        "X:9:4,3,6",
    ] {
        let g = spec.parse::<FamilySpec>().unwrap().generate().unwrap();
        let FamilySpec::XGraph { cycles, .. } = spec.parse::<FamilySpec>().unwrap() else {
            unreachable!()
        };
        let general = 1 + cycles.iter().map(|l| l - 1).sum::<usize>();
        let triangles = cycles.iter().filter(|&&l| l == 3).count();
        let cc = cover::clique_cover_number(&g);
        assert_eq!(cc, common::clique_cover_number(&adj(&g)), "{spec}");
        assert_eq!(cc, general - triangles, "{spec}");
    }
}
