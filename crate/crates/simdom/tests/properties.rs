//! Randomized invariants over small instances, driven by proptest.

mod common;

use proptest::prelude::*;
use simdom::constructive::greedy_sd;
use simdom::exact::{
    domination_number, is_sd_set, k_independence_number, sd_number_exact, t_vertex_cover_number,
    transversal_number_exact,
};
use simdom::hypergraph::neighborhood_hypergraph;
use simdom::{Factoring, Graph};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("in-range edges")
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_factoring(max_n: usize, max_k: usize) -> impl Strategy<Value = Factoring> {
    (2..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n * (n - 1) / 2), k)
            .prop_map(move |rows| {
                let factors = rows.iter().map(|bits| graph_from_bits(n, bits)).collect();
                Factoring::new(factors).expect("equal vertex counts")
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn serialize_parse_round_trip(f in arb_factoring(9, 3)) {
        let text = f.serialize();
        let back = Factoring::parse(&text).expect("own output parses");
        prop_assert_eq!(back.n(), f.n());
        prop_assert_eq!(back.k(), f.k());
        for i in 0..f.k() {
            prop_assert_eq!(back.factor(i).edges(), f.factor(i).edges());
        }
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn combined_graph_is_the_edge_union(f in arb_factoring(9, 3)) {
        let g = f.combined();
        for i in 0..f.k() {
            for (u, v) in f.factor(i).edges() {
                prop_assert!(g.has_edge(u, v));
            }
        }
        for (u, v) in g.edges() {
            prop_assert!((0..f.k()).any(|i| f.factor(i).has_edge(u, v)));
        }
        for v in 0..f.n() {
            let sum: usize = f.factors().iter().map(|h| h.degree(v)).sum();
            prop_assert!(g.degree(v) <= sum);
        }
    }

    #[test]
    fn exact_value_is_sandwiched(f in arb_factoring(8, 3)) {
        let res = sd_number_exact(&f).expect("within cap");
        prop_assert!(is_sd_set(&f, &res.set));
        let gammas: Vec<usize> = f
            .factors()
            .iter()
            .map(|g| domination_number(g).0)
            .collect();
        let lower = *gammas.iter().max().unwrap();
        let upper: usize = gammas.iter().sum();
        prop_assert!(lower <= res.size() && res.size() <= upper);
        let (combined_gamma, _) = domination_number(f.combined());
        prop_assert!(combined_gamma <= res.size());
        prop_assert!(res.size() <= f.n() - f.min_degree());
    }

    #[test]
    fn dropping_a_factor_never_raises_the_value(f in arb_factoring(8, 3)) {
        prop_assume!(f.k() >= 2);
        let full = sd_number_exact(&f).expect("within cap").size();
        let prefix = Factoring::new(f.factors()[..f.k() - 1].to_vec()).unwrap();
        let part = sd_number_exact(&prefix).expect("within cap").size();
        prop_assert!(part <= full);
    }

    #[test]
    fn greedy_always_returns_a_valid_set(f in arb_factoring(10, 3)) {
        let res = greedy_sd(&f);
        prop_assert!(is_sd_set(&f, &res.set));
        prop_assert!(res.all_factors_dominated());
    }

    #[test]
    fn neighborhood_transversal_equals_domination(g in arb_graph(10)) {
        let (gamma, _) = domination_number(&g);
        let h = neighborhood_hypergraph(&g);
        let (tau, _) = transversal_number_exact(&h).expect("within cap");
        prop_assert_eq!(tau, gamma);
    }

    #[test]
    fn cover_and_independence_partition_the_vertices(g in arb_graph(11), t in 0usize..=3) {
        let (tau, cover) = t_vertex_cover_number(&g, t).expect("within cap");
        let (alpha, indep) = k_independence_number(&g, t).expect("within cap");
        prop_assert_eq!(tau + alpha, g.n());
        prop_assert_eq!(cover.len(), tau);
        prop_assert_eq!(indep.len(), alpha);
        prop_assert!(simdom::exact::is_t_vertex_cover(&g, t, &cover));
        prop_assert!(simdom::exact::is_k_independent(&g, t, &indep));
    }
}
