//! Cross-module invariants as property tests.

use bullchrome_core::deciders::{decide, verify_verdict, DeciderConfig, SUPPORTED};
use bullchrome_core::generators::{random_alpha2, random_hfree};
use bullchrome_core::io::{from_dimacs, from_json, to_dimacs, to_json};
use bullchrome_core::oracle::{
    chromatic_number, clique_number, exact_coloring, independence_number, Oracle,
};
use bullchrome_core::patterns::{
    find_fixed_pattern, find_odd_antihole, verify_witness, FixedPattern,
};
use bullchrome_core::{is_proper_coloring, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn complement_is_an_involution(g in graph(16)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_adds_the_other_side_to_every_degree(g in graph(8), h in graph(8)) {
        let j = g.join(&h);
        for v in 0..g.n() {
            prop_assert_eq!(j.degree(v), g.degree(v) + h.n());
        }
        for v in 0..h.n() {
            prop_assert_eq!(j.degree(g.n() + v), h.degree(v) + g.n());
        }
    }

    #[test]
    fn reduction_extends_any_coloring_of_the_core(g in graph(14), d in 1usize..6) {
        let red = g.reduce_min_degree(d);
        if let Some(c) = exact_coloring(&red.graph, d).unwrap() {
            let full = red.extend(&g, &c).unwrap();
            prop_assert!(is_proper_coloring(&g, &full).unwrap());
        }
    }

    #[test]
    fn formats_round_trip(g in graph(20)) {
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g.clone());
        prop_assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn fixed_witnesses_re_verify(g in graph(12)) {
        for p in [FixedPattern::Bull, FixedPattern::Claw, FixedPattern::Chair, FixedPattern::C5, FixedPattern::Clique(4)] {
            if let Some(w) = find_fixed_pattern(&g, p) {
                prop_assert!(verify_witness(&g, &w));
            }
        }
    }

    #[test]
    fn chromatic_number_is_tight(g in graph(11)) {
        let chi = chromatic_number(&g).unwrap();
        prop_assert!(clique_number(&g).unwrap() <= chi);
        let c = exact_coloring(&g, chi).unwrap().unwrap();
        prop_assert!(is_proper_coloring(&g, &c).unwrap());
        if chi > 0 {
            prop_assert!(exact_coloring(&g, chi - 1).unwrap().is_none());
        }
    }

    #[test]
    fn bull_claw_free_graphs_with_an_odd_antihole_have_alpha_two(seed in any::<u64>(), n in 7usize..=11) {
        let free = [FixedPattern::Bull, FixedPattern::Claw];
        if let Some(g) = random_hfree(n, 0.75, &free, seed, 5) {
            if find_odd_antihole(&g, 5).unwrap().is_some() {
                prop_assert_eq!(independence_number(&g).unwrap(), 2);
            }
        }
    }

    #[test]
    fn antiholes_dominate_when_alpha_is_two(seed in any::<u64>(), n in 7usize..=12) {
        if let Some(g) = random_alpha2(n, 0.3, seed, 20) {
            if let Some(w) = find_odd_antihole(&g, 5).unwrap() {
                let q = &w.vertices;
                prop_assert!((0..g.n()).all(|v| q.contains(&v) || q.iter().any(|&u| g.has_edge(u, v))));
            }
        }
    }

    #[test]
    fn random_hfree_is_reproducible(seed in any::<u64>(), n in 4usize..=10) {
        let free = [FixedPattern::Bull, FixedPattern::Chair];
        prop_assert_eq!(random_hfree(n, 0.5, &free, seed, 5), random_hfree(n, 0.5, &free, seed, 5));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn deciders_agree_with_the_oracle(seed in any::<u64>(), n in 5usize..=10, which in 0usize..5) {
        let (k, family) = SUPPORTED[which];
        if let Some(g) = random_hfree(n, 0.6, &family.patterns(), seed, 5) {
            let v = decide(&g, k, family, &DeciderConfig::default()).unwrap();
            prop_assert_eq!(v.is_colorable(), chromatic_number(&g).unwrap() <= k);
            prop_assert!(verify_verdict(&g, &v, &Oracle::default()).unwrap());
        }
    }
}
