mod common;

use girth7::classify::{classify, condition_satisfiable, CaseTag};
use girth7::cycles::{girth_cycles, girth_regular_signature, Signature};
use girth7::families::{a_graph, random_cubic_graph};
use girth7::graph::{parse_graph6, write_graph6};
use girth7::schemes::{recover_truncation, schemes_isomorphic, truncate};
use girth7::symmetry::{are_isomorphic, automorphism_group, canonical_form, Permutation};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    labels
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn epsilon_sum_counts_each_cycle_girth_times(seed in any::<u64>(), half in 3usize..20) {
        let g = random_cubic_graph(2 * half, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let cycles = girth_cycles(&g).unwrap();
        let total: usize = cycles.epsilon_all().iter().sum();
        prop_assert_eq!(total, cycles.girth() * cycles.len());
    }

    #[test]
    fn graph6_preserves_edges(seed in any::<u64>(), half in 2usize..40) {
        let g = random_cubic_graph(2 * half, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn isomorphism_of_relabeled_random_graph(seed in any::<u64>(), half in 4usize..16) {
        let g = random_cubic_graph(2 * half, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let h = g.relabel(&shuffled(g.order(), seed ^ 0x5eed));
        let p = are_isomorphic(&g, &h).expect("relabeled copy is isomorphic");
        prop_assert!(g.edges().iter().all(|&(u, v)| h.has_edge(p.apply(u), p.apply(v))));
        prop_assert_eq!(canonical_form(&g).edges, canonical_form(&h).edges);
    }

    #[test]
    fn automorphisms_and_orbits_are_consistent(seed in any::<u64>(), half in 3usize..12) {
        let g = random_cubic_graph(2 * half, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let group = automorphism_group(&g);
        for p in group.generators() {
            prop_assert!(p.is_automorphism_of(&g));
        }
        prop_assert_eq!(group.order(), &group.stabilizer_chain().order());
        let orbit_total: usize = group.vertex_orbits().iter().map(Vec::len).sum();
        prop_assert_eq!(orbit_total, g.order());
    }

    #[test]
    fn odd_epsilon_never_satisfies_condition(ell in 1usize..12, k in 0usize..8) {
        prop_assert!(condition_satisfiable(ell, 2 * k + 1).is_none());
    }

    #[test]
    fn random_cubic_graphs_never_get_excluded_tags(seed in any::<u64>(), half in 5usize..25) {
        let g = random_cubic_graph(2 * half, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        if let Ok(report) = classify(&g) {
            prop_assert!(CaseTag::for_signature(report.signature).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_of_a9_is_relabeling_invariant(seed in any::<u64>()) {
        let g = a_graph(9).unwrap();
        let labels = shuffled(g.order(), seed);
        let h = g.relabel(&labels);
        let (cg, ch) = (canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(&cg.edges, &ch.edges);
        let p = Permutation::from_images(labels).unwrap();
        let back = p.then(&ch.labeling);
        let maps_onto_form = g.edges().iter().all(|&(u, v)| {
            let (a, b) = (back.apply(u), back.apply(v));
            cg.edges.contains(&(a.min(b), a.max(b)))
        });
        prop_assert!(maps_onto_form);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn truncate_then_recover_returns_the_scheme(seed in any::<u64>()) {
        let (base, scheme) = common::tuned_instance(seed).expect("tuned scheme found");
        let (t, _) = truncate(&base, &scheme).unwrap();
        prop_assert_eq!(girth_regular_signature(&t).ok(), Some(Signature::new(0, 1, 1)));
        let w = recover_truncation(&t).unwrap();
        prop_assert!(w.verify(&t).unwrap());
        prop_assert!(schemes_isomorphic(&base, &scheme, &w.base, &w.scheme).unwrap().is_some());
    }
}
