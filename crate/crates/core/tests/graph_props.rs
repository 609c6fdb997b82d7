//! Property suites for the graph kernel: canonical-form invariance, algebra
//! identities, codec round trips, and agreement of the isomorphism decision
//! with a permutation-search oracle.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oddprism::canon::{self, canonical_form};
use oddprism::constructions as cons;
use oddprism::graph::Graph;
use oddprism::graph6;
use oddprism::search::all_graphs_up_to_iso;

fn test_battery() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd);
    let mut out = vec![
        cons::prism(1).unwrap(),
        cons::prism(2).unwrap(),
        cons::g1(),
        cons::g2(),
        cons::g3(),
        cons::h1(),
        cons::h2(),
        cons::h3(10).unwrap(),
        cons::h4(9).unwrap(),
        cons::path_power(6, 2).unwrap(),
        cons::turan_graph(9, 3).unwrap(),
        cons::complete_bipartite(4, 5).unwrap(),
        cons::h_construction(9, 6).unwrap(),
        cons::f_construction(9, 5, 2).unwrap(),
        Graph::empty(7).unwrap(),
        cons::complete(8).unwrap(),
    ];
    for n in [5usize, 7, 9, 11] {
        for p in [0.2, 0.5, 0.8] {
            out.push(common::random_graph(&mut rng, n, p));
        }
    }
    out
}

#[test]
fn canonical_form_invariant_under_100_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xcafe);
    for g in test_battery() {
        let base = canonical_form(&g);
        for _ in 0..100 {
            let perm = common::random_permutation(&mut rng, g.order());
            let h = g.permuted(&perm);
            assert_eq!(canonical_form(&h), base, "graph {g:?} perm {perm:?}");
        }
    }
}

#[test]
fn relabeling_reproduces_canonical_graph() {
    for g in test_battery() {
        let cf = canonical_form(&g);
        assert_eq!(g.permuted(cf.relabeling()), cf.graph());
    }
}

#[test]
fn algebra_identities_on_1000_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf00d);
    for trial in 0..1000 {
        let n1 = rand::Rng::random_range(&mut rng, 0..=8usize);
        let n2 = rand::Rng::random_range(&mut rng, 0..=8usize);
        let g = common::random_graph(&mut rng, n1, 0.5);
        let h = common::random_graph(&mut rng, n2, 0.5);

        let prod = g.cartesian_product(&h).unwrap();
        assert_eq!(
            prod.edge_count(),
            n1 * h.edge_count() + n2 * g.edge_count(),
            "product trial {trial}"
        );
        let join = g.join(&h).unwrap();
        assert_eq!(join.edge_count(), g.edge_count() + h.edge_count() + n1 * n2);
        let union = g.disjoint_union(&h).unwrap();
        assert_eq!(union.edge_count(), g.edge_count() + h.edge_count());
        assert_eq!(g.complement().complement(), g);
        let degree_sum: usize = g.degrees().iter().sum();
        assert_eq!(degree_sum % 2, 0);
    }
}

#[test]
fn isomorphism_decision_agrees_with_permutation_search() {
    // Labeled exhaustive canonical counting for n <= 6: the number of
    // distinct canonical forms over all labeled graphs must equal the known
    // class counts, and each labeled graph must be brute-force isomorphic
    // to its canonical representative.
    let class_counts = [1usize, 1, 2, 4, 11, 34, 156];
    for (n, &want) in class_counts.iter().enumerate() {
        let mut forms = std::collections::BTreeMap::new();
        for g in common::labeled_graphs(n) {
            let cf = canonical_form(&g);
            let rep = forms
                .entry(cf.graph6().to_owned())
                .or_insert_with(|| cf.graph());
            assert!(
                common::brute_force_isomorphic(rep, &g),
                "canonical form merged non-isomorphic graphs at n={n}"
            );
        }
        assert_eq!(forms.len(), want, "class count at n={n}");
    }
}

#[test]
fn distinct_canonical_forms_are_never_isomorphic() {
    // Exhaustive over all pairs of class representatives for n <= 7.
    for n in 0..=7usize {
        let reps = all_graphs_up_to_iso(n);
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044][n];
        assert_eq!(reps.len(), expected, "n={n}");
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                assert!(
                    !common::brute_force_isomorphic(&reps[i], &reps[j]),
                    "reps {i},{j} at n={n} have distinct canonical forms but are isomorphic"
                );
            }
        }
    }
}

#[test]
fn are_isomorphic_matches_oracle_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
    for _ in 0..300 {
        let n = rand::Rng::random_range(&mut rng, 1..=7usize);
        let a = common::random_graph(&mut rng, n, 0.5);
        let b = if rand::Rng::random_bool(&mut rng, 0.5) {
            a.permuted(&common::random_permutation(&mut rng, n))
        } else {
            common::random_graph(&mut rng, n, 0.5)
        };
        assert_eq!(
            canon::are_isomorphic(&a, &b),
            common::brute_force_isomorphic(&a, &b),
            "a={a:?} b={b:?}"
        );
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(n in 0usize..90, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n, 0.4);
        let encoded = graph6::encode(&g);
        let decoded = graph6::decode(&encoded).unwrap();
        prop_assert_eq!(&decoded, &g);
        prop_assert_eq!(graph6::encode(&decoded), encoded);
    }

    #[test]
    fn canonical_invariance_random(n in 0usize..9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n, 0.5);
        let perm = common::random_permutation(&mut rng, n);
        prop_assert_eq!(canonical_form(&g.permuted(&perm)), canonical_form(&g));
    }
}

#[test]
fn exact_stats_match_known_values() {
    // α and χ against hand-checkable graphs.
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
    .unwrap();
    assert_eq!(petersen.independence_number().unwrap(), 4);
    assert_eq!(petersen.chromatic_number().unwrap(), 3);
    assert_eq!(cons::complete(7).unwrap().chromatic_number().unwrap(), 7);
    assert_eq!(cons::cycle(8).unwrap().chromatic_number().unwrap(), 2);
    assert_eq!(cons::prism(2).unwrap().independence_number().unwrap(), 4);
    assert_eq!(cons::prism(1).unwrap().independence_number().unwrap(), 2);
}
