//! Decomposition-family checks that exercise the larger hosts, plus the
//! join-construction realization that free families stay prism-free.

mod common;

use oddprism::canon::canonical_form;
use oddprism::constructions as cons;
use oddprism::containment::prism_free;
use oddprism::decomposition::{decomposition_family, default_t_max, is_decomposition_member};

#[test]
fn prism_families_are_exactly_p4() {
    let p4 = canonical_form(&cons::path(4).unwrap());
    for k in 1..=2usize {
        let l = cons::prism(k).unwrap();
        let family = decomposition_family(&l, 4, 2 * (2 * k + 1)).unwrap();
        assert_eq!(family, vec![p4.clone()], "k={k}");
    }
}

#[test]
fn p6_squared_family_is_p4() {
    let l = cons::path_power(6, 2).unwrap();
    let family = decomposition_family(&l, 4, default_t_max(&l)).unwrap();
    assert_eq!(family, vec![canonical_form(&cons::path(4).unwrap())]);
}

#[test]
fn emitted_member_is_minimal_and_witnessed() {
    let prism2 = cons::prism(2).unwrap();
    let v = is_decomposition_member(&prism2, &cons::path(4).unwrap(), 10).unwrap();
    assert!(v.is_member && v.minimal && v.passes_containment);
    assert_eq!(v.parts, 2);
    let t = v.witness_t.unwrap();
    assert!((1..=10).contains(&t));
    // The witness embedding hits a genuine host copy: spot-check the size.
    assert_eq!(v.embedding.unwrap().len(), 10);
}

#[test]
fn join_construction_realization_is_prism_free() {
    // Embedding any P_4-extremal graph into one side of the balanced
    // bipartite Turán graph leaves every odd prism out, at all n <= 12.
    for n in 2..=12usize {
        let part = n.div_ceil(2);
        let variants = cons::p4_extremal_family(part).len();
        for variant in 0..variants {
            let g = cons::main_extremal(n, part, variant).unwrap();
            assert!(prism_free(&g, 1), "n={n} variant={variant}");
            assert!(prism_free(&g, 2), "n={n} variant={variant}");
        }
    }
}
