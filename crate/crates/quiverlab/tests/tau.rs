use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverlab::catalog::{default_ids, session_text};
use quiverlab::presentations::BoundQuiver;
use quiverlab::random::{random_module, random_special_biserial};
use quiverlab::representations::{is_isomorphic, projective, simple, string_module, StringWord};
use quiverlab::session::{parse_session, Session};
use quiverlab::tau::*;

fn session(id: &str) -> Session {
    parse_session(&session_text(id).unwrap()).unwrap()
}

#[test]
fn catalog_modules_are_tau_tilting() {
    for id in default_ids() {
        let s = session(&id);
        let r = is_tau_tilting(&s.default_module().unwrap().summands).unwrap();
        assert!(r.verdict, "{id}: {:?}", r.failures);
        assert_eq!(r.count, s.algebra.vertex_count());
    }
}

#[test]
fn translate_of_projectives_vanishes() {
    let a = session("EX1").algebra;
    for v in 0..a.vertex_count() {
        assert!(ar_translate(&projective(&a, v)).is_zero());
    }
}

#[test]
fn translates_in_the_a_n_family() {
    let s = session("EX3(3)");
    let a = &s.algebra;
    let q = a.quiver();
    let u1 = &s.module("U1").unwrap().summands[0];
    let u2 = &s.module("U2").unwrap().summands[0];
    let theta = string_module(a, &StringWord::parse(q, "theta").unwrap()).unwrap();
    assert!(is_isomorphic(&ar_translate(u1), &theta));
    assert!(is_isomorphic(&ar_translate(u2), &simple(a, q.vertex_index("2").unwrap())));
}

#[test]
fn dropping_a_summand_breaks_the_count() {
    let s = session("EX6");
    let mut t = s.default_module().unwrap().summands.clone();
    t.pop();
    let r = is_tau_tilting(&t).unwrap();
    assert!(!r.verdict);
    assert!(r.rigid);
}

#[test]
fn search_returns_tau_tilting_modules() {
    for id in ["EX1", "EX6"] {
        let a = session(id).algebra;
        let found = search_tau_tilting_sb(&a, 10).unwrap();
        assert_eq!(found.len(), 10, "{id}");
        for set in found {
            assert!(is_tau_tilting(&set.summands).unwrap().verdict, "{id}: {:?}", set.labels);
        }
    }
}

#[test]
fn bands_are_rejected() {
    let a = session("EX2").algebra;
    assert!(enumerate_strings(&a).is_err());
    assert!(search_tau_tilting_sb(&a, 5).is_err());
}

fn sb(seed: u64) -> Arc<BoundQuiver> {
    random_special_biserial(&mut ChaCha8Rng::seed_from_u64(seed), 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn both_vanishing_tests_agree(seed in 0u64..100_000) {
        let a = sb(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, y) = (random_module(&mut rng, &a), random_module(&mut rng, &a));
        let c = tau_hom_check(&y, &Prepared::new(&m));
        prop_assert_eq!(c.via_translate, c.via_presentation);
    }

    // Projectives are τ-rigid, and the sum of all of them is τ-tilting.
    #[test]
    fn projective_generator_is_tau_tilting(seed in 0u64..100_000) {
        let a = sb(seed);
        let ps: Vec<_> = (0..a.vertex_count()).map(|v| projective(&a, v)).collect();
        prop_assert!(is_tau_tilting(&ps).unwrap().verdict);
    }
}
