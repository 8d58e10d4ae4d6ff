use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverlab::catalog::{default_ids, ex4_stated_endo, session_text};
use quiverlab::endo::*;
use quiverlab::homological::{gldim, pd, PdResult};
use quiverlab::presentations::{is_isomorphic_presentation, parse_presentation};
use quiverlab::random::random_special_biserial;
use quiverlab::representations::{projective, simple, Representation};
use quiverlab::session::{parse_session, Session};
use quiverlab::tau::search_tau_tilting_sb;

fn session(id: &str) -> Session {
    parse_session(&session_text(id).unwrap()).unwrap()
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("T{i}")).collect()
}

fn endo_of(t: &[Representation]) -> EndoPresentation {
    end_presentation(t, &names(t.len())).unwrap()
}

#[test]
fn endomorphism_algebra_of_the_regular_module_is_the_algebra() {
    for id in default_ids() {
        let a = session(&id).algebra;
        let ps: Vec<Representation> = (0..a.vertex_count()).map(|v| projective(&a, v)).collect();
        let e = endo_of(&ps);
        assert_eq!(e.dim(), a.dim(), "{id}");
        assert!(is_isomorphic_presentation(&e.algebra, &a), "{id}");
    }
}

#[test]
fn seven_vertex_example_gives_a_hereditary_algebra() {
    let s = session("EX1");
    let t = &s.default_module().unwrap().summands;
    let e = endo_of(t);
    assert!(e.is_associative());
    assert_eq!(gldim_endo(&e, 12).unwrap(), PdResult::ExactFinite(1));
    let b = verify_bounds(t, &e, 12).unwrap();
    assert!(b.quotient_bound.holds());
    assert!(b.quotient_bound_tight);
    assert!(b.sandwich.holds());
}

#[test]
fn special_biserial_bound_on_the_gldim_two_example() {
    let s = session("EX6");
    let t = &s.default_module().unwrap().summands;
    let e = endo_of(t);
    assert_eq!(gldim_endo(&e, 12).unwrap(), PdResult::ExactFinite(4));
    let b = verify_bounds(t, &e, 12).unwrap();
    assert!(b.special_biserial_bound.holds(), "{}", b.special_biserial_bound.detail());
    assert_eq!(b.gldim_quotient, PdResult::ExactFinite(4));
}

#[test]
fn monomial_family_endomorphism_algebras_have_finite_gldim() {
    for n in 4..=5 {
        let s = session(&format!("EX4({n})"));
        let t = &s.default_module().unwrap().summands;
        let e = endo_of(t);
        assert_eq!(gldim_endo(&e, 12).unwrap(), PdResult::ExactFinite(n + 1));
        assert!(verify_bounds(t, &e, 12).unwrap().monomial_finiteness.holds());
    }
}

#[test]
fn stated_presentation_of_the_monomial_family() {
    for n in 4..=6 {
        let b = Arc::new(parse_presentation(&ex4_stated_endo(n)).unwrap());
        assert_eq!(pd(&simple(&b, 0), 12), PdResult::ExactFinite(n));
        assert_eq!(gldim(&b, 12), PdResult::ExactFinite(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // End(T) for τ-tilting T over random special biserial algebras: associative and of
    // the dimension predicted by the Hom spaces.
    #[test]
    fn endomorphism_algebras_are_associative(seed in 0u64..100_000) {
        let a = random_special_biserial(&mut ChaCha8Rng::seed_from_u64(seed), 4);
        if let Ok(found) = search_tau_tilting_sb(&a, 2) {
            for set in found {
                let e = endo_of(&set.summands);
                prop_assert!(e.is_associative());
                let homs: usize = e.hom.iter().flatten().map(|h| h.dim()).sum();
                prop_assert_eq!(e.dim(), homs);
                prop_assert_eq!(e.algebra.dim(), homs);
            }
        }
    }
}
