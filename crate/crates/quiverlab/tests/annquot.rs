use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverlab::annquot::*;
use quiverlab::catalog::session_text;
use quiverlab::presentations::BoundQuiver;
use quiverlab::random::{random_module, random_monomial, random_path_ideal, random_special_biserial};
use quiverlab::representations::Representation;
use quiverlab::session::{parse_session, Session};

fn session(id: &str) -> Session {
    parse_session(&session_text(id).unwrap()).unwrap()
}

fn generator_names(s: &Session, ann: &Ideal) -> BTreeSet<String> {
    ann.path_generators().unwrap().iter().map(|p| p.display(s.algebra.quiver())).collect()
}

#[test]
fn annihilator_of_the_non_special_biserial_example() {
    let s = session("EX5");
    let ann = annihilator(&s.default_module().unwrap().sum());
    assert!(ann.is_two_sided());
    let want: BTreeSet<String> = ["delta", "gamma*lambda", "epsilon*mu"].map(String::from).into();
    assert_eq!(generator_names(&s, &ann), want);
}

#[test]
fn classification_of_annihilator_paths() {
    let s = session("EX5");
    let q = s.algebra.quiver();
    let ann = annihilator(&s.default_module().unwrap().sum());
    let gl = q.path_from_labels(&["gamma", "lambda"]).unwrap();
    let c = classify_annihilator_path(&ann, &gl).unwrap();
    assert_eq!(c.verdict.kind(), "case II");
    let em = q.path_from_labels(&["epsilon", "mu"]).unwrap();
    assert_eq!(classify_annihilator_path(&ann, &em).unwrap().verdict.kind(), "case I");
}

#[test]
fn faithful_module_has_zero_annihilator() {
    let s = session("EX1");
    let a = &s.algebra;
    let ps: Vec<Representation> =
        (0..a.vertex_count()).map(|v| quiverlab::representations::projective(a, v)).collect();
    assert!(annihilator(&Representation::direct_sum(&ps).unwrap()).is_zero());
}

#[test]
fn catalog_modules_are_tilting_over_the_quotient() {
    for id in ["EX1", "EX5", "EX6", "EX4(4)", "EX3(4)"] {
        let s = session(id);
        let r = tilting_over_quotient_check(&s.default_module().unwrap().summands, 12).unwrap();
        assert!(r.tilting, "{id}");
        assert_eq!(r.sandwich, Some(true), "{id}");
    }
}

fn algebra(seed: u64) -> Arc<BoundQuiver> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if seed.is_multiple_of(2) { random_monomial(&mut rng, 5, 5) } else { random_special_biserial(&mut rng, 5) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn annihilators_are_two_sided(seed in 0u64..100_000) {
        let a = algebra(seed);
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(seed), &a);
        let ann = annihilator(&m);
        prop_assert!(ann.is_two_sided());
        prop_assert_eq!(ann.is_nilpotent(), m.is_sincere());
        if !m.is_sincere() || ann.path_generators().is_none() {
            return Ok(());
        }
        // M is a module over A/ann M.
        let qp = quotient_presentation(&a, &ann).unwrap();
        prop_assert_eq!(qp.quotient.dim(), a.dim() - ann.dim());
        let r = restrict_to_quotient(&m, &qp).unwrap();
        prop_assert_eq!(r.total_dim(), m.total_dim());
    }

    #[test]
    fn path_ideals_are_nilpotent_and_descend(seed in 0u64..100_000) {
        let a = algebra(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(j) = random_path_ideal(&mut rng, &a, 3) {
            prop_assert!(j.is_two_sided());
            prop_assert!(j.is_nilpotent());
            let qp = quotient_presentation(&a, &j).unwrap();
            prop_assert_eq!(qp.quotient.dim(), a.dim() - j.dim());
            let b = nilpotent_bound(&j, &qp, 12);
            prop_assert_ne!(b.holds, Some(false));
        }
    }
}
