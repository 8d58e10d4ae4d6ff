use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverlab::catalog::session_text;
use quiverlab::homological::*;
use quiverlab::presentations::{parse_presentation, BoundQuiver};
use quiverlab::random::{random_module, random_monomial};
use quiverlab::representations::{is_isomorphic, simple};
use quiverlab::session::parse_session;

fn algebra(id: &str) -> Arc<BoundQuiver> {
    parse_session(&session_text(id).unwrap()).unwrap().algebra
}

#[test]
fn global_dimensions_of_catalog_algebras() {
    assert_eq!(gldim(&algebra("EX1"), 12), PdResult::ExactFinite(4));
    assert_eq!(gldim(&algebra("EX2"), 12), PdResult::ExactFinite(3));
    assert_eq!(gldim(&algebra("EX6"), 12), PdResult::ExactFinite(2));
    for n in 4..=6 {
        let a = algebra(&format!("EX4({n})"));
        assert_eq!(monomial_gldim(&a).unwrap(), PdResult::ExactFinite(2), "n = {n}");
        assert_eq!(gldim(&a, 12), PdResult::ExactFinite(2), "n = {n}");
    }
}

fn two_cycle() -> Arc<BoundQuiver> {
    Arc::new(parse_presentation("vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a*b\nrelation b*a\n").unwrap())
}

#[test]
fn infinite_dimension_comes_with_a_certificate() {
    let a = two_cycle();
    for v in 0..2 {
        let s = simple(&a, v);
        match pd(&s, 12) {
            PdResult::Infinite(Certificate::SyzygyPeriod(i, j)) => {
                let omegas = syzygies(&s, j + 1);
                assert!(is_isomorphic(&omegas[i], &omegas[j]));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(monomial_pd_exact(&a, v).unwrap().is_infinite());
    }
}

#[test]
fn projective_resolution_of_a_simple_over_a_path_algebra() {
    let a = Arc::new(parse_presentation("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap());
    assert_eq!(pd(&simple(&a, 0), 12), PdResult::ExactFinite(1));
    assert_eq!(pd(&simple(&a, 2), 12), PdResult::ExactFinite(0));
    assert_eq!(gldim(&a, 12), PdResult::ExactFinite(1));
}

#[test]
fn gd_conditions_on_catalog() {
    assert!(gd_conditions(&algebra("EX6")).unwrap().all_hold());
    assert!(!gd_conditions(&algebra("EX2")).unwrap().all_hold());
}

fn monomial(seed: u64) -> Arc<BoundQuiver> {
    random_monomial(&mut ChaCha8Rng::seed_from_u64(seed), 6, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn overlap_automaton_matches_syzygies(seed in 0u64..100_000) {
        let a = monomial(seed);
        for v in 0..a.vertex_count() {
            let oracle = pd(&simple(&a, v), 12);
            let exact = monomial_pd_exact(&a, v).unwrap();
            if oracle.is_conclusive() {
                prop_assert_eq!(oracle.exact(), exact.exact());
                prop_assert_eq!(oracle.is_infinite(), exact.is_infinite());
            }
        }
    }

    // pd M <= gldim A, and the sup over simples is the global dimension.
    #[test]
    fn module_pd_bounded_by_gldim(seed in 0u64..100_000) {
        let a = monomial(seed);
        let g = monomial_gldim(&a).unwrap();
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(seed), &a);
        if let (Some(g), PdResult::ExactFinite(d)) = (g.exact(), pd(&m, 12)) {
            prop_assert!(d <= g);
        }
    }

    // 0 -> Ω M -> P_0 -> M -> 0.
    #[test]
    fn syzygy_dimension_count(seed in 0u64..100_000) {
        let a = monomial(seed);
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(seed ^ 1), &a);
        let cover = projective_cover(&m);
        prop_assert_eq!(syzygy(&m).total_dim() + m.total_dim(), cover.module.total_dim());
    }
}
