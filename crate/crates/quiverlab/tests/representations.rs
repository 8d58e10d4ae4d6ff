use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverlab::catalog::session_text;
use quiverlab::presentations::BoundQuiver;
use quiverlab::random::{random_module, random_monomial, random_special_biserial};
use quiverlab::representations::*;
use quiverlab::session::parse_session;

fn algebra(id: &str) -> Arc<BoundQuiver> {
    parse_session(&session_text(id).unwrap()).unwrap().algebra
}

#[test]
fn standard_modules_of_seven_vertex_example() {
    let a = algebra("EX1");
    let dims: Vec<usize> = (0..7).map(|v| projective(&a, v).total_dim()).collect();
    assert_eq!(dims, [1, 1, 3, 3, 2, 2, 4]);
    let total: usize = (0..7).map(|v| injective(&a, v).total_dim()).sum();
    assert_eq!(total, a.dim());
    for v in 0..7 {
        assert_eq!(simple(&a, v).total_dim(), 1);
        assert!(is_indecomposable(&projective(&a, v)).unwrap());
        assert!(is_indecomposable(&injective(&a, v)).unwrap());
    }
}

#[test]
fn top_and_socle_of_projectives() {
    let a = algebra("EX1");
    for v in 0..a.vertex_count() {
        let s = structure(&projective(&a, v));
        let mut top = vec![0; a.vertex_count()];
        top[v] = 1;
        assert_eq!(s.top_vector, top);
        assert_eq!(s.radical.total_dim() + 1, s.dimension_vector.iter().sum::<usize>());
    }
}

#[test]
fn string_modules_are_indecomposable_and_inverse_invariant() {
    let a = algebra("EX2");
    let q = a.quiver();
    for text in ["alpha", "theta/omega^-1", "lambda/theta", "alpha/lambda^-1"] {
        let w = StringWord::parse(q, text).unwrap();
        match string_module(&a, &w) {
            Ok(m) => {
                assert!(is_indecomposable(&m).unwrap(), "{text}");
                let back = string_module(&a, &w.inverse(q)).unwrap();
                assert!(is_isomorphic(&m, &back), "{text}");
            }
            Err(_) => assert!(string_violation(&a, &w).is_some(), "{text}"),
        }
    }
}

#[test]
fn direct_sum_components_are_summands() {
    let a = algebra("EX3(4)");
    let p = projective(&a, 0);
    let s = simple(&a, 2);
    let sum = Representation::direct_sum(&[p.clone(), s.clone()]).unwrap();
    assert!(is_direct_summand(&p, &sum));
    assert!(is_direct_summand(&s, &sum));
    assert!(!is_indecomposable(&sum).unwrap());
    assert_eq!(end_space(&sum).dim(), end_space(&p).dim() + end_space(&s).dim() + hom_space(&p, &s).dim() + hom_space(&s, &p).dim());
}

fn random_algebra(seed: u64) -> Arc<BoundQuiver> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if seed.is_multiple_of(2) {
        random_monomial(&mut rng, 5, 5)
    } else {
        random_special_biserial(&mut rng, 5)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // Hom(P(v), M) = M e_v.
    #[test]
    fn yoneda_for_projectives(seed in 0u64..10_000) {
        let a = random_algebra(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let m = random_module(&mut rng, &a);
        for v in 0..a.vertex_count() {
            prop_assert_eq!(hom_space(&projective(&a, v), &m).dim(), m.dim_at(v));
        }
    }

    // Every basis element of Hom(M, N) is a module map.
    #[test]
    fn hom_basis_consists_of_morphisms(seed in 0u64..10_000) {
        let a = random_algebra(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbeef);
        let (m, n) = (random_module(&mut rng, &a), random_module(&mut rng, &a));
        let h = hom_space(&m, &n);
        for f in &h.maps {
            prop_assert!(m.is_morphism_to(&n, f));
        }
    }

    #[test]
    fn quotient_and_submodule_dimensions_add_up(seed in 0u64..10_000) {
        let a = random_algebra(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xf00d);
        let m = random_module(&mut rng, &a);
        let rad = radical_basis(&m);
        let (sub, _) = m.subrepresentation(&rad).unwrap();
        let (quot, _) = m.quotient(&rad).unwrap();
        prop_assert_eq!(sub.total_dim() + quot.total_dim(), m.total_dim());
    }
}
