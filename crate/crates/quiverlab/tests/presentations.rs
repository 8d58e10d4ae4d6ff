use quiverlab::presentations::*;

const EX1: &str = "vertices: 1 2 3 4 5 6 7
arrow delta: 3 -> 1
arrow epsilon: 3 -> 2
arrow gamma: 4 -> 3
arrow alpha: 5 -> 4
arrow beta: 6 -> 4
arrow theta: 7 -> 5
arrow omega: 7 -> 6
relation alpha*gamma
relation beta*gamma
relation gamma*delta
relation theta*alpha - omega*beta
";

const EX2: &str = "vertices: 1 2 3 4
arrow alpha: 1 -> 2
arrow beta: 2 -> 1
arrow theta: 2 -> 3
arrow lambda: 4 -> 2
arrow omega: 4 -> 3
relation lambda*theta
relation alpha*beta
relation lambda*beta*alpha
";

fn path(a: &BoundQuiver, labels: &[&str]) -> Element {
    Element::from_path(a.quiver().path_from_labels(labels).unwrap())
}

#[test]
fn seven_vertex_example_has_dimension_16() {
    let a = parse_presentation(EX1).unwrap();
    assert_eq!(a.vertex_count(), 7);
    assert_eq!(a.quiver().arrow_count(), 7);
    assert_eq!(a.relations().len(), 4);
    // P(1..7) have dimensions 1, 1, 3, 3, 2, 2, 4.
    assert_eq!(a.dim(), 16);
    let r = a.reduce_element(&path(&a, &["theta", "alpha"]));
    assert_eq!(r, path(&a, &["omega", "beta"]));
}

#[test]
fn four_vertex_example_reductions() {
    let a = parse_presentation(EX2).unwrap();
    assert!(a.reduce_element(&path(&a, &["alpha", "beta"])).is_zero());
    let ba = path(&a, &["beta", "alpha"]);
    assert_eq!(a.reduce_element(&ba), ba);
}

#[test]
fn point_algebra() {
    let a = parse_presentation("vertices: 1\n").unwrap();
    assert_eq!(a.dim(), 1);
    assert_eq!(a.nilpotency(), 1);
}

#[test]
fn arrow_relation_is_rejected() {
    let err = parse_presentation("vertices: 1 2\narrow a: 1 -> 2\nrelation a\n").unwrap_err();
    assert!(err.to_string().starts_with("not admissible: relation of length < 2"), "{err}");
}

#[test]
fn loop_without_relation_is_not_nilpotent() {
    let err = parse_presentation("vertices: 1\narrow l: 1 -> 1\n").unwrap_err();
    assert!(err.to_string().contains("radical not nilpotent"), "{err}");
}

#[test]
fn round_trip() {
    for text in [EX1, EX2] {
        let a = parse_presentation(text).unwrap();
        let b = parse_presentation(&serialize_presentation(&a)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis(), b.basis());
    }
}

mod random_presentations {
    use std::collections::HashMap;

    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use quiverlab::presentations::*;
    use quiverlab::random::{random_monomial, random_special_biserial};

    fn rename_identifiers(text: &str, map: &HashMap<String, String>) -> String {
        let mut out = String::new();
        let mut word = String::new();
        for c in text.chars().chain(std::iter::once('\n')) {
            if c.is_alphanumeric() || c == '_' {
                word.push(c);
                continue;
            }
            out.push_str(map.get(&word).unwrap_or(&word));
            word.clear();
            out.push(c);
        }
        out.pop();
        out
    }

    /// The same presentation with vertices and arrows renamed and listed in another order.
    fn scrambled(a: &BoundQuiver, rng: &mut ChaCha8Rng) -> String {
        let q = a.quiver();
        let mut map = HashMap::new();
        let mut arrow_map = HashMap::new();
        let mut vertices: Vec<String> = q.vertices().to_vec();
        vertices.shuffle(rng);
        for (i, v) in vertices.iter().enumerate() {
            map.insert(v.clone(), format!("w{i}"));
        }
        let mut arrows: Vec<usize> = (0..q.arrow_count()).collect();
        arrows.shuffle(rng);
        for (i, &x) in arrows.iter().enumerate() {
            arrow_map.insert(q.arrow(x).name.clone(), format!("x{i}"));
        }
        let mut text = format!("vertices: {}\n", vertices.iter().map(|v| map[v].clone()).collect::<Vec<_>>().join(" "));
        for &x in &arrows {
            let ar = q.arrow(x);
            text.push_str(&format!("arrow {}: {} -> {}\n", arrow_map[&ar.name], map[q.vertex_name(ar.source)], map[q.vertex_name(ar.target)]));
        }
        for r in a.relations() {
            text.push_str(&format!("relation {}\n", rename_identifiers(&r.display(q), &arrow_map)));
        }
        text
    }

    fn algebra(seed: u64) -> BoundQuiver {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = if seed.is_multiple_of(2) { random_monomial(&mut rng, 6, 6) } else { random_special_biserial(&mut rng, 6) };
        (*a).clone()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn serialization_round_trips(seed in 0u64..100_000) {
            let a = algebra(seed);
            let text = serialize_presentation(&a);
            let b = parse_presentation(&text).unwrap();
            prop_assert_eq!(serialize_presentation(&b), text);
            prop_assert_eq!(b.dim(), a.dim());
            prop_assert_eq!(b.basis(), a.basis());
        }

        #[test]
        fn relabeled_presentations_are_isomorphic(seed in 0u64..100_000) {
            let a = algebra(seed);
            let b = parse_presentation(&scrambled(&a, &mut ChaCha8Rng::seed_from_u64(seed))).unwrap();
            let r = find_relabeling(&a, &b);
            prop_assert!(r.is_some());
            let r = r.unwrap();
            for rel in a.relations() {
                prop_assert!(b.in_ideal(&r.map_element(b.quiver(), rel)));
            }
        }

        // Normal forms are idempotent and multiplication is associative on basis paths.
        #[test]
        fn reduction_is_consistent(seed in 0u64..100_000, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
            let a = algebra(seed);
            let n = a.dim();
            let (i, j, k) = (i % n, j % n, k % n);
            for p in a.basis() {
                prop_assert_eq!(a.reduce_path(p), vec![(a.basis_position(p).unwrap(), quiverlab::linalg::q(1))]);
            }
            let e = |x: usize| vec![(x, quiverlab::linalg::q(1))];
            let left = a.mul(&a.mul(&e(i), &e(j)), &e(k));
            let right = a.mul(&e(i), &a.mul(&e(j), &e(k)));
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn non_isomorphic_orientations_are_distinguished() {
        let a = parse_presentation("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap();
        let b = parse_presentation("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 2\n").unwrap();
        let c = parse_presentation("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a*b\n").unwrap();
        assert!(!is_isomorphic_presentation(&a, &b));
        assert!(!is_isomorphic_presentation(&a, &c));
        assert!(is_isomorphic_presentation(&a, &a));
    }
}
