//! Seeded generators of random presentations, ideals and modules for property checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::annquot::Ideal;
use crate::linalg::{Matrix, Q, SVec};
use crate::presentations::{recognize_class, BoundQuiver, Element, Path, Quiver};
use crate::representations::{projective, string_module, Letter, Representation, StringWord};

/// Normal-form bound used for random presentations; anything that needs longer paths is rejected.
const RANDOM_LMAX: usize = 10;
const ATTEMPTS: usize = 200;

fn vertex_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn arrow_name(i: usize) -> String {
    // `a`, `b`, ... then `a1`, `b1`, ...; `e` is reserved for idempotents.
    const LETTERS: &[u8] = b"abcdfghijklmnopqrstuvwxyz";
    let letter = LETTERS[i % LETTERS.len()] as char;
    if i < LETTERS.len() {
        letter.to_string()
    } else {
        format!("{letter}{}", i / LETTERS.len())
    }
}

/// A random walk of `len` arrows from a random arrow, if the quiver allows one.
fn random_walk<R: Rng>(rng: &mut R, q: &Quiver, len: usize) -> Option<Path> {
    let mut arrows = vec![rng.gen_range(0..q.arrow_count())];
    while arrows.len() < len {
        let last = *arrows.last().unwrap();
        arrows.push(*q.out_arrows(q.arrow(last).target).choose(rng)?);
    }
    Path::from_arrows(q, arrows).ok()
}

/// Monomial algebra with at most `max_vertices` vertices and `max_relations` path relations.
pub fn random_monomial<R: Rng>(rng: &mut R, max_vertices: usize, max_relations: usize) -> Arc<BoundQuiver> {
    for _ in 0..ATTEMPTS {
        let n = rng.gen_range(2..=max_vertices.max(2));
        let arrow_count = rng.gen_range(n - 1..=n + 2);
        let mut arrows = Vec::new();
        for i in 0..arrow_count {
            let s = rng.gen_range(0..n);
            let mut t = rng.gen_range(0..n);
            if t == s {
                t = (s + 1) % n;
            }
            arrows.push((arrow_name(i), s, t));
        }
        let Ok(q) = Quiver::new(vertex_names(n), arrows) else { continue };
        let mut rels = Vec::new();
        for _ in 0..rng.gen_range(1..=max_relations.max(1)) {
            let len = rng.gen_range(2..=4);
            if let Some(p) = random_walk(rng, &q, len) {
                rels.push(Element::from_path(p));
            }
        }
        if let Ok(a) = BoundQuiver::new(q, rels, RANDOM_LMAX) {
            if a.quiver().arrow_count() > 0 {
                return Arc::new(a);
            }
        }
    }
    panic!("no admissible monomial presentation found");
}

/// Special biserial algebra with at most `max_vertices` vertices: at most two arrows
/// in and out of each vertex, a random matching of composable arrows at each vertex
/// (the unmatched compositions are zero-relations), then a few extra zero-relations
/// and binomial relations between parallel permitted paths.
pub fn random_special_biserial<R: Rng>(rng: &mut R, max_vertices: usize) -> Arc<BoundQuiver> {
    for _ in 0..ATTEMPTS {
        let n = rng.gen_range(2..=max_vertices.max(2));
        let (mut outdeg, mut indeg) = (vec![0; n], vec![0; n]);
        let mut arrows = Vec::new();
        let target_count = rng.gen_range(n - 1..=n + 2);
        for _ in 0..target_count * 4 {
            if arrows.len() == target_count {
                break;
            }
            let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if s == t || outdeg[s] == 2 || indeg[t] == 2 {
                continue;
            }
            outdeg[s] += 1;
            indeg[t] += 1;
            arrows.push((arrow_name(arrows.len()), s, t));
        }
        let Ok(q) = Quiver::new(vertex_names(n), arrows) else { continue };
        let mut matched = vec![None; q.arrow_count()];
        let mut rels = Vec::new();
        for v in 0..n {
            let mut outs = q.out_arrows(v).to_vec();
            outs.shuffle(rng);
            let mut taken = vec![false; outs.len()];
            for &a in q.in_arrows(v) {
                let free: Vec<usize> = (0..outs.len()).filter(|&k| !taken[k]).collect();
                if let Some(&k) = free.choose(rng) {
                    if rng.gen_bool(0.8) {
                        taken[k] = true;
                        matched[a] = Some(outs[k]);
                    }
                }
                for &b in &outs {
                    if matched[a] != Some(b) {
                        rels.push(Element::from_path(Path::from_arrows(&q, vec![a, b]).unwrap()));
                    }
                }
            }
        }
        let mut permitted: Vec<Path> = Vec::new();
        for start in 0..q.arrow_count() {
            let mut arrows = vec![start];
            while arrows.len() < 4 {
                let Some(next) = matched[*arrows.last().unwrap()] else { break };
                arrows.push(next);
                permitted.push(Path::from_arrows(&q, arrows.clone()).unwrap());
            }
        }
        for _ in 0..rng.gen_range(0..=2) {
            if let Some(p) = permitted.choose(rng) {
                if p.len() >= 3 {
                    rels.push(Element::from_path(p.clone()));
                }
            }
        }
        if rng.gen_bool(0.6) {
            let mut pairs = Vec::new();
            for (i, p) in permitted.iter().enumerate() {
                for r in &permitted[i + 1..] {
                    let distinct_ends = p.arrows()[0] != r.arrows()[0] && p.arrows().last() != r.arrows().last();
                    if p.source() == r.source() && p.target() == r.target() && distinct_ends {
                        pairs.push((p.clone(), r.clone()));
                    }
                }
            }
            if let Some((p, r)) = pairs.choose(rng) {
                let c = Q::from_integer(rng.gen_range(1..=3).into());
                rels.push(Element::from_terms(vec![(Q::one(), p.clone()), (-c, r.clone())]));
            }
        }
        let Ok(a) = BoundQuiver::new(q, rels, RANDOM_LMAX) else { continue };
        if recognize_class(&a).is_special_biserial {
            return Arc::new(a);
        }
    }
    panic!("no admissible special biserial presentation found");
}

/// Ideal generated by up to `max_generators` random nonzero paths of positive length.
/// It lies in the radical, so it is nilpotent.
pub fn random_path_ideal<R: Rng>(rng: &mut R, a: &Arc<BoundQuiver>, max_generators: usize) -> Option<Ideal> {
    let candidates: Vec<Path> = a.basis().iter().filter(|p| !p.is_trivial()).cloned().collect();
    if candidates.is_empty() {
        return None;
    }
    let k = rng.gen_range(1..=max_generators.max(1)).min(candidates.len());
    let gens: Vec<Path> = candidates.choose_multiple(rng, k).cloned().collect();
    Some(Ideal::generated_by_paths(a, &gens))
}

fn random_coefficient<R: Rng>(rng: &mut R) -> Q {
    Q::from_integer(rng.gen_range(-2..=2).into())
}

/// The submodule `xA` of `P(v)` for `x ∈ e_v A`.
fn cyclic_submodule_basis(a: &BoundQuiver, p: &Representation, x: &SVec) -> Vec<Matrix> {
    let v_target = |i: usize| a.basis_path(i).target();
    let mut by_target: BTreeMap<usize, SVec> = BTreeMap::new();
    for (i, c) in x {
        by_target.entry(v_target(*i)).or_default().push((*i, c.clone()));
    }
    let mut cols: Vec<Vec<Vec<Q>>> = vec![Vec::new(); a.vertex_count()];
    for (t, part) in by_target {
        for (w, col_w) in cols.iter_mut().enumerate() {
            for &b in a.block(t, w) {
                let prod = a.mul(&part, &vec![(b, Q::one())]);
                if prod.is_empty() {
                    continue;
                }
                let mut col = vec![Q::zero(); p.dim_at(w)];
                for (i, c) in prod {
                    col[a.position_in_block(i)] = c;
                }
                col_w.push(col);
            }
        }
    }
    (0..a.vertex_count()).map(|w| Matrix::from_columns(p.dim_at(w), &cols[w]).column_space()).collect()
}

/// A random module: a projective, a cyclic submodule `xA ⊆ P(v)` or the quotient
/// `P(v)/xA`, with `x` a random combination of radical paths starting at `v`.
pub fn random_module<R: Rng>(rng: &mut R, a: &Arc<BoundQuiver>) -> Representation {
    let v = rng.gen_range(0..a.vertex_count());
    let p = projective(a, v);
    let radical: Vec<usize> = (0..a.vertex_count()).flat_map(|w| a.block(v, w).iter().copied()).filter(|&i| !a.basis_path(i).is_trivial()).collect();
    if radical.is_empty() || rng.gen_bool(0.15) {
        return p;
    }
    let mut x: SVec = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let i = *radical.choose(rng).unwrap();
        let c = random_coefficient(rng);
        if !c.is_zero() && !x.iter().any(|(j, _)| *j == i) {
            x.push((i, c));
        }
    }
    if x.is_empty() {
        x.push((radical[0], Q::one()));
    }
    x.sort_by_key(|(i, _)| *i);
    let basis = cyclic_submodule_basis(a, &p, &x);
    if rng.gen_bool(0.3) {
        p.subrepresentation(&basis).expect("cyclic submodule").0
    } else {
        p.quotient(&basis).expect("cyclic submodule").0
    }
}

/// A random string module of length at most 6, built by a random walk on letters.
/// `None` when no attempt produced a valid string.
pub fn random_string_module<R: Rng>(rng: &mut R, a: &Arc<BoundQuiver>) -> Option<Representation> {
    let q = a.quiver();
    let letter_at = |v: usize| -> Vec<Letter> {
        let mut out: Vec<Letter> = q.out_arrows(v).iter().map(|&x| Letter::Direct(x)).collect();
        out.extend(q.in_arrows(v).iter().map(|&x| Letter::Inverse(x)));
        out
    };
    for _ in 0..20 {
        let len = rng.gen_range(1..=6);
        let mut letters = vec![*letter_at(rng.gen_range(0..q.vertex_count())).choose(rng)?];
        while letters.len() < len {
            let end = letters.last().unwrap().end(q);
            let Some(&l) = letter_at(end).choose(rng) else { break };
            letters.push(l);
        }
        if let Ok(m) = StringWord::new(q, letters).and_then(|w| string_module(a, &w)) {
            return Some(m);
        }
    }
    None
}
