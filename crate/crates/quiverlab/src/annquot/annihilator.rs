use std::sync::Arc;

use crate::linalg::{Echelon, Matrix, SVec};
use crate::presentations::Path;
use crate::representations::Representation;

use super::ideal::Ideal;

/// `ann T = {x in A : T x = 0}`, computed blockwise: `e_s A e_t` is mapped to
/// `Hom(T_s, T_t)` by the action, and its kernel is the `(s, t)` part of the ideal.
pub fn annihilator(t: &Representation) -> Ideal {
    let a = t.algebra();
    let n = a.vertex_count();
    let actions = t.basis_actions();
    let mut ech = Echelon::new(a.dim());
    for s in 0..n {
        for w in 0..n {
            let block = a.block(s, w);
            if block.is_empty() {
                continue;
            }
            let (ds, dt) = (t.dim_at(s), t.dim_at(w));
            if ds == 0 || dt == 0 {
                for &b in block {
                    ech.insert(vec![(b, num_traits::One::one())]);
                }
                continue;
            }
            let cols: Vec<Vec<_>> = block
                .iter()
                .map(|&b| {
                    let m = &actions[b];
                    (0..dt).flat_map(|r| (0..ds).map(move |c| m[(r, c)].clone())).collect()
                })
                .collect();
            let m = Matrix::from_columns(ds * dt, &cols);
            for k in m.kernel() {
                let v: SVec = k
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !num_traits::Zero::is_zero(x))
                    .map(|(i, x)| (block[i], x))
                    .collect();
                ech.insert(v);
            }
        }
    }
    let mut j = Ideal::from_echelon(a, ech);
    j.set_path_generators(extract_path_generators(&j));
    j
}

/// Paths of `J` none of whose proper subpaths lie in `J`, pruned to a minimal set;
/// `None` unless they generate all of `J`.
pub fn extract_path_generators(j: &Ideal) -> Option<Vec<Path>> {
    let a: &Arc<_> = j.algebra();
    let q = a.quiver();
    let mut gens: Vec<Path> = Vec::new();
    let mut seen: Vec<SVec> = Vec::new();
    for p in a.nonzero_paths() {
        if !j.contains_path(&p) {
            continue;
        }
        let proper_inside = (0..=p.len()).any(|s| {
            (s..=p.len()).any(|e| e - s < p.len() && j.contains_path(&p.subpath(q, s, e)))
        });
        if proper_inside {
            continue;
        }
        let v = a.reduce_path(&p);
        if !seen.contains(&v) {
            seen.push(v);
            gens.push(p);
        }
    }
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        if gens.len() > 1 {
            let others: Vec<Path> = gens.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
            if Ideal::generated_by_paths(a, &others).same_subspace(j) {
                gens.remove(i);
            }
        }
    }
    Ideal::generated_by_paths(a, &gens).same_subspace(j).then_some(gens)
}
