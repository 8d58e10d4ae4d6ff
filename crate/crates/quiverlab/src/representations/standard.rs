use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::presentations::{BoundQuiver, Path};

use super::module::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Projective,
    Simple,
    Injective,
}

fn check_vertex(a: &BoundQuiver, v: usize) -> Result<()> {
    if v >= a.vertex_count() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    Ok(())
}

pub fn standard_module(a: &Arc<BoundQuiver>, kind: StandardKind, v: usize) -> Result<Representation> {
    check_vertex(a, v)?;
    Ok(match kind {
        StandardKind::Projective => projective(a, v),
        StandardKind::Simple => simple(a, v),
        StandardKind::Injective => injective(a, v),
    })
}

/// `P(i) = e_i A`: basis the normal-form paths starting at `i`, arrows acting by
/// right multiplication.
pub fn projective(a: &Arc<BoundQuiver>, i: usize) -> Representation {
    let q = a.quiver();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| a.block(i, v).len()).collect();
    let mut maps = Vec::new();
    for (ai, ar) in q.arrows().iter().enumerate() {
        let mut m = Matrix::zeros(dims[ar.target], dims[ar.source]);
        for (col, &b) in a.block(i, ar.source).iter().enumerate() {
            for (j, x) in a.right_arrow(b, ai) {
                m[(a.position_in_block(*j), col)] = x.clone();
            }
        }
        maps.push(m);
    }
    Representation::new_unchecked(a.clone(), dims, maps)
}

pub fn simple(a: &Arc<BoundQuiver>, i: usize) -> Representation {
    let q = a.quiver();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(v == i)).collect();
    let maps = q.arrows().iter().map(|ar| Matrix::zeros(dims[ar.target], dims[ar.source])).collect();
    Representation::new_unchecked(a.clone(), dims, maps)
}

/// `I(i) = D(A e_i)`: at vertex `v` the dual of the paths from `v` to `i`; an arrow
/// `v -> w` acts as the transpose of left multiplication by it.
pub fn injective(a: &Arc<BoundQuiver>, i: usize) -> Representation {
    let q = a.quiver();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| a.block(v, i).len()).collect();
    let mut maps = Vec::new();
    for (ai, ar) in q.arrows().iter().enumerate() {
        // left multiplication e_w A e_i -> e_v A e_i, x |-> arrow * x
        let mut left = Matrix::zeros(dims[ar.source], dims[ar.target]);
        let alpha = Path::arrow(q, ai);
        for (col, &b) in a.block(ar.target, i).iter().enumerate() {
            let p = alpha.concat(a.basis_path(b)).expect("composable");
            for (j, x) in a.reduce_path(&p) {
                left[(a.position_in_block(j), col)] = x;
            }
        }
        maps.push(left.transpose());
    }
    Representation::new_unchecked(a.clone(), dims, maps)
}

/// Canonical unit vector of `P(i)` at the trivial path.
pub fn projective_generator(a: &BoundQuiver, i: usize) -> Vec<Q> {
    let mut v = vec![num_traits::Zero::zero(); a.block(i, i).len()];
    let e = a.basis_position(&Path::trivial(i)).expect("trivial path is a basis element");
    v[a.position_in_block(e)] = Q::one();
    v
}
