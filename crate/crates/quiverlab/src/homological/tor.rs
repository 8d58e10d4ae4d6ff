use crate::annquot::Ideal;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::presentations::BoundQuiver;
use crate::representations::{Morphism, Representation};

use super::resolution::{projective_cover, summand_offsets};

/// One term `P_i` of a minimal projective resolution with its differential to `P_{i-1}`.
pub struct ResolutionTerm {
    pub vertices: Vec<usize>,
    pub module: Representation,
    pub differential: Option<Morphism>,
}

/// Minimal projective resolution `P_len -> ... -> P_0` (shorter if it stops).
pub fn projective_resolution(m: &Representation, len: usize) -> Vec<ResolutionTerm> {
    let mut out: Vec<ResolutionTerm> = Vec::new();
    let mut current = m.clone();
    let mut prev_inclusion: Option<Morphism> = None;
    for _ in 0..=len {
        if current.is_zero() {
            break;
        }
        let c = projective_cover(&current);
        let differential = prev_inclusion.as_ref().map(|inc| c.map.then(inc));
        out.push(ResolutionTerm { vertices: c.vertices.clone(), module: c.module.clone(), differential });
        prev_inclusion = Some(c.kernel_inclusion);
        current = c.kernel;
    }
    out
}

/// Column basis of `(⊕ P(v_k) J)_w` in the coordinates of `(⊕ P(v_k))_w`.
fn pj_at(a: &BoundQuiver, j: &Ideal, vertices: &[usize], w: usize) -> Matrix {
    let offs = summand_offsets(a, vertices, w);
    let rows: usize = vertices.iter().map(|&v| a.block(v, w).len()).sum();
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for (k, &v) in vertices.iter().enumerate() {
        for x in j.block_basis(v, w) {
            let mut col = vec![num_traits::Zero::zero(); rows];
            for (i, c) in x {
                col[offs[k] + a.position_in_block(i)] = c;
            }
            cols.push(col);
        }
    }
    Matrix::from_columns(rows, &cols)
}

fn quotient_dim(a: &BoundQuiver, j: &Ideal, vertices: &[usize]) -> usize {
    (0..a.vertex_count()).map(|w| vertices.iter().map(|&v| a.block(v, w).len()).sum::<usize>() - pj_at(a, j, vertices, w).rank()).sum()
}

/// Rank of the map induced by `d: P -> P'` on `P/PJ -> P'/P'J`.
fn induced_rank(a: &BoundQuiver, j: &Ideal, d: &Morphism, target: &[usize]) -> usize {
    (0..a.vertex_count())
        .map(|w| {
            let pj = pj_at(a, j, target, w);
            let both = Matrix::hstack(&[&d.blocks[w], &pj]);
            both.rank() - pj.rank()
        })
        .sum()
}

/// `dim Tor_m^A(M, A/J)` from the complex `P_• / P_• J` of a minimal resolution.
pub fn tor_quotient_dims(m: &Representation, j: &Ideal, deg: usize) -> Result<usize> {
    if !std::sync::Arc::ptr_eq(m.algebra(), j.algebra()) {
        return Err(Error::Precondition("module and ideal over different algebras".into()));
    }
    if !j.is_nilpotent() {
        return Err(Error::Precondition("ideal is not nilpotent".into()));
    }
    let a = m.algebra();
    let res = projective_resolution(m, deg + 1);
    let Some(term) = res.get(deg) else {
        return Ok(0);
    };
    let rank_in = match &term.differential {
        Some(d) => induced_rank(a, j, d, &res[deg - 1].vertices),
        None => 0,
    };
    let rank_out = match res.get(deg + 1).and_then(|t| t.differential.as_ref()) {
        Some(d) => induced_rank(a, j, d, &term.vertices),
        None => 0,
    };
    Ok(quotient_dim(a, j, &term.vertices) - rank_in - rank_out)
}
