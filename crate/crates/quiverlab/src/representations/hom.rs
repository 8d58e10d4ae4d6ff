use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, Q};

use super::module::{Morphism, Representation};
use super::structure::structure;

/// Grid evaluations allowed before switching to seeded random points.
const GRID_LIMIT: u64 = 4096;
const RANDOM_TRIALS: usize = 24;
const RANDOM_RANGE: i64 = 1 << 20;

/// Basis of `Hom(M, N)`.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub maps: Vec<Morphism>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// The linear combination `sum c_i f_i`.
    pub fn combination(&self, coeffs: &[Q]) -> Option<Morphism> {
        let mut it = self.maps.iter().zip(coeffs);
        let (f0, c0) = it.next()?;
        let mut out = f0.scale(c0);
        for (f, c) in it {
            out = out.add(&f.scale(c));
        }
        Some(out)
    }
}

fn same_algebra(m: &Representation, n: &Representation) -> Result<()> {
    if !Arc::ptr_eq(m.algebra(), n.algebra()) {
        return Err(Error::Precondition("modules over different algebras".into()));
    }
    Ok(())
}

/// Solves the commuting equations `phi^N_a f_s = f_t phi^M_a` for all arrows.
pub fn hom_space(m: &Representation, n: &Representation) -> HomBasis {
    assert!(Arc::ptr_eq(m.algebra(), n.algebra()), "hom_space: modules over different algebras");
    let q = m.algebra().quiver();
    let vc = q.vertex_count();
    let mut offset = vec![0usize; vc + 1];
    for v in 0..vc {
        offset[v + 1] = offset[v] + n.dim_at(v) * m.dim_at(v);
    }
    let unknowns = offset[vc];
    if unknowns == 0 {
        return HomBasis { maps: Vec::new() };
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dim_at(v) + c;
    let mut ech = Echelon::new(unknowns);
    for (ai, ar) in q.arrows().iter().enumerate() {
        let (s, t) = (ar.source, ar.target);
        let (pn, pm) = (n.map(ai), m.map(ai));
        for r in 0..n.dim_at(t) {
            for c in 0..m.dim_at(s) {
                let mut row = std::collections::BTreeMap::new();
                for k in 0..n.dim_at(s) {
                    let x = &pn[(r, k)];
                    if !x.is_zero() {
                        *row.entry(var(s, k, c)).or_insert_with(Q::zero) += x;
                    }
                }
                for k in 0..m.dim_at(t) {
                    let x = &pm[(k, c)];
                    if !x.is_zero() {
                        *row.entry(var(t, r, k)).or_insert_with(Q::zero) -= x;
                    }
                }
                let row: Vec<(usize, Q)> = row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    let maps = ech
        .kernel()
        .into_iter()
        .map(|sol| {
            let mut blocks: Vec<Matrix> = (0..vc).map(|v| Matrix::zeros(n.dim_at(v), m.dim_at(v))).collect();
            for (i, x) in sol {
                let v = (0..vc).rfind(|&v| offset[v] <= i && i < offset[v + 1]).expect("variable in range");
                let local = i - offset[v];
                blocks[v][(local / m.dim_at(v), local % m.dim_at(v))] = x;
            }
            Morphism { blocks }
        })
        .collect();
    HomBasis { maps }
}

pub fn end_space(m: &Representation) -> HomBasis {
    hom_space(m, m)
}

/// Gram matrix of the trace form `(f, g) |-> tr(f g)` on a basis of `End(M)`.
pub fn trace_gram(end: &HomBasis) -> Matrix {
    let k = end.dim();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = end.maps[j].then(&end.maps[i]).trace();
            g[(i, j)] = t.clone();
            g[(j, i)] = t;
        }
    }
    g
}

/// `End(M)` is local iff the trace form has rank one (characteristic zero, split
/// semisimple quotient).
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::Precondition("the zero module has no indecomposability verdict".into()));
    }
    Ok(trace_gram(&end_space(m)).rank() == 1)
}

/// Whether the indecomposable `x` is isomorphic to a direct summand of `y`.
pub fn is_direct_summand(x: &Representation, y: &Representation) -> bool {
    let to = hom_space(x, y);
    if to.dim() == 0 {
        return false;
    }
    let back = hom_space(y, x);
    to.maps.iter().any(|f| back.maps.iter().any(|g| !f.then(g).trace().is_zero()))
}

fn det_at(basis: &HomBasis, point: &[Q]) -> Q {
    let f = basis.combination(point).expect("nonempty basis");
    f.blocks.iter().fold(Q::one(), |acc, b| if b.rows() == 0 { acc } else { acc * b.determinant() })
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> bool {
    if same_algebra(m, n).is_err() || m.dims() != n.dims() {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let mn = hom_space(m, n);
    let nm = hom_space(n, m);
    if mn.dim() == 0 || mn.dim() != nm.dim() {
        return false;
    }
    let em = end_space(m);
    if em.dim() != mn.dim() || end_space(n).dim() != em.dim() {
        return false;
    }
    let (sm, sn) = (structure(m), structure(n));
    if sm.top_vector != sn.top_vector || sm.socle_vector != sn.socle_vector {
        return false;
    }
    if trace_gram(&em).rank() == 1 {
        return mn.maps.iter().any(|f| nm.maps.iter().any(|g| !f.then(g).trace().is_zero()));
    }
    // det(sum t_i f_i) is a polynomial of degree total_dim; a grid with that many
    // points per coordinate cannot miss a nonzero value.
    let k = mn.dim();
    let degree = m.total_dim() as u64;
    let side = degree + 1;
    let grid_size = side.checked_pow(k as u32).unwrap_or(u64::MAX);
    if grid_size <= GRID_LIMIT {
        let mut idx = vec![0u64; k];
        loop {
            let point: Vec<Q> = idx.iter().map(|&x| Q::from_integer((x as i64).into())).collect();
            if !det_at(&mn, &point).is_zero() {
                return true;
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return false;
                }
                idx[pos] += 1;
                if idx[pos] < side {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1507);
    (0..RANDOM_TRIALS).any(|_| {
        let point: Vec<Q> = (0..k).map(|_| Q::from_integer(rng.gen_range(-RANDOM_RANGE..=RANDOM_RANGE).into())).collect();
        !det_at(&mn, &point).is_zero()
    })
}
