use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{complement_units, Matrix, SVec, Q};
use crate::presentations::{BoundQuiver, Element, Path};

/// A finite-dimensional right module given by vertex spaces and arrow matrices.
/// The matrix of an arrow `a -> b` has shape `dims[b] x dims[a]`, and a path acts by
/// applying its arrows left to right.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<BoundQuiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

/// Vertex-wise linear maps between two representations.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl Representation {
    /// Checks shapes and that every relation generator acts as zero.
    pub fn new(algebra: Arc<BoundQuiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} vertex dimensions, got {}",
                q.vertex_count(),
                dims.len()
            )));
        }
        if maps.len() != q.arrow_count() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} arrow matrices, got {}",
                q.arrow_count(),
                maps.len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix of `{}` has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let m = Representation { algebra, dims, maps };
        for r in m.algebra.relations() {
            if !m.element_action(r).is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation {} does not act as zero",
                    r.display(m.algebra.quiver())
                )));
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<BoundQuiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        Representation { algebra, dims, maps }
    }

    pub fn zero(algebra: Arc<BoundQuiver>) -> Representation {
        let q = algebra.quiver();
        let dims = vec![0; q.vertex_count()];
        let maps = q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { algebra, dims, maps }
    }

    pub fn algebra(&self) -> &Arc<BoundQuiver> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_sincere(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    /// Offset of each vertex space inside the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut cur = Matrix::identity(self.dims[p.source()]);
        for &a in p.arrows() {
            cur = self.maps[a].mul(&cur);
        }
        cur
    }

    /// Action of a parallel element of the path algebra.
    pub fn element_action(&self, e: &Element) -> Matrix {
        let mut terms = e.terms();
        let Some((p0, _)) = e.terms().next() else {
            return Matrix::zeros(0, 0);
        };
        let mut out = Matrix::zeros(self.dims[p0.target()], self.dims[p0.source()]);
        for (p, c) in terms.by_ref() {
            out.add_scaled_assign(c, &self.path_action(p));
        }
        out
    }

    /// Action of a combination of basis elements of `A` from the `(s, t)` block.
    pub fn block_action(&self, s: usize, t: usize, v: &SVec) -> Matrix {
        let mut out = Matrix::zeros(self.dims[t], self.dims[s]);
        for (i, x) in v {
            let p = self.algebra.basis_path(*i);
            debug_assert!(p.source() == s && p.target() == t);
            out.add_scaled_assign(x, &self.path_action(p));
        }
        out
    }

    /// The action of every basis element of `A`, indexed like the basis.
    pub fn basis_actions(&self) -> Vec<Matrix> {
        let a = &self.algebra;
        let mut out: Vec<Option<Matrix>> = vec![None; a.dim()];
        for (i, p) in a.basis().iter().enumerate() {
            let m = if p.is_trivial() {
                Matrix::identity(self.dims[p.source()])
            } else {
                let prefix = p.subpath(a.quiver(), 0, p.len() - 1);
                let last = *p.arrows().last().expect("non-trivial");
                let prev = match a.basis_position(&prefix).and_then(|j| out[j].clone()) {
                    Some(m) => m,
                    None => self.path_action(&prefix),
                };
                self.maps[last].mul(&prev)
            };
            out[i] = Some(m);
        }
        out.into_iter().map(|m| m.expect("filled")).collect()
    }

    pub fn direct_sum(parts: &[Representation]) -> Result<Representation> {
        let Some(first) = parts.first() else {
            return Err(Error::Precondition("empty direct sum".into()));
        };
        let alg = first.algebra.clone();
        if parts.iter().any(|p| !Arc::ptr_eq(&p.algebra, &alg)) {
            return Err(Error::Precondition("summands belong to different algebras".into()));
        }
        let q = alg.quiver();
        let dims: Vec<usize> = (0..q.vertex_count()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                m.set_block(r, c, &p.maps[ai]);
                r += p.dims[a.target];
                c += p.dims[a.source];
            }
            maps.push(m);
        }
        Ok(Representation { algebra: alg, dims, maps })
    }

    /// The submodule with the given per-vertex column bases, and its inclusion.
    pub fn subrepresentation(&self, basis: &[Matrix]) -> Result<(Representation, Morphism)> {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            let img = self.maps[ai].mul(&basis[a.source]);
            let x = basis[a.target].solve(&img).ok_or_else(|| {
                Error::InvalidRepresentation(format!("subspace is not closed under `{}`", a.name))
            })?;
            maps.push(x);
        }
        let sub = Representation { algebra: self.algebra.clone(), dims, maps };
        Ok((sub, Morphism { blocks: basis.to_vec() }))
    }

    /// The quotient by a submodule given by column bases, and the projection. Each
    /// quotient space is spanned by the unit vectors completing the submodule basis.
    pub fn quotient(&self, basis: &[Matrix]) -> Result<(Representation, Morphism)> {
        let q = self.algebra.quiver();
        let mut proj = Vec::new();
        let mut lifts = Vec::new();
        for (v, b) in basis.iter().enumerate() {
            let n = self.dims[v];
            let units = complement_units(b, n);
            let mut lift = Matrix::zeros(n, units.len());
            for (j, &u) in units.iter().enumerate() {
                lift[(u, j)] = Q::one();
            }
            let full = Matrix::hstack(&[b, &lift]);
            let inv = full.inverse().ok_or_else(|| {
                Error::InvalidRepresentation("submodule basis is not linearly independent".into())
            })?;
            proj.push(inv.block(b.cols(), 0, units.len(), n));
            lifts.push(lift);
        }
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            maps.push(proj[a.target].mul(&self.maps[ai]).mul(&lifts[a.source]));
        }
        let dims = lifts.iter().map(|l| l.cols()).collect();
        let quo = Representation { algebra: self.algebra.clone(), dims, maps };
        for (ai, a) in q.arrows().iter().enumerate() {
            let lhs = proj[a.target].mul(&self.maps[ai]);
            let rhs = quo.maps[ai].mul(&proj[a.source]);
            if lhs != rhs {
                return Err(Error::InvalidRepresentation(format!("subspace is not closed under `{}`", a.name)));
            }
        }
        Ok((quo, Morphism { blocks: proj }))
    }

    /// Whether `f` commutes with the arrow actions of `self` (source) and `target`.
    pub fn is_morphism_to(&self, target: &Representation, f: &Morphism) -> bool {
        let q = self.algebra.quiver();
        q.arrows().iter().enumerate().all(|(ai, a)| {
            target.maps[ai].mul(&f.blocks[a.source]) == f.blocks[a.target].mul(&self.maps[ai])
        })
    }

    /// Same module data attached to another algebra with the same quiver.
    pub fn with_algebra(&self, algebra: Arc<BoundQuiver>) -> Result<Representation> {
        if algebra.quiver() != self.algebra.quiver() {
            return Err(Error::Precondition("algebras have different quivers".into()));
        }
        Representation::new(algebra, self.dims.clone(), self.maps.clone())
    }
}

impl Morphism {
    pub fn zero(source: &Representation, target: &Representation) -> Morphism {
        Morphism {
            blocks: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect(),
        }
    }

    pub fn identity(m: &Representation) -> Morphism {
        Morphism { blocks: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&g.blocks).map(|(f, g)| g.mul(f)).collect() }
    }

    pub fn add(&self, g: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&g.blocks).map(|(f, g)| f.add(g)).collect() }
    }

    pub fn scale(&self, s: &Q) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(|f| f.scale(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn trace(&self) -> Q {
        self.blocks.iter().fold(Q::zero(), |acc, b| acc + b.trace())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    /// Per-vertex column bases of the kernel.
    pub fn kernel_basis(&self) -> Vec<Matrix> {
        self.blocks.iter().map(Matrix::kernel_matrix).collect()
    }

    /// Per-vertex column bases of the image.
    pub fn image_basis(&self) -> Vec<Matrix> {
        self.blocks.iter().map(Matrix::column_space).collect()
    }
}
