use std::collections::VecDeque;
use std::sync::Arc;

use crate::linalg::{Echelon, SVec};
use crate::presentations::{BoundQuiver, Path};

/// A two-sided ideal of `A`, stored as a subspace in normal-form coordinates. Every
/// basis vector lies in a single block `e_s A e_t`.
#[derive(Clone, Debug)]
pub struct Ideal {
    algebra: Arc<BoundQuiver>,
    echelon: Echelon,
    path_generators: Option<Vec<Path>>,
}

/// Splits `v` into its `e_s A e_t` components.
pub(crate) fn split_blocks(a: &BoundQuiver, v: &SVec) -> Vec<SVec> {
    let mut parts: std::collections::BTreeMap<(usize, usize), SVec> = Default::default();
    for (i, x) in v {
        let p = a.basis_path(*i);
        parts.entry((p.source(), p.target())).or_default().push((*i, x.clone()));
    }
    parts.into_values().collect()
}

impl Ideal {
    pub fn zero(a: &Arc<BoundQuiver>) -> Ideal {
        Ideal { algebra: a.clone(), echelon: Echelon::new(a.dim()), path_generators: Some(Vec::new()) }
    }

    /// The two-sided ideal generated by the given elements.
    pub fn generated_by(a: &Arc<BoundQuiver>, gens: &[SVec]) -> Ideal {
        let q = a.quiver();
        let mut ech = Echelon::new(a.dim());
        let mut queue: VecDeque<SVec> = VecDeque::new();
        for g in gens {
            for part in split_blocks(a, g) {
                if ech.insert(part.clone()) {
                    queue.push_back(part);
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            for al in 0..q.arrow_count() {
                let arrow = Path::arrow(q, al);
                for w in [a.mul_path(&v, &arrow), a.left_mul_path(&arrow, &v)] {
                    if !w.is_empty() && ech.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
        ech.fully_reduce();
        Ideal { algebra: a.clone(), echelon: ech, path_generators: None }
    }

    /// The ideal generated by paths; the paths are recorded as its generators.
    pub fn generated_by_paths(a: &Arc<BoundQuiver>, paths: &[Path]) -> Ideal {
        let gens: Vec<SVec> = paths.iter().map(|p| a.reduce_path(p)).collect();
        let mut j = Ideal::generated_by(a, &gens);
        j.path_generators = Some(paths.to_vec());
        j
    }

    /// Wraps a subspace already known to be a two-sided ideal.
    pub(crate) fn from_echelon(a: &Arc<BoundQuiver>, mut echelon: Echelon) -> Ideal {
        echelon.fully_reduce();
        Ideal { algebra: a.clone(), echelon, path_generators: None }
    }

    pub fn algebra(&self) -> &Arc<BoundQuiver> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &[SVec] {
        self.echelon.rows()
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_path(&self, p: &Path) -> bool {
        self.contains(&self.algebra.reduce_path(p))
    }

    /// Basis of `e_s J e_t`.
    pub fn block_basis(&self, s: usize, t: usize) -> Vec<SVec> {
        let a = &self.algebra;
        self.basis()
            .iter()
            .filter(|v| {
                let p = a.basis_path(v[0].0);
                p.source() == s && p.target() == t
            })
            .cloned()
            .collect()
    }

    /// `J` is nilpotent iff it lies in the radical, i.e. no element has a trivial-path
    /// component.
    pub fn is_nilpotent(&self) -> bool {
        let a = &self.algebra;
        self.echelon.pivots().all(|i| !a.basis_path(i).is_trivial())
    }

    /// Closure under multiplication by arrows on both sides.
    pub fn is_two_sided(&self) -> bool {
        let a = &self.algebra;
        let q = a.quiver();
        self.basis().iter().all(|v| {
            (0..q.arrow_count()).all(|al| {
                let arrow = Path::arrow(q, al);
                self.contains(&a.mul_path(v, &arrow)) && self.contains(&a.left_mul_path(&arrow, v))
            })
        })
    }

    pub fn path_generators(&self) -> Option<&[Path]> {
        self.path_generators.as_deref()
    }

    pub(crate) fn set_path_generators(&mut self, gens: Option<Vec<Path>>) {
        self.path_generators = gens;
    }

    pub fn same_subspace(&self, other: &Ideal) -> bool {
        self.dim() == other.dim() && other.basis().iter().all(|v| self.contains(v))
    }
}
