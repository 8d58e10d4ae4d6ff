use std::sync::Arc;

use num_traits::Zero;

use crate::linalg::{complement_units, Matrix, SVec, Q};
use crate::presentations::BoundQuiver;
use crate::representations::{projective, radical_basis, Morphism, Representation};

/// A map `⊕_l P(u_l) -> ⊕_k P(v_k)` between projectives, stored by the images of
/// the generators: entry `(k, l)` lies in `e_{v_k} A e_{u_l}` and is the `P(v_k)`
/// component of the image of `e_{u_l}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementMatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entries: Vec<Vec<SVec>>,
}

impl ElementMatrix {
    pub fn entry(&self, k: usize, l: usize) -> &SVec {
        &self.entries[k][l]
    }
}

/// Direct sum of indecomposable projectives, in the listed vertex order.
pub fn projective_sum(a: &Arc<BoundQuiver>, vertices: &[usize]) -> Representation {
    if vertices.is_empty() {
        return Representation::zero(a.clone());
    }
    let parts: Vec<Representation> = vertices.iter().map(|&v| projective(a, v)).collect();
    Representation::direct_sum(&parts).expect("same algebra")
}

/// Offsets of each summand inside `(⊕ P(v_k))_w`.
pub fn summand_offsets(a: &BoundQuiver, vertices: &[usize], w: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len());
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += a.block(v, w).len();
    }
    out
}

/// Top generators of `M`: per vertex, the unit vectors completing a basis of `rad M`.
pub fn top_generators(m: &Representation) -> Vec<(usize, Vec<Q>)> {
    let rad = radical_basis(m);
    let mut gens = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let n = m.dim_at(v);
        for u in complement_units(r, n) {
            let mut vec = vec![Q::zero(); n];
            vec[u] = num_traits::One::one();
            gens.push((v, vec));
        }
    }
    gens
}

/// The morphism `⊕ P(v_k) -> M` sending `e_{v_k}` to the `k`-th generator.
pub fn map_from_projectives(m: &Representation, gens: &[(usize, Vec<Q>)]) -> Morphism {
    let a = m.algebra();
    let n = a.vertex_count();
    let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let mut blocks = Vec::with_capacity(n);
    for w in 0..n {
        let width: usize = vertices.iter().map(|&v| a.block(v, w).len()).sum();
        let mut b = Matrix::zeros(m.dim_at(w), width);
        let mut col = 0;
        for (v, g) in gens {
            for &bi in a.block(*v, w) {
                let image = m.path_action(a.basis_path(bi)).mul_vec(g);
                for (r, x) in image.into_iter().enumerate() {
                    b[(r, col)] = x;
                }
                col += 1;
            }
        }
        blocks.push(b);
    }
    Morphism { blocks }
}

/// `P1 -p-> P0 -ε-> M -> 0` with both maps minimal, and `Ω M = ker ε`.
#[derive(Clone, Debug)]
pub struct MinimalPresentation {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub map: ElementMatrix,
    pub p0_module: Representation,
    pub p1_module: Representation,
    pub cover: Morphism,
    pub syzygy: Representation,
    pub syzygy_inclusion: Morphism,
    /// Cover of the syzygy, `P1 -> Ω M`.
    pub syzygy_cover: Morphism,
}

impl MinimalPresentation {
    /// `p` as a morphism of representations `P1 -> P0`.
    pub fn differential(&self) -> Morphism {
        self.syzygy_cover.then(&self.syzygy_inclusion)
    }
}

/// Projective cover of `M` and its kernel.
pub struct Cover {
    pub vertices: Vec<usize>,
    pub module: Representation,
    pub map: Morphism,
    pub kernel: Representation,
    pub kernel_inclusion: Morphism,
}

pub fn projective_cover(m: &Representation) -> Cover {
    let a = m.algebra();
    let gens = top_generators(m);
    let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let module = projective_sum(a, &vertices);
    let map = map_from_projectives(m, &gens);
    let (kernel, kernel_inclusion) =
        module.subrepresentation(&map.kernel_basis()).expect("kernel of a morphism is a submodule");
    Cover { vertices, module, map, kernel, kernel_inclusion }
}

pub fn syzygy(m: &Representation) -> Representation {
    projective_cover(m).kernel
}

pub fn minimal_presentation(m: &Representation) -> MinimalPresentation {
    let a = m.algebra();
    let c0 = projective_cover(m);
    let gens1 = top_generators(&c0.kernel);
    let p1: Vec<usize> = gens1.iter().map(|(v, _)| *v).collect();
    let p1_module = projective_sum(a, &p1);
    let syzygy_cover = map_from_projectives(&c0.kernel, &gens1);
    let mut entries = vec![vec![Vec::new(); p1.len()]; c0.vertices.len()];
    for (l, (u, g)) in gens1.iter().enumerate() {
        let image = c0.kernel_inclusion.blocks[*u].mul_vec(g);
        let offs = summand_offsets(a, &c0.vertices, *u);
        for (k, &v) in c0.vertices.iter().enumerate() {
            let block = a.block(v, *u);
            entries[k][l] = block
                .iter()
                .enumerate()
                .filter(|(pos, _)| !image[offs[k] + pos].is_zero())
                .map(|(pos, &bi)| (bi, image[offs[k] + pos].clone()))
                .collect();
        }
    }
    MinimalPresentation {
        map: ElementMatrix { rows: c0.vertices.clone(), cols: p1.clone(), entries },
        p0: c0.vertices,
        p1,
        p0_module: c0.module,
        p1_module,
        cover: c0.map,
        syzygy: c0.kernel,
        syzygy_inclusion: c0.kernel_inclusion,
        syzygy_cover,
    }
}

/// Successive syzygies `Ω^0 M = M, Ω^1 M, ...` up to index `n` (stopping at zero).
pub fn syzygies(m: &Representation, n: usize) -> Vec<Representation> {
    let mut out = vec![m.clone()];
    while out.len() <= n {
        let last = out.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        out.push(syzygy(last));
    }
    out
}
