use crate::linalg::Matrix;

use super::module::{Morphism, Representation};

/// Radical, top and socle of a module.
#[derive(Clone, Debug)]
pub struct Structure {
    pub dimension_vector: Vec<usize>,
    pub radical: Representation,
    pub radical_inclusion: Morphism,
    pub top: Representation,
    pub top_projection: Morphism,
    pub top_vector: Vec<usize>,
    pub socle: Representation,
    pub socle_vector: Vec<usize>,
    /// Per-vertex column bases of `rad M` inside `M`.
    pub radical_basis: Vec<Matrix>,
}

/// Per-vertex column bases of `rad M`, the sum of the images of all arrows.
pub fn radical_basis(m: &Representation) -> Vec<Matrix> {
    let q = m.algebra().quiver();
    (0..q.vertex_count())
        .map(|v| {
            let parts: Vec<&Matrix> = q.in_arrows(v).iter().map(|&a| m.map(a)).collect();
            if parts.is_empty() {
                Matrix::zeros(m.dim_at(v), 0)
            } else {
                Matrix::hstack(&parts).column_space()
            }
        })
        .collect()
}

/// Per-vertex column bases of `soc M`, the common kernel of all outgoing arrows.
pub fn socle_basis(m: &Representation) -> Vec<Matrix> {
    let q = m.algebra().quiver();
    (0..q.vertex_count())
        .map(|v| {
            let parts: Vec<&Matrix> = q.out_arrows(v).iter().map(|&a| m.map(a)).collect();
            if parts.is_empty() {
                Matrix::identity(m.dim_at(v))
            } else {
                Matrix::vstack(&parts).kernel_matrix()
            }
        })
        .collect()
}

pub fn structure(m: &Representation) -> Structure {
    let rad = radical_basis(m);
    let soc = socle_basis(m);
    let (radical, radical_inclusion) = m.subrepresentation(&rad).expect("radical is a submodule");
    let (top, top_projection) = m.quotient(&rad).expect("radical is a submodule");
    let (socle, _) = m.subrepresentation(&soc).expect("socle is a submodule");
    Structure {
        dimension_vector: m.dims().to_vec(),
        top_vector: top.dims().to_vec(),
        socle_vector: socle.dims().to_vec(),
        radical,
        radical_inclusion,
        top,
        top_projection,
        socle,
        radical_basis: rad,
    }
}
