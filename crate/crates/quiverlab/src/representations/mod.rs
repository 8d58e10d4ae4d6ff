//! Right modules as quiver representations, with Hom spaces and comparison tests.

mod hom;
mod module;
mod standard;
mod strings;
mod structure;

pub use hom::{end_space, hom_space, is_direct_summand, is_indecomposable, is_isomorphic, trace_gram, HomBasis};
pub use module::{Morphism, Representation};
pub use standard::{injective, projective, projective_generator, simple, standard_module, StandardKind};
pub use strings::{string_module, string_violation, Letter, StringWord};
pub use structure::{radical_basis, socle_basis, structure, Structure};
