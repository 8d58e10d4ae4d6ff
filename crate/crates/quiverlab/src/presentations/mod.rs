//! Quivers, paths, relations and the normal-form basis of `kQ/I`.

mod algebra;
mod classify;
mod dsl;
mod iso;
mod quiver;

pub use algebra::{monic, zero_relations, BoundQuiver, DEFAULT_LMAX};
pub use classify::{classify_relations, is_minimal_relation, recognize_class, ClassifiedRelation, RecognitionReport, RelationClass};
pub use dsl::{parse_element, parse_presentation, parse_presentation_with, serialize_presentation};
pub(crate) use dsl::{clean_line, is_ident, parse_algebra_block, parse_err, parse_rational};
pub use iso::{find_relabeling, is_isomorphic_presentation, Relabeling};
pub use quiver::{Arrow, Element, Path, Quiver};
