//! Projective covers, syzygies, projective and global dimension, Tor against
//! quotients and the combinatorial global-dimension-two conditions.

mod gd;
mod monomial;
mod pd;
mod resolution;
mod tor;

pub use gd::{gd_conditions, gd_conditions_with, GdReport, StartPointReading, DEFAULT_READING};
pub use monomial::{
    confirm_chain_cycle, cyclic_right_ideal, global_dimension, monomial_gldim, monomial_pd_exact, CycleConfirmation,
};
pub use pd::{gldim, pd, pd_of_sum, simple_pds, Certificate, ChainState, PdResult, DEFAULT_CUTOFF};
pub use resolution::{
    map_from_projectives, minimal_presentation, projective_cover, projective_sum, summand_offsets, syzygies, syzygy,
    top_generators, Cover, ElementMatrix, MinimalPresentation,
};
pub use tor::{projective_resolution, tor_quotient_dims, ResolutionTerm};
