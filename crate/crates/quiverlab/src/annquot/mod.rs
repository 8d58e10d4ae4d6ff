//! Annihilators of modules, the presentation of `A / ann T`, and what `T` looks like
//! over that quotient.

mod annihilator;
mod change;
mod ideal;
mod quotient;
mod tilting;
mod witness;

pub use annihilator::{annihilator, extract_path_generators};
pub use change::{cover_descends, nilpotent_bound, pd_under_tor_vanishing, NilpotentBound};
pub use ideal::Ideal;
pub use quotient::{
    module_times_ideal, quotient_module, quotient_presentation, reduce_by_ideal, restrict_to_quotient,
    QuotientPresentation,
};
pub use tilting::{ext1_dim, tilting_over_quotient_check, QuotientTiltingReport};
pub use witness::{classify_annihilator_path, Classification, Witness};
