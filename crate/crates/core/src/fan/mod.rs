//! Rational polyhedral cones and fans.

mod cone;
mod fans;
mod hilbert;
mod subdivision;

pub(crate) use cone::pulling;
pub use cone::{hrep, Cone, HRep};
pub use fans::{spec_of_element, Fan, FanMorphism};
pub use hilbert::{hilbert_basis, hilbert_basis_with};
pub use subdivision::{common_refinement, is_subdivision, make_smooth, star_subdivision, Resolution};
