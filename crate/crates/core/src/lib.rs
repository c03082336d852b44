//! Fine saturated monoids, rational polyhedral cones and fans, and the
//! vertical-boundary calculus, with exact integer arithmetic throughout.

pub mod bounds;
pub mod error;
pub mod fan;
pub mod monoid;
pub mod oracle;
pub mod random;
pub mod topo;
pub mod util;
pub mod verify;
pub mod wire;
pub mod zlin;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use fan::{hilbert_basis, Cone, Fan, FanMorphism};
pub use monoid::{Ambient, Elem, Face, FsMonoid, MonoidHom, MonoidIdeal};
pub use topo::{ChainComplex, Homology, HomologyProfile, PolyComplex};
pub use zlin::{AbelianGroup, Int, IntMatrix, Rat};
