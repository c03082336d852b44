//! Cross-sections of fans, triangulation and integral simplicial homology.

mod acyclic;
mod complex;
mod homology;

pub use acyclic::{verify_boundary_acyclicity, AcyclicityReport, Verdict};
pub use complex::{cross_section, PolyComplex};
pub use homology::{chain_homology, homology, ChainComplex, Homology, HomologyGroup, HomologyProfile};
