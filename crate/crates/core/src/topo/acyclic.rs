use num_traits::Zero;

use super::{cross_section, homology, Homology, PolyComplex};
use crate::error::{Error, Result};
use crate::fan::{spec_of_element, Fan, FanMorphism};
use crate::monoid::{FsMonoid, MonoidHom};
use crate::zlin::Int;

/// Outcome of an acyclicity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Acyclic,
    NotAcyclic,
    /// Every ray is killed, so the cross-section is empty; no verdict.
    Empty,
}

/// Everything built while checking that the vertical part of `Spec(P)`
/// over `Spec(N)` is acyclic away from the origin.
#[derive(Clone, Debug)]
pub struct AcyclicityReport {
    /// `Spec(P̄)` in the lattice coordinates of `P̄^gp`.
    pub spec: Fan,
    /// `Spec(P̄) -> Spec(N)` induced by `θ`.
    pub morphism: FanMorphism,
    pub vertical_subfan: Fan,
    /// Functional positive on `Spec(P̄) - 0`, from an interior element.
    pub height: Vec<Int>,
    /// `W`, the vertical subfan cut at height one.
    pub cross_section: PolyComplex,
    pub triangulation: PolyComplex,
    /// Reduced integral homology of `W`.
    pub homology: Homology,
    pub verdict: Verdict,
    /// `θ` is vertical, so `W` is the whole convex cross-section.
    pub vertical: bool,
}

impl AcyclicityReport {
    pub fn note(&self) -> Option<&'static str> {
        self.vertical
            .then_some("theta is vertical: W is a convex polytope, hence contractible")
    }
}

/// Computes the reduced homology of `W` for `θ: N -> P`. Requires `P`
/// saturated with torsion-free groupification, `P⁺ ≠ 0` and `θ(1) ≠ 0`.
/// Units are divided out first.
pub fn verify_boundary_acyclicity(p: &FsMonoid, theta: &MonoidHom) -> Result<AcyclicityReport> {
    let n = FsMonoid::natural(1);
    if !theta.source().same_presentation(&n) {
        return Err(Error::Precondition("theta must have source N".into()));
    }
    if !theta.target().same_presentation(p) {
        return Err(Error::Precondition("theta must have target P".into()));
    }
    if !p.is_saturated()? {
        return Err(Error::Precondition("P is not saturated".into()));
    }
    if !p.groupification().group().is_torsion_free() {
        return Err(Error::Precondition("P^gp has torsion".into()));
    }
    if p.is_group() {
        return Err(Error::Precondition("P+ is zero".into()));
    }
    let x = &theta.images()[0];
    if x.is_zero() {
        return Err(Error::Precondition("theta is trivial".into()));
    }
    let (sharp, proj) = if p.is_sharp() {
        (p.clone(), MonoidHom::identity(p))
    } else {
        p.sharpen()?
    };
    let xbar = proj.apply(x)?;
    let morphism = spec_of_element(&sharp, &xbar)?;
    let spec = morphism.source().clone();
    let vertical_subfan = morphism.vertical_subfan();
    let eta = sharp.interior_vertical_to_n()?;
    let e = &eta.images()[0];
    let height = sharp.lattice_coords(&e.free).ok_or(Error::NotMember)?;
    let cross = cross_section(&vertical_subfan, &height)?;
    let triangulation = cross.triangulate();
    let homology = homology(&triangulation, true)?;
    let verdict = match homology.profile() {
        None => Verdict::Empty,
        Some(h) if h.is_acyclic() => Verdict::Acyclic,
        Some(_) => Verdict::NotAcyclic,
    };
    let vertical = morphism.is_vertical();
    debug_assert!(!vertical || verdict == Verdict::Acyclic);
    debug_assert!(height.iter().any(|c| !c.is_zero()));
    Ok(AcyclicityReport {
        spec,
        morphism,
        vertical_subfan,
        height,
        cross_section: cross,
        triangulation,
        homology,
        verdict,
        vertical,
    })
}
