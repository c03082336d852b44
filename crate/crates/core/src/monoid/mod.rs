//! Fine saturated monoids inside `Z^d ⊕ T` and their homomorphisms.
//!
//! A monoid is stored as a finite generating list inside an explicit
//! ambient group. Everything else (groupification, cone, faces, lattice
//! coordinates) is derived on first use and cached.

mod ambient;
mod face;
mod gp;
mod hom;
mod ops;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{Signed, Zero};

pub use ambient::{Ambient, AmbientMap, Elem, Quotient};
pub use face::{Face, MonoidIdeal};
pub use gp::GroupPresentation;
pub use hom::{MonoidHom, Pushout};
pub use ops::TorsionSplit;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fan::Cone;
use crate::zlin::{dot, lattice_basis, solve_integral, AbelianGroup, Int, IntMatrix};

struct Derived {
    gp: GroupPresentation,
    cone: Cone,
    /// `d × r`, columns form a basis of the free image of the group.
    basis: IntMatrix,
    /// Generator free parts in that basis.
    coords: Vec<Vec<Int>>,
    local_cone: Cone,
    is_unit: Vec<bool>,
}

struct Inner {
    ambient: Ambient,
    gens: Vec<Elem>,
    saturated: OnceLock<bool>,
    derived: OnceLock<Derived>,
}

/// Finitely generated monoid inside an ambient group `Z^d ⊕ ⊕ Z/n_i`.
///
/// Zero generators are dropped and duplicates removed at construction;
/// otherwise the generator order is kept, since homomorphisms are given by
/// generator images.
#[derive(Clone)]
pub struct FsMonoid(Arc<Inner>);

impl FsMonoid {
    pub fn new(ambient: Ambient, gens: Vec<Elem>) -> Result<FsMonoid> {
        let mut out: Vec<Elem> = Vec::with_capacity(gens.len());
        for g in gens {
            ambient.check(&g)?;
            let g = ambient.normalize(g);
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Self::from_parts(ambient, out))
    }

    fn from_parts(ambient: Ambient, gens: Vec<Elem>) -> FsMonoid {
        FsMonoid(Arc::new(Inner {
            ambient,
            gens,
            saturated: OnceLock::new(),
            derived: OnceLock::new(),
        }))
    }

    /// Like [`FsMonoid::new`] but records that the result is saturated.
    pub(crate) fn new_saturated(ambient: Ambient, gens: Vec<Elem>) -> Result<FsMonoid> {
        let m = Self::new(ambient, gens)?;
        let _ = m.0.saturated.set(true);
        Ok(m)
    }

    /// Monoid in `Z^d` generated by integer vectors.
    pub fn from_free(free_dim: usize, gens: &[&[i64]]) -> Result<FsMonoid> {
        Self::new(
            Ambient::free(free_dim),
            gens.iter().map(|g| Elem::from_i64(g, &[])).collect(),
        )
    }

    /// `N^n`.
    pub fn natural(n: usize) -> FsMonoid {
        let gens = (0..n)
            .map(|i| {
                let mut v = vec![Int::zero(); n];
                v[i] = Int::from(1);
                Elem::free_only(v)
            })
            .collect();
        Self::new_saturated(Ambient::free(n), gens).expect("well formed")
    }

    pub fn zero() -> FsMonoid {
        Self::new_saturated(Ambient::free(0), vec![]).expect("well formed")
    }

    pub fn ambient(&self) -> &Ambient {
        &self.0.ambient
    }

    pub fn free_dim(&self) -> usize {
        self.0.ambient.free_dim
    }

    /// The finite part of the ambient group.
    pub fn ambient_torsion(&self) -> AbelianGroup {
        crate::zlin::cokernel(&IntMatrix::from_rows(
            self.0.ambient.tor_len(),
            (0..self.0.ambient.tor_len())
                .map(|i| {
                    let mut r = vec![Int::zero(); self.0.ambient.tor_len()];
                    r[i] = self.0.ambient.torsion[i].clone();
                    r
                })
                .collect(),
        ))
    }

    pub fn gens(&self) -> &[Elem] {
        &self.0.gens
    }

    pub fn is_zero(&self) -> bool {
        self.0.gens.is_empty()
    }

    fn derived(&self) -> &Derived {
        self.0.derived.get_or_init(|| {
            let amb = &self.0.ambient;
            let gens = &self.0.gens;
            let d = amb.free_dim;
            let free: Vec<Vec<Int>> = gens.iter().map(|g| g.free.clone()).collect();
            let cone = Cone::new(d, &free);
            let basis_rows = lattice_basis(d, &free);
            let basis = IntMatrix::from_cols(d, &basis_rows);
            let coords: Vec<Vec<Int>> = free
                .iter()
                .map(|v| solve_integral(&basis, v).expect("generator lies in its own lattice"))
                .collect();
            let local_cone = Cone::new(basis.cols(), &coords);
            let is_unit = free
                .iter()
                .map(|v| cone.facets().iter().all(|f| dot(f, v).is_zero()))
                .collect();
            Derived {
                gp: GroupPresentation::new(amb, gens),
                cone,
                basis,
                coords,
                local_cone,
                is_unit,
            }
        })
    }

    /// `P^gp` as a presented group with a coordinate map.
    pub fn groupification(&self) -> &GroupPresentation {
        &self.derived().gp
    }

    /// The cone spanned by the free parts of the generators, in `Q^d`.
    pub fn cone(&self) -> &Cone {
        &self.derived().cone
    }

    /// Rank of `P^gp`.
    pub fn rank(&self) -> usize {
        self.derived().basis.cols()
    }

    /// Columns: basis of the image of `P^gp` in `Z^d`.
    pub fn lattice_basis(&self) -> &IntMatrix {
        &self.derived().basis
    }

    /// Coordinates of a free vector in [`FsMonoid::lattice_basis`].
    pub fn lattice_coords(&self, v: &[Int]) -> Option<Vec<Int>> {
        solve_integral(&self.derived().basis, v)
    }

    pub fn generator_coords(&self) -> &[Vec<Int>] {
        &self.derived().coords
    }

    /// The cone of the monoid in lattice coordinates; full-dimensional.
    pub fn local_cone(&self) -> &Cone {
        &self.derived().local_cone
    }

    /// Which generators are units.
    pub fn unit_flags(&self) -> &[bool] {
        &self.derived().is_unit
    }

    pub fn is_sharp(&self) -> bool {
        self.unit_flags().iter().all(|u| !u)
    }

    /// Every element is invertible.
    pub fn is_group(&self) -> bool {
        self.unit_flags().iter().all(|u| *u)
    }

    /// Lifts a lattice vector of the free image to an element of `P^gp`.
    pub(crate) fn lift_free(&self, w: &[Int]) -> Option<Elem> {
        let d = self.free_dim();
        let cols: Vec<Vec<Int>> = self.gens().iter().map(|g| g.free.clone()).collect();
        let c = solve_integral(&IntMatrix::from_cols(d, &cols), w)?;
        Some(self.ambient().combine(&c, self.gens()))
    }

    /// Elements of `P^gp` with zero free part, as generator combinations.
    pub(crate) fn gp_torsion_elements(&self) -> Vec<Elem> {
        let d = self.free_dim();
        let cols: Vec<Vec<Int>> = self.gens().iter().map(|g| g.free.clone()).collect();
        let k = crate::zlin::kernel_basis(&IntMatrix::from_cols(d, &cols));
        k.col_vecs()
            .iter()
            .map(|c| self.ambient().combine(c, self.gens()))
            .filter(|e| !e.is_zero())
            .collect()
    }

    /// Whether `x ∈ P`. Decided by the group and cone tests, then by a
    /// bounded search graded by the sum of the facet functionals.
    pub fn contains(&self, x: &Elem) -> Result<bool> {
        self.ambient().check(x)?;
        let x = self.ambient().normalize(x.clone());
        if x.is_zero() {
            return Ok(true);
        }
        if !self.groupification().contains(&x) || !self.cone().contains(&x.free) {
            return Ok(false);
        }
        if self.0.saturated.get() == Some(&true) {
            return Ok(true);
        }
        self.search(&x)
    }

    fn search(&self, x: &Elem) -> Result<bool> {
        let amb = self.ambient();
        let flags = self.unit_flags();
        let units: Vec<Elem> = self
            .gens()
            .iter()
            .zip(flags)
            .filter(|(_, u)| **u)
            .map(|(g, _)| g.clone())
            .collect();
        let unit_gp = GroupPresentation::new(amb, &units);
        let grading: Vec<Int> = self
            .cone()
            .facets()
            .iter()
            .fold(vec![Int::zero(); self.free_dim()], |acc, f| {
                acc.iter().zip(f).map(|(a, b)| a + b).collect()
            });
        let steps: Vec<(Elem, Int)> = self
            .gens()
            .iter()
            .zip(flags)
            .filter(|(_, u)| !**u)
            .map(|(g, _)| (g.clone(), dot(&grading, &g.free)))
            .collect();
        let height = dot(&grading, &x.free);
        let mut budget = Bounds::get().membership_budget;
        let mut nodes = 0usize;
        let found = dfs(self, &steps, 0, x.clone(), height, &unit_gp, &mut nodes, &mut budget)?;
        Ok(found)
    }

    /// Whether the monoid is saturated in its groupification.
    pub fn is_saturated(&self) -> Result<bool> {
        if let Some(s) = self.0.saturated.get() {
            return Ok(*s);
        }
        let sat = self.saturate()?;
        let mut ok = true;
        for g in sat.gens() {
            if !self.search(g)? {
                ok = false;
                break;
            }
        }
        let _ = self.0.saturated.set(ok);
        Ok(ok)
    }

    /// All sums `Σ c_i g_i` with `Σ c_i <= total`, sorted.
    pub fn bounded_elements(&self, total: usize) -> Vec<Elem> {
        let amb = self.ambient();
        let mut layer: BTreeSet<Elem> = BTreeSet::from([amb.zero()]);
        let mut all = layer.clone();
        for _ in 0..total {
            let mut next = BTreeSet::new();
            for e in &layer {
                for g in self.gens() {
                    let s = amb.add(e, g);
                    if all.insert(s.clone()) {
                        next.insert(s);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next;
        }
        all.into_iter().collect()
    }

    /// Same ambient and same generator set.
    pub fn same_presentation(&self, other: &FsMonoid) -> bool {
        if self.ambient() != other.ambient() {
            return false;
        }
        let a: BTreeSet<&Elem> = self.gens().iter().collect();
        let b: BTreeSet<&Elem> = other.gens().iter().collect();
        a == b
    }

    /// Same ambient and the same set of elements.
    pub fn same_monoid(&self, other: &FsMonoid) -> Result<bool> {
        if self.ambient() != other.ambient() {
            return Ok(false);
        }
        for g in self.gens() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    p: &FsMonoid,
    steps: &[(Elem, Int)],
    i: usize,
    rest: Elem,
    height: Int,
    units: &GroupPresentation,
    nodes: &mut usize,
    budget: &mut usize,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > *budget {
        return Err(Error::Bound {
            what: "membership search nodes",
            limit: *budget,
            actual: *nodes,
        });
    }
    if height.is_zero() {
        return Ok(units.contains(&rest));
    }
    if i == steps.len() || height.is_negative() || !p.cone().contains(&rest.free) {
        return Ok(false);
    }
    let (g, w) = &steps[i];
    let amb = p.ambient();
    let max = &height / w;
    let mut c = max.clone();
    loop {
        let r = amb.sub(&rest, &amb.scale(&c, g));
        if dfs(p, steps, i + 1, r, &height - &c * w, units, nodes, budget)? {
            return Ok(true);
        }
        if c.is_zero() {
            break;
        }
        c -= 1;
    }
    Ok(false)
}

impl PartialEq for FsMonoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.same_presentation(other)
    }
}

impl Eq for FsMonoid {}

impl fmt::Debug for FsMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FsMonoid")
            .field("ambient", &self.0.ambient)
            .field("gens", &self.0.gens)
            .finish()
    }
}
