use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{Ambient, AmbientMap, Elem, Face, FsMonoid, GroupPresentation, MonoidHom, Quotient};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fan::{hilbert_basis, Cone};
use crate::util::combinations;
use crate::zlin::{dot, kernel_basis, lattice_basis, neg, solve_integral, AbelianGroup, Int, IntMatrix};

/// Output of [`FsMonoid::torsion_split`]: `P ≅ P^tf ⊕ P^tor`.
#[derive(Clone, Debug)]
pub struct TorsionSplit {
    pub tf: FsMonoid,
    pub tor: AbelianGroup,
    /// `P^tf ⊕ P^tor` as a monoid; the first summand's coordinates come
    /// first in each part of the ambient.
    pub sum: FsMonoid,
    /// `P -> P^tf ⊕ P^tor`.
    pub forward: MonoidHom,
    /// `P^tf ⊕ P^tor -> P`.
    pub backward: MonoidHom,
}

/// Generators of `C ∩ Z^r` for a full-dimensional cone `C ⊂ Q^r`.
pub(crate) fn lattice_points_generators(cone: &Cone) -> Result<Vec<Vec<Int>>> {
    let r = cone.dim();
    let facets = cone.facets();
    let mut out: Vec<Vec<Int>> = Vec::new();
    if facets.is_empty() {
        for row in IntMatrix::identity(r).row_vecs() {
            out.push(neg(&row));
            out.push(row);
        }
        return Ok(out);
    }
    let f = IntMatrix::from_rows(r, facets.to_vec());
    let images: Vec<Vec<Int>> = cone.rays().iter().map(|v| f.mul_vec(v)).collect();
    let lattice = lattice_basis(f.rows(), &f.col_vecs());
    for h in hilbert_basis(&images, &lattice)? {
        out.push(solve_integral(&f, &h).expect("point of the image lattice"));
    }
    for k in kernel_basis(&f).col_vecs() {
        out.push(neg(&k));
        out.push(k);
    }
    Ok(out)
}

impl FsMonoid {
    fn unit_gens(&self) -> Vec<Elem> {
        self.gens()
            .iter()
            .zip(self.unit_flags())
            .filter(|(_, u)| **u)
            .map(|(g, _)| g.clone())
            .collect()
    }

    fn propagate_saturation(&self, m: &FsMonoid) {
        if self.0.saturated.get() == Some(&true) {
            let _ = m.0.saturated.set(true);
        }
    }

    /// `P^sat = P^gp ∩ cone(P)`, generated by lifts of the Hilbert basis of
    /// the pointed part, a basis of the lineality lattice, and the torsion
    /// of `P^gp`.
    pub fn saturate(&self) -> Result<FsMonoid> {
        if self.0.saturated.get() == Some(&true) {
            return Ok(self.clone());
        }
        let bounds = Bounds::get();
        Bounds::check("generator count", self.gens().len(), bounds.max_generators)?;
        Bounds::check("groupification rank", self.rank(), bounds.max_dim)?;
        let amb = self.ambient();
        let mut gens: Vec<Elem> = Vec::new();
        if self.rank() > 0 {
            let basis = self.lattice_basis();
            for v in lattice_points_generators(self.local_cone())? {
                let w = basis.mul_vec(&v);
                gens.push(self.lift_free(&w).expect("lattice point of the group"));
            }
        }
        gens.extend(self.gp_torsion_elements());
        gens.sort();
        let sat = FsMonoid::new_saturated(amb.clone(), gens)?;
        Ok(sat)
    }

    /// All faces, smallest first. The minimal face is the unit group, the
    /// maximal one is the monoid itself.
    pub fn faces(&self) -> Vec<Face> {
        let cone = self.cone();
        let rays = cone.rays();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for s in cone.face_index_sets() {
            let tight: Vec<Vec<Int>> = cone
                .facets()
                .iter()
                .filter(|f| s.iter().all(|&i| dot(f, &rays[i]).is_zero()))
                .cloned()
                .collect();
            let face = Face::cut_out(self, tight);
            if seen.insert(face.selector().to_vec()) {
                out.push(face);
            }
        }
        out.sort_by(|a, b| {
            a.selector()
                .len()
                .cmp(&b.selector().len())
                .then_with(|| a.selector().cmp(b.selector()))
        });
        out
    }

    /// Smallest face containing `elems`; the unit group when `elems` is
    /// empty.
    pub fn minimal_face_containing(&self, elems: &[Elem]) -> Result<Face> {
        for e in elems {
            if !self.contains(e)? {
                return Err(Error::NotMember);
            }
        }
        let tight: Vec<Vec<Int>> = self
            .cone()
            .facets()
            .iter()
            .filter(|f| elems.iter().all(|e| dot(f, &e.free).is_zero()))
            .cloned()
            .collect();
        Ok(Face::cut_out(self, tight))
    }

    /// Whether `face` is one of this monoid's faces.
    pub fn check_face(&self, face: &Face) -> Result<()> {
        if face.owner() != self {
            return Err(Error::NotAFace);
        }
        Ok(())
    }

    /// `P*`, generated by the generators lying in the lineality space.
    pub fn units(&self) -> FsMonoid {
        let u = FsMonoid::new_saturated(self.ambient().clone(), self.unit_gens()).expect("same ambient");
        u
    }

    /// `P̄ = P/P*` with the projection.
    pub fn sharpen(&self) -> Result<(FsMonoid, MonoidHom)> {
        let q = Quotient::new(self.ambient(), &self.unit_gens());
        let images: Vec<Elem> = self.gens().iter().map(|g| q.apply(g)).collect();
        let sharp = FsMonoid::new(q.target().clone(), images)?;
        self.propagate_saturation(&sharp);
        let proj = MonoidHom::from_ambient(self.clone(), sharp.clone(), q.map.clone())?;
        Ok((sharp, proj))
    }

    /// `P_F`, generated by `P` and `-F`.
    pub fn localize(&self, face: &Face) -> Result<FsMonoid> {
        self.check_face(face)?;
        let amb = self.ambient();
        let mut gens = self.gens().to_vec();
        gens.extend(face.gens().iter().map(|g| amb.neg(g)));
        let m = FsMonoid::new(amb.clone(), gens)?;
        self.propagate_saturation(&m);
        Ok(m)
    }

    /// Hilbert basis of a sharp saturated monoid, as ambient elements.
    pub fn hilbert_basis(&self) -> Result<Vec<Elem>> {
        if !self.is_sharp() {
            return Err(Error::NotSharp);
        }
        if self.rank() == 0 {
            return Ok(vec![]);
        }
        let lattice = IntMatrix::identity(self.rank()).row_vecs();
        let hb = hilbert_basis(self.local_cone().rays(), &lattice)?;
        let basis = self.lattice_basis();
        let mut out: Vec<Elem> = hb
            .iter()
            .map(|v| self.lift_free(&basis.mul_vec(v)).expect("lattice point"))
            .collect();
        out.sort();
        Ok(out)
    }

    fn require_sharp_torsion_free(&self) -> Result<()> {
        if !self.is_sharp() {
            return Err(Error::NotSharp);
        }
        if !self.groupification().group().is_torsion_free() {
            return Err(Error::Torsion);
        }
        Ok(())
    }

    /// `Hom(P, N)` as lattice points of the dual cone, in the dual of the
    /// lattice coordinates of `P^gp`.
    pub fn dual_monoid(&self) -> Result<FsMonoid> {
        self.require_sharp_torsion_free()?;
        let r = self.rank();
        let dual = self.local_cone().dual();
        let lattice = IntMatrix::identity(r).row_vecs();
        let hb = if r == 0 {
            vec![]
        } else {
            hilbert_basis(dual.rays(), &lattice)?
        };
        FsMonoid::new_saturated(Ambient::free(r), hb.into_iter().map(Elem::free_only).collect())
    }

    /// A vertical `N -> P` with torsion-free cokernel: `1` goes to the
    /// interior sum of Hilbert basis elements of least degree under the
    /// sum of the dual Hilbert basis, ties broken lexicographically.
    pub fn interior_vertical_to_n(&self) -> Result<MonoidHom> {
        if self.is_zero() {
            return Err(Error::ZeroMonoid);
        }
        if !self.is_sharp() {
            return Err(Error::NotSharp);
        }
        if !self.is_saturated()? {
            return Err(Error::NotSaturated);
        }
        let r = self.rank();
        let cone = self.local_cone();
        let lattice = IntMatrix::identity(r).row_vecs();
        let hb = hilbert_basis(cone.rays(), &lattice)?;
        Bounds::check("Hilbert basis size", hb.len(), 20)?;
        let dual_hb = hilbert_basis(cone.dual().rays(), &lattice)?;
        let grading = dual_hb.iter().fold(vec![Int::zero(); r], |acc, v| {
            acc.iter().zip(v).map(|(a, b)| a + b).collect()
        });
        let basis = self.lattice_basis();
        let mut best: Option<(Int, Elem)> = None;
        for k in 1..=hb.len() {
            for subset in combinations(hb.len(), k) {
                let mut v = vec![Int::zero(); r];
                for &i in &subset {
                    v = v.iter().zip(&hb[i]).map(|(a, b)| a + b).collect();
                }
                if !cone.contains_in_interior(&v) {
                    continue;
                }
                let h = dot(&grading, &v);
                let e = self.lift_free(&basis.mul_vec(&v)).expect("lattice point");
                let better = match &best {
                    None => true,
                    Some((bh, be)) => h < *bh || (h == *bh && e < *be),
                };
                if better {
                    best = Some((h, e));
                }
            }
        }
        let (_, e) = best.expect("the sum of all Hilbert basis elements is interior");
        let source = FsMonoid::natural(1);
        let map = AmbientMap::new(
            source.ambient().clone(),
            self.ambient().clone(),
            IntMatrix::from_cols(self.free_dim(), std::slice::from_ref(&e.free)),
            IntMatrix::from_cols(self.ambient().tor_len(), std::slice::from_ref(&e.tor)),
        )?;
        MonoidHom::from_ambient(source, self.clone(), map)
    }

    /// `η: P -> N` with `η⁻¹(0) = face`: the sum of the Hilbert basis of the
    /// dual face, in the dual lattice of `P^gp`.
    pub fn support_functional(&self, face: &Face) -> Result<MonoidHom> {
        self.check_face(face)?;
        if !face.is_proper() {
            return Err(Error::ImproperFace);
        }
        if !self.is_saturated()? {
            return Err(Error::NotSaturated);
        }
        let r = self.rank();
        let basis = self.lattice_basis();
        let bt = basis.transpose();
        let local: Vec<Vec<Int>> = face.functionals().iter().map(|f| bt.mul_vec(f)).collect();
        let lattice = IntMatrix::identity(r).row_vecs();
        let hb = hilbert_basis(&local, &lattice)?;
        let eta = hb.iter().fold(vec![Int::zero(); r], |acc, v| {
            acc.iter().zip(v).map(|(a, b)| a + b).collect()
        });
        let images: Vec<Elem> = self
            .generator_coords()
            .iter()
            .map(|c| Elem::free_only(vec![dot(&eta, c)]))
            .collect();
        let target = FsMonoid::natural(1);
        let hom = MonoidHom::new(self.clone(), target, images)?;
        Ok(hom.with_extension())
    }

    /// Splits off the torsion of the unit group: `P^tor` is the torsion
    /// subgroup of `P*` and `P^tf = P/P^tor`. The section of
    /// `P^gp -> (P^tf)^gp` is fixed by the Smith coordinates of
    /// `(P^tf)^gp`. Fails with [`Error::Torsion`] if `(P^tf)^gp` still has
    /// torsion, which happens only for non-saturated `P`.
    pub fn torsion_split(&self) -> Result<TorsionSplit> {
        let amb = self.ambient();
        let units = self.unit_gens();
        let ufree: Vec<Vec<Int>> = units.iter().map(|g| g.free.clone()).collect();
        let k = kernel_basis(&IntMatrix::from_cols(self.free_dim(), &ufree));
        let tor_gens: Vec<Elem> = k
            .col_vecs()
            .iter()
            .map(|c| amb.combine(c, &units))
            .filter(|e| !e.is_zero())
            .collect();
        let tor_pres = GroupPresentation::new(amb, &tor_gens);
        let tor = tor_pres.group();
        debug_assert_eq!(tor.rank, 0);

        let q = Quotient::new(amb, &tor_gens);
        let images: Vec<Elem> = self.gens().iter().map(|g| q.apply(g)).collect();
        let tf = FsMonoid::new(q.target().clone(), images.clone())?;
        self.propagate_saturation(&tf);
        let reps: Vec<Elem> = tf
            .gens()
            .iter()
            .map(|t| {
                let i = images.iter().position(|x| x == t).expect("image of a generator");
                self.gens()[i].clone()
            })
            .collect();
        let tf_gp = tf.groupification();
        if !tf_gp.group().is_torsion_free() {
            return Err(Error::Torsion);
        }
        let section_basis: Vec<Elem> = (0..tf_gp.rank())
            .map(|i| {
                let mut y = tf_gp.coord_ambient().zero();
                y.free[i] = Int::one();
                amb.combine(&tf_gp.coefficients_of_coords(&y), &reps)
            })
            .collect();
        let section = |y: &Elem| -> Elem {
            let c = tf_gp.coords(y).expect("element of the group");
            amb.combine(&c.free, &section_basis)
        };

        let tor_amb = tor_pres.coord_ambient();
        let tor_gens_local: Vec<Elem> = (0..tor_amb.tor_len())
            .map(|i| {
                let mut e = tor_amb.zero();
                e.tor[i] = Int::one();
                e
            })
            .collect();
        let sum_amb = tf.ambient().direct_sum(&tor_amb);
        let mut sum_gens: Vec<Elem> = tf
            .gens()
            .iter()
            .map(|g| tf.ambient().pair(&tor_amb, g, &tor_amb.zero()))
            .collect();
        sum_gens.extend(
            tor_gens_local
                .iter()
                .map(|t| tf.ambient().pair(&tor_amb, &tf.ambient().zero(), t)),
        );
        let sum = FsMonoid::new(sum_amb, sum_gens)?;
        tf.propagate_saturation(&sum);

        let backward_images: Vec<Elem> = sum
            .gens()
            .iter()
            .map(|e| {
                let (y, t) = tf.ambient().unpair(&tor_amb, e);
                amb.add(&section(&y), &tor_pres.element(&t))
            })
            .collect();
        let forward_images: Vec<Elem> = self
            .gens()
            .iter()
            .map(|g| {
                let y = q.apply(g);
                let rest = amb.sub(g, &section(&y));
                let t = tor_pres.coords(&rest).expect("kernel of the quotient");
                tf.ambient().pair(&tor_amb, &y, &t)
            })
            .collect();
        let backward = MonoidHom::new(sum.clone(), self.clone(), backward_images)?.with_extension();
        let forward = MonoidHom::new(self.clone(), sum.clone(), forward_images)?.with_extension();
        Ok(TorsionSplit {
            tf,
            tor,
            sum,
            forward,
            backward,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::ivec;

    fn even() -> FsMonoid {
        FsMonoid::from_free(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap()
    }

    #[test]
    fn saturation_of_numerical_semigroup() {
        let p = FsMonoid::from_free(1, &[&[2], &[3]]).unwrap();
        assert!(!p.is_saturated().unwrap());
        let s = p.saturate().unwrap();
        assert_eq!(s.gens(), &[Elem::from_i64(&[1], &[])]);
        assert!(!p.contains(&Elem::from_i64(&[1], &[])).unwrap());
        assert!(p.contains(&Elem::from_i64(&[5], &[])).unwrap());
    }

    #[test]
    fn even_quadrant_is_saturated() {
        let p = even();
        assert!(p.is_saturated().unwrap());
        assert_eq!(p.saturate().unwrap().gens().len(), 3);
        assert!(!p.contains(&Elem::from_i64(&[1, 0], &[])).unwrap());
        assert!(p.contains(&Elem::from_i64(&[3, 1], &[])).unwrap());
        assert_eq!(p.faces().len(), 4);
    }

    #[test]
    fn units_and_sharpening() {
        let p = FsMonoid::new(
            Ambient::free(2),
            vec![
                Elem::from_i64(&[1, 0], &[]),
                Elem::from_i64(&[-1, 0], &[]),
                Elem::from_i64(&[0, 1], &[]),
            ],
        )
        .unwrap();
        assert_eq!(p.units().rank(), 1);
        let (s, _) = p.sharpen().unwrap();
        assert_eq!(s.free_dim(), 1);
        assert!(s.is_sharp());
        assert_eq!(p.faces().len(), 2);
    }

    #[test]
    fn torsion_units() {
        let amb = Ambient::new(1, ivec(&[2])).unwrap();
        let p = FsMonoid::new(amb, vec![Elem::from_i64(&[1], &[0]), Elem::from_i64(&[0], &[1])]).unwrap();
        assert!(p.units().is_group());
        assert_eq!(p.units().gens().len(), 1);
        let (s, _) = p.sharpen().unwrap();
        assert_eq!(s.ambient(), &Ambient::free(1));
        let split = p.torsion_split().unwrap();
        assert_eq!(split.tor, AbelianGroup::new(0, ivec(&[2])));
        assert!(split.tf.groupification().group().is_torsion_free());
        for x in p.bounded_elements(4) {
            let y = split.forward.apply(&x).unwrap();
            assert_eq!(split.backward.apply(&y).unwrap(), x);
        }
    }

    #[test]
    fn pure_torsion_split() {
        let amb = Ambient::new(0, ivec(&[4])).unwrap();
        let p = FsMonoid::new(amb, vec![Elem::from_i64(&[], &[1])]).unwrap();
        let split = p.torsion_split().unwrap();
        assert!(split.tf.is_zero());
        assert_eq!(split.tor, AbelianGroup::new(0, ivec(&[4])));
    }

    #[test]
    fn even_quadrant_dual_has_three_generators() {
        let d = even().dual_monoid().unwrap();
        assert_eq!(d.gens().len(), 3);
        let dd = d.dual_monoid().unwrap();
        let coords: BTreeSet<Vec<Int>> = even().generator_coords().iter().cloned().collect();
        let back: BTreeSet<Vec<Int>> = dd.gens().iter().map(|g| g.free.clone()).collect();
        assert_eq!(coords, back);
    }

    #[test]
    fn interior_elements() {
        let t = FsMonoid::natural(2).interior_vertical_to_n().unwrap();
        assert_eq!(t.images(), &[Elem::from_i64(&[1, 1], &[])]);
        let t = even().interior_vertical_to_n().unwrap();
        assert_eq!(t.images(), &[Elem::from_i64(&[1, 1], &[])]);
        let t = FsMonoid::natural(1).interior_vertical_to_n().unwrap();
        assert_eq!(t.images(), &[Elem::from_i64(&[1], &[])]);
    }

    #[test]
    fn support_functionals() {
        let p = FsMonoid::natural(2);
        let faces = p.faces();
        let e1 = faces
            .iter()
            .find(|f| f.gens() == vec![Elem::from_i64(&[1, 0], &[])])
            .unwrap();
        let eta = p.support_functional(e1).unwrap();
        assert_eq!(eta.images(), &[Elem::from_i64(&[0], &[]), Elem::from_i64(&[1], &[])]);
        let eta = p.support_functional(&faces[0]).unwrap();
        assert_eq!(eta.images(), &[Elem::from_i64(&[1], &[]), Elem::from_i64(&[1], &[])]);
        assert_eq!(
            p.support_functional(faces.last().unwrap()).unwrap_err(),
            Error::ImproperFace
        );
    }

    #[test]
    fn localization() {
        let p = FsMonoid::natural(2);
        let faces = p.faces();
        let e1 = faces.iter().find(|f| f.selector() == [0]).unwrap();
        let l = p.localize(e1).unwrap();
        assert_eq!(l.units().rank(), 1);
        let l0 = p.localize(&faces[0]).unwrap();
        assert!(l0.same_presentation(&p));
        let r = even();
        let f = r
            .faces()
            .into_iter()
            .find(|f| f.gens() == vec![Elem::from_i64(&[2, 0], &[])])
            .unwrap();
        let lr = r.localize(&f).unwrap();
        let (s, _) = lr.sharpen().unwrap();
        assert_eq!(s.rank(), 1);
        assert!(s.is_sharp());
    }

    #[test]
    fn group_has_one_face() {
        let z = FsMonoid::new(
            Ambient::free(1),
            vec![Elem::from_i64(&[1], &[]), Elem::from_i64(&[-1], &[])],
        )
        .unwrap();
        assert_eq!(z.faces().len(), 1);
        assert_eq!(z.dual_monoid(), Err(Error::NotSharp));
    }
}
