use std::collections::BTreeSet;

use super::Cone;
use crate::error::{Error, Result};
use crate::monoid::{FsMonoid, MonoidHom};
use crate::zlin::{is_zero_vec, Int, IntMatrix};

/// A finite fan of pointed cones in `Q^rank`.
///
/// Canonical form: `rays` sorted, each cone a sorted set of ray indices,
/// the cone list closed under faces (including the zero cone) and sorted by
/// dimension then lexicographically. Two fans are equal iff their canonical
/// forms are.
#[derive(Clone, Debug)]
pub struct Fan {
    rank: usize,
    rays: Vec<Vec<Int>>,
    cones: Vec<Vec<usize>>,
    geometry: Vec<Cone>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.rays == other.rays && self.cones == other.cones
    }
}

impl Eq for Fan {}

impl Fan {
    /// The fan generated by `cones` and all their faces. Fails unless every
    /// cone is pointed and any two meet in a common face.
    pub fn from_cones(rank: usize, cones: &[Cone]) -> Result<Fan> {
        let mut all: BTreeSet<Cone> = BTreeSet::new();
        all.insert(Cone::zero(rank));
        for c in cones {
            if c.dim() != rank {
                return Err(Error::Dimension(format!(
                    "cone in rank {} inside a fan of rank {rank}",
                    c.dim()
                )));
            }
            if !c.is_pointed() {
                return Err(Error::InvalidFan("fans consist of pointed cones".into()));
            }
            all.extend(c.faces());
        }
        let cones: Vec<Cone> = all.into_iter().collect();
        let maximal: Vec<&Cone> = cones
            .iter()
            .filter(|c| !cones.iter().any(|d| d != *c && d.contains_cone(c)))
            .collect();
        for (i, a) in maximal.iter().enumerate() {
            for b in &maximal[i + 1..] {
                let m = a.intersect(b);
                if !m.is_face_of(a) || !m.is_face_of(b) {
                    return Err(Error::InvalidFan("two cones do not meet in a common face".into()));
                }
            }
        }
        Ok(Self::assemble(rank, cones))
    }

    /// Face closure of cones known to form a fan, without the pairwise
    /// intersection check.
    pub(crate) fn from_cones_trusted(rank: usize, cones: &[Cone]) -> Fan {
        let mut all: BTreeSet<Cone> = BTreeSet::new();
        all.insert(Cone::zero(rank));
        for c in cones {
            debug_assert!(c.dim() == rank && c.is_pointed());
            if !all.contains(c) {
                all.extend(c.faces());
            }
        }
        Self::assemble(rank, all.into_iter().collect())
    }

    /// Builds the canonical form from a face-closed list of valid cones.
    fn assemble(rank: usize, cones: Vec<Cone>) -> Fan {
        let rays: BTreeSet<Vec<Int>> = cones
            .iter()
            .filter(|c| c.cone_dim() == 1)
            .map(|c| c.rays()[0].clone())
            .collect();
        let rays: Vec<Vec<Int>> = rays.into_iter().collect();
        let mut entries: Vec<(Vec<usize>, Cone)> = cones
            .into_iter()
            .map(|c| {
                let mut idx: Vec<usize> = c
                    .rays()
                    .iter()
                    .map(|r| rays.binary_search(r).expect("ray of a face"))
                    .collect();
                idx.sort_unstable();
                (idx, c)
            })
            .collect();
        entries.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        entries.dedup_by(|a, b| a.0 == b.0);
        let (cones, geometry) = entries.into_iter().unzip();
        Fan {
            rank,
            rays,
            cones,
            geometry,
        }
    }

    /// The fan of all faces of one pointed cone.
    pub fn from_cone(cone: &Cone) -> Result<Fan> {
        Self::from_cones(cone.dim(), std::slice::from_ref(cone))
    }

    /// Fan with cones given by lists of ray vectors.
    pub fn from_ray_lists(rank: usize, cones: &[Vec<Vec<Int>>]) -> Result<Fan> {
        let mut cs = Vec::with_capacity(cones.len());
        for rays in cones {
            for r in rays {
                if r.len() != rank {
                    return Err(Error::Dimension(format!(
                        "ray of length {} in a fan of rank {rank}",
                        r.len()
                    )));
                }
            }
            cs.push(Cone::new(rank, rays));
        }
        Self::from_cones(rank, &cs)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    /// Cones as sorted sets of ray indices.
    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn cone(&self, i: usize) -> &Cone {
        &self.geometry[i]
    }

    pub fn geometry(&self) -> &[Cone] {
        &self.geometry
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn index_of(&self, rays: &[usize]) -> Option<usize> {
        self.cones.iter().position(|c| c == rays)
    }

    /// Indices of cones that are not proper faces of another cone.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&i| {
                !self
                    .cones
                    .iter()
                    .any(|d| d.len() > self.cones[i].len() && self.cones[i].iter().all(|x| d.contains(x)))
            })
            .collect()
    }

    pub fn maximal_cones(&self) -> Vec<Cone> {
        self.maximal().into_iter().map(|i| self.geometry[i].clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.geometry.iter().map(Cone::cone_dim).max().unwrap_or(0)
    }

    /// Whether `v` lies in the support.
    pub fn support_contains(&self, v: &[Int]) -> bool {
        self.maximal().iter().any(|&i| self.geometry[i].contains(v))
    }

    /// The subfan formed by the cones at `keep`, which must be closed
    /// under faces.
    pub fn subfan(&self, keep: &[usize]) -> Fan {
        let cones: Vec<Cone> = keep.iter().map(|&i| self.geometry[i].clone()).collect();
        Self::assemble(self.rank, cones)
    }

    /// Whether each face of each listed cone is listed.
    pub fn is_face_closed(&self, keep: &[usize]) -> bool {
        keep.iter().all(|&i| {
            self.cones
                .iter()
                .enumerate()
                .all(|(j, c)| !c.iter().all(|x| self.cones[i].contains(x)) || keep.contains(&j))
        })
    }

    pub fn is_smooth(&self) -> bool {
        self.geometry.iter().all(Cone::is_smooth)
    }

    pub fn is_simplicial(&self) -> bool {
        self.geometry.iter().all(Cone::is_simplicial)
    }

    /// `Spec(P)`: the faces of the dual cone of `P`, in the dual lattice of
    /// the lattice coordinates of `P^gp`.
    pub fn spec(p: &FsMonoid) -> Result<Fan> {
        if !p.is_sharp() {
            return Err(Error::NotSharp);
        }
        if !p.groupification().group().is_torsion_free() {
            return Err(Error::Torsion);
        }
        Fan::from_cone(&p.local_cone().dual())
    }
}

/// A lattice map carrying each cone of `source` into a cone of `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanMorphism {
    source: Fan,
    target: Fan,
    matrix: IntMatrix,
    witnesses: Vec<usize>,
}

impl FanMorphism {
    /// The morphism with, per source cone, the smallest target cone
    /// containing its image; `None` if some image lies in no target cone.
    pub fn check(source: &Fan, target: &Fan, matrix: &IntMatrix) -> Result<Option<FanMorphism>> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::Dimension(format!(
                "map must be {}x{}, got {}x{}",
                target.rank(),
                source.rank(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut witnesses = Vec::with_capacity(source.len());
        for c in source.geometry() {
            let images: Vec<Vec<Int>> = c.rays().iter().map(|r| matrix.mul_vec(r)).collect();
            let found = target
                .geometry()
                .iter()
                .enumerate()
                .filter(|(_, t)| images.iter().all(|v| t.contains(v)))
                .min_by_key(|(_, t)| t.cone_dim())
                .map(|(i, _)| i);
            match found {
                Some(i) => witnesses.push(i),
                None => return Ok(None),
            }
        }
        Ok(Some(FanMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: matrix.clone(),
            witnesses,
        }))
    }

    pub fn identity(f: &Fan) -> FanMorphism {
        FanMorphism {
            source: f.clone(),
            target: f.clone(),
            matrix: IntMatrix::identity(f.rank()),
            witnesses: (0..f.len()).collect(),
        }
    }

    /// `Spec(Q) -> Spec(P)` for `θ: P -> Q` with both sides sharp and
    /// torsion-free: the transpose of `θ` in lattice coordinates.
    pub fn spec_of(theta: &MonoidHom) -> Result<FanMorphism> {
        let p = theta.source();
        let q = theta.target();
        let sp = Fan::spec(p)?;
        let sq = Fan::spec(q)?;
        let cols: Vec<Vec<Int>> = p
            .lattice_basis()
            .col_vecs()
            .iter()
            .map(|b| {
                let x = p.lift_free(b).expect("lattice vector");
                let y = theta.apply(&x)?;
                q.lattice_coords(&y.free).ok_or(Error::NotMember)
            })
            .collect::<Result<_>>()?;
        let t = IntMatrix::from_cols(q.rank(), &cols);
        Self::check(&sq, &sp, &t.transpose())?
            .ok_or_else(|| Error::InvalidHom("dual map does not respect the fans".into()))
    }

    pub fn source(&self) -> &Fan {
        &self.source
    }

    pub fn target(&self) -> &Fan {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Target cone index witnessing each source cone.
    pub fn witnesses(&self) -> &[usize] {
        &self.witnesses
    }

    fn kills(&self, ray: &[Int]) -> bool {
        is_zero_vec(&self.matrix.mul_vec(ray))
    }

    /// The largest subfan none of whose nonzero cones maps to zero: the
    /// cones without a ray in the kernel.
    pub fn vertical_subfan(&self) -> Fan {
        let killed: Vec<bool> = self.source.rays().iter().map(|r| self.kills(r)).collect();
        let keep: Vec<usize> = (0..self.source.len())
            .filter(|&i| self.source.cones()[i].iter().all(|&r| !killed[r]))
            .collect();
        self.source.subfan(&keep)
    }

    pub fn is_vertical(&self) -> bool {
        self.source.rays().iter().all(|r| !self.kills(r))
    }

    /// Whether the image of cone `i` is the zero cone.
    pub fn maps_to_zero(&self, i: usize) -> bool {
        self.source.cones()[i]
            .iter()
            .all(|&r| self.kills(&self.source.rays()[r]))
    }
}

/// `[f]` as a `1 × r` matrix.
pub(crate) fn row_matrix(f: &[Int]) -> IntMatrix {
    IntMatrix::from_rows(f.len(), vec![f.to_vec()])
}

/// The morphism `Spec(P) -> Spec(N)` induced by `N -> P, 1 -> x`, for `P`
/// sharp with torsion-free groupification.
pub fn spec_of_element(p: &FsMonoid, x: &crate::monoid::Elem) -> Result<FanMorphism> {
    let sp = Fan::spec(p)?;
    let f = p.lattice_coords(&x.free).ok_or(Error::NotMember)?;
    let sn = Fan::spec(&FsMonoid::natural(1))?;
    FanMorphism::check(&sp, &sn, &row_matrix(&f))?
        .ok_or_else(|| Error::InvalidHom("element does not lie in the monoid".into()))
}
