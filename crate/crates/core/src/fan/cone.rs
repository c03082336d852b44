use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::util::combinations;
use crate::zlin::{dot, hermite_rows, is_zero_vec, kernel_basis, neg, primitive, smith_normal_form, Int, IntMatrix};

/// Inequality description of a cone: `{x : e·x = 0 for e in equations,
/// f·x >= 0 for f in facets}`.
///
/// `equations` is the Hermite basis of the orthogonal complement of the
/// linear span; each facet functional lies in the span and is primitive.
/// Both lists are canonical, so two cones are equal iff their
/// descriptions are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HRep {
    pub equations: Vec<Vec<Int>>,
    pub facets: Vec<Vec<Int>>,
}

/// Generalized cross product: a vector orthogonal to the `n-1` rows of `m`,
/// zero iff the rows are dependent.
fn cross(m: &IntMatrix) -> Vec<Int> {
    let n = m.cols();
    debug_assert_eq!(m.rows() + 1, n);
    (0..n)
        .map(|i| {
            let idx: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let d = m.select_cols(&idx).det();
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

fn distinct_primitive(gens: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut out: Vec<Vec<Int>> = Vec::new();
    for g in gens {
        if is_zero_vec(g) {
            continue;
        }
        let p = primitive(g).expect("nonzero");
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Facet enumeration by brute force over `(r-1)`-subsets of generators,
/// where `r` is the dimension of the span. Exact; meant for desk scale.
pub fn hrep(dim: usize, gens: &[Vec<Int>]) -> HRep {
    let gens = distinct_primitive(gens);
    let equations = if gens.is_empty() {
        IntMatrix::identity(dim).row_vecs()
    } else {
        let k = kernel_basis(&IntMatrix::from_rows(dim, gens.clone()));
        hermite_rows(&k.transpose()).row_vecs()
    };
    let r = dim - equations.len();
    let mut facets: BTreeSet<Vec<Int>> = BTreeSet::new();
    if r > 0 {
        for subset in combinations(gens.len(), r - 1) {
            let mut rows: Vec<Vec<Int>> = subset.iter().map(|&i| gens[i].clone()).collect();
            rows.extend(equations.iter().cloned());
            let psi = cross(&IntMatrix::from_rows(dim, rows));
            if is_zero_vec(&psi) {
                continue;
            }
            let mut pos = false;
            let mut negv = false;
            for g in &gens {
                match dot(&psi, g).sign() {
                    num_bigint::Sign::Plus => pos = true,
                    num_bigint::Sign::Minus => negv = true,
                    num_bigint::Sign::NoSign => {}
                }
                if pos && negv {
                    break;
                }
            }
            if pos && negv {
                continue;
            }
            let psi = primitive(&psi).expect("nonzero");
            facets.insert(if negv { neg(&psi) } else { psi });
        }
    }
    HRep {
        equations,
        facets: facets.into_iter().collect(),
    }
}

/// Rational polyhedral cone in `Q^dim`, kept in both descriptions.
///
/// For pointed cones `rays` are the primitive extreme rays, sorted. For
/// non-pointed cones `rays` holds one primitive generator per minimal
/// non-linear face followed by `±` a basis of the lineality lattice.
#[derive(Clone, Debug)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<Int>>,
    hrep: HRep,
    lineality: Vec<Vec<Int>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.hrep == other.hrep
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.hrep.hash(state);
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then(self.cone_dim().cmp(&other.cone_dim()))
            .then_with(|| self.rays.cmp(&other.rays))
            .then_with(|| self.hrep.facets.cmp(&other.hrep.facets))
    }
}

impl Cone {
    pub fn new(dim: usize, gens: &[Vec<Int>]) -> Cone {
        for g in gens {
            assert_eq!(g.len(), dim, "generator length does not match lattice rank");
        }
        let gens = distinct_primitive(gens);
        let hrep = hrep(dim, &gens);
        let mut lin_rows = hrep.equations.clone();
        lin_rows.extend(hrep.facets.iter().cloned());
        let lineality = if lin_rows.is_empty() {
            IntMatrix::identity(dim).row_vecs()
        } else {
            let k = kernel_basis(&IntMatrix::from_rows(dim, lin_rows));
            if k.cols() == 0 {
                vec![]
            } else {
                hermite_rows(&k.transpose()).row_vecs()
            }
        };
        let lin_dim = lineality.len();
        let target_rank = dim.saturating_sub(1 + lin_dim);
        let mut chosen: Vec<(Vec<usize>, Vec<Int>)> = Vec::new();
        for g in &gens {
            let tight: Vec<usize> = (0..hrep.facets.len())
                .filter(|&i| dot(&hrep.facets[i], g).is_zero())
                .collect();
            if tight.len() == hrep.facets.len() && lin_dim > 0 {
                // inside the lineality space
                continue;
            }
            let mut rows = hrep.equations.clone();
            rows.extend(tight.iter().map(|&i| hrep.facets[i].clone()));
            let rank = if rows.is_empty() {
                0
            } else {
                IntMatrix::from_rows(dim, rows).rank()
            };
            if rank != target_rank {
                continue;
            }
            match chosen.iter_mut().find(|(t, _)| *t == tight) {
                Some((_, best)) => {
                    if g < best {
                        *best = g.clone();
                    }
                }
                None => chosen.push((tight, g.clone())),
            }
        }
        let mut rays: Vec<Vec<Int>> = chosen.into_iter().map(|(_, g)| g).collect();
        rays.sort();
        for l in &lineality {
            rays.push(l.clone());
            rays.push(neg(l));
        }
        Cone {
            dim,
            rays,
            hrep,
            lineality,
        }
    }

    pub fn zero(dim: usize) -> Cone {
        Cone::new(dim, &[])
    }

    pub fn from_i64(dim: usize, rays: &[&[i64]]) -> Cone {
        let gens: Vec<Vec<Int>> = rays.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        Cone::new(dim, &gens)
    }

    /// Rank of the ambient lattice.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the linear span.
    pub fn cone_dim(&self) -> usize {
        self.dim - self.hrep.equations.len()
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Vec<Int>] {
        &self.hrep.facets
    }

    pub fn equations(&self) -> &[Vec<Int>] {
        &self.hrep.equations
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.cone_dim() == 0
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.hrep.equations.iter().all(|e| dot(e, v).is_zero())
            && self.hrep.facets.iter().all(|f| !dot(f, v).is_negative())
    }

    /// `v` lies in the relative interior.
    pub fn contains_in_interior(&self, v: &[Int]) -> bool {
        self.hrep.equations.iter().all(|e| dot(e, v).is_zero())
            && self.hrep.facets.iter().all(|f| dot(f, v).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
    }

    /// `{φ : φ(x) >= 0 for x in self}` in the dual lattice.
    pub fn dual(&self) -> Cone {
        let mut gens = self.hrep.facets.clone();
        for e in &self.hrep.equations {
            gens.push(e.clone());
            gens.push(neg(e));
        }
        Cone::new(self.dim, &gens)
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.dim, other.dim);
        let mut gens = Vec::new();
        for c in [self, other] {
            gens.extend(c.hrep.facets.iter().cloned());
            for e in &c.hrep.equations {
                gens.push(e.clone());
                gens.push(neg(e));
            }
        }
        Cone::new(self.dim, &gens).dual()
    }

    /// Faces as sets of ray indices, smallest first. Includes the minimal
    /// face (the zero cone, or the lineality space) and the cone itself.
    pub fn face_index_sets(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let tight: Vec<Vec<bool>> = self
            .hrep
            .facets
            .iter()
            .map(|f| self.rays.iter().map(|r| dot(f, r).is_zero()).collect())
            .collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(all.clone());
        let mut queue = VecDeque::from([all]);
        while let Some(face) = queue.pop_front() {
            for t in &tight {
                let next: Vec<usize> = face.iter().copied().filter(|&i| t[i]).collect();
                if next.len() < face.len() && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut faces: Vec<Vec<usize>> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces
    }

    pub fn faces(&self) -> Vec<Cone> {
        let mut out: Vec<Cone> = self
            .face_index_sets()
            .into_iter()
            .map(|s| {
                let gens: Vec<Vec<Int>> = s.iter().map(|&i| self.rays[i].clone()).collect();
                Cone::new(self.dim, &gens)
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        other.faces().iter().any(|f| f == self)
    }

    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.rays.len() == self.cone_dim()
    }

    /// Index of the sublattice spanned by the rays inside the lattice
    /// points of their span.
    pub fn multiplicity(&self) -> Result<Int> {
        if !self.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        if self.rays.is_empty() {
            return Ok(Int::one());
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(self.dim, self.rays.clone()));
        Ok(snf.diag.iter().product())
    }

    pub fn is_smooth(&self) -> bool {
        self.is_simplicial() && self.multiplicity().map(|m| m.is_one()).unwrap_or(false)
    }

    /// Sum of the rays; lies in the relative interior.
    pub fn interior_point(&self) -> Vec<Int> {
        let mut s = vec![Int::zero(); self.dim];
        for r in &self.rays {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        s
    }

    /// Pulling triangulation from the rays in index order. Each entry is a
    /// sorted set of ray indices spanning a simplicial cone of full
    /// dimension. Requires a pointed cone.
    pub fn triangulate(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        let idx: Vec<usize> = (0..self.rays.len()).collect();
        Ok(pulling(self.dim, &self.rays, idx))
    }
}

/// Pulling triangulation of the cone over `points[idx]`, assuming every
/// indexed point spans an extreme ray of that cone.
pub(crate) fn pulling(dim: usize, points: &[Vec<Int>], idx: Vec<usize>) -> Vec<Vec<usize>> {
    if idx.is_empty() {
        return vec![vec![]];
    }
    let sub: Vec<Vec<Int>> = idx.iter().map(|&i| points[i].clone()).collect();
    let h = hrep(dim, &sub);
    let r = dim - h.equations.len();
    if idx.len() == r {
        return vec![idx];
    }
    let apex = idx[0];
    let mut out = Vec::new();
    for f in &h.facets {
        let face: Vec<usize> = idx.iter().copied().filter(|&i| dot(f, &points[i]).is_zero()).collect();
        if face.contains(&apex) {
            continue;
        }
        for mut s in pulling(dim, points, face) {
            s.push(apex);
            s.sort_unstable();
            out.push(s);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::ivec;

    #[test]
    fn quadrant_is_self_dual() {
        let c = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(c.facets(), &[ivec(&[0, 1]), ivec(&[1, 0])]);
        assert_eq!(c.dual(), c);
        assert!(c.is_smooth());
    }

    #[test]
    fn dual_of_a_ray_is_a_half_plane() {
        let c = Cone::from_i64(2, &[&[1, 0]]);
        let d = c.dual();
        assert!(!d.is_pointed());
        let expect = Cone::from_i64(2, &[&[1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(d, expect);
        let rays: BTreeSet<Vec<Int>> = d.rays().iter().cloned().collect();
        let want: BTreeSet<Vec<Int>> = [ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[0, -1])].into();
        assert_eq!(rays, want);
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn zero_cone_dual_is_everything() {
        let z = Cone::zero(2);
        let d = z.dual();
        assert_eq!(d.cone_dim(), 2);
        assert_eq!(d.lineality().len(), 2);
        assert!(d.contains(&ivec(&[-5, 7])));
        assert_eq!(d.dual(), z);
    }

    #[test]
    fn square_cone_faces_and_triangulation() {
        let c = Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]);
        assert_eq!(c.rays().len(), 4);
        assert_eq!(c.facets().len(), 4);
        // 1 + 4 + 4 + 1
        assert_eq!(c.face_index_sets().len(), 10);
        assert!(!c.is_simplicial());
        assert!(c.multiplicity().is_err());
        let t = c.triangulate().unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn redundant_generators_dropped() {
        let c = Cone::from_i64(2, &[&[1, 0], &[1, 1], &[0, 1], &[2, 0]]);
        assert_eq!(c.rays(), &[ivec(&[0, 1]), ivec(&[1, 0])]);
    }

    #[test]
    fn multiplicity_examples() {
        let c = Cone::from_i64(2, &[&[0, 1], &[2, -1]]);
        assert_eq!(c.multiplicity().unwrap(), Int::from(2));
        assert!(!c.is_smooth());
        assert!(Cone::zero(3).is_smooth());
        let ray = Cone::from_i64(3, &[&[2, 4, 0]]);
        assert_eq!(ray.rays(), &[ivec(&[1, 2, 0])]);
        assert!(ray.is_smooth());
    }

    #[test]
    fn intersection_of_quadrants() {
        let a = Cone::from_i64(2, &[&[1, 0], &[0, 1]]);
        let b = Cone::from_i64(2, &[&[1, 1], &[-1, 1]]);
        let i = a.intersect(&b);
        assert_eq!(i, Cone::from_i64(2, &[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn line_has_no_facets() {
        let c = Cone::from_i64(2, &[&[1, 1], &[-1, -1]]);
        assert!(c.facets().is_empty());
        assert_eq!(c.cone_dim(), 1);
        assert!(!c.is_pointed());
        assert_eq!(c.face_index_sets().len(), 1);
    }
}
