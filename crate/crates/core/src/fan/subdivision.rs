use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{hilbert_basis, Cone, Fan};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::zlin::{dot, is_primitive, primitive, Int, IntMatrix};

/// Result of [`make_smooth`].
#[derive(Clone, Debug)]
pub struct Resolution {
    pub fan: Fan,
    /// Points of the star subdivisions, in order.
    pub centers: Vec<Vec<Int>>,
    /// Multiplicities above one of all cones, sorted descending, before the
    /// first multiplicity-reducing step and after each one. Strictly
    /// decreasing in the lexicographic (multiset) order; ends empty.
    pub trace: Vec<Vec<Int>>,
}

/// Whether `tau` is the union of its `k`-dimensional pieces, `k = dim tau`:
/// at least one exists and every interior facet of a piece is shared by
/// exactly two pieces.
fn covers(tau: &Cone, pieces: &[Cone]) -> bool {
    let k = tau.cone_dim();
    if k == 0 {
        return true;
    }
    let full: Vec<&Cone> = pieces.iter().filter(|p| p.cone_dim() == k).collect();
    if full.is_empty() {
        return false;
    }
    let mut count: Vec<(Cone, usize)> = Vec::new();
    for p in &full {
        for f in p.faces() {
            if f.cone_dim() + 1 != k {
                continue;
            }
            match count.iter_mut().find(|(c, _)| *c == f) {
                Some((_, n)) => *n += 1,
                None => count.push((f, 1)),
            }
        }
    }
    count.iter().all(|(f, n)| {
        let on_boundary = tau
            .facets()
            .iter()
            .any(|phi| f.rays().iter().all(|r| dot(phi, r).is_zero()));
        if on_boundary {
            *n == 1
        } else {
            *n == 2
        }
    })
}

/// `fine` has the same support as `coarse` and each of its cones lies in a
/// cone of `coarse`.
pub fn is_subdivision(fine: &Fan, coarse: &Fan) -> bool {
    if fine.rank() != coarse.rank() {
        return false;
    }
    let fine_max = fine.maximal_cones();
    let coarse_max = coarse.maximal_cones();
    if !fine_max.iter().all(|s| coarse_max.iter().any(|t| t.contains_cone(s))) {
        return false;
    }
    coarse_max.iter().all(|tau| {
        let pieces: BTreeSet<Cone> = fine_max.iter().map(|s| tau.intersect(s)).collect();
        let pieces: Vec<Cone> = pieces.into_iter().collect();
        covers(tau, &pieces)
    })
}

/// Star subdivision at a primitive vector of the support.
pub fn star_subdivision(fan: &Fan, v: &[Int]) -> Result<Fan> {
    if v.len() != fan.rank() {
        return Err(Error::Dimension(format!(
            "point of length {} for a fan of rank {}",
            v.len(),
            fan.rank()
        )));
    }
    if !is_primitive(v) {
        return Err(Error::NotPrimitive);
    }
    if !fan.support_contains(v) {
        return Err(Error::NotInSupport);
    }
    if fan.rays().iter().any(|r| r.as_slice() == v) {
        return Ok(fan.clone());
    }
    let geo = fan.geometry();
    let holding: Vec<usize> = (0..fan.len()).filter(|&i| geo[i].contains(v)).collect();
    let mut out: Vec<Cone> = Vec::new();
    for i in 0..fan.len() {
        if geo[i].contains(v) {
            continue;
        }
        let tau = &fan.cones()[i];
        let below = holding.iter().any(|&j| tau.iter().all(|x| fan.cones()[j].contains(x)));
        if below {
            let mut rays: Vec<Vec<Int>> = tau.iter().map(|&r| fan.rays()[r].clone()).collect();
            rays.push(v.to_vec());
            out.push(Cone::new(fan.rank(), &rays));
        } else {
            out.push(geo[i].clone());
        }
    }
    // joins of v with faces away from v fit together by construction
    Ok(Fan::from_cones_trusted(fan.rank(), &out))
}

/// All intersections `σ_1 ∩ … ∩ σ_n`. The inputs must share their support.
pub fn common_refinement(fans: &[Fan]) -> Result<Fan> {
    let Some(first) = fans.first() else {
        return Err(Error::Precondition("no fans to refine".into()));
    };
    let rank = first.rank();
    if fans.iter().any(|f| f.rank() != rank) {
        return Err(Error::Dimension("fans of different ranks".into()));
    }
    let mut current = first.maximal_cones();
    for f in &fans[1..] {
        let mut next: BTreeSet<Cone> = BTreeSet::new();
        for a in &current {
            for b in f.maximal_cones() {
                next.insert(a.intersect(&b));
            }
        }
        current = next.into_iter().collect();
    }
    let result = Fan::from_cones(rank, &current)?;
    if !fans.iter().all(|f| is_subdivision(&result, f)) {
        return Err(Error::SupportMismatch);
    }
    Ok(result)
}

fn multiplicity_profile(fan: &Fan) -> Result<Vec<Int>> {
    let mut m: Vec<Int> = Vec::new();
    for c in fan.geometry() {
        let k = c.multiplicity()?;
        if !k.is_one() {
            m.push(k);
        }
    }
    m.sort_by(|a, b| b.cmp(a));
    Ok(m)
}

/// Resolves a fan by star subdivisions. Non-simplicial cones are first cut
/// at the sum of their rays; then a cone of largest multiplicity is cut at
/// its lexicographically smallest Hilbert basis element that is not a ray.
pub fn make_smooth(fan: &Fan) -> Result<Resolution> {
    let bounds = Bounds::get();
    Bounds::check("fan rank", fan.rank(), bounds.max_smooth_dim)?;
    let mut fan = fan.clone();
    let mut centers = Vec::new();
    while let Some(c) = fan
        .geometry()
        .iter()
        .filter(|c| !c.is_simplicial())
        .max_by(|a, b| a.cone_dim().cmp(&b.cone_dim()).then_with(|| b.cmp(a)))
    {
        let v = primitive(&c.interior_point())?;
        fan = star_subdivision(&fan, &v)?;
        centers.push(v);
    }
    let lattice = IntMatrix::identity(fan.rank()).row_vecs();
    let mut trace = vec![multiplicity_profile(&fan)?];
    loop {
        let mut worst: Option<(Int, &Cone)> = None;
        for c in fan.geometry() {
            let m = c.multiplicity()?;
            if m.is_one() {
                continue;
            }
            if worst.as_ref().map(|(w, _)| m > *w).unwrap_or(true) {
                worst = Some((m, c));
            }
        }
        let Some((_, c)) = worst else { break };
        let v = hilbert_basis(c.rays(), &lattice)?
            .into_iter()
            .find(|h| !c.rays().contains(h))
            .expect("a non-smooth simplicial cone has an extra Hilbert basis element");
        fan = star_subdivision(&fan, &v)?;
        centers.push(v);
        let profile = multiplicity_profile(&fan)?;
        debug_assert!(profile < *trace.last().expect("nonempty"));
        trace.push(profile);
    }
    Ok(Resolution { fan, centers, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::ivec;

    fn fan(rank: usize, cones: &[&[&[i64]]]) -> Fan {
        let cs: Vec<Cone> = cones.iter().map(|c| Cone::from_i64(rank, c)).collect();
        Fan::from_cones(rank, &cs).unwrap()
    }

    #[test]
    fn standard_subdivision() {
        let coarse = fan(2, &[&[&[1, 0], &[0, 1]]]);
        let fine = fan(2, &[&[&[1, 0], &[1, 1]], &[&[1, 1], &[0, 1]]]);
        assert!(is_subdivision(&fine, &coarse));
        assert!(!is_subdivision(&coarse, &fine));
        assert!(is_subdivision(&coarse, &coarse));
        let ray = fan(2, &[&[&[1, 0]]]);
        assert!(!is_subdivision(&ray, &coarse));
        assert_eq!(star_subdivision(&coarse, &ivec(&[1, 1])).unwrap(), fine);
        assert_eq!(star_subdivision(&coarse, &ivec(&[1, 0])).unwrap(), coarse);
        assert_eq!(star_subdivision(&coarse, &ivec(&[2, 2])), Err(Error::NotPrimitive));
        assert_eq!(star_subdivision(&coarse, &ivec(&[-1, 0])), Err(Error::NotInSupport));
    }

    #[test]
    fn star_in_three_dimensions() {
        let c = fan(3, &[&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]]);
        let s = star_subdivision(&c, &ivec(&[1, 1, 1])).unwrap();
        assert_eq!(s.maximal().len(), 3);
        assert!(s.is_smooth());
        assert!(is_subdivision(&s, &c));
    }

    #[test]
    fn refinement_of_two_splittings() {
        let a = fan(
            2,
            &[
                &[&[1, 0], &[1, 1]],
                &[&[1, 1], &[-1, 0]],
                &[&[-1, 0], &[-1, -1]],
                &[&[-1, -1], &[1, 0]],
            ],
        );
        let b = fan(
            2,
            &[
                &[&[1, 0], &[1, -1]],
                &[&[1, -1], &[-1, 0]],
                &[&[-1, 0], &[-1, 1]],
                &[&[-1, 1], &[1, 0]],
            ],
        );
        let r = common_refinement(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(r.maximal().len(), 6);
        assert!(is_subdivision(&r, &a) && is_subdivision(&r, &b));
        assert_eq!(common_refinement(&[a.clone(), a.clone()]).unwrap(), a);
        let q = fan(2, &[&[&[1, 0], &[0, 1]]]);
        assert_eq!(common_refinement(&[a, q]), Err(Error::SupportMismatch));
    }

    #[test]
    fn resolutions() {
        let f = fan(2, &[&[&[0, 1], &[2, -1]]]);
        let r = make_smooth(&f).unwrap();
        assert_eq!(r.centers, vec![ivec(&[1, 0])]);
        assert!(r.fan.is_smooth());
        let f = fan(2, &[&[&[0, 1], &[3, -1]]]);
        let r = make_smooth(&f).unwrap();
        assert_eq!(r.centers, vec![ivec(&[1, 0])]);
        assert!(r.fan.is_smooth());
        assert!(is_subdivision(&r.fan, &f));
        let f = fan(2, &[&[&[1, 0], &[1, 5]]]);
        let r = make_smooth(&f).unwrap();
        assert!(r.fan.is_smooth());
        assert!(r.trace.windows(2).all(|w| w[1] < w[0]));
        let sq = fan(3, &[&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]]);
        let r = make_smooth(&sq).unwrap();
        assert!(r.fan.is_smooth() && is_subdivision(&r.fan, &sq));
    }
}
