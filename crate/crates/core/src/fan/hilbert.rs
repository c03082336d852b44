use num_traits::{Signed, Zero};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::fan::Cone;
use crate::util::cartesian;
use crate::zlin::{
    clear_denominators, dot, is_zero_vec, kernel_basis, rat_floor, smith_normal_form, solve_integral, solve_rational,
    sub, Int, IntMatrix, Rat,
};

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// columns of the square matrix `v` (full rank).
pub(crate) fn parallelepiped_points(v: &IntMatrix) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(v);
    let ranges: Vec<Int> = snf.diag.clone();
    let mut out = Vec::new();
    for a in cartesian(&ranges) {
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        let x = snf.left_inv.mul_vec(&a);
        let rhs: Vec<Rat> = x.iter().cloned().map(Rat::from_integer).collect();
        let lambda = solve_rational(v, &rhs).expect("full rank");
        let fl: Vec<Int> = lambda.iter().map(rat_floor).collect();
        let p = sub(&x, &v.mul_vec(&fl));
        if !is_zero_vec(&p) {
            out.push(p);
        }
    }
    out
}

/// Hilbert basis of a pointed cone that is full-dimensional in `Z^r`.
fn hilbert_full(cone: &Cone, bounds: &Bounds) -> Result<Vec<Vec<Int>>> {
    let r = cone.dim();
    let rays = cone.rays();
    let simplices = cone.triangulate()?;
    let mut volume = 0usize;
    let mut candidates: Vec<Vec<Int>> = rays.to_vec();
    for s in &simplices {
        let cols: Vec<Vec<Int>> = s.iter().map(|&i| rays[i].clone()).collect();
        let m = IntMatrix::from_cols(r, &cols);
        let det: usize = m.det().abs().try_into().unwrap_or(usize::MAX);
        volume = volume.saturating_add(det);
        Bounds::check("triangulation volume", volume, bounds.max_volume)?;
        for p in parallelepiped_points(&m) {
            if !candidates.contains(&p) {
                candidates.push(p);
            }
        }
    }
    let mut basis: Vec<Vec<Int>> = candidates
        .iter()
        .filter(|x| !candidates.iter().any(|y| y != *x && cone.contains(&sub(x, y))))
        .cloned()
        .collect();
    basis.sort();
    Ok(basis)
}

/// Minimal generating set of `cone(rays) ∩ lattice`, where `lattice` is
/// given by a basis. The rays must lie in the rational span of the lattice
/// and span a pointed cone.
pub fn hilbert_basis(rays: &[Vec<Int>], lattice: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    hilbert_basis_with(rays, lattice, &Bounds::get())
}

pub fn hilbert_basis_with(rays: &[Vec<Int>], lattice: &[Vec<Int>], bounds: &Bounds) -> Result<Vec<Vec<Int>>> {
    let rays: Vec<Vec<Int>> = rays.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    if rays.is_empty() {
        return Ok(vec![]);
    }
    let n = rays[0].len();
    let s = lattice.len();
    let b = IntMatrix::from_cols(n, lattice);
    if b.rank() != s {
        return Err(Error::Precondition("lattice basis is not independent".into()));
    }
    let mut coords = Vec::with_capacity(rays.len());
    for ray in &rays {
        let rhs: Vec<Rat> = ray.iter().cloned().map(Rat::from_integer).collect();
        let c = solve_rational(&b, &rhs)
            .ok_or_else(|| Error::Precondition("ray outside the span of the lattice".into()))?;
        coords.push(clear_denominators(&c).expect("nonzero ray"));
    }
    let in_lattice = Cone::new(s, &coords);
    if !in_lattice.is_pointed() {
        return Err(Error::NotPointed);
    }
    Bounds::check("cone dimension", in_lattice.cone_dim(), bounds.max_dim)?;
    // basis of the saturated sublattice span ∩ Z^s
    let k = if in_lattice.equations().is_empty() {
        IntMatrix::identity(s)
    } else {
        kernel_basis(&IntMatrix::from_rows(s, in_lattice.equations().to_vec()))
    };
    let r = k.cols();
    let local: Vec<Vec<Int>> = coords
        .iter()
        .map(|c| solve_integral(&k, c).expect("point of the saturated span"))
        .collect();
    let full = Cone::new(r, &local);
    let hb = hilbert_full(&full, bounds)?;
    let back = &b * &k;
    let mut out: Vec<Vec<Int>> = hb.iter().map(|x| back.mul_vec(x)).collect();
    out.sort();
    Ok(out)
}

/// Cone membership of `x - y` for a full cone is all the reduction step
/// needs; exposed for the oracle tests.
#[allow(dead_code)]
pub(crate) fn reducible(cone: &Cone, x: &[Int], others: &[Vec<Int>]) -> bool {
    others
        .iter()
        .any(|y| y.as_slice() != x && cone.facets().iter().all(|f| !dot(f, &sub(x, y)).is_negative()))
}
