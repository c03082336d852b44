//! Brute-force oracles used to cross-check the main algorithms.
//!
//! Each oracle solves its problem by direct enumeration and shares as
//! little code as possible with the routine it checks. They are slow and
//! only meant for desk-scale inputs.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bounds::Bounds;
use crate::error::Result;
use crate::fan::{Cone, FanMorphism};
use crate::monoid::{Elem, FsMonoid};
use crate::topo::PolyComplex;
use crate::util::combinations;
use crate::zlin::{kernel_basis, neg, Int, IntMatrix, Rat};

/// Faces of `p` as sets of generator indices, found by testing every
/// subset `S` of the generators: `S` must contain each generator lying in
/// the submonoid `⟨S⟩`, and `⟨S⟩` must be closed under summands among sums
/// of at most `bound` generators. Membership in `⟨S⟩` is decided among
/// sums of at most `2·bound` elements of `S`. Faces are always found; a
/// non-face is rejected only if a witness lies within the bound, so small
/// bounds can report too many faces.
pub fn faces_by_summand_closure(p: &FsMonoid, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = p.gens().len();
    Bounds::check("generator count", n, 12)?;
    let amb = p.ambient();
    let elems = p.bounded_elements(bound);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = FsMonoid::new(amb.clone(), s.iter().map(|&i| p.gens()[i].clone()).collect())?;
        let inside: BTreeSet<Elem> = sub.bounded_elements(2 * bound).into_iter().collect();
        if (0..n).any(|i| !s.contains(&i) && inside.contains(&p.gens()[i])) {
            continue;
        }
        let closed = elems.iter().all(|x| {
            elems
                .iter()
                .all(|y| !inside.contains(&amb.add(x, y)) || (inside.contains(x) && inside.contains(y)))
        });
        if closed {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Whether `x` is a sum of at most `bound` generators.
pub fn member_bounded(p: &FsMonoid, x: &Elem, bound: usize) -> bool {
    p.bounded_elements(bound).contains(x)
}

fn killed(m: &FanMorphism, ray: &[Int]) -> bool {
    m.matrix().mul_vec(ray).iter().all(Zero::is_zero)
}

/// The vertical subfan as cone indices, by trying every subset of cones:
/// the largest face-closed subset none of whose nonzero cones has a
/// nonzero face mapped to zero.
pub fn vertical_subfan_exhaustive(m: &FanMorphism) -> Result<Vec<usize>> {
    let f = m.source();
    let n = f.len();
    Bounds::check("cone count", n, 18)?;
    let bad: Vec<bool> = (0..n)
        .map(|i| {
            let ci = &f.cones()[i];
            (0..n).any(|j| {
                let cj = &f.cones()[j];
                !cj.is_empty() && cj.iter().all(|r| ci.contains(r)) && cj.iter().all(|&r| killed(m, &f.rays()[r]))
            })
        })
        .collect();
    let mut best: Vec<usize> = vec![];
    for mask in 0u32..(1 << n) {
        let keep: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if keep.len() <= best.len() || keep.iter().any(|&i| bad[i]) || !f.is_face_closed(&keep) {
            continue;
        }
        best = keep;
    }
    Ok(best)
}

/// The vertical subfan as cone indices, geometrically: the cones meeting
/// the kernel of the map only at the origin.
pub fn vertical_subfan_geometric(m: &FanMorphism) -> Vec<usize> {
    let f = m.source();
    let k = kernel_basis(m.matrix()).col_vecs();
    let mut gens = Vec::with_capacity(2 * k.len());
    for v in &k {
        gens.push(v.clone());
        gens.push(neg(v));
    }
    let ker = Cone::new(f.rank(), &gens);
    (0..f.len())
        .filter(|&i| f.geometry()[i].intersect(&ker).is_zero())
        .collect()
}

/// Rank over `Q` by Gaussian elimination on rationals.
pub fn rank_over_q(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<Rat>> = m
        .row_vecs()
        .into_iter()
        .map(|r| r.into_iter().map(Rat::from_integer).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let q = &a[r][c] / &a[rank][c];
                for j in c..cols {
                    let d = &q * &a[rank][j];
                    a[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nonzero invariant factors by naive elimination: move a smallest entry
/// to the pivot, reduce its row and column, and fold in any entry the
/// pivot does not divide.
pub fn naive_invariant_factors(m: &IntMatrix) -> Vec<Int> {
    let mut a: Vec<Vec<Int>> = m.row_vecs();
    let (rows, cols) = (m.rows(), m.cols());
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
            else {
                out.sort();
                return out;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..rows {
                        let d = &q * &a[i][t];
                        a[i][j] -= d;
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let stray = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match stray {
                Some(i) => {
                    for j in t..cols {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out.retain(|x| !x.is_zero());
    out.sort();
    out
}

fn det(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    if n == 0 {
        return Int::one();
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<Int>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][j] * det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Invariant factors as ratios of determinantal divisors: `d_k` is the
/// gcd of all `k × k` minors and the `k`-th factor is `d_k / d_{k-1}`.
pub fn determinantal_invariant_factors(m: &IntMatrix) -> Result<Vec<Int>> {
    let (rows, cols) = (m.rows(), m.cols());
    Bounds::check("matrix size", rows.max(cols), 6)?;
    let a = m.row_vecs();
    let mut out = Vec::new();
    let mut prev = Int::one();
    for k in 1..=rows.min(cols) {
        let mut d = Int::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<Int>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect())
                    .collect();
                d = d.gcd(&det(&sub));
            }
        }
        if d.is_zero() {
            break;
        }
        out.push(&d / &prev);
        prev = d;
    }
    Ok(out)
}

/// `(betti, torsion)` per degree of a simplicial complex, from rational
/// ranks and naive invariant factors of freshly built boundary matrices.
pub fn homology_brute(c: &PolyComplex, reduced: bool) -> Vec<(usize, Vec<Int>)> {
    let top = c.cells().iter().map(Vec::len).max().unwrap_or(0);
    let by_size: Vec<Vec<Vec<usize>>> = (1..=top)
        .map(|n| {
            let mut v: Vec<Vec<usize>> = c.cells().iter().filter(|s| s.len() == n).cloned().collect();
            v.sort();
            v
        })
        .collect();
    // boundary from size n+1 to size n, as a dense matrix
    let boundary = |k: usize| -> IntMatrix {
        let rows = &by_size[k - 1];
        let cols = &by_size[k];
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (j, s) in cols.iter().enumerate() {
            for (i, r) in rows.iter().enumerate() {
                if let Some(pos) = (0..s.len()).find(|&p| {
                    let mut f = s.clone();
                    f.remove(p);
                    f == *r
                }) {
                    m.set(i, j, if pos % 2 == 0 { Int::one() } else { -Int::one() });
                }
            }
        }
        m
    };
    let mut out_rank = vec![0usize; top + 1];
    let mut torsion_of = vec![Vec::new(); top + 1];
    for k in 1..top {
        let b = boundary(k);
        out_rank[k] = rank_over_q(&b);
        torsion_of[k - 1] = naive_invariant_factors(&b)
            .into_iter()
            .filter(|x| !x.is_one())
            .collect();
    }
    if reduced && top > 0 {
        out_rank[0] = 1;
    }
    (0..top)
        .map(|k| {
            let n = by_size[k].len();
            let incoming = if k + 1 < top { out_rank[k + 1] } else { 0 };
            (n - out_rank[k] - incoming, torsion_of[k].clone())
        })
        .collect()
}

/// Lattice points of `cone` in `[-bound, bound]^n` that are not the sum
/// of two nonzero lattice points of the cone in the same box. For a cone
/// in the nonnegative orthant whose Hilbert basis lies in the box this is
/// exactly the Hilbert basis.
pub fn hilbert_basis_box(cone: &Cone, bound: i64) -> Result<Vec<Vec<Int>>> {
    let n = cone.dim();
    Bounds::check("box dimension", n, 3)?;
    let side = vec![Int::from(2 * bound); n];
    let pts: Vec<Vec<Int>> = crate::util::cartesian(&side)
        .into_iter()
        .map(|v| v.into_iter().map(|x| x - Int::from(bound)).collect::<Vec<Int>>())
        .filter(|v| !v.iter().all(Zero::is_zero) && cone.contains(v))
        .collect();
    let set: BTreeSet<&Vec<Int>> = pts.iter().collect();
    let mut out: Vec<Vec<Int>> = pts
        .iter()
        .filter(|x| {
            !pts.iter().any(|y| {
                let d: Vec<Int> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                *y != **x && !d.iter().all(Zero::is_zero) && set.contains(&d)
            })
        })
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{hilbert_basis, spec_of_element};
    use crate::zlin::{ivec, smith_normal_form};

    #[test]
    fn even_quadrant_faces_and_subfans() {
        let p = FsMonoid::from_free(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        let faces = faces_by_summand_closure(&p, 3).unwrap();
        assert_eq!(faces.len(), 4);
        let lib: Vec<Vec<usize>> = p.faces().iter().map(|f| f.selector().to_vec()).collect();
        assert_eq!(faces, lib);
        let m = spec_of_element(&p, &Elem::from_i64(&[2, 0], &[])).unwrap();
        let ex = vertical_subfan_exhaustive(&m).unwrap();
        assert_eq!(ex.len(), 2);
        assert_eq!(ex, vertical_subfan_geometric(&m));
    }

    #[test]
    fn invariant_factor_oracles_agree() {
        let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let naive = naive_invariant_factors(&m);
        assert_eq!(naive, ivec(&[2, 6, 12]));
        assert_eq!(determinantal_invariant_factors(&m).unwrap(), naive);
        let s = smith_normal_form(&m);
        let lib: Vec<Int> = s.diag.iter().filter(|d| !d.is_zero()).cloned().collect();
        assert_eq!(lib, naive);
        assert_eq!(rank_over_q(&m), 3);
    }

    #[test]
    fn box_hilbert_basis() {
        let c = Cone::from_i64(2, &[&[1, 0], &[1, 3]]);
        let lattice = IntMatrix::identity(2).row_vecs();
        assert_eq!(
            hilbert_basis_box(&c, 4).unwrap(),
            hilbert_basis(c.rays(), &lattice).unwrap()
        );
    }
}
