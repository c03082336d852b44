use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Int, IntMatrix};

/// Row-style Hermite normal form: returns the nonzero rows of the echelon
/// form, with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. The rows form the canonical basis of the row lattice.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !a.get(i, c).is_zero())
                .min_by(|&i, &j| a.get(i, c).abs().cmp(&a.get(j, c).abs()));
            let Some(p) = pivot else { break };
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let q = -(a.get(i, c) / a.get(r, c));
                a.add_row_multiple(i, r, &q);
                if !a.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r, c).is_zero() {
            continue;
        }
        if a.get(r, c).is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let q = -a.get(i, c).div_floor(a.get(r, c));
            a.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    let idx: Vec<usize> = (0..r).collect();
    a.select_rows(&idx)
}

/// Canonical basis of the lattice spanned by `vectors` (each of length `dim`).
pub fn lattice_basis(dim: usize, vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    hermite_rows(&IntMatrix::from_rows(dim, vectors.to_vec())).row_vecs()
}
