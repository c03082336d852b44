use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{AbelianGroup, Int, IntMatrix};

/// `left * m * right == diag(diag)` with `left`, `right` unimodular.
///
/// `left_inv` is the inverse of `left`, tracked during elimination so that
/// callers needing coordinates on both sides of the factorization do not have
/// to invert a unimodular matrix separately.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub diag: Vec<Int>,
    pub right: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The diagonal form as a full matrix with the shape of the original.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.rows());
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    /// Some integral `x` with `m * x == b`, if one exists.
    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        let rows = self.left.rows();
        let cols = self.right.rows();
        assert_eq!(b.len(), rows, "right-hand side has wrong length");
        let c = self.left.mul_vec(b);
        let r = self.rank();
        let mut y = vec![Int::zero(); cols];
        for i in 0..rows {
            if i < r {
                let (q, rem) = c[i].div_rem(&self.diag[i]);
                if !rem.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !c[i].is_zero() {
                return None;
            }
        }
        Some(self.right.mul_vec(&y))
    }

    /// Columns `rank..cols` of `right`: a basis of the integer kernel.
    pub fn kernel(&self) -> IntMatrix {
        let idx: Vec<usize> = (self.rank()..self.right.cols()).collect();
        self.right.select_cols(&idx)
    }
}

fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form with the pivot rule "smallest nonzero absolute value,
/// first in row-major order", so results are reproducible bit for bit.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut left_inv = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let n = rows.min(cols);

    'outer: for t in 0..n {
        loop {
            let Some((pi, pj)) = min_pivot(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            left_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / a.get(t, t));
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                left_inv.add_col_multiple(t, i, &-q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / a.get(t, t));
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = Int::from(1);
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                    left_inv.add_col_multiple(i, t, &-one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
            // inverse of negating row t is negating column t
            for i in 0..rows {
                let v = -left_inv.get(i, t).clone();
                left_inv.set(i, t, v);
            }
        }
    }

    let diag = (0..n).map(|i| a.get(i, i).clone()).collect();
    SmithDecomposition {
        left,
        left_inv,
        diag,
        right,
    }
}

/// Basis (as columns) of the lattice `{x : m x = 0}`. The basis spans a
/// saturated sublattice since it is part of a unimodular matrix.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    smith_normal_form(m).kernel()
}

/// `Z^rows / image(m)`.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    AbelianGroup::new(
        m.rows() - r,
        snf.diag[..r].iter().filter(|d| **d > Int::from(1)).cloned().collect(),
    )
}

/// Some integral solution of `m x = b`, or `None` when none exists.
pub fn solve_integral(m: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    smith_normal_form(m).solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.left * m) * &s.right, s.diagonal_matrix());
        assert!(s.left.is_unimodular());
        assert!(s.right.is_unimodular());
        assert_eq!(&s.left * &s.left_inv, IntMatrix::identity(m.rows()));
        let nz: Vec<&Int> = s.diag.iter().filter(|d| !d.is_zero()).collect();
        for w in nz.windows(2) {
            assert!(w[1].is_multiple_of(w[0]));
        }
        assert!(s.diag.iter().all(|d| !d.is_negative()));
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diag, vec![Int::from(1), Int::from(6)]);
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.diag, vec![Int::from(1); 3]);
        assert_eq!(s.left, IntMatrix::identity(3));
        assert_eq!(s.right, IntMatrix::identity(3));
        let s = check(&IntMatrix::zeros(2, 2));
        assert_eq!(s.diag, vec![Int::from(0); 2]);
    }

    #[test]
    fn rectangular() {
        check(&IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        check(&IntMatrix::from_i64(&[&[6, 4], &[10, 14], &[3, 9]]));
        check(&IntMatrix::from_i64(&[&[0, 0, 5, 0]]));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&IntMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        let v = k.col(0);
        assert!(v == vec![Int::from(1), Int::from(-1)] || v == vec![Int::from(-1), Int::from(1)]);

        assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);

        let k = kernel_basis(&IntMatrix::from_i64(&[&[2, -2]]));
        let v = k.col(0);
        assert!(v == vec![Int::from(1), Int::from(1)] || v == vec![Int::from(-1), Int::from(-1)]);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(
            cokernel(&IntMatrix::from_i64(&[&[2]])),
            AbelianGroup::new(0, vec![Int::from(2)])
        );
        assert_eq!(cokernel(&IntMatrix::identity(2)), AbelianGroup::new(0, vec![]));
        // n -> (2n, 0) into Z^2
        assert_eq!(
            cokernel(&IntMatrix::from_i64(&[&[2], &[0]])),
            AbelianGroup::new(1, vec![Int::from(2)])
        );
    }

    #[test]
    fn solve_examples() {
        let m = IntMatrix::from_i64(&[&[2]]);
        assert_eq!(solve_integral(&m, &[Int::from(4)]), Some(vec![Int::from(2)]));
        assert_eq!(solve_integral(&m, &[Int::from(3)]), None);
        let m = IntMatrix::from_i64(&[&[1, 1], &[0, 2]]);
        assert_eq!(
            solve_integral(&m, &[Int::from(3), Int::from(2)]),
            Some(vec![Int::from(2), Int::from(1)])
        );
    }
}
