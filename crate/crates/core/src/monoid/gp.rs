use num_traits::{One, Zero};

use super::ambient::{Ambient, Elem};
use crate::zlin::{kernel_basis, modulo, smith_normal_form, solve_integral, AbelianGroup, Int, IntMatrix};

/// The subgroup of an ambient group generated by a finite list, presented
/// as `Z^m / relations` and put in Smith form.
///
/// [`coords`](GroupPresentation::coords) identifies the subgroup with
/// `Z^rank ⊕ ⊕ Z/f_i`, written as an [`Elem`] of
/// [`coord_ambient`](GroupPresentation::coord_ambient).
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    ambient: Ambient,
    gens: Vec<Elem>,
    matrix: IntMatrix,
    left: IntMatrix,
    left_inv: IntMatrix,
    free_rows: Vec<usize>,
    tor_rows: Vec<usize>,
    factors: Vec<Int>,
    relations: Vec<Vec<Int>>,
}

impl GroupPresentation {
    pub fn new(ambient: &Ambient, gens: &[Elem]) -> GroupPresentation {
        let m = gens.len();
        let matrix = ambient.presentation_matrix(gens);
        let kernel = kernel_basis(&matrix);
        let relations: Vec<Vec<Int>> = kernel
            .col_vecs()
            .into_iter()
            .map(|c| c[..m].to_vec())
            .filter(|c| c.iter().any(|x| !x.is_zero()))
            .collect();
        let rel = IntMatrix::from_cols(m, &relations);
        let snf = smith_normal_form(&rel);
        let diag = |i: usize| -> Int { snf.diag.get(i).cloned().unwrap_or_else(Int::zero) };
        let free_rows: Vec<usize> = (0..m).filter(|&i| diag(i).is_zero()).collect();
        let tor_rows: Vec<usize> = (0..m)
            .filter(|&i| {
                let d = diag(i);
                !d.is_zero() && !d.is_one()
            })
            .collect();
        let factors = tor_rows.iter().map(|&i| diag(i)).collect();
        GroupPresentation {
            ambient: ambient.clone(),
            gens: gens.to_vec(),
            matrix,
            left: snf.left,
            left_inv: snf.left_inv,
            free_rows,
            tor_rows,
            factors,
            relations,
        }
    }

    pub fn group(&self) -> AbelianGroup {
        AbelianGroup::new(self.free_rows.len(), self.factors.clone())
    }

    pub fn rank(&self) -> usize {
        self.free_rows.len()
    }

    pub fn coord_ambient(&self) -> Ambient {
        Ambient {
            free_dim: self.free_rows.len(),
            torsion: self.factors.clone(),
        }
    }

    /// Basis of the relation lattice among the generators.
    pub fn relations(&self) -> &[Vec<Int>] {
        &self.relations
    }

    /// Some integer vector `c` with `Σ c_i g_i = x`, if `x` lies in the
    /// subgroup.
    pub fn gen_coefficients(&self, x: &Elem) -> Option<Vec<Int>> {
        let c = solve_integral(&self.matrix, &self.ambient.flat(x))?;
        Some(c[..self.gens.len()].to_vec())
    }

    pub fn contains(&self, x: &Elem) -> bool {
        self.gen_coefficients(x).is_some()
    }

    /// Coordinates of a combination of generators.
    pub fn coords_of_coefficients(&self, c: &[Int]) -> Elem {
        let y = self.left.mul_vec(c);
        Elem {
            free: self.free_rows.iter().map(|&i| y[i].clone()).collect(),
            tor: self
                .tor_rows
                .iter()
                .zip(&self.factors)
                .map(|(&i, f)| modulo(&y[i], f))
                .collect(),
        }
    }

    pub fn coords(&self, x: &Elem) -> Option<Elem> {
        self.gen_coefficients(x).map(|c| self.coords_of_coefficients(&c))
    }

    /// Generator coefficients of the element with coordinates `y`.
    pub fn coefficients_of_coords(&self, y: &Elem) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.gens.len()];
        for (k, &i) in self.free_rows.iter().enumerate() {
            v[i] = y.free[k].clone();
        }
        for (k, &i) in self.tor_rows.iter().enumerate() {
            v[i] = y.tor[k].clone();
        }
        self.left_inv.mul_vec(&v)
    }

    /// The ambient element with coordinates `y`.
    pub fn element(&self, y: &Elem) -> Elem {
        self.ambient.combine(&self.coefficients_of_coords(y), &self.gens)
    }

    /// Element with coordinate vector `e_i` (free coordinates first).
    pub fn basis_element(&self, i: usize) -> Elem {
        let ca = self.coord_ambient();
        let mut y = ca.zero();
        if i < y.free.len() {
            y.free[i] = Int::one();
        } else {
            y.tor[i - ca.free_dim] = Int::one();
        }
        self.element(&y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::ivec;

    #[test]
    fn index_two_sublattice_is_free_of_rank_two() {
        let a = Ambient::free(2);
        let gens = [
            Elem::from_i64(&[2, 0], &[]),
            Elem::from_i64(&[1, 1], &[]),
            Elem::from_i64(&[0, 2], &[]),
        ];
        let g = GroupPresentation::new(&a, &gens);
        assert_eq!(g.group(), AbelianGroup::new(2, vec![]));
        assert!(g.contains(&Elem::from_i64(&[3, 1], &[])));
        assert!(!g.contains(&Elem::from_i64(&[1, 0], &[])));
        let x = Elem::from_i64(&[5, -3], &[]);
        let y = g.coords(&x).unwrap();
        assert_eq!(g.element(&y), x);
    }

    #[test]
    fn torsion_in_the_group() {
        let a = Ambient::new(1, ivec(&[2])).unwrap();
        let gens = [Elem::from_i64(&[1], &[0]), Elem::from_i64(&[0], &[1])];
        let g = GroupPresentation::new(&a, &gens);
        assert_eq!(g.group(), AbelianGroup::new(1, ivec(&[2])));
        for i in 0..2 {
            let b = g.basis_element(i);
            assert_eq!(
                g.coords(&b).unwrap(),
                g.coord_ambient().normalize({
                    let mut z = g.coord_ambient().zero();
                    if i == 0 {
                        z.free[0] = Int::one();
                    } else {
                        z.tor[0] = Int::one();
                    }
                    z
                })
            );
        }
    }

    #[test]
    fn trivial_group() {
        let g = GroupPresentation::new(&Ambient::free(2), &[]);
        assert!(g.group().is_trivial());
        assert!(g.contains(&Elem::from_i64(&[0, 0], &[])));
    }
}
