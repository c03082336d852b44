use num_traits::{One, Zero};

use super::PolyComplex;
use crate::error::{Error, Result};
use crate::zlin::{smith_normal_form, Int, IntMatrix};

/// Integral chain complex `C_top -> … -> C_0 (-> C_{-1})`. `boundaries[k]`
/// maps `C_k` to `C_{k-1}`; entry 0 is the augmentation, a `1 × |C_0|` or
/// `0 × |C_0|` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    sizes: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Checks shapes and `∂∂ = 0`.
    pub fn new(boundaries: Vec<IntMatrix>) -> Result<ChainComplex> {
        let sizes: Vec<usize> = boundaries.iter().map(IntMatrix::cols).collect();
        for k in 1..boundaries.len() {
            if boundaries[k].rows() != sizes[k - 1] {
                return Err(Error::InvalidComplex(format!(
                    "boundary {k} has {} rows, expected {}",
                    boundaries[k].rows(),
                    sizes[k - 1]
                )));
            }
            if !(&boundaries[k - 1] * &boundaries[k]).is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "boundary {k} composed with boundary {} is nonzero",
                    k - 1
                )));
            }
        }
        Ok(ChainComplex { sizes, boundaries })
    }

    /// Simplicial chains of a simplicial complex, with the augmentation if
    /// `reduced`.
    pub fn simplicial(c: &PolyComplex, reduced: bool) -> Result<ChainComplex> {
        if !c.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        let top = c.cells().iter().map(Vec::len).max().unwrap_or(0);
        let by_dim: Vec<Vec<&Vec<usize>>> = (1..=top)
            .map(|n| c.cells().iter().filter(|s| s.len() == n).collect())
            .collect();
        let mut boundaries = Vec::with_capacity(top);
        let n0 = by_dim.first().map(Vec::len).unwrap_or(0);
        let aug_rows = usize::from(reduced);
        let mut aug = IntMatrix::zeros(aug_rows, n0);
        for j in 0..n0 {
            if reduced {
                aug.set(0, j, Int::one());
            }
        }
        boundaries.push(aug);
        for k in 1..by_dim.len() {
            let rows = &by_dim[k - 1];
            let cols = &by_dim[k];
            let mut m = IntMatrix::zeros(rows.len(), cols.len());
            for (j, s) in cols.iter().enumerate() {
                for i in 0..s.len() {
                    let mut face = (*s).clone();
                    face.remove(i);
                    let Ok(r) = rows.binary_search(&&face) else {
                        return Err(Error::InvalidComplex("complex is not closed under faces".into()));
                    };
                    let sign = if i % 2 == 0 { Int::one() } else { -Int::one() };
                    m.set(r, j, sign);
                }
            }
            boundaries.push(m);
        }
        ChainComplex::new(boundaries)
    }

    /// Number of generators in each degree.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    pub fn is_augmented(&self) -> bool {
        self.boundaries.first().map(|b| b.rows() > 0).unwrap_or(false)
    }
}

/// `H_k ≅ Z^betti ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<Int>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology in degrees `0..=dim`; all other degrees vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub reduced: bool,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    pub fn group(&self, degree: usize) -> Option<&HomologyGroup> {
        self.groups.get(degree)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }
}

/// Homology of a complex, or the marker for the empty complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homology {
    Empty,
    Profile(HomologyProfile),
}

impl Homology {
    pub fn profile(&self) -> Option<&HomologyProfile> {
        match self {
            Homology::Empty => None,
            Homology::Profile(p) => Some(p),
        }
    }
}

/// Homology of a chain complex from the Smith forms of its boundaries.
pub fn chain_homology(c: &ChainComplex) -> HomologyProfile {
    let snfs: Vec<(usize, Vec<Int>)> = c
        .boundaries
        .iter()
        .map(|b| {
            if b.rows() == 0 || b.cols() == 0 {
                return (0, vec![]);
            }
            let s = smith_normal_form(b);
            let nz: Vec<Int> = s.diag.iter().filter(|d| !d.is_zero()).cloned().collect();
            (nz.len(), nz)
        })
        .collect();
    let groups = (0..c.sizes.len())
        .map(|k| {
            let outgoing = snfs[k].0;
            let (incoming, torsion) = match snfs.get(k + 1) {
                Some((r, d)) => (*r, d.iter().filter(|x| !x.is_one()).cloned().collect()),
                None => (0, vec![]),
            };
            HomologyGroup {
                degree: k,
                betti: c.sizes[k] - outgoing - incoming,
                torsion,
            }
        })
        .collect();
    HomologyProfile {
        reduced: c.is_augmented(),
        groups,
    }
}

/// Integral (reduced) homology of a simplicial complex.
pub fn homology(c: &PolyComplex, reduced: bool) -> Result<Homology> {
    if c.is_empty() {
        return Ok(Homology::Empty);
    }
    let chains = ChainComplex::simplicial(c, reduced)?;
    Ok(Homology::Profile(chain_homology(&chains)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlin::Rat;

    fn complex(points: &[&[i64]], cells: &[&[usize]]) -> PolyComplex {
        let v = points
            .iter()
            .map(|p| p.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
            .collect();
        PolyComplex::new(v, cells.iter().map(|c| c.to_vec()).collect())
            .unwrap()
            .simplicial_closure()
    }

    fn profile(c: &PolyComplex, reduced: bool) -> HomologyProfile {
        homology(c, reduced).unwrap().profile().unwrap().clone()
    }

    #[test]
    fn hollow_triangle() {
        let c = complex(&[&[0, 0], &[1, 0], &[0, 1]], &[&[0, 1], &[1, 2], &[0, 2]]);
        let h = profile(&c, true);
        assert_eq!(h.betti_numbers(), vec![0, 1]);
        assert!(h.groups.iter().all(|g| g.torsion.is_empty()));
        assert_eq!(profile(&c, false).betti_numbers(), vec![1, 1]);
    }

    #[test]
    fn sphere() {
        let c = complex(
            &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
            &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
        );
        assert_eq!(profile(&c, true).betti_numbers(), vec![0, 0, 1]);
    }

    #[test]
    fn point_and_empty() {
        let c = complex(&[&[0]], &[&[0]]);
        assert!(profile(&c, true).is_acyclic());
        assert_eq!(profile(&c, false).betti_numbers(), vec![1]);
        assert_eq!(homology(&PolyComplex::empty(), true).unwrap(), Homology::Empty);
    }

    #[test]
    fn torsion_from_chains() {
        // Z --2--> Z: H_0 = Z/2.
        let c = ChainComplex::new(vec![IntMatrix::zeros(0, 1), IntMatrix::from_i64(&[&[2]])]).unwrap();
        let h = chain_homology(&c);
        assert_eq!(h.groups[0].torsion, vec![Int::from(2)]);
        assert_eq!(h.groups[0].betti, 0);
        assert_eq!(h.groups[1].betti, 0);
    }

    #[test]
    fn nonzero_square_rejected() {
        let r = ChainComplex::new(vec![IntMatrix::from_i64(&[&[1]]), IntMatrix::from_i64(&[&[1]])]);
        assert!(matches!(r, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn non_simplicial_rejected() {
        let v = [[0, 0], [1, 0], [1, 1], [0, 1]]
            .iter()
            .map(|p| p.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
            .collect();
        let sq = PolyComplex::new(v, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(homology(&sq, true), Err(Error::NotSimplicial));
    }
}
