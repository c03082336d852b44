use std::collections::BTreeSet;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::fan::{pulling, Fan};
use crate::zlin::{clear_denominators, dot, Int, IntMatrix, Rat};

/// Finite polyhedral complex with exact rational vertices. Each cell is
/// the convex hull of the vertices it lists, stored as a sorted index set;
/// faces of cells are expected to be cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyComplex {
    vertices: Vec<Vec<Rat>>,
    cells: Vec<Vec<usize>>,
}

impl PolyComplex {
    pub fn new(vertices: Vec<Vec<Rat>>, cells: Vec<Vec<usize>>) -> Result<PolyComplex> {
        let n = vertices.first().map(Vec::len).unwrap_or(0);
        if vertices.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidComplex("vertices of different lengths".into()));
        }
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut c in cells {
            if c.is_empty() {
                return Err(Error::InvalidComplex("empty cell".into()));
            }
            if let Some(&bad) = c.iter().find(|&&i| i >= vertices.len()) {
                return Err(Error::InvalidComplex(format!("vertex index {bad} out of range")));
            }
            c.sort_unstable();
            c.dedup();
            set.insert(c);
        }
        let mut cells: Vec<Vec<usize>> = set.into_iter().collect();
        cells.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(PolyComplex { vertices, cells })
    }

    pub fn empty() -> PolyComplex {
        PolyComplex {
            vertices: vec![],
            cells: vec![],
        }
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Integer points on the rays over the vertices: `(x, 1)` scaled to a
    /// primitive vector.
    fn homogenized(&self) -> Vec<Vec<Int>> {
        self.vertices
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.push(Rat::one());
                clear_denominators(&w).expect("last coordinate is one")
            })
            .collect()
    }

    fn ambient_len(&self) -> usize {
        self.vertices.first().map(Vec::len).unwrap_or(0) + 1
    }

    /// Dimension of each cell.
    pub fn cell_dims(&self) -> Vec<usize> {
        let h = self.homogenized();
        let n = self.ambient_len();
        self.cells
            .iter()
            .map(|c| {
                let rows: Vec<Vec<Int>> = c.iter().map(|&i| h[i].clone()).collect();
                IntMatrix::from_rows(n, rows).rank() - 1
            })
            .collect()
    }

    pub fn dim(&self) -> Option<usize> {
        self.cell_dims().into_iter().max()
    }

    /// Every cell is a simplex.
    pub fn is_simplicial(&self) -> bool {
        self.cells.iter().zip(self.cell_dims()).all(|(c, d)| c.len() == d + 1)
    }

    /// Alternating count of cells by dimension.
    pub fn euler_characteristic(&self) -> i64 {
        self.cell_dims().iter().map(|&d| if d % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Pulling triangulation of every cell from its lowest-indexed vertex.
    /// The vertex order is global, so the triangulations of two cells agree
    /// on their common faces. The result contains every face of every
    /// simplex.
    pub fn triangulate(&self) -> PolyComplex {
        let h = self.homogenized();
        let n = self.ambient_len();
        let mut simplices: BTreeSet<Vec<usize>> = BTreeSet::new();
        for c in &self.cells {
            for s in pulling(n, &h, c.clone()) {
                simplices.insert(s);
            }
        }
        let closed = close_under_faces(simplices);
        PolyComplex::new(self.vertices.clone(), closed).expect("valid indices")
    }

    /// Adds all nonempty subsets of every cell; for simplicial input this
    /// is the face closure.
    pub fn simplicial_closure(&self) -> PolyComplex {
        let closed = close_under_faces(self.cells.iter().cloned().collect());
        PolyComplex::new(self.vertices.clone(), closed).expect("valid indices")
    }
}

fn close_under_faces(top: BTreeSet<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in top {
        let k = s.len();
        for mask in 1u64..(1u64 << k) {
            let sub: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
            all.insert(sub);
        }
    }
    all.into_iter().collect()
}

/// `|fan| ∩ {h = 1}`: one vertex `ρ/h(ρ)` per ray, one cell per nonzero
/// cone. `h` must be positive on every ray.
pub fn cross_section(fan: &Fan, h: &[Int]) -> Result<PolyComplex> {
    if h.len() != fan.rank() {
        return Err(Error::Dimension(format!(
            "functional of length {} for a fan of rank {}",
            h.len(),
            fan.rank()
        )));
    }
    let mut vertices = Vec::with_capacity(fan.rays().len());
    for r in fan.rays() {
        let v = dot(h, r);
        if !v.is_positive() {
            return Err(Error::Precondition("functional is not positive on every ray".into()));
        }
        vertices.push(r.iter().map(|x| Rat::new(x.clone(), v.clone())).collect::<Vec<Rat>>());
    }
    let cells: Vec<Vec<usize>> = fan.cones().iter().filter(|c| !c.is_empty()).cloned().collect();
    PolyComplex::new(vertices, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::Cone;
    use crate::zlin::ivec;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn square_splits_into_two_triangles() {
        let v = vec![
            vec![rat(0, 1), rat(0, 1)],
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 1)],
        ];
        let sq = PolyComplex::new(
            v,
            vec![
                vec![0, 1, 2, 3],
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![0, 3],
                vec![0],
                vec![1],
                vec![2],
                vec![3],
            ],
        )
        .unwrap();
        assert!(!sq.is_simplicial());
        let t = sq.triangulate();
        assert!(t.is_simplicial());
        assert_eq!(t.cells().iter().filter(|c| c.len() == 3).count(), 2);
        assert_eq!(t.euler_characteristic(), sq.euler_characteristic());
    }

    #[test]
    fn cross_sections() {
        let f = Fan::from_cone(&Cone::from_i64(2, &[&[1, 0], &[0, 1]])).unwrap();
        let w = cross_section(&f, &ivec(&[1, 1])).unwrap();
        assert_eq!(w.vertices().len(), 2);
        assert_eq!(w.cells().len(), 3);
        assert!(cross_section(&f, &ivec(&[1, 0])).is_err());
        let f3 = Fan::from_cone(&Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        let w3 = cross_section(&f3, &ivec(&[1, 1, 1])).unwrap();
        assert_eq!(w3.cells().len(), 7);
        assert_eq!(w3.dim(), Some(2));
        let sq = Fan::from_cone(&Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]])).unwrap();
        let w = cross_section(&sq, &ivec(&[3, 3, 1])).unwrap();
        let t = w.triangulate();
        assert_eq!(t.cells().iter().filter(|c| c.len() == 3).count(), 2);
        assert_eq!(t.euler_characteristic(), w.euler_characteristic());
    }
}
