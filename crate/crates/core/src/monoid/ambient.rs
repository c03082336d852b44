use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::zlin::{is_zero_vec, modulo, smith_normal_form, Int, IntMatrix};

/// Element of an ambient group `Z^d ⊕ Z/n_1 ⊕ … ⊕ Z/n_k`. Torsion residues
/// are kept reduced into `[0, n_i)` by [`Ambient::normalize`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub free: Vec<Int>,
    pub tor: Vec<Int>,
}

impl Elem {
    pub fn new(free: Vec<Int>, tor: Vec<Int>) -> Elem {
        Elem { free, tor }
    }

    pub fn free_only(free: Vec<Int>) -> Elem {
        Elem { free, tor: vec![] }
    }

    pub fn from_i64(free: &[i64], tor: &[i64]) -> Elem {
        Elem {
            free: free.iter().map(|&x| Int::from(x)).collect(),
            tor: tor.iter().map(|&x| Int::from(x)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.free) && is_zero_vec(&self.tor)
    }
}

/// The group `Z^free_dim ⊕ ⊕ Z/torsion[i]` every monoid lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub free_dim: usize,
    pub torsion: Vec<Int>,
}

impl Ambient {
    pub fn new(free_dim: usize, torsion: Vec<Int>) -> Result<Ambient> {
        if torsion.iter().any(|n| n < &Int::from(2)) {
            return Err(Error::Dimension("torsion moduli must be at least 2".into()));
        }
        Ok(Ambient { free_dim, torsion })
    }

    pub fn free(free_dim: usize) -> Ambient {
        Ambient {
            free_dim,
            torsion: vec![],
        }
    }

    pub fn tor_len(&self) -> usize {
        self.torsion.len()
    }

    /// Length of a flattened element.
    pub fn flat_len(&self) -> usize {
        self.free_dim + self.torsion.len()
    }

    pub fn zero(&self) -> Elem {
        Elem {
            free: vec![Int::zero(); self.free_dim],
            tor: vec![Int::zero(); self.torsion.len()],
        }
    }

    pub fn check(&self, e: &Elem) -> Result<()> {
        if e.free.len() != self.free_dim || e.tor.len() != self.torsion.len() {
            return Err(Error::Dimension(format!(
                "element has shape ({}, {}), ambient is ({}, {})",
                e.free.len(),
                e.tor.len(),
                self.free_dim,
                self.torsion.len()
            )));
        }
        Ok(())
    }

    pub fn normalize(&self, mut e: Elem) -> Elem {
        for (t, n) in e.tor.iter_mut().zip(&self.torsion) {
            *t = modulo(t, n);
        }
        e
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.normalize(Elem {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            tor: a.tor.iter().zip(&b.tor).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.normalize(Elem {
            free: a.free.iter().map(|x| -x).collect(),
            tor: a.tor.iter().map(|x| -x).collect(),
        })
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: &Int, a: &Elem) -> Elem {
        self.normalize(Elem {
            free: a.free.iter().map(|x| k * x).collect(),
            tor: a.tor.iter().map(|x| k * x).collect(),
        })
    }

    /// `Σ c_i xs_i`.
    pub fn combine(&self, coeffs: &[Int], xs: &[Elem]) -> Elem {
        let mut acc = self.zero();
        for (c, x) in coeffs.iter().zip(xs) {
            if !c.is_zero() {
                acc = self.add(&acc, &self.scale(c, x));
            }
        }
        acc
    }

    pub fn flat(&self, e: &Elem) -> Vec<Int> {
        let mut v = e.free.clone();
        v.extend(e.tor.iter().cloned());
        v
    }

    pub fn from_flat(&self, v: &[Int]) -> Elem {
        self.normalize(Elem {
            free: v[..self.free_dim].to_vec(),
            tor: v[self.free_dim..].to_vec(),
        })
    }

    /// `(d+k) × k` matrix whose columns `n_j e_{d+j}` generate the kernel
    /// of `Z^{d+k} -> ambient`.
    pub fn relation_block(&self) -> IntMatrix {
        let n = self.flat_len();
        let k = self.tor_len();
        let mut m = IntMatrix::zeros(n, k);
        for (j, t) in self.torsion.iter().enumerate() {
            m.set(self.free_dim + j, j, t.clone());
        }
        m
    }

    /// `Z^{d+k}`-columns of the elements followed by the relation block.
    pub fn presentation_matrix(&self, elems: &[Elem]) -> IntMatrix {
        let cols: Vec<Vec<Int>> = elems.iter().map(|e| self.flat(e)).collect();
        IntMatrix::from_cols(self.flat_len(), &cols).hstack(&self.relation_block())
    }

    /// Layout: free(a), free(b), tor(a), tor(b).
    pub fn direct_sum(&self, other: &Ambient) -> Ambient {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        Ambient {
            free_dim: self.free_dim + other.free_dim,
            torsion,
        }
    }

    /// Embeds `(a, b)` into `self.direct_sum(other)`.
    pub fn pair(&self, other: &Ambient, a: &Elem, b: &Elem) -> Elem {
        let _ = other;
        let mut free = a.free.clone();
        free.extend(b.free.iter().cloned());
        let mut tor = a.tor.clone();
        tor.extend(b.tor.iter().cloned());
        Elem { free, tor }
    }

    /// Inverse of [`Ambient::pair`].
    pub fn unpair(&self, other: &Ambient, e: &Elem) -> (Elem, Elem) {
        let _ = other;
        let (fa, fb) = e.free.split_at(self.free_dim);
        let (ta, tb) = e.tor.split_at(self.tor_len());
        (Elem::new(fa.to_vec(), ta.to_vec()), Elem::new(fb.to_vec(), tb.to_vec()))
    }
}

/// Group homomorphism between ambient groups. `free` is the
/// `d' × d` matrix on free parts; `tor` is the `k' × (d+k)` matrix giving
/// each target residue from the flattened source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientMap {
    pub source: Ambient,
    pub target: Ambient,
    pub free: IntMatrix,
    pub tor: IntMatrix,
}

impl AmbientMap {
    pub fn new(source: Ambient, target: Ambient, free: IntMatrix, tor: IntMatrix) -> Result<Self> {
        if free.rows() != target.free_dim || free.cols() != source.free_dim {
            return Err(Error::InvalidHom(format!(
                "matrix must be {}x{}, got {}x{}",
                target.free_dim,
                source.free_dim,
                free.rows(),
                free.cols()
            )));
        }
        if tor.rows() != target.tor_len() || tor.cols() != source.flat_len() {
            return Err(Error::InvalidHom(format!(
                "torsion_matrix must be {}x{}, got {}x{}",
                target.tor_len(),
                source.flat_len(),
                tor.rows(),
                tor.cols()
            )));
        }
        // a torsion generator of order n must land on something killed by n
        for (j, n) in source.torsion.iter().enumerate() {
            for (i, m) in target.torsion.iter().enumerate() {
                let v = n * tor.get(i, source.free_dim + j);
                if !modulo(&v, m).is_zero() {
                    return Err(Error::InvalidHom(
                        "torsion_matrix does not respect the torsion orders".into(),
                    ));
                }
            }
        }
        Ok(AmbientMap {
            source,
            target,
            free,
            tor,
        })
    }

    pub fn identity(a: &Ambient) -> AmbientMap {
        let k = a.tor_len();
        let mut tor = IntMatrix::zeros(k, a.flat_len());
        for j in 0..k {
            tor.set(j, a.free_dim + j, Int::one());
        }
        AmbientMap {
            source: a.clone(),
            target: a.clone(),
            free: IntMatrix::identity(a.free_dim),
            tor,
        }
    }

    pub fn apply(&self, e: &Elem) -> Elem {
        let flat = self.source.flat(e);
        self.target.normalize(Elem {
            free: self.free.mul_vec(&e.free),
            tor: self.tor.mul_vec(&flat),
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AmbientMap) -> AmbientMap {
        assert_eq!(self.target, other.source);
        // flattened matrix of self: [free 0; tor]
        let flat_self = self.flat_matrix();
        let free = &other.free * &self.free;
        let tor = &other.tor * &flat_self;
        let tor = reduce_rows(&tor, &other.target.torsion);
        AmbientMap {
            source: self.source.clone(),
            target: other.target.clone(),
            free,
            tor,
        }
    }

    /// The `(d'+k') × (d+k)` matrix on flattened coordinates.
    pub fn flat_matrix(&self) -> IntMatrix {
        let d = self.source.free_dim;
        let k = self.source.tor_len();
        let free = self.free.hstack(&IntMatrix::zeros(self.target.free_dim, k));
        let _ = d;
        free.vstack(&self.tor)
    }
}

fn reduce_rows(m: &IntMatrix, moduli: &[Int]) -> IntMatrix {
    let mut out = m.clone();
    for (i, n) in moduli.iter().enumerate() {
        for j in 0..m.cols() {
            out.set(i, j, modulo(m.get(i, j), n));
        }
    }
    out
}

/// `ambient / ⟨subgroup⟩`, in Smith coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub map: AmbientMap,
    rows: Vec<usize>,
    left_inv: IntMatrix,
}

impl Quotient {
    pub fn new(ambient: &Ambient, subgroup: &[Elem]) -> Quotient {
        let n = ambient.flat_len();
        let rel = ambient.presentation_matrix(subgroup);
        let snf = smith_normal_form(&rel);
        let diag = |i: usize| -> Int { snf.diag.get(i).cloned().unwrap_or_else(Int::zero) };
        let free_rows: Vec<usize> = (0..n).filter(|&i| diag(i).is_zero()).collect();
        let tor_rows: Vec<usize> = (0..n)
            .filter(|&i| {
                let d = diag(i);
                !d.is_zero() && !d.is_one()
            })
            .collect();
        let target = Ambient {
            free_dim: free_rows.len(),
            torsion: tor_rows.iter().map(|&i| diag(i)).collect(),
        };
        let free = snf
            .left
            .select_rows(&free_rows)
            .select_cols(&(0..ambient.free_dim).collect::<Vec<_>>());
        let tor = reduce_rows(&snf.left.select_rows(&tor_rows), &target.torsion);
        let mut rows = free_rows;
        rows.extend(tor_rows);
        Quotient {
            map: AmbientMap {
                source: ambient.clone(),
                target,
                free,
                tor,
            },
            rows,
            left_inv: snf.left_inv,
        }
    }

    pub fn target(&self) -> &Ambient {
        &self.map.target
    }

    pub fn apply(&self, e: &Elem) -> Elem {
        self.map.apply(e)
    }

    /// Some preimage of `y`.
    pub fn lift(&self, y: &Elem) -> Elem {
        let mut v = vec![Int::zero(); self.map.source.flat_len()];
        for (k, x) in y.free.iter().chain(y.tor.iter()).enumerate() {
            v[self.rows[k]] = x.clone();
        }
        self.map.source.from_flat(&self.left_inv.mul_vec(&v))
    }
}
