//! Seeded generators of random desk-scale instances.
//!
//! Every generator draws from a [`ChaCha8Rng`], so a seed fixes the whole
//! stream on every platform.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fan::{Cone, Fan};
use crate::monoid::{Ambient, AmbientMap, Elem, FsMonoid, MonoidHom};
use crate::zlin::{dot, primitive, Int, IntMatrix};

const ATTEMPTS: usize = 200;

/// Shape of a random monoid.
#[derive(Clone, Copy, Debug)]
pub struct MonoidShape {
    pub max_dim: usize,
    pub max_gens: usize,
    /// Allow invertible elements.
    pub units: bool,
    /// Torsion modulus of the ambient group, if any.
    pub torsion: Option<i64>,
}

impl MonoidShape {
    pub const SHARP: MonoidShape = MonoidShape {
        max_dim: 3,
        max_gens: 5,
        units: false,
        torsion: None,
    };
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn int(&mut self, lo: i64, hi: i64) -> Int {
        Int::from(self.rng.gen_range(lo..=hi))
    }

    fn vector(&mut self, n: usize, lo: i64, hi: i64) -> Vec<Int> {
        (0..n).map(|_| self.int(lo, hi)).collect()
    }

    /// Nonzero vector in `[lo, hi]^n` with positive coordinate sum.
    fn positive_vector(&mut self, n: usize, lo: i64, hi: i64) -> Vec<Int> {
        loop {
            let v = self.vector(n, lo, hi);
            if v.iter().sum::<Int>().is_positive() {
                return v;
            }
        }
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// A saturated monoid. Without units the free parts of the generators
    /// have positive coordinate sum, so the cone is pointed.
    pub fn monoid(&mut self, shape: MonoidShape) -> FsMonoid {
        for _ in 0..ATTEMPTS {
            let d = self.rng.gen_range(1..=shape.max_dim);
            let torsion: Vec<Int> = shape.torsion.map(Int::from).into_iter().collect();
            let amb = Ambient::new(d, torsion.clone()).expect("modulus at least 2");
            let n = self.rng.gen_range(1..=shape.max_gens);
            let mut gens = Vec::with_capacity(n + 2);
            for _ in 0..n {
                let free = self.positive_vector(d, -1, 3);
                let tor = self.torsion_part(&torsion);
                gens.push(amb.normalize(Elem::new(free, tor)));
            }
            if shape.units && self.chance(0.5) {
                let u = self.vector(d, -1, 1);
                let tor = self.torsion_part(&torsion);
                let e = amb.normalize(Elem::new(u, tor));
                gens.push(amb.neg(&e));
                gens.push(e);
            }
            if !torsion.is_empty() && self.chance(0.7) {
                let t = vec![self.int(1, shape.torsion.expect("modulus") - 1)];
                gens.push(amb.normalize(Elem::new(vec![Int::zero(); d], t)));
            }
            let Ok(p) = FsMonoid::new(amb, gens).and_then(|p| p.saturate()) else {
                continue;
            };
            if !p.is_zero() {
                return p;
            }
        }
        FsMonoid::natural(1)
    }

    fn torsion_part(&mut self, torsion: &[Int]) -> Vec<Int> {
        torsion
            .iter()
            .map(|n| Int::from(self.rng.gen_range(0..n.try_into().unwrap_or(2i64))))
            .collect()
    }

    /// `θ: P -> Q` given by a random ambient matrix `A`, with `Q` the
    /// saturation of `A(P)` and up to `extra` further generators. Without
    /// extra generators and with `A` injective the map is exact.
    pub fn hom_from(&mut self, p: &FsMonoid, max_dim: usize, extra: usize) -> Option<MonoidHom> {
        let src = p.ambient().clone();
        for _ in 0..ATTEMPTS {
            let d2 = self.rng.gen_range(1..=max_dim);
            let tgt = if !src.torsion.is_empty() && self.chance(0.5) {
                Ambient::new(d2, src.torsion.clone()).expect("valid moduli")
            } else {
                Ambient::free(d2)
            };
            let injective = d2 >= src.free_dim && self.chance(0.4);
            let free = if injective {
                self.injective_matrix(d2, src.free_dim)
            } else {
                IntMatrix::from_rows(
                    src.free_dim,
                    (0..d2).map(|_| self.vector(src.free_dim, -1, 2)).collect(),
                )
            };
            let tor_rows: Vec<Vec<Int>> = (0..tgt.tor_len())
                .map(|i| {
                    let mut row = self.vector(src.free_dim, 0, 1);
                    // residues of the source map identically, keeping orders compatible
                    row.extend((0..src.tor_len()).map(|j| Int::from(i64::from(i == j))));
                    row
                })
                .collect();
            let tor = IntMatrix::from_rows(src.flat_len(), tor_rows);
            let Ok(map) = AmbientMap::new(src.clone(), tgt.clone(), free, tor) else {
                continue;
            };
            let mut gens: Vec<Elem> = p.gens().iter().map(|g| map.apply(g)).collect();
            let k = if extra == 0 { 0 } else { self.rng.gen_range(0..=extra) };
            for _ in 0..k {
                let free = self.positive_vector(d2, -1, 2);
                let t = self.torsion_part(&tgt.torsion);
                gens.push(tgt.normalize(Elem::new(free, t)));
            }
            let Ok(q) = FsMonoid::new(tgt, gens).and_then(|q| q.saturate()) else {
                continue;
            };
            if let Ok(h) = MonoidHom::from_ambient(p.clone(), q, map) {
                return Some(h);
            }
        }
        None
    }

    fn injective_matrix(&mut self, rows: usize, cols: usize) -> IntMatrix {
        loop {
            let m = IntMatrix::from_rows(cols, (0..rows).map(|_| self.vector(cols, -1, 2)).collect());
            if m.rank() == cols {
                return m;
            }
        }
    }

    /// Composable `θ: P -> Q`, `η: Q -> R`.
    pub fn hom_chain(&mut self, shape: MonoidShape) -> (MonoidHom, MonoidHom) {
        loop {
            let p = self.monoid(shape);
            let Some(theta) = self.hom_from(&p, shape.max_dim, 2) else {
                continue;
            };
            let extra = if self.chance(0.5) { 0 } else { 2 };
            let Some(eta) = self.hom_from(theta.target(), shape.max_dim, extra) else {
                continue;
            };
            return (theta, eta);
        }
    }

    /// Two maps out of a common source, for a pushout square.
    pub fn span(&mut self, shape: MonoidShape) -> (MonoidHom, MonoidHom) {
        loop {
            let p = self.monoid(shape);
            let Some(a) = self.hom_from(&p, shape.max_dim, 2) else {
                continue;
            };
            let Some(b) = self.hom_from(&p, shape.max_dim, 2) else {
                continue;
            };
            return (a, b);
        }
    }

    /// `θ: P -> Q` between sharp monoids with torsion-free
    /// groupifications.
    pub fn sharp_hom(&mut self, max_dim: usize) -> MonoidHom {
        loop {
            let p = self.monoid(MonoidShape {
                max_dim,
                ..MonoidShape::SHARP
            });
            let Some(h) = self.hom_from(&p, max_dim, 2) else {
                continue;
            };
            let q = h.target();
            if q.is_sharp() && q.groupification().group().is_torsion_free() && !q.is_zero() {
                return h;
            }
        }
    }

    /// A saturated `P` with torsion-free `P^gp` and `P⁺ ≠ 0`, with
    /// `θ: N -> P` such that `θ(1)` is not a unit.
    pub fn acyclicity_instance(&mut self, max_dim: usize) -> (FsMonoid, MonoidHom) {
        loop {
            let p = self.monoid(MonoidShape {
                max_dim,
                max_gens: 5,
                units: true,
                torsion: None,
            });
            if p.is_group() || !p.groupification().group().is_torsion_free() {
                continue;
            }
            let coeffs = self.vector(p.gens().len(), 0, 2);
            let x = p.ambient().combine(&coeffs, p.gens());
            // θ(1) must survive in P/P*, otherwise every ray is killed
            if p.cone().facets().iter().all(|f| dot(f, &x.free).is_zero()) {
                continue;
            }
            let theta = MonoidHom::new(FsMonoid::natural(1), p.clone(), vec![x]).expect("element of P");
            return (p, theta.with_extension());
        }
    }

    /// Complete fan in the plane with rays from `[-3, 3]^2`.
    pub fn complete_fan_2d(&mut self) -> Fan {
        loop {
            let n = self.rng.gen_range(3..=6);
            let mut rays: Vec<Vec<Int>> = Vec::new();
            while rays.len() < n {
                let v = self.vector(2, -3, 3);
                let Ok(p) = primitive(&v) else { continue };
                if !rays.contains(&p) {
                    rays.push(p);
                }
            }
            rays.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
            let ok = (0..n).all(|i| {
                let (a, b) = (&rays[i], &rays[(i + 1) % n]);
                (&a[0] * &b[1] - &a[1] * &b[0]).is_positive()
            });
            if !ok {
                continue;
            }
            let cones: Vec<Cone> = (0..n)
                .map(|i| Cone::new(2, &[rays[i].clone(), rays[(i + 1) % n].clone()]))
                .collect();
            return Fan::from_cones(2, &cones).expect("consecutive sectors form a fan");
        }
    }

    /// Full-dimensional pointed cone with 2 to 5 rays in rank 2 or 3.
    pub fn pointed_cone(&mut self, rank: usize) -> Cone {
        loop {
            let n = self.rng.gen_range(rank..=rank + 2);
            let rays: Vec<Vec<Int>> = (0..n).map(|_| self.positive_vector(rank, -2, 3)).collect();
            let c = Cone::new(rank, &rays);
            if c.cone_dim() == rank && c.is_pointed() {
                return c;
            }
        }
    }

    /// A fan of rank 2 or 3: a complete plane fan, the faces of a random
    /// cone, or such a cone after a few star subdivisions.
    pub fn fan(&mut self) -> Fan {
        match self.rng.gen_range(0..3) {
            0 => self.complete_fan_2d(),
            k => {
                let rank = self.rng.gen_range(2..=3);
                let mut f = Fan::from_cone(&self.pointed_cone(rank)).expect("pointed cone");
                if k == 2 {
                    for _ in 0..self.rng.gen_range(1..=2) {
                        let v = self.support_point(&f);
                        f = crate::fan::star_subdivision(&f, &v).expect("point of the support");
                    }
                }
                f
            }
        }
    }

    /// Primitive lattice point of the support: a positive combination of
    /// the rays of a random cone.
    pub fn support_point(&mut self, f: &Fan) -> Vec<Int> {
        let nonzero: Vec<usize> = (0..f.len()).filter(|&i| !f.cones()[i].is_empty()).collect();
        let i = nonzero[self.rng.gen_range(0..nonzero.len())];
        let mut v = vec![Int::zero(); f.rank()];
        for &r in &f.cones()[i] {
            let c = self.int(1, 3);
            v = v.iter().zip(&f.rays()[r]).map(|(a, b)| a + &c * b).collect();
        }
        primitive(&v).expect("positive combination of rays is nonzero")
    }

    /// Simplicial fan of rank 2 or 3 for resolution.
    pub fn resolution_input(&mut self) -> Fan {
        let rank = self.rng.gen_range(2..=3);
        if rank == 2 && self.chance(0.3) {
            return self.complete_fan_2d();
        }
        Fan::from_cone(&self.pointed_cone(rank)).expect("pointed cone")
    }
}

fn angle(v: &[Int]) -> f64 {
    let x: f64 = v[0].to_string().parse().expect("small integer");
    let y: f64 = v[1].to_string().parse().expect("small integer");
    y.atan2(x)
}
