use num_traits::Zero;

use super::{Ambient, AmbientMap, Elem, Face, FsMonoid, Quotient};
use crate::error::{Error, Result};
use crate::fan::Cone;
use crate::zlin::{dot, neg, solve_integral, Int, IntMatrix};

/// Homomorphism of monoids, given by the images of the source generators.
///
/// When the map is known to extend to the ambient groups the extension is
/// kept as well; not every homomorphism extends (a map out of a proper
/// subgroup need not).
#[derive(Clone, Debug)]
pub struct MonoidHom {
    source: FsMonoid,
    target: FsMonoid,
    images: Vec<Elem>,
    ambient: Option<AmbientMap>,
}

/// Saturated pushout `P' ⊕_P Q` with its structure maps.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub result: FsMonoid,
    pub into_left: MonoidHom,
    pub into_right: MonoidHom,
}

impl MonoidHom {
    /// Checks that the images respect every relation among the source
    /// generators and lie in the target.
    pub fn new(source: FsMonoid, target: FsMonoid, images: Vec<Elem>) -> Result<MonoidHom> {
        if images.len() != source.gens().len() {
            return Err(Error::InvalidHom(format!(
                "{} images for {} generators",
                images.len(),
                source.gens().len()
            )));
        }
        let tamb = target.ambient();
        let mut norm = Vec::with_capacity(images.len());
        for im in images {
            tamb.check(&im)?;
            norm.push(tamb.normalize(im));
        }
        for rel in source.groupification().relations() {
            if !tamb.combine(rel, &norm).is_zero() {
                return Err(Error::InvalidHom(
                    "images do not respect a relation among the generators".into(),
                ));
            }
        }
        for im in &norm {
            if !target.contains(im)? {
                return Err(Error::InvalidHom("image of a generator lies outside the target".into()));
            }
        }
        Ok(MonoidHom {
            source,
            target,
            images: norm,
            ambient: None,
        })
    }

    /// The restriction of an ambient group map.
    pub fn from_ambient(source: FsMonoid, target: FsMonoid, map: AmbientMap) -> Result<MonoidHom> {
        if &map.source != source.ambient() || &map.target != target.ambient() {
            return Err(Error::InvalidHom("ambient map has the wrong shape".into()));
        }
        let images: Vec<Elem> = source.gens().iter().map(|g| map.apply(g)).collect();
        for im in &images {
            if !target.contains(im)? {
                return Err(Error::InvalidHom("image of a generator lies outside the target".into()));
            }
        }
        Ok(MonoidHom {
            source,
            target,
            images,
            ambient: Some(map),
        })
    }

    pub fn identity(p: &FsMonoid) -> MonoidHom {
        MonoidHom {
            source: p.clone(),
            target: p.clone(),
            images: p.gens().to_vec(),
            ambient: Some(AmbientMap::identity(p.ambient())),
        }
    }

    /// The map to the zero monoid.
    pub fn to_zero(p: &FsMonoid) -> MonoidHom {
        let z = FsMonoid::zero();
        let map = AmbientMap::new(
            p.ambient().clone(),
            z.ambient().clone(),
            IntMatrix::zeros(0, p.free_dim()),
            IntMatrix::zeros(0, p.ambient().flat_len()),
        )
        .expect("zero map");
        MonoidHom {
            source: p.clone(),
            images: vec![z.ambient().zero(); p.gens().len()],
            target: z,
            ambient: Some(map),
        }
    }

    pub fn source(&self) -> &FsMonoid {
        &self.source
    }

    pub fn target(&self) -> &FsMonoid {
        &self.target
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn ambient_map(&self) -> Option<&AmbientMap> {
        self.ambient.as_ref()
    }

    /// Looks for an ambient extension and records it if one exists.
    pub fn with_extension(mut self) -> MonoidHom {
        if self.ambient.is_none() {
            self.ambient = self.try_extend();
        }
        self
    }

    /// An ambient group map agreeing with this homomorphism on generators.
    pub fn try_extend(&self) -> Option<AmbientMap> {
        let samb = self.source.ambient();
        let tamb = self.target.ambient();
        let gens = self.source.gens();
        let d = samb.free_dim;
        let m = gens.len();
        // free rows: x · free(g_j) = image_j[i]
        let gfree = IntMatrix::from_cols(d, &gens.iter().map(|g| g.free.clone()).collect::<Vec<_>>());
        let gt = gfree.transpose();
        let mut free_rows = Vec::with_capacity(tamb.free_dim);
        for i in 0..tamb.free_dim {
            let b: Vec<Int> = self.images.iter().map(|im| im.free[i].clone()).collect();
            free_rows.push(solve_integral(&gt, &b)?);
        }
        // torsion rows: t · flat(g_j) - n s_j = image_j, n_l t_{d+l} - n u_l = 0
        let n_flat = samb.flat_len();
        let k = samb.tor_len();
        let mut tor_rows = Vec::with_capacity(tamb.tor_len());
        for (i, n) in tamb.torsion.iter().enumerate() {
            let cols = n_flat + m + k;
            let mut rows: Vec<Vec<Int>> = Vec::new();
            let mut rhs: Vec<Int> = Vec::new();
            for (j, g) in gens.iter().enumerate() {
                let mut r = samb.flat(g);
                r.resize(cols, Int::zero());
                r[n_flat + j] = -n.clone();
                rows.push(r);
                rhs.push(self.images[j].tor[i].clone());
            }
            for (l, nl) in samb.torsion.iter().enumerate() {
                let mut r = vec![Int::zero(); cols];
                r[d + l] = nl.clone();
                r[n_flat + m + l] = -n.clone();
                rows.push(r);
                rhs.push(Int::zero());
            }
            let sol = solve_integral(&IntMatrix::from_rows(cols, rows), &rhs)?;
            tor_rows.push(sol[..n_flat].to_vec());
        }
        let free = IntMatrix::from_rows(d, free_rows);
        let tor = IntMatrix::from_rows(n_flat, tor_rows);
        let map = AmbientMap::new(samb.clone(), tamb.clone(), free, tor).ok()?;
        debug_assert!(gens.iter().zip(&self.images).all(|(g, im)| &map.apply(g) == im));
        Some(map)
    }

    /// `θ^gp(x)` for `x` in the groupification of the source.
    pub fn apply(&self, x: &Elem) -> Result<Elem> {
        self.source.ambient().check(x)?;
        if let Some(map) = &self.ambient {
            return Ok(map.apply(x));
        }
        let c = self
            .source
            .groupification()
            .gen_coefficients(x)
            .ok_or(Error::NotMember)?;
        Ok(self.target.ambient().combine(&c, &self.images))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &MonoidHom) -> Result<MonoidHom> {
        if self.target != other.source {
            return Err(Error::InvalidHom("composition of non-composable maps".into()));
        }
        let images = self.images.iter().map(|x| other.apply(x)).collect::<Result<Vec<_>>>()?;
        let ambient = match (&self.ambient, &other.ambient) {
            (Some(a), Some(b)) => Some(a.then(b)),
            _ => None,
        };
        Ok(MonoidHom {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
            ambient,
        })
    }

    /// The same group map between other monoids with the same ambients.
    pub fn restrict(&self, source: &FsMonoid, target: &FsMonoid) -> Result<MonoidHom> {
        let images = source
            .gens()
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        let mut h = MonoidHom::new(source.clone(), target.clone(), images)?;
        h.ambient = self.ambient.clone();
        Ok(h)
    }

    /// The face of the target generated by the image is the whole target.
    pub fn is_vertical(&self) -> bool {
        !self
            .target
            .cone()
            .facets()
            .iter()
            .any(|f| self.images.iter().all(|im| dot(f, &im.free).is_zero()))
    }

    /// `(θ^gp)⁻¹(Q) = P`, decided on cones in lattice coordinates of `P`;
    /// valid for saturated source and target.
    pub fn is_exact(&self) -> bool {
        let p = &self.source;
        let r = p.rank();
        if r == 0 {
            return true;
        }
        let basis = p.lattice_basis();
        let t: Vec<Vec<Int>> = basis
            .col_vecs()
            .iter()
            .map(|b| {
                let x = p.lift_free(b).expect("lattice vector");
                self.apply(&x).expect("element of the group").free
            })
            .collect();
        // functional f on Z^{d_Q} pulls back to (f · t_i)_i
        let pull = |f: &[Int]| -> Vec<Int> { t.iter().map(|ti| dot(f, ti)).collect() };
        let qcone = self.target.cone();
        let mut funcs: Vec<Vec<Int>> = qcone.facets().iter().map(|f| pull(f)).collect();
        for e in qcone.equations() {
            let pe = pull(e);
            funcs.push(neg(&pe));
            funcs.push(pe);
        }
        let preimage = Cone::new(r, &funcs).dual();
        p.local_cone().contains_cone(&preimage)
    }

    /// Saturated pushout of `self: P -> P'` and `right: P -> Q`.
    pub fn pushout(&self, right: &MonoidHom) -> Result<Pushout> {
        if self.source != right.source {
            return Err(Error::InvalidHom("pushout of maps with different sources".into()));
        }
        let a = self.target.ambient();
        let b = right.target.ambient();
        let sum = a.direct_sum(b);
        let rels: Vec<Elem> = self
            .images
            .iter()
            .zip(&right.images)
            .map(|(l, r)| a.pair(b, l, &b.neg(r)))
            .collect();
        let q = Quotient::new(&sum, &rels);
        let mut gens: Vec<Elem> = self
            .target
            .gens()
            .iter()
            .map(|g| q.apply(&a.pair(b, g, &b.zero())))
            .collect();
        gens.extend(right.target.gens().iter().map(|g| q.apply(&a.pair(b, &a.zero(), g))));
        let result = FsMonoid::new(q.target().clone(), gens)?.saturate()?;
        let inj_left = injection(a, b, true).then(&q.map);
        let inj_right = injection(a, b, false).then(&q.map);
        let into_left = MonoidHom::from_ambient(self.target.clone(), result.clone(), inj_left)?;
        let into_right = MonoidHom::from_ambient(right.target.clone(), result.clone(), inj_right)?;
        Ok(Pushout {
            result,
            into_left,
            into_right,
        })
    }

    /// The cokernel in saturated monoids, `Q ⊕_P 0`, with the projection.
    pub fn saturated_cokernel(&self) -> Result<(FsMonoid, MonoidHom)> {
        let po = self.pushout(&MonoidHom::to_zero(&self.source))?;
        Ok((po.result, po.into_left))
    }

    /// The induced map `P̄ -> Q̄` of sharp quotients.
    pub fn sharpened(&self) -> Result<MonoidHom> {
        let (ps, pp) = self.source.sharpen()?;
        let (qs, qp) = self.target.sharpen()?;
        let images = ps
            .gens()
            .iter()
            .map(|y| {
                let i = pp
                    .images()
                    .iter()
                    .position(|x| x == y)
                    .expect("generator of the quotient is an image");
                qp.apply(&self.images[i])
            })
            .collect::<Result<Vec<_>>>()?;
        MonoidHom::new(ps, qs, images)
    }

    /// `θ⁻¹(G)` for a face `G` of the target.
    pub fn preimage_face(&self, g: &Face) -> Result<Face> {
        self.target.check_face(g)?;
        let inside: Vec<Elem> = self
            .source
            .gens()
            .iter()
            .zip(&self.images)
            .filter(|(_, im)| g.functionals().iter().all(|f| dot(f, &im.free).is_zero()))
            .map(|(s, _)| s.clone())
            .collect();
        self.source.minimal_face_containing(&inside)
    }

    /// The localized map `P_{θ⁻¹(G)} -> Q_G`.
    pub fn localize_at(&self, g: &Face) -> Result<MonoidHom> {
        let f = self.preimage_face(g)?;
        let pl = self.source.localize(&f)?;
        let ql = self.target.localize(g)?;
        self.restrict(&pl, &ql)
    }
}

/// Inclusion of one summand into `a ⊕ b` (layout of [`Ambient::direct_sum`]).
fn injection(a: &Ambient, b: &Ambient, left: bool) -> AmbientMap {
    let sum = a.direct_sum(b);
    let (src, free_off, tor_off) = if left { (a, 0, 0) } else { (b, a.free_dim, a.tor_len()) };
    let mut free = IntMatrix::zeros(sum.free_dim, src.free_dim);
    for i in 0..src.free_dim {
        free.set(free_off + i, i, Int::from(1));
    }
    let mut tor = IntMatrix::zeros(sum.tor_len(), src.flat_len());
    for j in 0..src.tor_len() {
        tor.set(tor_off + j, src.free_dim + j, Int::from(1));
    }
    AmbientMap::new(src.clone(), sum, free, tor).expect("inclusion")
}
