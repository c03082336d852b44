//! Seeded property suites.
//!
//! Each suite draws its instances from its own stream derived from the
//! seed, checks a family of invariants, and records every violation. Output
//! depends only on the seed.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Result;
use crate::fan::{common_refinement, is_subdivision, make_smooth, star_subdivision, Fan, FanMorphism};
use crate::monoid::{Elem, FsMonoid, MonoidHom};
use crate::oracle;
use crate::random::{MonoidShape, Sampler};
use crate::topo::{cross_section, homology, verify_boundary_acyclicity, Homology, PolyComplex, Verdict};
use crate::zlin::{smith_normal_form, Int, IntMatrix, Rat};

/// Default seed of `verify all`.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub violations: Vec<String>,
    /// How often each conditional check had its hypothesis met.
    pub tallies: BTreeMap<&'static str, usize>,
}

impl SuiteReport {
    fn new(name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            cases: 0,
            violations: vec![],
            tallies: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn tally(&mut self, key: &'static str) {
        *self.tallies.entry(key).or_default() += 1;
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(what());
        }
    }

    /// Records `Err` results as violations.
    fn guard<T>(&mut self, case: usize, r: Result<T>) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.violations.push(format!("case {case}: {e}"));
                None
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed(),
            "violations": self.violations,
            "tallies": self.tallies,
        })
    }
}

fn stream(seed: u64, suite: u64) -> Sampler {
    Sampler::new(seed ^ suite.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn chain_shape(i: usize) -> MonoidShape {
    MonoidShape {
        max_dim: 3,
        max_gens: 5,
        units: i % 2 == 1,
        torsion: if i % 5 == 4 { Some(2) } else { None },
    }
}

/// Verticality under sharpening, localization and composition.
pub fn verticality_calculus(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("verticality-calculus");
    let mut s = stream(seed, 1);
    for i in 0..n {
        rep.cases += 1;
        let (theta, eta) = s.hom_chain(chain_shape(i));
        let Some(comp) = rep.guard(i, theta.then(&eta)) else {
            continue;
        };
        let (tv, ev, cv) = (theta.is_vertical(), eta.is_vertical(), comp.is_vertical());
        if let Some(bar) = rep.guard(i, theta.sharpened()) {
            rep.check(bar.is_vertical() == tv, || {
                format!("case {i}: sharpening changed verticality")
            });
        }
        if tv {
            rep.tally("localization");
            for g in theta.target().faces() {
                if let Some(loc) = rep.guard(i, theta.localize_at(&g)) {
                    rep.check(loc.is_vertical(), || {
                        format!("case {i}: localization at a face is not vertical")
                    });
                }
            }
        }
        if tv && ev {
            rep.tally("composition");
            rep.check(cv, || format!("case {i}: composite of vertical maps is not vertical"));
        }
        if cv {
            rep.tally("second factor");
            rep.check(ev, || format!("case {i}: composite vertical but second map is not"));
        }
        if cv && eta.is_exact() {
            rep.tally("exact cancellation");
            rep.check(tv, || {
                format!("case {i}: exact second map and vertical composite, first map not vertical")
            });
        }
    }
    rep
}

/// Verticality transfers across saturated pushouts, and agrees with the
/// cokernel criterion.
pub fn pushout_invariance(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("pushout-invariance");
    let mut s = stream(seed, 2);
    for i in 0..n {
        rep.cases += 1;
        let (theta, u) = s.span(chain_shape(i));
        let Some(po) = rep.guard(i, theta.pushout(&u)) else {
            continue;
        };
        for x in theta.source().gens() {
            let left = theta.apply(x).and_then(|y| po.into_left.apply(&y));
            let right = u.apply(x).and_then(|y| po.into_right.apply(&y));
            if let (Some(l), Some(r)) = (rep.guard(i, left), rep.guard(i, right)) {
                let amb = po.result.ambient();
                rep.check(amb.normalize(l) == amb.normalize(r), || {
                    format!("case {i}: square does not commute")
                });
            }
        }
        let tv = theta.is_vertical();
        if tv {
            rep.tally("vertical");
        }
        rep.check(tv == po.into_right.is_vertical(), || {
            format!("case {i}: verticality of theta ({tv}) not transferred to the pushout")
        });
        if let Some((coker, _)) = rep.guard(i, theta.saturated_cokernel()) {
            rep.check(coker.is_group() == tv, || {
                format!("case {i}: cokernel criterion disagrees")
            });
        }
    }
    rep
}

/// `P ≅ P^tf ⊕ P^tor` round-trips on bounded elements.
pub fn torsion_split(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("torsion-split");
    let mut s = stream(seed, 3);
    let moduli = [2, 3, 4, 6];
    let mut i = 0;
    while rep.cases < n {
        let shape = MonoidShape {
            max_dim: 2,
            max_gens: 4,
            units: true,
            torsion: Some(moduli[i % moduli.len()]),
        };
        i += 1;
        let p = s.monoid(shape);
        if p.units().groupification().group().torsion_order().is_one() {
            continue;
        }
        let case = rep.cases;
        rep.cases += 1;
        let Some(ts) = rep.guard(case, p.torsion_split()) else {
            continue;
        };
        rep.check(ts.tf.groupification().group().is_torsion_free(), || {
            format!("case {case}: P^tf has torsion")
        });
        let samb = ts.sum.ambient().clone();
        let pamb = p.ambient().clone();
        for x in p.bounded_elements(4) {
            let Some(y) = rep.guard(case, ts.forward.apply(&x)) else {
                break;
            };
            let Some(back) = rep.guard(case, ts.backward.apply(&y)) else {
                break;
            };
            rep.check(pamb.normalize(back) == pamb.normalize(x.clone()), || {
                format!("case {case}: backward(forward(x)) != x")
            });
            if let Some(m) = rep.guard(case, ts.sum.contains(&y)) {
                rep.check(m, || format!("case {case}: forward image outside the sum"));
            }
        }
        for y in ts.sum.bounded_elements(4) {
            let Some(x) = rep.guard(case, ts.backward.apply(&y)) else {
                break;
            };
            let Some(again) = rep.guard(case, ts.forward.apply(&x)) else {
                break;
            };
            rep.check(samb.normalize(again) == samb.normalize(y.clone()), || {
                format!("case {case}: forward(backward(y)) != y")
            });
            if let Some(m) = rep.guard(case, p.contains(&x)) {
                rep.check(m, || format!("case {case}: backward image outside P"));
            }
        }
    }
    rep
}

/// The monoid `⟨(2,0),(1,1),(0,2)⟩`.
pub fn even_quadrant() -> FsMonoid {
    FsMonoid::from_free(2, &[&[2, 0], &[1, 1], &[0, 2]]).expect("valid generators")
}

/// The monoid `⟨(1,0,0),(0,1,0),(1,0,1),(0,1,1)⟩`.
pub fn four_ray_monoid() -> FsMonoid {
    FsMonoid::from_free(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]).expect("valid generators")
}

/// `N -> p, 1 -> x`.
pub fn element_hom(p: &FsMonoid, x: &[i64]) -> Result<MonoidHom> {
    Ok(MonoidHom::new(FsMonoid::natural(1), p.clone(), vec![Elem::from_i64(x, &[])])?.with_extension())
}

/// The monoid `⟨(2,0),(1,1),(0,2)⟩` with `θ(1) = (2,0)`, checked against the oracles.
pub fn even_quadrant_example() -> SuiteReport {
    let mut rep = SuiteReport::new("even-quadrant");
    rep.cases = 1;
    let p = even_quadrant();
    let Some(theta) = rep.guard(0, element_hom(&p, &[2, 0])) else {
        return rep;
    };
    rep.check(!theta.is_vertical(), || "theta is vertical".into());
    let faces: Vec<Vec<usize>> = p.faces().iter().map(|f| f.selector().to_vec()).collect();
    rep.check(faces.len() == 4, || format!("{} faces", faces.len()));
    if let Some(brute) = rep.guard(0, oracle::faces_by_summand_closure(&p, 3)) {
        rep.check(brute == faces, || "face oracle disagrees".into());
    }
    let Some(m) = rep.guard(0, FanMorphism::spec_of(&theta)) else {
        return rep;
    };
    let vert = m.vertical_subfan();
    rep.check(vert.len() == 2, || format!("vertical subfan has {} cones", vert.len()));
    rep.check(m.is_vertical() == theta.is_vertical(), || {
        "fan-level verticality disagrees".into()
    });
    if let Some(ex) = rep.guard(0, oracle::vertical_subfan_exhaustive(&m)) {
        rep.check(m.source().subfan(&ex) == vert, || {
            "exhaustive subfan oracle disagrees".into()
        });
    }
    let geo = oracle::vertical_subfan_geometric(&m);
    rep.check(m.source().subfan(&geo) == vert, || {
        "geometric subfan oracle disagrees".into()
    });
    rep
}

/// The four-ray example and random acyclicity instances.
pub fn acyclicity(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("acyclicity");
    rep.cases += 1;
    let p = four_ray_monoid();
    if let Some(theta) = rep.guard(0, element_hom(&p, &[1, 1, 0])) {
        if let Some(r) = rep.guard(0, verify_boundary_acyclicity(&p, &theta)) {
            rep.check(r.verdict == Verdict::Acyclic, || {
                format!("four-ray example: {:?}", r.verdict)
            });
        }
    }
    let mut s = stream(seed, 5);
    for i in 1..=n {
        rep.cases += 1;
        let (p, theta) = s.acyclicity_instance(3);
        let Some(r) = rep.guard(i, verify_boundary_acyclicity(&p, &theta)) else {
            continue;
        };
        if r.vertical {
            rep.tally("vertical");
        }
        rep.check(r.verdict == Verdict::Acyclic, || format!("case {i}: {:?}", r.verdict));
    }
    rep
}

fn integral_complex(points: &[&[i64]], cells: &[&[usize]]) -> PolyComplex {
    let v = points
        .iter()
        .map(|p| p.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
        .collect();
    PolyComplex::new(v, cells.iter().map(|c| c.to_vec()).collect())
        .expect("valid complex")
        .simplicial_closure()
}

/// `(name, complex, expected reduced Betti numbers)` for the fixed sanity
/// cases.
pub fn sanity_complexes() -> Vec<(&'static str, PolyComplex, Vec<usize>)> {
    vec![
        (
            "hollow triangle",
            integral_complex(&[&[0, 0], &[1, 0], &[0, 1]], &[&[0, 1], &[1, 2], &[0, 2]]),
            vec![0, 1],
        ),
        (
            "boundary of the 3-simplex",
            integral_complex(
                &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
                &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
            ),
            vec![0, 0, 1],
        ),
        ("point", integral_complex(&[&[0]], &[&[0]]), vec![0]),
    ]
}

/// Fixed homology checks, each compared with the brute-force oracle.
pub fn homology_sanity() -> SuiteReport {
    let mut rep = SuiteReport::new("homology-sanity");
    for (name, c, betti) in sanity_complexes() {
        rep.cases += 1;
        let Some(h) = rep.guard(rep.cases, homology(&c, true)) else {
            continue;
        };
        let Some(p) = h.profile() else {
            rep.violations.push(format!("{name}: reported empty"));
            continue;
        };
        rep.check(p.betti_numbers() == betti, || {
            format!("{name}: betti {:?}", p.betti_numbers())
        });
        rep.check(p.groups.iter().all(|g| g.torsion.is_empty()), || {
            format!("{name}: torsion")
        });
        let brute = oracle::homology_brute(&c, true);
        let ours: Vec<(usize, Vec<Int>)> = p.groups.iter().map(|g| (g.betti, g.torsion.clone())).collect();
        rep.check(brute == ours, || format!("{name}: oracle disagrees"));
    }
    rep
}

/// Star subdivisions, common refinements and resolutions.
pub fn subdivision_calculus(seed: u64, stars: usize, refinements: usize, resolutions: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("subdivision-calculus");
    let mut s = stream(seed, 7);
    for i in 0..stars {
        rep.cases += 1;
        let f = s.fan();
        let v = s.support_point(&f);
        let Some(st) = rep.guard(i, star_subdivision(&f, &v)) else {
            continue;
        };
        rep.check(is_subdivision(&st, &f), || format!("star case {i}: not a subdivision"));
        rep.check(st.rays().contains(&v), || format!("star case {i}: center is not a ray"));
        let probe = s.support_point(&f);
        rep.check(st.support_contains(&probe), || format!("star case {i}: support shrank"));
    }
    for i in 0..refinements {
        rep.cases += 1;
        let fans: Vec<Fan> = (0..3).map(|_| s.complete_fan_2d()).collect();
        let Some(r) = rep.guard(i, common_refinement(&fans)) else {
            continue;
        };
        for (k, f) in fans.iter().enumerate() {
            rep.check(is_subdivision(&r, f), || {
                format!("refinement case {i}: not a subdivision of input {k}")
            });
        }
    }
    for i in 0..resolutions {
        rep.cases += 1;
        let f = s.resolution_input();
        let Some(res) = rep.guard(i, make_smooth(&f)) else {
            continue;
        };
        rep.check(res.fan.is_smooth(), || format!("resolution case {i}: not smooth"));
        rep.check(is_subdivision(&res.fan, &f), || {
            format!("resolution case {i}: not a subdivision")
        });
        rep.check(res.trace.windows(2).all(|w| w[1] < w[0]), || {
            format!("resolution case {i}: trace not decreasing")
        });
        rep.check(res.trace.last().map(Vec::is_empty).unwrap_or(false), || {
            format!("resolution case {i}: trace does not end smooth")
        });
    }
    rep
}

/// `N -> P` from an interior element is vertical with torsion-free
/// cokernel.
pub fn interior_vertical(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("interior-vertical");
    let mut s = stream(seed, 8);
    for i in 0..n {
        rep.cases += 1;
        let p = s.monoid(MonoidShape::SHARP);
        let Some(eta) = rep.guard(i, p.interior_vertical_to_n()) else {
            continue;
        };
        rep.check(eta.is_vertical(), || format!("case {i}: not vertical"));
        let x = &eta.images()[0];
        let Some(c) = p.lattice_coords(&x.free) else {
            rep.violations.push(format!("case {i}: image outside the lattice"));
            continue;
        };
        let snf = smith_normal_form(&IntMatrix::from_cols(c.len(), &[c]));
        rep.check(snf.diag.first().map(One::is_one).unwrap_or(false), || {
            format!("case {i}: cokernel has torsion")
        });
    }
    rep
}

/// Monoid-level and fan-level verticality agree through `Spec`, and the
/// vertical subfan matches the geometric oracle.
pub fn duality(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("duality");
    let mut s = stream(seed, 9);
    for i in 0..n {
        rep.cases += 1;
        let theta = s.sharp_hom(3);
        let Some(m) = rep.guard(i, FanMorphism::spec_of(&theta)) else {
            continue;
        };
        let tv = theta.is_vertical();
        if tv {
            rep.tally("vertical");
        }
        rep.check(m.is_vertical() == tv, || {
            format!("case {i}: monoid says {tv}, fan disagrees")
        });
        let geo = oracle::vertical_subfan_geometric(&m);
        rep.check(m.source().subfan(&geo) == m.vertical_subfan(), || {
            format!("case {i}: vertical subfan disagrees with the oracle")
        });
    }
    rep
}

/// Homology against the brute-force oracle on triangulated cross-sections
/// of random fans.
pub fn homology_oracle(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("homology-oracle");
    let mut s = stream(seed, 10);
    for i in 0..n {
        let f = s.fan();
        let h = vec![Int::from(7), Int::from(5), Int::from(3)][..f.rank()].to_vec();
        let Ok(w) = cross_section(&f, &h) else { continue };
        rep.cases += 1;
        let t = w.triangulate();
        rep.check(t.euler_characteristic() == w.euler_characteristic(), || {
            format!("case {i}: triangulation changed the Euler characteristic")
        });
        if t.cells().len() > 50 {
            continue;
        }
        for reduced in [false, true] {
            let Some(Homology::Profile(p)) = rep.guard(i, homology(&t, reduced)) else {
                continue;
            };
            let ours: Vec<(usize, Vec<Int>)> = p.groups.iter().map(|g| (g.betti, g.torsion.clone())).collect();
            rep.check(ours == oracle::homology_brute(&t, reduced), || {
                format!("case {i}: oracle disagrees")
            });
        }
    }
    rep
}

/// Smith forms against determinantal divisors and naive elimination.
pub fn snf_oracle(seed: u64, n: usize) -> SuiteReport {
    use rand::Rng;
    let mut rep = SuiteReport::new("snf-oracle");
    let mut s = stream(seed, 11);
    for i in 0..n {
        rep.cases += 1;
        let rng = s.rng();
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let rows: Vec<Vec<Int>> = (0..r)
            .map(|_| (0..c).map(|_| Int::from(rng.gen_range(-6..=6))).collect())
            .collect();
        let m = IntMatrix::from_rows(c, rows);
        let snf = smith_normal_form(&m);
        rep.check(&(&snf.left * &m) * &snf.right == snf.diagonal_matrix(), || {
            format!("case {i}: left·m·right != diag")
        });
        rep.check(snf.left.is_unimodular() && snf.right.is_unimodular(), || {
            format!("case {i}: not unimodular")
        });
        let lib: Vec<Int> = snf.diag.iter().filter(|d| !d.is_zero()).cloned().collect();
        if let Some(det) = rep.guard(i, oracle::determinantal_invariant_factors(&m)) {
            rep.check(lib == det, || format!("case {i}: determinantal divisors disagree"));
        }
        rep.check(lib == oracle::naive_invariant_factors(&m), || {
            format!("case {i}: naive elimination disagrees")
        });
    }
    rep
}

/// Faces of random monoids against the summand-closure oracle.
pub fn faces_oracle(seed: u64, n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("faces-oracle");
    let mut s = stream(seed, 12);
    for i in 0..n {
        rep.cases += 1;
        let p = s.monoid(MonoidShape {
            max_dim: 3,
            max_gens: 4,
            units: i % 2 == 0,
            torsion: None,
        });
        if p.gens().len() > 8 {
            continue;
        }
        let faces: Vec<Vec<usize>> = p.faces().iter().map(|f| f.selector().to_vec()).collect();
        if let Some(brute) = rep.guard(i, oracle::faces_by_summand_closure(&p, 4)) {
            rep.check(brute == faces, || {
                format!("case {i}: {} faces, oracle finds {}", faces.len(), brute.len())
            });
        }
    }
    rep
}

/// Case counts of the full run.
#[derive(Clone, Copy, Debug)]
pub struct Sizes {
    pub chains: usize,
    pub squares: usize,
    pub splits: usize,
    pub acyclic: usize,
    pub stars: usize,
    pub refinements: usize,
    pub resolutions: usize,
    pub interior: usize,
    pub duality: usize,
    pub oracles: usize,
}

impl Sizes {
    pub const FULL: Sizes = Sizes {
        chains: 500,
        squares: 100,
        splits: 100,
        acyclic: 50,
        stars: 100,
        refinements: 20,
        resolutions: 50,
        interior: 100,
        duality: 200,
        oracles: 50,
    };
}

/// Every suite, in a fixed order.
pub fn run_all(seed: u64, sizes: Sizes) -> Vec<SuiteReport> {
    vec![
        verticality_calculus(seed, sizes.chains),
        pushout_invariance(seed, sizes.squares),
        torsion_split(seed, sizes.splits),
        even_quadrant_example(),
        acyclicity(seed, sizes.acyclic),
        homology_sanity(),
        subdivision_calculus(seed, sizes.stars, sizes.refinements, sizes.resolutions),
        interior_vertical(seed, sizes.interior),
        duality(seed, sizes.duality),
        homology_oracle(seed, sizes.oracles),
        snf_oracle(seed, sizes.oracles),
        faces_oracle(seed, sizes.oracles),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: Sizes = Sizes {
        chains: 10,
        squares: 5,
        splits: 5,
        acyclic: 5,
        stars: 5,
        refinements: 2,
        resolutions: 5,
        interior: 5,
        duality: 5,
        oracles: 5,
    };

    #[test]
    fn small_run_passes_and_repeats() {
        let a = run_all(3, SMALL);
        for r in &a {
            assert!(r.passed(), "{}: {:?}", r.name, r.violations);
        }
        assert_eq!(a, run_all(3, SMALL));
    }
}
