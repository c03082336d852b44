use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use logfan::fan::{is_subdivision, make_smooth, star_subdivision};
use logfan::oracle;
use logfan::random::{MonoidShape, Sampler};
use logfan::topo::{cross_section, homology, ChainComplex};
use logfan::wire::{self, Workspace};
use logfan::zlin::{hermite_rows, kernel_basis, smith_normal_form, solve_integral};
use logfan::{Fan, FanMorphism, Homology, Int, IntMatrix, PolyComplex, Rat};

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r).prop_map(move |rows| {
            IntMatrix::from_rows(
                c,
                rows.into_iter()
                    .map(|row| row.into_iter().map(Int::from).collect())
                    .collect(),
            )
        })
    })
}

/// Face closure of random simplices on up to six vertices.
fn simplicial_complex() -> impl Strategy<Value = PolyComplex> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=n.min(4)), 1..=6).prop_map(move |cells| {
            // vertex i at the i-th basis vector, so every subset is a simplex
            let vertices: Vec<Vec<Rat>> = (0..n)
                .map(|i| (0..n).map(|j| Rat::from_integer(Int::from((i == j) as i64))).collect())
                .collect();
            let cells: Vec<Vec<usize>> = cells.into_iter().map(|s| s.into_iter().collect()).collect();
            PolyComplex::new(vertices, cells).unwrap().simplicial_closure()
        })
    })
}

/// Every row of `a` is an integral combination of the rows of `b`.
fn rows_in_span(a: &IntMatrix, b: &IntMatrix) -> bool {
    let bt = b.transpose();
    a.row_vecs().iter().all(|r| solve_integral(&bt, r).is_some())
}

fn lex_decreasing(trace: &[Vec<Int>]) -> bool {
    trace.windows(2).all(|w| w[0] > w[1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_factors(m in matrix(4, 4, 9)) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(&(&snf.left * &m) * &snf.right, snf.diagonal_matrix());
        prop_assert!(snf.left.is_unimodular() && snf.right.is_unimodular());
        prop_assert_eq!(&snf.left * &snf.left_inv, IntMatrix::identity(m.rows()));
        prop_assert!(snf.diag.iter().all(|d| !d.is_negative()));
        let nonzero: Vec<Int> = snf.diag.iter().filter(|d| !d.is_zero()).cloned().collect();
        prop_assert_eq!(nonzero.len(), snf.rank());
        prop_assert!(nonzero.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        prop_assert_eq!(snf.rank(), oracle::rank_over_q(&m));
        prop_assert_eq!(nonzero, oracle::determinantal_invariant_factors(&m).unwrap());
    }

    #[test]
    fn kernel_is_saturated(m in matrix(3, 5, 6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.cols(), m.cols() - oracle::rank_over_q(&m));
        prop_assert!((&m * &k).is_zero());
        // a saturated sublattice has all invariant factors one
        prop_assert!(smith_normal_form(&k).diag.iter().all(|d| d.is_zero() || d.is_one()));
    }

    #[test]
    fn hermite_form_keeps_row_lattice(m in matrix(4, 4, 9)) {
        let h = hermite_rows(&m);
        prop_assert!(rows_in_span(&h, &m) && rows_in_span(&m, &h));
        prop_assert_eq!(hermite_rows(&h), h.clone());
        prop_assert_eq!(h.rows(), oracle::rank_over_q(&m));
    }

    #[test]
    fn solutions_solve(m in matrix(4, 4, 6), x in proptest::collection::vec(-5i64..=5, 4)) {
        let x: Vec<Int> = x[..m.cols()].iter().map(|&v| Int::from(v)).collect();
        let b = m.mul_vec(&x);
        let y = solve_integral(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn boundary_squares_to_zero(c in simplicial_complex(), reduced in any::<bool>()) {
        let cc = ChainComplex::simplicial(&c, reduced).unwrap();
        for w in cc.boundaries().windows(2) {
            prop_assert!((&w[0] * &w[1]).is_zero());
        }
    }

    #[test]
    fn homology_matches_brute_force(c in simplicial_complex(), reduced in any::<bool>()) {
        let Homology::Profile(p) = homology(&c, reduced).unwrap() else {
            return Err(TestCaseError::fail("nonempty complex"));
        };
        let ours: Vec<(usize, Vec<Int>)> = p.groups.iter().map(|g| (g.betti, g.torsion.clone())).collect();
        prop_assert_eq!(ours, oracle::homology_brute(&c, reduced));
        let alternating: i64 = p
            .betti_numbers()
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        let offset = if reduced { 1 } else { 0 };
        prop_assert_eq!(alternating + offset, c.euler_characteristic());
    }

    #[test]
    fn complex_round_trip(c in simplicial_complex()) {
        let v = wire::parse(&wire::render(&wire::complex_to_json(&c))).unwrap();
        prop_assert_eq!(wire::complex_from_json(&v, "$").unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn saturation_is_idempotent(seed in any::<u64>(), units in any::<bool>()) {
        let mut s = Sampler::new(seed);
        let p = s.monoid(MonoidShape { units, ..MonoidShape::SHARP });
        // random monoids come saturated; a sparser generating set is not
        let coarse = logfan::FsMonoid::new(
            p.ambient().clone(),
            p.gens().iter().map(|g| p.ambient().scale(&Int::from(2), g)).collect(),
        )
        .unwrap();
        let sat = coarse.saturate().unwrap();
        prop_assert!(sat.is_saturated().unwrap());
        prop_assert!(sat.saturate().unwrap().same_monoid(&sat).unwrap());
        for g in coarse.gens() {
            prop_assert!(sat.contains(g).unwrap());
        }
        prop_assert_eq!(sat.rank(), p.rank());
    }

    #[test]
    fn monoid_round_trip(seed in any::<u64>(), units in any::<bool>(), torsion in any::<bool>()) {
        let mut s = Sampler::new(seed);
        let p = s.monoid(MonoidShape { units, torsion: torsion.then_some(3), ..MonoidShape::SHARP });
        let v = wire::parse(&wire::render(&wire::monoid_to_json(&p))).unwrap();
        prop_assert!(wire::monoid_from_json(&v, "$").unwrap().same_presentation(&p));
    }

    #[test]
    fn hom_and_workspace_round_trip(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let h = s.sharp_hom(3);
        let v = wire::parse(&wire::render(&wire::hom_to_json(&h))).unwrap();
        let back = wire::hom_from_json(&v, &Workspace::new(), "$").unwrap();
        prop_assert_eq!(back.images(), h.images());
        prop_assert!(back.source().same_presentation(h.source()));
        prop_assert!(back.target().same_presentation(h.target()));

        let f = s.fan();
        let mut ws = Workspace::new();
        ws.insert_monoid("p", h.source().clone()).unwrap();
        ws.insert_fan("f", f.clone()).unwrap();
        let again = Workspace::load(&wire::parse(&wire::render(&ws.to_json())).unwrap()).unwrap();
        prop_assert_eq!(again.fan("f"), Some(&f));
        prop_assert!(again.monoid("p").unwrap().same_presentation(h.source()));
    }

    #[test]
    fn fan_round_trip(seed in any::<u64>()) {
        let f = Sampler::new(seed).fan();
        let v = wire::parse(&wire::render(&wire::fan_to_json(&f))).unwrap();
        prop_assert_eq!(wire::fan_from_json(&v, "$").unwrap(), f);
    }

    #[test]
    fn faces_match_summand_closure(seed in any::<u64>(), units in any::<bool>()) {
        let mut s = Sampler::new(seed);
        let p = s.monoid(MonoidShape { max_gens: 4, units, ..MonoidShape::SHARP });
        prop_assume!(p.gens().len() <= 8);
        let faces: Vec<Vec<usize>> = p.faces().iter().map(|f| f.selector().to_vec()).collect();
        prop_assert_eq!(faces, oracle::faces_by_summand_closure(&p, 4).unwrap());
    }

    #[test]
    fn double_dual(seed in any::<u64>()) {
        let p = Sampler::new(seed).monoid(MonoidShape::SHARP);
        let d = p.dual_monoid().unwrap();
        let dd = d.dual_monoid().unwrap();
        prop_assert_eq!(d.rank(), p.rank());
        prop_assert_eq!(dd.gens().len(), p.hilbert_basis().unwrap().len());
        prop_assert_eq!(dd.faces().len(), p.faces().len());
        prop_assert_eq!(d.faces().len(), p.faces().len());
    }

    #[test]
    fn verticality_agrees_with_fans(seed in any::<u64>()) {
        let h = Sampler::new(seed).sharp_hom(3);
        let m = FanMorphism::spec_of(&h).unwrap();
        prop_assert_eq!(m.is_vertical(), h.is_vertical());
        let sub = m.vertical_subfan();
        prop_assert_eq!(m.source().subfan(&oracle::vertical_subfan_geometric(&m)), sub.clone());
        prop_assert_eq!(sub == *m.source(), h.is_vertical());
    }

    #[test]
    fn star_subdivision_subdivides(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = s.fan();
        let v = s.support_point(&f);
        let g = star_subdivision(&f, &v).unwrap();
        prop_assert!(is_subdivision(&g, &f));
        prop_assert!(g.rays().contains(&v));
        prop_assert_eq!(star_subdivision(&g, &v).unwrap(), g);
    }

    #[test]
    fn plane_resolution(seed in any::<u64>()) {
        let f: Fan = Sampler::new(seed).complete_fan_2d();
        let r = make_smooth(&f).unwrap();
        prop_assert!(r.fan.is_smooth());
        prop_assert!(is_subdivision(&r.fan, &f));
        prop_assert!(lex_decreasing(&r.trace));
        prop_assert_eq!(r.trace.last(), Some(&vec![]));
    }

    #[test]
    fn cross_sections_of_cones_are_balls(seed in any::<u64>(), rank in 2usize..=3) {
        let cone = Sampler::new(seed).pointed_cone(rank);
        let f = Fan::from_cone(&cone).unwrap();
        let h = cone.dual().interior_point();
        let w = cross_section(&f, &h).unwrap();
        prop_assert_eq!(w.euler_characteristic(), 1);
        let t = w.triangulate();
        prop_assert_eq!(t.euler_characteristic(), 1);
        prop_assert!(homology(&t, true).unwrap().profile().unwrap().is_acyclic());
    }
}
