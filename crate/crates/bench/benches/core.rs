use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use logfan::fan::make_smooth;
use logfan::random::{MonoidShape, Sampler};
use logfan::topo::{cross_section, homology, verify_boundary_acyclicity};
use logfan::verify::{element_hom, four_ray_monoid};
use logfan::zlin::smith_normal_form;
use logfan::{hilbert_basis, Cone, Fan, Int, IntMatrix};

fn snf(c: &mut Criterion) {
    let m = IntMatrix::from_i64(&[
        &[2, 4, 4, -6, 1],
        &[-6, 6, 12, 3, 0],
        &[10, -4, -16, 7, 5],
        &[1, 9, -3, 2, -8],
        &[4, 0, 6, -2, 3],
    ]);
    c.bench_function("smith normal form 5x5", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

fn hilbert(c: &mut Criterion) {
    let rays: Vec<Vec<Int>> = [[1, 0, 0], [0, 1, 0], [1, 1, 5], [2, -1, 7]]
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let lattice = IntMatrix::identity(3).row_vecs();
    c.bench_function("hilbert basis rank 3", |b| {
        b.iter(|| hilbert_basis(black_box(&rays), &lattice).unwrap())
    });
}

fn resolution(c: &mut Criterion) {
    let cone = Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 2, 5]]);
    let fan = Fan::from_cone(&cone).unwrap();
    c.bench_function("make_smooth multiplicity 5 cone", |b| {
        b.iter(|| make_smooth(black_box(&fan)).unwrap())
    });
    let mut s = Sampler::new(7);
    c.bench_function("make_smooth random input", |b| {
        b.iter_batched(
            || s.resolution_input(),
            |f| make_smooth(&f).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn homology_bench(c: &mut Criterion) {
    let cone = Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1], &[2, -1, 1]]);
    let fan = Fan::from_cone(&cone).unwrap();
    let h = cone.dual().interior_point();
    let w = cross_section(&fan, &h).unwrap().triangulate();
    c.bench_function("reduced homology of a triangulated polygon", |b| {
        b.iter(|| homology(black_box(&w), true).unwrap())
    });
}

fn acyclicity(c: &mut Criterion) {
    let p = four_ray_monoid();
    let theta = element_hom(&p, &[1, 1, 0]).unwrap();
    c.bench_function("acyclicity of the four-ray example", |b| {
        b.iter(|| verify_boundary_acyclicity(black_box(&p), &theta).unwrap())
    });
    let mut s = Sampler::new(11);
    c.bench_function("acyclicity random rank 3", |b| {
        b.iter_batched(
            || s.acyclicity_instance(3),
            |(p, t)| verify_boundary_acyclicity(&p, &t).unwrap(),
            BatchSize::SmallInput,
        )
    });
    let mut s = Sampler::new(13);
    c.bench_function("faces of a random monoid", |b| {
        b.iter_batched(|| s.monoid(MonoidShape::SHARP), |p| p.faces(), BatchSize::SmallInput)
    });
}

criterion_group!(benches, snf, hilbert, resolution, homology_bench, acyclicity);
criterion_main!(benches);
