use std::hint::black_box;

use confocal_core::{
    eigen_sym3, verify_circularity, viewing_cone, Branch, Conic, ConfocalSystem, SymMat3, Vec3,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn eigen(c: &mut Criterion) {
    let m = SymMat3::new(2.0, -0.3, 0.7, 1.1, 0.25, -0.9);
    c.bench_function("eigen_sym3", |b| b.iter(|| eigen_sym3(black_box(&m))));
    let near = SymMat3::new(1.0, 1e-9, 0.0, 1.0, 0.0, -2.0);
    c.bench_function("eigen_sym3_clustered", |b| b.iter(|| eigen_sym3(black_box(&near))));
}

fn coords(c: &mut Criterion) {
    let sys = ConfocalSystem::new(4.0, 2.0, 1.0).unwrap();
    let u = Vec3::new(0.7, -1.3, 0.4);
    c.bench_function("confocal_coords", |b| b.iter(|| sys.confocal_coords(black_box(u))));
}

fn viewpoint(c: &mut Criterion) {
    let conic = Conic::new(3.0, 1.0).unwrap();
    c.bench_function("viewing_cone", |b| {
        b.iter(|| viewing_cone(black_box(&conic), black_box(0.8), Branch::Plus))
    });
    let v = viewing_cone(&conic, 0.8, Branch::Plus).unwrap();
    let curve = confocal_core::embed_conic(&conic).unwrap().conic_curve;
    c.bench_function("verify_circularity_256", |b| {
        b.iter(|| verify_circularity(v.cone.apex, v.cone.axis, black_box(&curve), 256))
    });
}

criterion_group!(benches, eigen, coords, viewpoint);
criterion_main!(benches);
