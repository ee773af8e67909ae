use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use toric_bench::{dense_matrix, fans, hexagonal_cone, wide_cone};
use toric_core::fan::validate_fan;
use toric_core::linalg::{hermite_normal_form, smith_normal_form};
use toric_core::monoid::hilbert_basis_of_cone;
use toric_core::scheme::{
    check_separation_condition, property_report, system_from_fan, BaseDescriptor,
};

fn linalg(c: &mut Criterion) {
    let m = dense_matrix();
    c.bench_function("hermite 6x6", |b| {
        b.iter(|| hermite_normal_form(black_box(&m)))
    });
    c.bench_function("smith 6x6", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

fn cones(c: &mut Criterion) {
    let hex = hexagonal_cone();
    c.bench_function("dual hexagonal cone", |b| b.iter(|| black_box(&hex).dual()));
    c.bench_function("faces hexagonal cone", |b| {
        b.iter(|| black_box(&hex).faces())
    });
    let wide = wide_cone().dual();
    c.bench_function("hilbert basis wide dual", |b| {
        b.iter(|| hilbert_basis_of_cone(black_box(&wide)))
    });
}

fn fan_ops(c: &mut Criterion) {
    let base = BaseDescriptor::field_point();
    for (name, f) in fans() {
        c.bench_function(&format!("validate {name}"), |b| {
            b.iter(|| validate_fan(f.ambient_rank(), black_box(f.cones())))
        });
        c.bench_function(&format!("separation {name}"), |b| {
            b.iter(|| check_separation_condition(&system_from_fan(black_box(&f))))
        });
        c.bench_function(&format!("report {name}"), |b| {
            b.iter(|| property_report(black_box(&f), &base))
        });
    }
}

criterion_group!(benches, linalg, cones, fan_ops);
criterion_main!(benches);
