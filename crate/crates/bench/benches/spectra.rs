use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ncpspec::{energy, kummer_poly, radial_wavefunction};
use ncpspec_bench::{ladder, nitrogen};

fn bench_energy(c: &mut Criterion) {
    let (p, mass) = nitrogen();
    let states = ladder();
    c.bench_function("energy/nitrogen_ladder", |b| {
        b.iter(|| {
            for qn in &states {
                black_box(energy(&p, mass, *qn).unwrap());
            }
        })
    });
}

fn bench_kummer(c: &mut Criterion) {
    c.bench_function("kummer_poly/n8", |b| {
        b.iter(|| kummer_poly(black_box(8), black_box(438.6), black_box(440.0)).unwrap())
    });
}

fn bench_normalization(c: &mut Criterion) {
    let (p, mass) = nitrogen();
    let qn = ncpspec::QuantumNumbers::new(2, 1, 1);
    let s = energy(&p, mass, qn).unwrap();
    c.bench_function("wavefunction/nitrogen_normalize", |b| {
        b.iter(|| radial_wavefunction(&p, mass, qn, &s).unwrap())
    });
}

criterion_group!(benches, bench_energy, bench_kummer, bench_normalization);
criterion_main!(benches);
