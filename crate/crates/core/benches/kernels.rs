use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use braidcyc::builtin::braided_line;
use braidcyc::cocyclic::{build_cm_cocyclic, DEFAULT_CAP};
use braidcyc::exec::{map_range, map_range_seq};
use braidcyc::hopf::ModularPair;
use braidcyc::linalg::rank;
use braidcyc::transmute::{czn_group_algebra, czn_r_matrix, transmute};

fn czn_cocyclic(n: usize, level: usize) -> braidcyc::cocyclic::CocyclicModule {
    let t = transmute(&czn_group_algebra(n), &czn_r_matrix(n)).unwrap();
    let pair = ModularPair::trivial(&t.hopf);
    build_cm_cocyclic(&t.hopf, &pair, level, DEFAULT_CAP).unwrap()
}

fn compose(c: &mut Criterion) {
    let mut g = c.benchmark_group("compose τ∘τ");
    for (n, level) in [(3, 4), (4, 3)] {
        let cm = czn_cocyclic(n, level);
        let tau = cm.cyclic(level).matrix();
        let id = format!("Z{n} level {level}");
        g.bench_with_input(BenchmarkId::new("parallel", &id), tau, |b, t| {
            b.iter(|| black_box(t.compose(t).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("sequential", &id), tau, |b, t| {
            b.iter(|| black_box(t.compose_seq(t).unwrap()))
        });
    }
    g.finish();
}

fn kron(c: &mut Criterion) {
    let mut g = c.benchmark_group("kron Δ⊗Δ");
    let h = braided_line(5, 1).unwrap();
    let d = h.comul().matrix();
    g.bench_function("parallel", |b| b.iter(|| black_box(d.kron(d))));
    g.bench_function("sequential", |b| b.iter(|| black_box(d.kron_seq(d))));
    g.finish();
}

fn face_ranks(c: &mut Criterion) {
    let mut g = c.benchmark_group("ranks of all faces");
    let level = 3;
    let cm = czn_cocyclic(3, level);
    let faces: Vec<_> = (0..=level).map(|i| cm.face(level, i).matrix().clone()).collect();
    g.bench_function("parallel", |b| b.iter(|| black_box(map_range(faces.len(), |i| rank(&faces[i])))));
    g.bench_function("sequential", |b| {
        b.iter(|| black_box(map_range_seq(faces.len(), |i| rank(&faces[i]))))
    });
    g.finish();
}

criterion_group!(benches, compose, kron, face_ranks);
criterion_main!(benches);
