use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nimgen_bench::group;
use nimgen_core::{analyze, verify_group, GameKind, IntersectionLattice};

fn subgroups(c: &mut Criterion) {
    let mut g = c.benchmark_group("all_subgroups");
    for spec in ["S4", "Z2xZ2xZ2xZ2", "D24", "A5"] {
        let grp = group(spec);
        g.bench_with_input(BenchmarkId::from_parameter(spec), &grp, |b, grp| {
            b.iter(|| black_box(grp.all_subgroups().unwrap().len()))
        });
    }
    g.finish();
}

fn structure_digraph(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure_digraph");
    g.sample_size(20);
    for spec in ["Z60", "D30", "Z2xZ2xZ2xZ2xZ2", "S4", "A5"] {
        let grp = group(spec);
        // warm the maximal-subgroup cache so only lattice and typing are timed
        grp.maximal_subgroups().unwrap();
        for game in [GameKind::Avoid, GameKind::Achieve] {
            let id = BenchmarkId::new(game.tag(), spec);
            g.bench_with_input(id, &grp, |b, grp| {
                b.iter(|| black_box(analyze(grp.clone(), game).unwrap().game_nim()))
            });
        }
    }
    g.finish();
}

fn lattice(c: &mut Criterion) {
    let grp = group("Z2xZ2xZ2xZ2xZ2xZ2");
    grp.maximal_subgroups().unwrap();
    c.bench_function("intersection_lattice/Z2^6", |b| {
        b.iter(|| black_box(IntersectionLattice::new(grp.clone()).unwrap().len()))
    });
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for spec in ["D6", "Z2xZ2xZ3", "Z16"] {
        let grp = group(spec);
        g.bench_with_input(BenchmarkId::from_parameter(spec), &grp, |b, grp| {
            b.iter(|| black_box(verify_group(grp.clone(), GameKind::Achieve, 16).unwrap().passed()))
        });
    }
    g.finish();
}

criterion_group!(benches, subgroups, structure_digraph, lattice, oracle);
criterion_main!(benches);
