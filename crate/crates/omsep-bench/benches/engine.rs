use criterion::{criterion_group, criterion_main, Criterion};
use omsep_core::construct::{alternating, census_rank3_simple};
use omsep_core::graphsep::{self, strict_sign_feasibility, t_ab};
use omsep_core::ratmat::rat;
use omsep_core::separation::collection_of;
use omsep_core::tilings::{enumerate_colocalizations, mutation_graph, purity_check};
use omsep_core::Sign;

fn bench_colocalizations(c: &mut Criterion) {
    let m = alternating(5, 2);
    c.bench_function("enumerate_colocalizations C^{5,2}", |b| {
        b.iter(|| enumerate_colocalizations(&m, 100_000).unwrap().len())
    });
    let sigma = enumerate_colocalizations(&m, 1).unwrap().pop().unwrap();
    c.bench_function("collection_of C^{5,2}", |b| {
        b.iter(|| collection_of(&m, &sigma).unwrap().len())
    });
}

fn bench_purity(c: &mut Criterion) {
    let m = alternating(6, 3);
    c.bench_function("purity_check C^{6,3}", |b| {
        b.iter(|| purity_check(&m, 10).unwrap().is_pure())
    });
    let k23 = graphsep::k23().matroid().unwrap();
    c.bench_function("purity_check M(K2,3)", |b| {
        b.iter(|| purity_check(&k23, 10).unwrap().is_pure())
    });
}

fn bench_tutte_and_mutation(c: &mut Criterion) {
    let k23 = graphsep::k23().matroid().unwrap();
    c.bench_function("tutte_eval M(K2,3) (2,1)", |b| {
        b.iter(|| k23.tutte_eval(2, 1))
    });
    let m = alternating(6, 3);
    c.bench_function("mutation_graph C^{6,3}", |b| {
        b.iter(|| mutation_graph(&m).component_count)
    });
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("census_rank3_simple n=5", |b| {
        b.iter(|| census_rank3_simple(5).unwrap().len())
    });
    group.finish();
}

fn bench_feasibility(c: &mut Criterion) {
    // The coherence system of T_{2,2} with the all-plus sign map.
    let tree = t_ab(2, 2).unwrap();
    let rows: Vec<(Vec<_>, Sign)> = tree
        .subtrees
        .iter()
        .map(|&sub| {
            let coef: Vec<_> = (0..tree.n_nodes())
                .map(|v| {
                    if sub & (1 << v) != 0 {
                        rat(1, 1)
                    } else {
                        rat(0, 1)
                    }
                })
                .collect();
            (coef, Sign::Plus)
        })
        .collect();
    c.bench_function("strict_sign_feasibility T_{2,2} all-plus", |b| {
        b.iter(|| strict_sign_feasibility(&rows).unwrap())
    });
}

criterion_group!(
    benches,
    bench_colocalizations,
    bench_purity,
    bench_tutte_and_mutation,
    bench_census,
    bench_feasibility
);
criterion_main!(benches);
