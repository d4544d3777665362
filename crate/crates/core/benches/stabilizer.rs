use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hnt_core::wreath::enumerate_full_group;
use hnt_core::{build_family, classify_theorem, setwise_stabilizer, Code, Execution, HammingScheme, SearchConfig};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn neighbour_stabilizer(c: &mut Criterion) {
    let mut group = c.benchmark_group("neighbour_stabilizer");
    group.sample_size(10);
    for m in [6, 8] {
        let cfg = SearchConfig::default();
        let family = build_family(m, &cfg).unwrap();
        let neighbours = family.c.neighbour_set();
        let scheme = family.c.scheme();
        for (name, execution) in MODES {
            let cfg = cfg.with_execution(execution);
            group.bench_with_input(BenchmarkId::new(name, m), &m, |b, _| {
                b.iter(|| setwise_stabilizer(&neighbours, scheme, &cfg).unwrap().len())
            });
        }
    }
    group.finish();
}

fn full_group(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_full_group");
    group.sample_size(10);
    let scheme = HammingScheme::new(6, 2).unwrap();
    for (name, execution) in MODES {
        let cfg = SearchConfig::default().with_execution(execution);
        group.bench_function(name, |b| b.iter(|| enumerate_full_group(scheme, &cfg).unwrap().len()));
    }
    group.finish();
}

fn classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_theorem");
    let scheme = HammingScheme::new(4, 3).unwrap();
    let code = Code::from_texts(scheme, &["0000", "1111"]).unwrap();
    for (name, execution) in MODES {
        let cfg = SearchConfig::default().with_execution(execution);
        group.bench_function(name, |b| b.iter(|| classify_theorem(&code, &cfg).unwrap().verdict));
    }
    group.finish();
}

criterion_group!(benches, neighbour_stabilizer, full_group, classify);
criterion_main!(benches);
