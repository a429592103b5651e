use criterion::{criterion_group, criterion_main, Criterion};
use jmarked::scheme::{minors_ideal, scheme_ideal, tangent_space};
use jmarked::{buchberger_check, PairMode, Reducer, TermOrder};
use jmarked_bench::{appendix, nogbasis, three_squares};

const DRL: TermOrder = TermOrder::DegRevLex;

fn basis_check(c: &mut Criterion) {
    let g = nogbasis();
    for (name, mode) in [("minimal", PairMode::Minimal), ("all", PairMode::All)] {
        c.bench_function(&format!("basis_check_{name}"), |b| {
            b.iter(|| {
                let mut red = Reducer::new(g.clone(), DRL).unwrap();
                buchberger_check(&mut red, mode, None).unwrap().is_basis()
            })
        });
    }
}

fn normal_form(c: &mut Criterion) {
    let g = nogbasis();
    let mut red = Reducer::new(g.clone(), DRL).unwrap();
    red.ensure_degree(8).unwrap();
    let q = jmarked::parse::parse_polynomial(g.ring(), "x^3*y^2*z^3 + y^4*z^4 - x^2*y^2*z^4").unwrap();
    c.bench_function("normal_form_degree_8", |b| b.iter(|| red.normal_form(&q).unwrap()));
}

fn schemes(c: &mut Criterion) {
    let small = three_squares();
    c.bench_function("scheme_three_squares", |b| {
        b.iter(|| scheme_ideal(&small, PairMode::Minimal, DRL).unwrap())
    });
    c.bench_function("minors_three_squares", |b| {
        b.iter(|| minors_ideal(&small, 2..=4, Default::default()).unwrap())
    });
    let big = appendix();
    let mut group = c.benchmark_group("appendix");
    group.sample_size(10);
    group.bench_function("scheme_and_tangent", |b| {
        b.iter(|| tangent_space(&scheme_ideal(&big, PairMode::Minimal, DRL).unwrap()).dimension())
    });
    group.finish();
}

criterion_group!(benches, basis_check, normal_form, schemes);
criterion_main!(benches);
