use criterion::{black_box, criterion_group, criterion_main, Criterion};
use folia_core::blowup;
use folia_core::germ::{self, CurveGerm, FoliationGerm};
use folia_core::localalg::{self, MonomialOrder};
use folia_core::poly::{parse_poly, rat, Poly};
use folia_core::projective::{self, ProjectiveCurve, ProjectiveFoliation, ProjectivePoint};
use folia_core::theorems::CheckOptions;

fn p(s: &str) -> Poly {
    parse_poly(s, 2).unwrap()
}

fn fk(k: u32) -> FoliationGerm {
    let a = 2 * k - 2;
    FoliationGerm::new(
        p(&format!("y*(2*x^{a} + 4*x^2*y^{} - y^{})", k - 2, k - 1)),
        p(&format!("x*(y^{} - 2*x^2*y^{} - x^{a})", k - 1, k - 2)),
    )
    .unwrap()
}

fn local_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("standard basis");
    for k in [3, 5, 7] {
        let gens = fk(k).generators();
        group.bench_function(format!("F_{k}"), |b| {
            b.iter(|| localalg::standard_basis(black_box(&gens), MonomialOrder::Local).unwrap())
        });
    }
    group.finish();

    let gens = fk(4).generators();
    c.bench_function("macaulay F_4", |b| {
        b.iter(|| localalg::macaulay_stable_dim(black_box(&gens), 64).unwrap())
    });

    let xy = CurveGerm::new(p("x*y")).unwrap();
    let f5 = fk(5);
    c.bench_function("tjurina F_5", |b| {
        b.iter(|| germ::tjurina_foliation(black_box(&f5), &xy).unwrap())
    });
}

fn reduction(c: &mut Criterion) {
    let cusp = FoliationGerm::hamiltonian(&p("y^2 - x^3")).unwrap();
    c.bench_function("reduce cusp", |b| {
        b.iter(|| blowup::reduce(black_box(&cusp), 24).unwrap())
    });
    let f5 = fk(5);
    c.bench_function("reduce F_5", |b| {
        b.iter(|| blowup::reduce(black_box(&f5), 24).unwrap())
    });
}

fn global(c: &mut Criterion) {
    let q = |s: &str| parse_poly(s, 3).unwrap();
    let fol = ProjectiveFoliation::new(q("y*z"), q("2*x*z"), q("-3*x*y")).unwrap();
    let curve = ProjectiveCurve::new(q("x*y*z")).unwrap();
    let pt = |a, b, c| ProjectivePoint::new([rat(a), rat(b), rat(c)]).unwrap();
    let points = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
    let opts = CheckOptions::default();
    c.bench_function("global bound", |b| {
        b.iter(|| projective::check_global_bound(black_box(&fol), &curve, &points, &opts).unwrap())
    });
    let sextic = ProjectiveCurve::new(q("x^6 + y^6 + z^6 - 3*x^2*y^2*z^2")).unwrap();
    c.bench_function("global tjurina sextic", |b| {
        b.iter(|| projective::global_tjurina(black_box(&sextic), 64).unwrap())
    });
}

fn gcd(c: &mut Criterion) {
    let f = p("x^7 + x^4*y^3 + 3*x^3*y^4 + 2*x*y^6 - 3*y^7 - x^5*y - x^3*y^3 + 3*y^5 - x^4 + 5*x^2*y^2 + 6*x*y^3 + 2*y^4");
    c.bench_function("squarefree degree 7", |b| {
        b.iter(|| black_box(&f).is_squarefree())
    });
}

criterion_group!(benches, local_algebra, reduction, global, gcd);
criterion_main!(benches);
