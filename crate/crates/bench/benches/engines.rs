use criterion::{criterion_group, criterion_main, Criterion};
use defcert_core::arrangement::{parse_arrangement, parse_loops, zvk_presentation, CASE_STUDY_ARRANGEMENT, CASE_STUDY_LOOPS};
use defcert_core::braid::ArtinConvention;
use defcert_core::casestudy;
use defcert_core::freegroup::{stallings_fold, Alphabet, FreeWord};
use defcert_core::grouptheory::{coset_certificate, CentralExtModel};
use defcert_core::pipeline::build_certificate;
use defcert_core::rational_family::{base_map, critical_data, verify_z_formula};

fn engines(c: &mut Criterion) {
    c.bench_function("critical_data f", |b| {
        let f = base_map();
        b.iter(|| critical_data(&f).unwrap())
    });
    c.bench_function("z formula, both routes", |b| b.iter(|| verify_z_formula().unwrap()));
    c.bench_function("monodromy presentation", |b| {
        let arr = parse_arrangement(CASE_STUDY_ARRANGEMENT).unwrap();
        let loops = parse_loops(CASE_STUDY_LOOPS, &arr).unwrap();
        b.iter(|| zvk_presentation(&arr, &loops).unwrap())
    });
    c.bench_function("stallings fold", |b| {
        let a = Alphabet::new(&["a", "b"]).unwrap();
        let gens: Vec<FreeWord> = ["a a b a^-1", "b b a b^-1 a", "a b a b a^-1"]
            .iter()
            .map(|s| FreeWord::parse(&a, s).unwrap())
            .collect();
        b.iter(|| stallings_fold(&a, &gens).unwrap())
    });
    c.bench_function("coset certificate n_max 20", |b| {
        let m = CentralExtModel::ab();
        let chain = vec![casestudy::quotient_map().unwrap()];
        let imgs = casestudy::model_images(&m).unwrap();
        let e = casestudy::diagonal_generators().unwrap();
        b.iter(|| coset_certificate(&casestudy::g(), &e, &chain, &m, &imgs, 20).unwrap())
    });
    c.bench_function("full certificate n_max 20", |b| {
        b.iter(|| build_certificate(20, ArtinConvention::Standard).unwrap())
    });
}

criterion_group!(benches, engines);
criterion_main!(benches);
