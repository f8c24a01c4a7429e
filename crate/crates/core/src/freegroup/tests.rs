use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;

use super::*;

fn ab() -> Arc<Alphabet> {
    Alphabet::new(&["a", "b"]).unwrap()
}

fn w(alpha: &Arc<Alphabet>, s: &str) -> FreeWord {
    FreeWord::parse(alpha, s).unwrap()
}

fn pres() -> Arc<Alphabet> {
    Alphabet::new(&["r1", "r2", "s1", "s2", "c"]).unwrap()
}

#[test]
fn reduce_examples() {
    let a = ab();
    let x = reduce(&a, &[Letter::pos(0), Letter::neg(0), Letter::pos(1)]);
    assert_eq!(x, w(&a, "b"));
    assert!(reduce(&a, &[]).is_identity());
    let p = pres();
    let g = w(&p, "s2 c r1 s1 c r2");
    assert_eq!(g.len(), 6);
    assert_eq!(g.to_string(), "s2 c r1 s1 c r2");
}

#[test]
fn word_arith_examples() {
    let a = ab();
    let x = w(&a, "a");
    assert!(word_arith(WordOp::Mul(&x, &x.inv())).unwrap().is_identity());
    let rs = Alphabet::new(&["r1", "r2"]).unwrap();
    let r = w(&rs, "r1 r2");
    let got = word_arith(WordOp::Conj(&w(&rs, "r2"), &r)).unwrap();
    assert_eq!(got, w(&rs, "r2^-1 r1^-1 r2 r1 r2"));
    assert!(word_arith(WordOp::Pow(&w(&a, "a b"), 0)).unwrap().is_identity());
    assert_eq!(w(&a, "a b").pow(-2), w(&a, "b^-1 a^-1 b^-1 a^-1"));
    let other = Alphabet::new(&["x"]).unwrap();
    assert!(matches!(
        word_arith(WordOp::Mul(&x, &w(&other, "x"))),
        Err(FreeGroupError::AlphabetMismatch { .. })
    ));
}

#[test]
fn exponent_sums() {
    let p = pres();
    assert_eq!(w(&p, "s2 c r1 s1 c r2").exponent_sum(4), 2);
    assert_eq!(FreeWord::identity(&p).exponent_sum(0), 0);
    assert_eq!(w(&ab(), "a^-2").exponent_sum(0), -2);
}

#[test]
fn endomorphism_application() {
    let f = Alphabet::new(&["r2", "s1", "c"]).unwrap();
    let phi_s = Endomorphism::parse(
        &f,
        &f,
        &[("r2", "s1^-1 c r2 c^-1 s1"), ("s1", "s1"), ("c", "s1^-1 c r2 c r2^-1 c^-1 s1")],
    )
    .unwrap();
    assert_eq!(
        apply_endo(&phi_s, &w(&f, "c")).unwrap().to_string(),
        "s1^-1 c r2 c r2^-1 c^-1 s1"
    );
    let id = Endomorphism::identity(&f);
    let x = w(&f, "c r2^-1 s1");
    assert_eq!(id.apply(&x).unwrap(), x);
    assert!(id.is_identity());
    assert!(!phi_s.is_identity());
}

#[test]
fn fold_examples() {
    let a = ab();
    let g = stallings_fold(&a, &[w(&a, "a")]).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
    assert_eq!(subgroup_rank_index(&g), (1, SubgroupIndex::Infinite));

    let h = stallings_fold(&a, &[w(&a, "a a"), w(&a, "b b"), w(&a, "a b")]).unwrap();
    assert_eq!((h.vertex_count(), h.edge_count()), (2, 4));
    assert_eq!(subgroup_rank_index(&h), (3, SubgroupIndex::Finite(2)));
    assert!(h.is_basis());

    let t = stallings_fold(&a, &[]).unwrap();
    assert_eq!((t.vertex_count(), t.edge_count()), (1, 0));
    assert_eq!(t.rank(), 0);

    let whole = stallings_fold(&a, &[w(&a, "a"), w(&a, "b")]).unwrap();
    assert_eq!(subgroup_rank_index(&whole), (2, SubgroupIndex::Finite(1)));
}

#[test]
fn membership_examples() {
    let a = ab();
    let h = stallings_fold(&a, &[w(&a, "a a"), w(&a, "b b"), w(&a, "a b")]).unwrap();
    let (m, sp) = subgroup_member(&h, &w(&a, "a b")).unwrap();
    assert!(m);
    assert_eq!(sp.unwrap().to_string(), "h3");
    assert!(!h.contains(&w(&a, "a")).unwrap());
    let (m, sp) = subgroup_member(&h, &FreeWord::identity(&a)).unwrap();
    assert!(m);
    assert!(sp.unwrap().is_identity());
    // b^-1 a^-1 = (ab)^-1
    assert_eq!(h.unique_spelling(&w(&a, "b^-1 a^-1")).unwrap().unwrap().to_string(), "h3^-1");
}

#[test]
fn non_basis_reports_kernel() {
    let a = ab();
    let g = stallings_fold(&a, &[w(&a, "a"), w(&a, "a a"), w(&a, "b")]).unwrap();
    assert_eq!(g.rank(), 2);
    assert!(!g.is_basis());
    assert_eq!(g.kernel().len(), 1);
    // The lost relation evaluates to the identity.
    assert!(g.evaluate(&g.kernel()[0]).unwrap().is_identity());
    assert!(matches!(
        g.unique_spelling(&w(&a, "a")),
        Err(FreeGroupError::SpellingUnavailable { rank: 2, generators: 3 })
    ));
    let e = stallings_fold(&a, &[FreeWord::identity(&a), w(&a, "b")]).unwrap();
    assert_eq!(e.kernel().len(), 1);
    assert!(!e.is_basis());
}

#[test]
fn folding_is_deterministic() {
    let a = ab();
    let gens = [w(&a, "a b a^-1"), w(&a, "b^2 a"), w(&a, "a b^-1")];
    let g1 = stallings_fold(&a, &gens).unwrap().to_adjacency_text();
    let g2 = stallings_fold(&a, &gens).unwrap().to_adjacency_text();
    assert_eq!(g1, g2);
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..2, any::<bool>()), 0..=max_len)
}

fn build(alpha: &Arc<Alphabet>, raw: &[(usize, bool)]) -> FreeWord {
    FreeWord::from_letters(alpha, raw.iter().map(|&(g, i)| Letter { gen: g, inverse: i }))
}

/// All elements expressible as products of at most `max_letters` generator letters.
fn brute_force_span(alpha: &Arc<Alphabet>, gens: &[FreeWord], max_letters: usize) -> HashSet<FreeWord> {
    let mut letters: Vec<FreeWord> = gens.to_vec();
    letters.extend(gens.iter().map(FreeWord::inv));
    let mut seen: HashSet<FreeWord> = HashSet::from([FreeWord::identity(alpha)]);
    let mut frontier: Vec<FreeWord> = vec![FreeWord::identity(alpha)];
    for _ in 0..max_letters {
        let mut next = Vec::new();
        for x in &frontier {
            for l in &letters {
                let y = x.mul(l).unwrap();
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen
}

proptest! {
    #[test]
    fn reduce_idempotent_and_inverse(raw in word_strategy(12)) {
        let a = ab();
        let x = build(&a, &raw);
        prop_assert!(x.len() <= raw.len());
        prop_assert_eq!(FreeWord::from_letters(&a, x.letters().iter().copied()), x.clone());
        prop_assert!(x.mul(&x.inv()).unwrap().is_identity());
    }

    #[test]
    fn endomorphism_is_homomorphic(
        imgs in prop::collection::vec(word_strategy(4), 2),
        u in word_strategy(6),
        v in word_strategy(6),
    ) {
        let a = ab();
        let e = Endomorphism::new(&a, &a, imgs.iter().map(|r| build(&a, r)).collect()).unwrap();
        let (u, v) = (build(&a, &u), build(&a, &v));
        let lhs = e.apply(&u.mul(&v).unwrap()).unwrap();
        let rhs = e.apply(&u).unwrap().mul(&e.apply(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(e.apply(&u.inv()).unwrap(), e.apply(&u).unwrap().inv());
    }

    #[test]
    fn membership_matches_brute_force(
        gens in prop::collection::vec(word_strategy(4), 1..=3),
        queries in prop::collection::vec(word_strategy(4), 8),
    ) {
        let a = ab();
        let gens: Vec<FreeWord> = gens.iter().map(|r| build(&a, r)).collect();
        let g = stallings_fold(&a, &gens).unwrap();
        let span = brute_force_span(&a, &gens, 6);
        // Every short product is a member; its spelling evaluates back.
        for x in span.iter().take(40) {
            let sp = g.spell(x).unwrap();
            prop_assert!(sp.is_some());
            prop_assert_eq!(&g.evaluate(&sp.unwrap()).unwrap(), x);
        }
        for q in queries.iter().map(|r| build(&a, r)) {
            match g.spell(&q).unwrap() {
                Some(sp) => prop_assert_eq!(g.evaluate(&sp).unwrap(), q),
                None => prop_assert!(!span.contains(&q)),
            }
        }
        if let SubgroupIndex::Finite(index) = g.index() {
            prop_assert_eq!(g.rank() as i64 - 1, index as i64 * (a.len() as i64 - 1));
        }
    }

    #[test]
    fn basis_spelling_round_trip(
        gens in prop::collection::vec(word_strategy(4), 1..=3),
        product in prop::collection::vec((0usize..3, any::<bool>()), 0..6),
    ) {
        let a = ab();
        let gens: Vec<FreeWord> = gens.iter().map(|r| build(&a, r)).collect();
        let g = stallings_fold(&a, &gens).unwrap();
        prop_assume!(g.is_basis());
        let ha = g.generator_alphabet().clone();
        let spelled = FreeWord::from_letters(
            &ha,
            product.iter().filter(|(i, _)| *i < gens.len()).map(|&(i, inv)| Letter { gen: i, inverse: inv }),
        );
        let x = g.evaluate(&spelled).unwrap();
        prop_assert_eq!(g.unique_spelling(&x).unwrap(), Some(spelled));
    }
}
