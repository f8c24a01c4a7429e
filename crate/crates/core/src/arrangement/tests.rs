use super::*;
use crate::braid::{artin_action, block_twist, ArtinConvention, Orientation, TwistKind};
use crate::exact::ExactScalar;
use crate::freegroup::FreeWord;

fn q(s: &str) -> ExactScalar {
    s.parse().unwrap()
}

fn real(s: &str) -> ExactComplex {
    ExactComplex::real(q(s))
}

fn case_study() -> Arrangement {
    parse_arrangement(CASE_STUDY_ARRANGEMENT).unwrap()
}

fn case_loops(arr: &Arrangement) -> Vec<(String, BaseLoop)> {
    parse_loops(CASE_STUDY_LOOPS, arr).unwrap()
}

#[test]
fn base_punctures_examples() {
    assert_eq!(case_study().base_punctures(), vec![real("0"), real("1")]);
    let one = Arrangement::new(vec![Line::from_ints("l", 0, 1, 0).unwrap()], Projection::X).unwrap();
    assert!(one.base_punctures().is_empty());
    let two = Arrangement::new(
        vec![Line::from_ints("a", 0, 1, 0).unwrap(), Line::from_ints("b", -1, 1, 0).unwrap()],
        Projection::X,
    )
    .unwrap();
    assert_eq!(two.base_punctures(), vec![real("0")]);
    assert_eq!(case_study().section_punctures(), vec![real("0"), real("1/2"), real("1")]);
}

#[test]
fn fiber_punctures_examples() {
    let arr = case_study();
    let at = arr.fiber_punctures(&real("3/4")).unwrap();
    let got: Vec<(&str, ExactComplex)> = at.iter().map(|(n, y)| (n.as_str(), y.clone())).collect();
    assert_eq!(got, vec![("s1", real("0")), ("c", real("1/4")), ("r2", real("1"))]);
    let at2: Vec<ExactComplex> = arr.fiber_punctures(&real("2")).unwrap().into_iter().map(|p| p.1).collect();
    assert_eq!(at2, vec![real("-1"), real("0"), real("1")]);
    assert!(matches!(arr.fiber_punctures(&real("1")), Err(ArrangementError::OnPuncture(_))));
    let flat = Arrangement::new(vec![Line::from_ints("h", 0, 1, 5).unwrap()], Projection::X).unwrap();
    assert_eq!(flat.fiber_punctures(&ExactComplex::frac((7, 1), (2, 3))).unwrap()[0].1, real("5"));
}

#[test]
fn rejects_degenerate_input() {
    let l = Line::from_ints("a", 1, 1, 1).unwrap();
    let dup = Line::from_ints("b", 2, 2, 2).unwrap();
    assert!(matches!(
        Arrangement::new(vec![l.clone(), dup], Projection::X),
        Err(ArrangementError::DegenerateInput(_))
    ));
    let v = Line::from_ints("v", 1, 0, 3).unwrap();
    assert!(matches!(
        Arrangement::with_parts(vec![l, v], vec![], Projection::X),
        Err(ArrangementError::DegenerateProjection(_))
    ));
    assert!(Line::from_ints("z", 0, 0, 1).is_err());
    assert!(Arrangement::new(vec![Line::from_ints("v", 1, 0, 0).unwrap()], Projection::X).is_err());
}

#[test]
fn line_normalization_and_display() {
    let l = Line::from_ints("c", 2, 2, 2).unwrap();
    assert_eq!(l.to_string(), "c: x + y = 1");
    let d = Line::from_ints("d", 0, -3, 6).unwrap();
    assert_eq!(d.to_string(), "d: y = -2");
    assert!(Line::from_ints("v", 4, 0, 1).unwrap().is_vertical(Projection::X));
    assert!(!Line::from_ints("v", 4, 0, 1).unwrap().is_vertical(Projection::Y));
}

#[test]
fn winding_numbers() {
    let arr = case_study();
    let loops = case_loops(&arr);
    let (r, s) = (&loops[0].1, &loops[1].1);
    assert_eq!(r.winding_number(&real("1")).unwrap(), 1);
    assert_eq!(r.winding_number(&real("0")).unwrap(), 0);
    assert_eq!(s.winding_number(&real("0")).unwrap(), 1);
    assert_eq!(s.winding_number(&real("1/2")).unwrap(), 0);
    assert_eq!(r.reversed().winding_number(&real("1")).unwrap(), -1);
    let twice = r.then(r).unwrap();
    assert_eq!(twice.winding_number(&real("1")).unwrap(), 2);
    assert!(r.winding_number(&real("3/4")).is_err());
}

#[test]
fn constant_and_back_and_forth_loops() {
    let arr = case_study();
    let c = BaseLoop::constant(real("3/4"));
    assert!(braid_along(&arr, &c).unwrap().is_empty());
    let there = BaseLoop::through(real("3/4"), vec![ExactComplex::frac((1, 4), (-1, 3)), ExactComplex::frac((-1, 2), (1, 5))]);
    let back = there.then(&there.reversed()).unwrap();
    let b = braid_along(&arr, &back).unwrap();
    assert!(!b.is_empty());
    assert!(artin_action(&b).unwrap().is_identity());
}

#[test]
fn local_full_twist_at_a_node() {
    // y = 1 and x + y = 1 meet over x = 0; y = 7 stays far away.
    let arr = Arrangement::new(
        vec![
            Line::from_ints("p", 0, 1, 1).unwrap(),
            Line::from_ints("q", 1, 1, 1).unwrap(),
            Line::from_ints("far", 0, 1, 7).unwrap(),
        ],
        Projection::X,
    )
    .unwrap();
    let lp = BaseLoop::lasso(&real("1/2"), &real("0"), &arr.avoid_points()).unwrap();
    let b = braid_along(&arr, &lp).unwrap();
    // At x = 1/2 the order is q (1/2), p (1), far (7): the node is on strands 1, 2.
    let twist = block_twist(3, 1, 2, TwistKind::Full, Orientation::CounterClockwise).unwrap();
    assert_eq!(artin_action(&b).unwrap(), artin_action(&twist).unwrap());
}

#[test]
fn case_study_relations() {
    let arr = case_study();
    let p = zvk_presentation(&arr, &case_loops(&arr)).unwrap();
    assert_eq!(p.fiber_alphabet().names(), &["s1", "c", "r2"]);
    assert!(p.killed().is_empty());
    let f = p.fiber_alphabet().clone();
    let w = |s: &str| FreeWord::parse(&f, s).unwrap();
    let phi_r = p.monodromy("r").unwrap();
    assert_eq!(phi_r.image_of("r2").unwrap(), &w("r2"));
    assert_eq!(phi_r.image_of("c").unwrap(), &w("r2^-1 s1 c s1^-1 r2"));
    assert_eq!(phi_r.image_of("s1").unwrap(), &w("r2^-1 s1 c s1 c^-1 s1^-1 r2"));
    let phi_s = p.monodromy("s").unwrap();
    assert_eq!(phi_s.image_of("r2").unwrap(), &w("s1^-1 c r2 c^-1 s1"));
    assert_eq!(phi_s.image_of("c").unwrap(), &w("s1^-1 c r2 c r2^-1 c^-1 s1"));
    assert_eq!(phi_s.image_of("s1").unwrap(), &w("s1"));
    // Simultaneous node crossings come out interleaved; compare as actions.
    for (m, want) in p.loops().iter().zip(["s1 s1 s3 s3", "s2^-1 s1 s1 s3 s3 s2"]) {
        let want = crate::braid::BraidWord::parse(4, want).unwrap();
        assert_eq!(artin_action(&m.braid).unwrap(), artin_action(&want).unwrap());
    }
}

#[test]
fn mirrored_convention_breaks_relations() {
    let arr = case_study();
    let p = zvk_presentation_with(&arr, &case_loops(&arr), ArtinConvention::Mirrored).unwrap();
    let f = p.fiber_alphabet().clone();
    let want = FreeWord::parse(&f, "r2^-1 s1 c s1^-1 r2").unwrap();
    assert_ne!(p.monodromy("r").unwrap().image_of("c").unwrap(), &want);
}

#[test]
fn presentation_text() {
    let arr = case_study();
    let p = zvk_presentation(&arr, &case_loops(&arr)).unwrap();
    let text = p.to_text();
    assert!(text.starts_with("fiber-generators: s1 c r2\nbase-generators: r s\n"));
    assert!(text.contains("rel s: c -> s1^-1 c r2 c r2^-1 c^-1 s1\n"));
    assert!(text.ends_with("killed: none\n"));
}

#[test]
fn loop_validation() {
    let arr = case_study();
    let bp = real("3/4");
    let big = BaseLoop::enclosing(&bp, &q("2"));
    let err = zvk_presentation(&arr, &[("big".into(), big)]).unwrap_err();
    assert!(matches!(err, ArrangementError::NotMeridian { .. }));
    let loops = case_loops(&arr);
    let err = zvk_presentation(&arr, &loops[..1]).unwrap_err();
    assert!(matches!(err, ArrangementError::NotGeometricBasis(_)));
    // A loop through the section puncture at 1/2 is rejected.
    let through = BaseLoop::through(bp.clone(), vec![real("1/2")]);
    assert!(matches!(
        sectioned_braid_along(&arr, &through),
        Err(ArrangementError::PunctureCollision { .. })
    ));
    assert!(matches!(
        BaseLoop::new(vec![real("0"), real("1")]),
        Err(ArrangementError::NotClosed)
    ));
}

#[test]
fn single_line_presentation() {
    let arr = Arrangement::new(vec![Line::from_ints("x1", 0, 1, 0).unwrap()], Projection::X).unwrap();
    let p = zvk_presentation(&arr, &[]).unwrap();
    assert_eq!(p.generators().names(), &["x1"]);
    assert!(p.relators().unwrap().is_empty());
}

#[test]
fn node_presentation_has_central_product() {
    let arr = Arrangement::new(
        vec![Line::from_ints("x1", 0, 1, 0).unwrap(), Line::from_ints("x2", -1, 1, 0).unwrap()],
        Projection::X,
    )
    .unwrap();
    let lp = BaseLoop::lasso(&real("1"), &real("0"), &arr.avoid_points()).unwrap();
    let p = zvk_presentation(&arr, &[("y".into(), lp)]).unwrap();
    assert_eq!(p.killed(), vec!["y"]);
    let rels = p.relators().unwrap();
    assert!(!rels.is_empty());
    // Every relator has zero exponent sums, so the abelianization is free of rank 2.
    for r in &rels {
        assert_eq!((r.exponent_sum(0), r.exponent_sum(1)), (0, 0));
    }
    let g = p.generators();
    let prod = FreeWord::parse(&g, "x1 x2").unwrap();
    let phi = p.monodromy("y").unwrap();
    for i in 0..2 {
        let x = FreeWord::generator(&g, i);
        assert_eq!(phi.image(i), &x.conj(&prod.inv()).unwrap());
    }
}

#[test]
fn product_law_generic_part() {
    let arr = case_study().without_section();
    let bp = real("3/4");
    let avoid = arr.avoid_points();
    let r = BaseLoop::lasso(&bp, &real("1"), &avoid).unwrap();
    let s = BaseLoop::lasso(&bp, &real("0"), &avoid).unwrap();
    let big = BaseLoop::enclosing(&bp, &q("3"));
    let composite = braid_along(&arr, &r).unwrap().concat(&braid_along(&arr, &s).unwrap());
    assert_eq!(
        artin_action(&composite).unwrap(),
        artin_action(&braid_along(&arr, &big).unwrap()).unwrap()
    );
}

#[test]
fn large_loop_is_full_twist_when_lines_meet_pairwise() {
    let arr = Arrangement::new(
        vec![
            Line::from_ints("a", 0, 1, 0).unwrap(),
            Line::from_ints("b", -1, 1, 0).unwrap(),
            Line::from_ints("c", 1, 1, 1).unwrap(),
        ],
        Projection::X,
    )
    .unwrap();
    let big = BaseLoop::enclosing(&real("3"), &q("5"));
    let b = braid_along(&arr, &big).unwrap();
    let ft = block_twist(3, 1, 3, TwistKind::Full, Orientation::CounterClockwise).unwrap();
    assert_eq!(artin_action(&b).unwrap(), artin_action(&ft).unwrap());
}

#[test]
fn vertex_slide_keeps_action() {
    let arr = case_study();
    let bp = real("3/4");
    let a = BaseLoop::through(
        bp.clone(),
        vec![ExactComplex::frac((3, 4), (-1, 4)), ExactComplex::frac((-1, 4), (-1, 4)), ExactComplex::frac((-1, 4), (1, 4)), ExactComplex::frac((1, 4), (1, 4)), ExactComplex::frac((1, 4), (-1, 4)), ExactComplex::frac((3, 4), (-1, 4))],
    );
    let b = BaseLoop::through(
        bp.clone(),
        vec![ExactComplex::frac((3, 4), (-1, 4)), ExactComplex::frac((-1, 4), (-1, 3)), ExactComplex::frac((-1, 3), (1, 4)), ExactComplex::frac((1, 4), (1, 5)), ExactComplex::frac((1, 4), (-1, 4)), ExactComplex::frac((3, 4), (-1, 4))],
    );
    let (ba, na) = sectioned_braid_along(&arr, &a).unwrap();
    let (bb, nb) = sectioned_braid_along(&arr, &b).unwrap();
    assert_eq!(na, nb);
    assert_eq!(artin_action(&ba).unwrap(), artin_action(&bb).unwrap());
    let (_, _, pa) = loop_action(&arr, &a, ArtinConvention::Standard).unwrap();
    let (_, _, pb) = loop_action(&arr, &b, ArtinConvention::Standard).unwrap();
    assert_eq!(pa, pb);
}

#[test]
fn parse_errors() {
    assert!(matches!(parse_arrangement("project z\n"), Err(ArrangementError::Parse { line: 1, .. })));
    assert!(matches!(parse_arrangement("a 1 2\n"), Err(ArrangementError::Parse { .. })));
    assert!(parse_arrangement("a 1 x 2\n").is_err());
    let arr = case_study();
    assert!(parse_loops("lasso r 1 0\n", &arr).is_err());
    let lps = parse_loops("basepoint 3/4 0\nloop t\n3/4 -1\n2 -1\n2 1\n# comment\n3/4 1\n", &arr).unwrap();
    assert_eq!(lps[0].1.vertices().len(), 6);
    assert_eq!(lps[0].1.winding_number(&real("1")).unwrap(), 1);
}

#[test]
fn projection_to_y_swaps_roles() {
    let src = CASE_STUDY_ARRANGEMENT.replace("project x", "project y");
    let arr = parse_arrangement(&src).unwrap();
    let vertical: Vec<&str> = arr.fiber_lines().iter().map(|l| l.name()).collect();
    assert_eq!(vertical, vec!["r2", "s1"]);
    assert_eq!(arr.base_punctures(), vec![real("0"), real("1")]);
}
