use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exact::{ratfun_equal, ExactScalar, Poly, ProjectivePoint};

fn q(s: &str) -> ExactScalar {
    s.parse().unwrap()
}

fn pt(s: &str) -> ProjectivePoint {
    if s == "inf" {
        ProjectivePoint::Infinity
    } else {
        ProjectivePoint::Finite(q(s))
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> ExactScalar {
    ExactScalar::frac(rng.gen_range(-40..=40), rng.gen_range(1..=12))
}

fn random_off_delta(rng: &mut ChaCha8Rng) -> (ExactScalar, ExactScalar) {
    loop {
        let (x, y) = (random_rational(rng), random_rational(rng));
        if delta_contains(&x, &y).is_none() {
            return (x, y);
        }
    }
}

#[test]
fn orbit_of_zero() {
    let f = base_map();
    let mut p = pt("0");
    let mut orbit = vec![p.clone()];
    for _ in 0..4 {
        p = evaluate_map(&f, &p).unwrap();
        orbit.push(p.clone());
    }
    assert_eq!(orbit, ["0", "inf", "1", "3/4", "0"].map(pt).to_vec());
    assert_eq!(evaluate_map(&f, &pt("12/5")).unwrap(), pt("121/96"));
    let id = RationalMap::parse(&["t"], "t", "t", "1").unwrap();
    for s in ["0", "-7/3", "inf"] {
        assert_eq!(evaluate_map(&id, &pt(s)).unwrap(), pt(s));
    }
}

#[test]
fn cancellation_and_indeterminate() {
    // (t^2 - t) / (t^2 - 1) = t / (t + 1) at t = 1.
    let m = RationalMap::parse(&["t"], "t", "t^2 - t", "t^2 - 1").unwrap();
    assert_eq!(evaluate_map(&m, &pt("1")).unwrap(), pt("1/2"));
    assert_eq!(evaluate_map(&m, &pt("-1")).unwrap(), pt("inf"));
    assert_eq!(m.reduced_degree().unwrap(), 1);
    assert!(critical_data(&m).unwrap().points.is_empty());
    let fam = family_map();
    assert!(matches!(evaluate_map(&fam, &pt("0")), Err(RationalError::NotSpecialized(_))));
    assert!(specialize_family(&q("1"), &q("2")).is_err());
}

#[test]
fn critical_data_examples() {
    let c = critical_data(&base_map()).unwrap();
    assert_eq!(c.points, vec![(pt("0"), 1), (pt("12/5"), 1)]);
    assert_eq!(c.value_set(), vec![pt("121/96"), pt("inf")]);
    let sq = RationalMap::parse(&["t"], "t", "t^2", "1").unwrap();
    let c = critical_data(&sq).unwrap();
    assert_eq!(c.points, vec![(pt("0"), 1), (pt("inf"), 1)]);
    assert_eq!(c.value_set(), vec![pt("0"), pt("inf")]);
    let irr = RationalMap::parse(&["t"], "t", "t^2", "t^2 + t + 1").unwrap();
    assert!(critical_data(&irr).is_ok());
    let irr = RationalMap::parse(&["t"], "t", "t^2 + 1", "t - 3").unwrap();
    assert!(matches!(critical_data(&irr), Err(RationalError::NonRationalCritical(_))));
}

#[test]
fn family_specializes_to_f() {
    let at = specialize_family(&q("3/4"), &q("3/4")).unwrap();
    let t = Poly::ring(&["t"]);
    let spec = crate::exact::RationalFunction::new(at.num().embed(&t).unwrap(), at.den().embed(&t).unwrap()).unwrap();
    assert!(ratfun_equal(&spec, &base_map().as_ratfun()));
    assert_eq!(critical_data(&at).unwrap(), critical_data(&base_map()).unwrap());
    assert_eq!(z_at(&q("3/4"), &q("3/4")).unwrap(), Some(pt("121/96")));
}

#[test]
fn z_formula_both_routes() {
    let r = verify_z_formula().unwrap();
    assert_eq!(r.wronskian_route, Some(true));
    assert!(r.resultant_route);
    assert!(r.ok());
    let tstar = r.critical_point.unwrap();
    let v = tstar.eval(&[("x", q("3/4")), ("y", q("3/4"))]).unwrap();
    assert_eq!(v, q("12/5"));
    // At (2, 3) the formula and the critical data of the specialized map agree.
    let m = specialize_family(&q("2"), &q("3")).unwrap();
    let z = z_at(&q("2"), &q("3")).unwrap().unwrap();
    assert!(critical_data(&m).unwrap().value_set().contains(&z));
}

#[test]
fn portrait_examples() {
    let (x, y) = (q("2"), q("3"));
    let m = specialize_family(&x, &y).unwrap();
    let rep = verify_portrait(&m, &PortraitSpec::family(&x, &y).unwrap()).unwrap();
    assert!(rep.ok(), "{:?}", rep.failing());
    assert!(!verify_portrait(&m, &PortraitSpec::cycle(&x)).unwrap().ok());

    let d = specialize_family(&q("2"), &q("2")).unwrap();
    assert!(verify_portrait(&d, &PortraitSpec::cycle(&q("2"))).unwrap().ok());

    let (x, y) = (q("1/3"), q("2/3"));
    let m = specialize_family(&x, &y).unwrap();
    let rep = verify_portrait(&m, &PortraitSpec::family(&x, &y).unwrap()).unwrap();
    assert!(rep.distinctness_fails());
}

#[test]
fn delta_examples() {
    assert_eq!(delta_contains(&q("3/4"), &q("3/4")), None);
    assert_eq!(delta_contains(&q("1/2"), &q("1/2")).as_deref(), Some("y - 1 + x = 0"));
    assert_eq!(delta_contains(&q("0"), &q("17/3")).as_deref(), Some("x = 0"));
    assert_eq!(DeltaSet::new().conditions().len(), 8);
}

#[test]
fn plot_examples() {
    let w = PlotWindow::new(q("-2"), q("3"), q("-2"), q("3"));
    let svg = render_delta_svg(&w);
    assert_eq!(svg.matches(r#"class="curve""#).count(), 9);
    assert!(svg.contains(r#"class="basepoint""#));
    let empty = render_delta_svg(&PlotWindow::new(q("1"), q("1"), q("0"), q("2")));
    assert!(!empty.contains("polyline"));
    let away = render_delta_svg(&PlotWindow::new(q("5"), q("6"), q("5"), q("6")));
    assert!(!away.contains("basepoint"));
    let dir = std::env::temp_dir().join("delta_plot_test.svg");
    assert_eq!(plot_delta(&w, &dir).unwrap(), std::fs::read_to_string(&dir).unwrap());
    assert!(matches!(
        plot_delta(&w, std::path::Path::new("/nonexistent/dir/x.svg")),
        Err(RationalError::Io(_))
    ));
}

#[test]
fn random_points_off_delta() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let (x, y) = random_off_delta(&mut rng);
        let m = specialize_family(&x, &y).unwrap();
        let rep = verify_portrait(&m, &PortraitSpec::family(&x, &y).unwrap()).unwrap();
        assert!(rep.ok(), "({x}, {y}): {:?}", rep.failing());
        let z = z_at(&x, &y).unwrap().unwrap();
        let c = critical_data(&m).unwrap();
        let nonzero = c.points.iter().position(|(p, _)| *p != pt("0")).unwrap();
        assert_eq!(c.values[nonzero], z);
    }
}

#[test]
fn chart_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut maps = vec![base_map(), RationalMap::parse(&["t"], "t", "t^2", "1").unwrap()];
    for _ in 0..30 {
        let (x, y) = random_off_delta(&mut rng);
        maps.push(specialize_family(&x, &y).unwrap());
    }
    for m in &maps {
        let a = critical_data(m).unwrap().points;
        let b = critical_points_reciprocal_chart(m).unwrap();
        assert_eq!(a, b, "{m}");
    }
}

/// Rational points on each forbidden curve.
fn on_condition(k: usize, s: &ExactScalar) -> (ExactScalar, ExactScalar) {
    let one = ExactScalar::one();
    let x = s.clone();
    match k {
        0 => (ExactScalar::zero(), x),
        1 => (x, ExactScalar::zero()),
        2 => (x, one),
        3 => (one, x),
        4 => (x.clone(), &one - &x),
        5 => (x.clone(), (&x - &one).pow(2)),
        6 => (x.clone(), &one - &x.pow(2)),
        7 => {
            let den = &(&x * &ExactScalar::from(2)) - &one;
            (x.clone(), (-(&x - &one).pow(2)).checked_div(&den).unwrap())
        }
        _ => unreachable!(),
    }
}

#[test]
fn delta_spot_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let set = DeltaSet::new();
    for (k, (name, _)) in set.conditions().iter().enumerate() {
        let mut n = 0;
        while n < 50 {
            let s = random_rational(&mut rng);
            if k == 7 && s == ExactScalar::frac(1, 2) {
                continue;
            }
            let (x, y) = on_condition(k, &s);
            assert!(set.violated(&x, &y).contains(&name.as_str()), "{name} at ({x}, {y})");
            let spec = PortraitSpec::family(&x, &y).unwrap();
            match specialize_family(&x, &y) {
                Ok(m) => assert!(verify_portrait(&m, &spec).unwrap().distinctness_fails(), "{name} at ({x}, {y})"),
                // x = 1 kills the denominator outright.
                Err(_) => assert!(x.is_one()),
            }
            n += 1;
        }
    }
}

#[test]
fn diagonal_has_the_cycle_and_nothing_else_does() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut n = 0;
    while n < 40 {
        let x = random_rational(&mut rng);
        if delta_contains(&x, &x).is_some() {
            continue;
        }
        let m = specialize_family(&x, &x).unwrap();
        assert!(verify_portrait(&m, &PortraitSpec::cycle(&x)).unwrap().ok(), "x = {x}");
        n += 1;
    }
    for _ in 0..20 {
        let (x, y) = random_off_delta(&mut rng);
        if x == y {
            continue;
        }
        let m = specialize_family(&x, &y).unwrap();
        assert!(!verify_portrait(&m, &PortraitSpec::cycle(&x)).unwrap().ok());
    }
}
