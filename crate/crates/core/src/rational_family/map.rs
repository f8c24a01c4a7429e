use std::fmt;
use std::sync::Arc;

use super::upoly::UPoly;
use super::RationalError;
use crate::exact::{ExactScalar, Poly, ProjectivePoint, RationalFunction};

/// `num(t) / den(t)` as a self-map of the Riemann sphere. The polynomials
/// may carry further parameters, which must be specialized before the map
/// is evaluated.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMap {
    var: usize,
    num: Poly,
    den: Poly,
}

impl RationalMap {
    pub fn new(var: &str, num: Poly, den: Poly) -> Result<Self, RationalError> {
        if num.vars() != den.vars() {
            return Err(RationalError::Degenerate("numerator and denominator over different rings".into()));
        }
        if den.is_zero() {
            return Err(RationalError::Degenerate("zero denominator".into()));
        }
        let var = num.var_index(var)?;
        Ok(Self { var, num, den })
    }

    pub fn parse(vars: &[&str], var: &str, num: &str, den: &str) -> Result<Self, RationalError> {
        let ring = Poly::ring(vars);
        Self::new(var, Poly::parse(&ring, num)?, Poly::parse(&ring, den)?)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn variable(&self) -> &str {
        &self.num.vars()[self.var]
    }

    pub fn vars(&self) -> &Arc<[String]> {
        self.num.vars()
    }

    /// `max(deg num, deg den)` in the map variable.
    pub fn degree(&self) -> u32 {
        let d = |p: &Poly| p.degree_in(self.var).unwrap_or(0);
        d(&self.num).max(d(&self.den))
    }

    /// Degree once common factors of numerator and denominator are cancelled.
    pub fn reduced_degree(&self) -> Result<u32, RationalError> {
        let (n, d) = self.univariate()?;
        let g = n.gcd(&d);
        let deg = |p: &UPoly| p.div_rem(&g).0.degree().unwrap_or(0) as u32;
        Ok(if n.is_zero() { 0 } else { deg(&n).max(deg(&d)) })
    }

    /// Substitutes values for parameters.
    pub fn specialize(&self, values: &[(&str, ExactScalar)]) -> Result<Self, RationalError> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (name, v) in values {
            let i = num.var_index(name)?;
            if i == self.var {
                return Err(RationalError::Degenerate(format!("cannot specialize the map variable {name}")));
            }
            num = num.substitute(i, v);
            den = den.substitute(i, v);
        }
        if den.is_zero() {
            return Err(RationalError::Degenerate("denominator vanishes identically".into()));
        }
        Ok(Self { num, den, ..*self })
    }

    pub fn as_ratfun(&self) -> RationalFunction {
        RationalFunction::new(self.num.clone(), self.den.clone()).expect("nonzero denominator")
    }

    pub(crate) fn univariate(&self) -> Result<(UPoly, UPoly), RationalError> {
        Ok((UPoly::from_poly(&self.num, self.var)?, UPoly::from_poly(&self.den, self.var)?))
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> ({}) / ({})", self.variable(), self.num, self.den)
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Value of `n/d` at `a`, cancelling common factors `t − a` as needed.
fn eval_chart(n: &UPoly, d: &UPoly, a: &ExactScalar) -> Result<ProjectivePoint, RationalError> {
    let (mut n, mut d) = (n.clone(), d.clone());
    loop {
        if n.is_zero() && d.is_zero() {
            return Err(RationalError::IndeterminateForm(a.to_string()));
        }
        let (nv, dv) = (n.eval(a), d.eval(a));
        if !nv.is_zero() || !dv.is_zero() {
            return Ok(ProjectivePoint::from_homogeneous(nv, dv)?);
        }
        n = n.deflate(a);
        d = d.deflate(a);
    }
}

/// Exact value at a point of the sphere; `∞` is handled in the chart `w = 1/t`.
pub fn evaluate_map(m: &RationalMap, p: &ProjectivePoint) -> Result<ProjectivePoint, RationalError> {
    let (n, d) = m.univariate()?;
    match p {
        ProjectivePoint::Finite(a) => eval_chart(&n, &d, a),
        ProjectivePoint::Infinity => {
            let deg = m.degree() as usize;
            eval_chart(&n.reversed(deg), &d.reversed(deg), &ExactScalar::zero())
        }
    }
}

/// Critical points with multiplicity (local degree minus one) and their values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalData {
    pub points: Vec<(ProjectivePoint, u32)>,
    pub values: Vec<ProjectivePoint>,
}

impl CriticalData {
    /// Distinct critical values, finite ones ascending then `∞`.
    pub fn value_set(&self) -> Vec<ProjectivePoint> {
        let mut v = self.values.clone();
        v.sort_by(point_order);
        v.dedup();
        v
    }

    pub fn multiplicity_at(&self, p: &ProjectivePoint) -> u32 {
        self.points.iter().find(|(q, _)| q == p).map_or(0, |(_, k)| *k)
    }
}

pub(crate) fn point_order(a: &ProjectivePoint, b: &ProjectivePoint) -> std::cmp::Ordering {
    use ProjectivePoint::*;
    match (a, b) {
        (Finite(x), Finite(y)) => x.cmp(y),
        (Finite(_), Infinity) => std::cmp::Ordering::Less,
        (Infinity, Finite(_)) => std::cmp::Ordering::Greater,
        (Infinity, Infinity) => std::cmp::Ordering::Equal,
    }
}

fn wronskian(n: &UPoly, d: &UPoly) -> UPoly {
    n.derivative().mul(d).sub(&n.mul(&d.derivative()))
}

/// Finite critical points of `n/d` with multiplicities, and the
/// multiplicity at `∞` from the degree drop of the Wronskian.
fn chart_critical(n: &UPoly, d: &UPoly, deg: usize) -> Result<(Vec<(ExactScalar, u32)>, u32), RationalError> {
    let w = wronskian(n, d);
    if w.is_zero() {
        return Err(RationalError::Degenerate("constant map".into()));
    }
    let roots = w
        .rational_roots()
        .ok_or_else(|| RationalError::NonRationalCritical(format!("{:?}", w.coeffs())))?;
    let mut finite: Vec<(ExactScalar, u32)> = Vec::new();
    for r in roots {
        if !finite.iter().any(|(q, _)| *q == r) {
            let k = w.root_multiplicity(&r);
            finite.push((r, k));
        }
    }
    let at_inf = (2 * deg).saturating_sub(2) - w.degree().unwrap_or(0);
    Ok((finite, at_inf as u32))
}

/// Numerator, denominator and degree in lowest terms.
fn lowest_terms(m: &RationalMap) -> Result<(UPoly, UPoly, usize), RationalError> {
    let (n, d) = m.univariate()?;
    let g = n.gcd(&d);
    let (n, d) = (n.div_rem(&g).0, d.div_rem(&g).0);
    let deg = n.degree().unwrap_or(0).max(d.degree().unwrap_or(0));
    Ok((n, d, deg))
}

/// Critical points from the Wronskian `num′·den − num·den′` in the finite
/// chart; the point `∞` is examined in the reciprocal chart.
pub fn critical_data(m: &RationalMap) -> Result<CriticalData, RationalError> {
    let (n, d, deg) = lowest_terms(m)?;
    let (finite, _) = chart_critical(&n, &d, deg)?;
    let (rev, _) = chart_critical(&n.reversed(deg), &d.reversed(deg), deg)?;
    let zero = ExactScalar::zero();
    let at_inf = rev.iter().find(|(r, _)| *r == zero).map_or(0, |(_, k)| *k);
    let mut points: Vec<(ProjectivePoint, u32)> =
        finite.into_iter().map(|(r, k)| (ProjectivePoint::Finite(r), k)).collect();
    if at_inf > 0 {
        points.push((ProjectivePoint::Infinity, at_inf));
    }
    points.sort_by(|a, b| point_order(&a.0, &b.0));
    let values = points
        .iter()
        .map(|(p, _)| evaluate_map(m, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CriticalData { points, values })
}

/// Critical points computed entirely in the chart `w = 1/t` and mapped back.
pub fn critical_points_reciprocal_chart(m: &RationalMap) -> Result<Vec<(ProjectivePoint, u32)>, RationalError> {
    let (n, d, deg) = lowest_terms(m)?;
    let (rev, at_w_inf) = chart_critical(&n.reversed(deg), &d.reversed(deg), deg)?;
    let mut points: Vec<(ProjectivePoint, u32)> = rev
        .into_iter()
        .map(|(w, k)| {
            let p = if w.is_zero() {
                ProjectivePoint::Infinity
            } else {
                ProjectivePoint::Finite(w.recip().expect("nonzero"))
            };
            (p, k)
        })
        .collect();
    if at_w_inf > 0 {
        points.push((ProjectivePoint::Finite(ExactScalar::zero()), at_w_inf));
    }
    points.sort_by(|a, b| point_order(&a.0, &b.0));
    Ok(points)
}
