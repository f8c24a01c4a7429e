use std::sync::Arc;

use super::{RationalError, RationalMap};
use crate::exact::{resultant, ExactScalar, Poly, ProjectivePoint, RationalFunction};

/// Map variable `t`, parameters `x, y`, and `w` for critical values.
pub fn family_ring() -> Arc<[String]> {
    Poly::ring(&["t", "x", "y", "w"])
}

/// `f(t) = (4t − 3)(t + 2) / 4t²`.
pub fn base_map() -> RationalMap {
    RationalMap::parse(&["t"], "t", "(4*t - 3)*(t + 2)", "4*t^2").expect("fixed map")
}

/// `F(t; x, y) = (x − t)(−tx + y + t + x − 1) / ((x − 1) t²)`.
pub fn family_map() -> RationalMap {
    let ring = family_ring();
    RationalMap::new(
        "t",
        Poly::parse(&ring, "(x - t)*(-t*x + y + t + x - 1)").expect("fixed"),
        Poly::parse(&ring, "(x - 1)*t^2").expect("fixed"),
    )
    .expect("fixed map")
}

/// `z(x, y) = (−x² + y + 2x − 1)² / (4x(y − 1 + x)(1 − x))`.
pub fn z_formula() -> RationalFunction {
    RationalFunction::parse(&family_ring(), "(-x^2 + y + 2*x - 1)^2", "4*x*(y - 1 + x)*(1 - x)").expect("fixed")
}

pub fn specialize_family(x: &ExactScalar, y: &ExactScalar) -> Result<RationalMap, RationalError> {
    family_map().specialize(&[("x", x.clone()), ("y", y.clone())])
}

/// The formula as a point of the sphere; `None` when it reads `0/0`.
pub fn z_at(x: &ExactScalar, y: &ExactScalar) -> Result<Option<ProjectivePoint>, RationalError> {
    let z = z_formula();
    let at = [("x", x.clone()), ("y", y.clone())];
    let (n, d) = (z.num().eval(&at)?, z.den().eval(&at)?);
    if n.is_zero() && d.is_zero() {
        return Ok(None);
    }
    Ok(Some(ProjectivePoint::from_homogeneous(n, d)?))
}

/// Both symbolic derivations of the finite critical value of `F`.
#[derive(Debug, Clone)]
pub struct ZFormulaReport {
    /// `F′` numerator `num′·den − num·den′` as a polynomial in `t, x, y`.
    pub wronskian: Poly,
    /// The nonzero root of the Wronskian, if the discriminant is a square.
    pub critical_point: Option<RationalFunction>,
    /// `F(t*)` agrees with the formula (`None`: route unavailable).
    pub wronskian_route: Option<bool>,
    /// `Res_t(num − w·den, Wronskian)`, linear in `w`.
    pub resultant: Poly,
    pub resultant_route: bool,
}

impl ZFormulaReport {
    pub fn ok(&self) -> bool {
        self.resultant_route && self.wronskian_route != Some(false)
    }
}

fn ratfun(num: Poly, den: Poly) -> Result<RationalFunction, RationalError> {
    Ok(RationalFunction::new(num, den)?)
}

pub fn verify_z_formula() -> Result<ZFormulaReport, RationalError> {
    let fam = family_map();
    let ring = family_ring();
    let t = ring.iter().position(|v| v == "t").expect("t");
    let (n, d) = (fam.num().clone(), fam.den().clone());
    let wr = &(&n.derivative(t) * &d) - &(&n * &d.derivative(t));
    let z = z_formula();

    // Route 1: the Wronskian is quadratic in t; take its nonzero root.
    let c = wr.coefficients_in(t);
    let mut critical_point = None;
    let mut wronskian_route = None;
    if c.len() == 3 {
        let four = Poly::constant(&ring, ExactScalar::from(4));
        let disc = &(&c[1] * &c[1]) - &(&four * &(&c[2] * &c[0]));
        if let Some(s) = disc.sqrt_exact() {
            let two_a = c[2].scale(&ExactScalar::from(2));
            let roots = [&(-&c[1]) - &s, &(-&c[1]) + &s];
            if let Some(root) = roots.into_iter().find(|r| !r.is_zero()) {
                let tstar = ratfun(root, two_a)?;
                let val = RationalFunction::substitute_into(&n, t, &tstar)
                    .div(&RationalFunction::substitute_into(&d, t, &tstar))?;
                wronskian_route = Some(val == z);
                critical_point = Some(tstar);
            }
        }
    }

    // Route 2: eliminate t between F(t) = w and F′(t) = 0.
    let w = Poly::var(&ring, "w")?;
    let res = resultant(&(&n - &(&w * &d)), &wr, "t")?;
    let wi = ring.iter().position(|v| v == "w").expect("w");
    let rc = res.coefficients_in(wi);
    let resultant_route = rc.len() == 2 && ratfun(-&rc[0], rc[1].clone())? == z;

    Ok(ZFormulaReport {
        wronskian: wr,
        critical_point,
        wronskian_route,
        resultant: res,
        resultant_route,
    })
}
