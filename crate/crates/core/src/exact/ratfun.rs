use std::fmt;
use std::sync::Arc;

use super::{ExactError, ExactScalar, Poly};

/// Quotient of two polynomials. Not reduced to lowest terms; equality is
/// decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        assert_eq!(num.vars(), den.vars(), "numerator and denominator over different variables");
        Ok(Self { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::constant(p.vars(), ExactScalar::one());
        Self { num: p, den: one }
    }

    pub fn parse(vars: &Arc<[String]>, num: &str, den: &str) -> Result<Self, ExactError> {
        Self::new(Poly::parse(vars, num)?, Poly::parse(vars, den)?)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> &Arc<[String]> {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            num: &(&self.num * &other.den) - &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn eval(&self, point: &[(&str, ExactScalar)]) -> Result<ExactScalar, ExactError> {
        let n = self.num.eval(point)?;
        let d = self.den.eval(point)?;
        n.checked_div(&d)
    }

    /// Substitutes `value` for the variable `var` of a polynomial `p`,
    /// returning `p(.., value, ..)` over a common denominator `den(value)^deg`.
    pub fn substitute_into(p: &Poly, var: usize, value: &Self) -> Self {
        let coeffs = p.coefficients_in(var);
        let vars = p.vars();
        if coeffs.is_empty() {
            return Self::from_poly(Poly::zero(vars));
        }
        let deg = coeffs.len() - 1;
        let mut num = Poly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            num = &num + &(&(c * &value.num.pow(k as u32)) * &value.den.pow((deg - k) as u32));
        }
        Self {
            num,
            den: value.den.pow(deg as u32),
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `f == g` as rational functions.
pub fn ratfun_equal(f: &RationalFunction, g: &RationalFunction) -> bool {
    f == g
}
