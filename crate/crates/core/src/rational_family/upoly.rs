use crate::exact::{ExactScalar, Poly};

use super::RationalError;

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UPoly(Vec<ExactScalar>);

impl UPoly {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    /// Reads `p` as a polynomial in `var` alone.
    pub fn from_poly(p: &Poly, var: usize) -> Result<Self, RationalError> {
        let coeffs = p
            .coefficients_in(var)
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Ok(ExactScalar::zero())
                } else {
                    c.constant_value()
                        .ok_or_else(|| RationalError::NotSpecialized(c.to_string()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, a: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.0.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &ExactScalar::from(k as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self(Vec::new());
        }
        let mut out = vec![ExactScalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let zero = ExactScalar::zero();
        Self::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&zero) - other.0.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Quotient by `t − a`; the remainder is discarded.
    pub fn deflate(&self, a: &ExactScalar) -> Self {
        if self.0.len() <= 1 {
            return Self(Vec::new());
        }
        let mut out = vec![ExactScalar::zero(); self.0.len() - 1];
        let mut carry = ExactScalar::zero();
        for k in (1..self.0.len()).rev() {
            carry = &carry * a + &self.0[k];
            out[k - 1] = carry.clone();
        }
        Self::new(out)
    }

    /// `w^d · p(1/w)`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut c = self.0.clone();
        c.resize(d + 1, ExactScalar::zero());
        c.reverse();
        Self::new(c)
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &ExactScalar) -> u32 {
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(a).is_zero() {
            p = p.deflate(a);
            k += 1;
        }
        k
    }

    /// All rational roots, if every root is rational; `None` otherwise.
    /// Handles degree at most two after removing roots at 0.
    pub fn rational_roots(&self) -> Option<Vec<ExactScalar>> {
        let mut p = self.clone();
        let mut roots = Vec::new();
        let zero = ExactScalar::zero();
        while p.degree().is_some_and(|d| d > 0) && p.0[0].is_zero() {
            roots.push(zero.clone());
            p = p.deflate(&zero);
        }
        match p.degree() {
            None | Some(0) => {}
            Some(1) => roots.push(-(p.0[0].checked_div(&p.0[1]).ok()?)),
            Some(2) => {
                let (c, b, a) = (&p.0[0], &p.0[1], &p.0[2]);
                let disc = b * b - ExactScalar::from(4) * a * c;
                let s = disc.sqrt_exact()?;
                let two_a = ExactScalar::from(2) * a;
                roots.push((-b - &s).checked_div(&two_a).ok()?);
                roots.push((-b + s).checked_div(&two_a).ok()?);
            }
            Some(_) => return None,
        }
        roots.sort();
        Some(roots)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        let dd = other.degree().expect("division by zero polynomial");
        let lead = other.0[dd].recip().expect("nonzero");
        let mut rem = self.0.clone();
        let mut quot = vec![ExactScalar::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = &rem[rem.len() - 1] * &lead;
            for (j, oc) in other.0.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * oc);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }
}
