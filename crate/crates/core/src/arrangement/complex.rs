use std::fmt;
use std::ops::{Add, Sub};

use crate::exact::ExactScalar;

/// A Gaussian rational `re + im·i`. Ordered lexicographically by `(re, im)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactComplex {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

impl ExactComplex {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExactScalar) -> Self {
        Self {
            re,
            im: ExactScalar::zero(),
        }
    }

    pub fn frac(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(ExactScalar::frac(re.0, re.1), ExactScalar::frac(im.0, im.1))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    /// Max-norm distance `max(|Δre|, |Δim|)`.
    pub fn linf_dist(&self, other: &Self) -> ExactScalar {
        let dr = (&self.re - &other.re).abs();
        let di = (&self.im - &other.im).abs();
        dr.max(di)
    }

    /// `Im(conj(self)·other)`, the signed area spanned by the two vectors.
    pub fn cross(&self, other: &Self) -> ExactScalar {
        &self.re * &other.im - &self.im * &other.re
    }

    pub fn dot(&self, other: &Self) -> ExactScalar {
        &self.re * &other.re + &self.im * &other.im
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        let mag = self.im.abs();
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            return if mag.is_one() { write!(f, "{lead}i") } else { write!(f, "{lead}{mag}i") };
        }
        if mag.is_one() {
            write!(f, "{}{sign}i", self.re)
        } else {
            write!(f, "{}{sign}{mag}i", self.re)
        }
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
