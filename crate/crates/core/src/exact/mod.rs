//! Exact arithmetic over the rationals: scalars, points of the projective
//! line, multivariate polynomials in graded-lex order, rational functions and
//! Sylvester resultants. Nothing in here touches floating point except the
//! explicitly lossy [`ExactScalar::to_f64`].

mod parse;
mod poly;
mod ratfun;
mod scalar;

pub use poly::{resultant, Monomial, Poly};
pub use ratfun::{ratfun_equal, RationalFunction};
pub use scalar::{scalar_arith, ArithOp, ExactScalar, ProjectivePoint};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("indeterminate form 0/0")]
    IndeterminateForm,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
}
