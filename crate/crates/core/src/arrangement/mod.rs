//! Real line arrangements, braid monodromy and van Kampen presentations.

mod complex;
mod io;
mod lines;
mod loops;
mod tracking;
mod zvk;

#[cfg(test)]
mod tests;

use thiserror::Error;

pub use complex::ExactComplex;
pub use io::{parse_arrangement, parse_loops};
pub use lines::{Arrangement, Line, Projection};
pub use loops::BaseLoop;
pub use tracking::{braid_along, sectioned_braid_along};
pub use zvk::{loop_action, zvk_presentation, zvk_presentation_with, LoopMonodromy, ZvkPresentation};

use crate::braid::BraidError;
use crate::exact::ExactError;
use crate::freegroup::FreeGroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("line {0} is vertical for the chosen projection")]
    DegenerateProjection(String),
    #[error("point {0} is a puncture")]
    OnPuncture(String),
    #[error("strands {} and {} collide over {at}", strands.0, strands.1)]
    PunctureCollision { strands: (String, String), at: String },
    #[error("loop is not closed")]
    NotClosed,
    #[error("loop {label} is not a meridian: {detail}")]
    NotMeridian { label: String, detail: String },
    #[error("loops are not a geometric basis: {0}")]
    NotGeometricBasis(String),
    #[error("section undefined: {0}")]
    SectionUndefined(String),
    #[error("monodromy of {0} is not invertible")]
    NotAutomorphism(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The case-study arrangement: `x = 0, x = 1, y = 0, y = 1, x + y = 1`
/// projected to `x`, with the diagonal `y = x` as section.
pub const CASE_STUDY_ARRANGEMENT: &str = "\
project x
r1 1 0 1
s2 1 0 0
r2 0 1 1
s1 0 1 0
c 1 1 1
section diag -1 1 0
";

/// Meridians of the case study, based over `x = 3/4`.
pub const CASE_STUDY_LOOPS: &str = "\
basepoint 3/4 0
lasso r 1 0
lasso s 0 0
";
