//! The quadratic family, its critical portrait and the forbidden set.

mod delta;
mod family;
mod map;
mod portrait;
mod upoly;

#[cfg(test)]
mod tests;

use thiserror::Error;

pub use delta::{delta_contains, plot_delta, render_delta_svg, DeltaSet, PlotWindow, DELTA_CONDITIONS};
pub use family::{base_map, family_map, family_ring, specialize_family, verify_z_formula, z_at, z_formula, ZFormulaReport};
pub use map::{critical_data, critical_points_reciprocal_chart, evaluate_map, CriticalData, RationalMap};
pub use portrait::{verify_portrait, PortraitCondition, PortraitReport, PortraitSpec};

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("0/0 at {0}")]
    IndeterminateForm(String),
    #[error("critical points are not rational: Wronskian coefficients {0}")]
    NonRationalCritical(String),
    #[error("parameter left unspecialized in {0}")]
    NotSpecialized(String),
    #[error("degenerate map: {0}")]
    Degenerate(String),
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
