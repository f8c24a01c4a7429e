//! Finite presentations, homomorphism checks into groups with a solvable
//! word problem, and coset certificates in `Z × F₂`.

mod central;
mod coset;
mod presentation;
mod semidirect;


use thiserror::Error;

pub use central::{
    central_ext_ops, central_power_not_in_subgroup, subgroup_decision, CentralExtElement, CentralExtModel, CentralOp,
    CentralResult, MembershipCertificate, PowerCheck, PowerVerdict,
};
pub use coset::{coset_certificate, CosetCertificate};
pub use presentation::{check_homomorphism, FreeGroupModel, GroupModel, GroupPresentation, HomReport, RelatorCheck};
pub use semidirect::{semidirect_normal_form, SemidirectElement, SemidirectModel};

use crate::freegroup::FreeGroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("relator {0} is trivial")]
    TrivialRelator(usize),
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("no action given for base generator `{0}`")]
    MissingAction(String),
    #[error("generator `{0}` belongs to neither fiber nor base")]
    StrayGenerator(String),
    #[error("homomorphism chain does not compose: {0}")]
    BrokenChain(String),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}
