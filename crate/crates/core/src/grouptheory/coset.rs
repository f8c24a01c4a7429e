use super::central::{central_power_not_in_subgroup, CentralExtElement, CentralExtModel, MembershipCertificate};
use super::{GroupError, GroupModel};
use crate::freegroup::{Endomorphism, FreeWord};

/// Distinctness of the cosets `gⁿ·E`, `0 ≤ n ≤ n_max`, via the model images.
#[derive(Debug, Clone)]
pub struct CosetCertificate {
    pub element: FreeWord,
    pub element_image: CentralExtElement,
    pub subgroup_images: Vec<CentralExtElement>,
    pub n_max: u32,
    pub membership: MembershipCertificate,
}

impl CosetCertificate {
    /// Number of cosets `g⁰E, g¹E, …` proven pairwise distinct.
    pub fn distinct_cosets(&self) -> u64 {
        match self.membership.first_member() {
            Some(k) => k as u64,
            None => u64::from(self.n_max) + 1,
        }
    }

    pub fn holds(&self) -> bool {
        self.membership.all_non_members()
    }
}

fn apply_chain(chain: &[Endomorphism], w: &FreeWord) -> Result<FreeWord, GroupError> {
    let mut out = w.clone();
    for e in chain {
        out = e.apply(&out)?;
    }
    Ok(out)
}

/// `gⁿE = gᵐE` iff `g^(n−m) ∈ E`, so it suffices to show no power
/// `g^k`, `0 < |k| ≤ n_max`, maps into the image of `E`. `hom_chain` is applied
/// left to right and lands in the free group on the model's generator
/// images `model_images`.
pub fn coset_certificate(
    s_elt: &FreeWord,
    e_gens: &[FreeWord],
    hom_chain: &[Endomorphism],
    model: &CentralExtModel,
    model_images: &[CentralExtElement],
    n_max: u32,
) -> Result<CosetCertificate, GroupError> {
    for w in hom_chain.windows(2) {
        if w[0].target().names() != w[1].source().names() {
            return Err(GroupError::BrokenChain(format!("{:?} then {:?}", w[0].target(), w[1].source())));
        }
    }
    if let Some(last) = hom_chain.last() {
        if last.target().len() != model_images.len() {
            return Err(GroupError::ImageCount {
                expected: last.target().len(),
                got: model_images.len(),
            });
        }
    }
    let to_model = |w: &FreeWord| -> Result<CentralExtElement, GroupError> {
        model.evaluate(&apply_chain(hom_chain, w)?, model_images)
    };
    let element_image = to_model(s_elt)?;
    let subgroup_images = e_gens.iter().map(to_model).collect::<Result<Vec<_>, _>>()?;
    let membership = central_power_not_in_subgroup(&subgroup_images, &element_image, n_max)?;
    Ok(CosetCertificate {
        element: s_elt.clone(),
        element_image,
        subgroup_images,
        n_max,
        membership,
    })
}
