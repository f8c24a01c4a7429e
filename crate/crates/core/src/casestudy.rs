//! Fixed data of the worked example: the simplified presentation of the
//! arrangement group, the quotient `Q`, the projection maps and the
//! distinguished element `g`.

use std::sync::Arc;

use crate::freegroup::{Alphabet, Endomorphism, FreeGroupError, FreeWord};
use crate::grouptheory::{CentralExtElement, CentralExtModel, GroupError, GroupPresentation};

pub const GENERATORS: [&str; 5] = ["r1", "r2", "s1", "s2", "c"];

/// `⟨r1, r2, s1, s2, c : [r1,r2], [s1,s2], r1 s1 c = c r1 s1 = s1 c r1, r2 s2 c = s2 c r2 = c r2 s2⟩`
pub fn presentation() -> GroupPresentation {
    GroupPresentation::parse(
        &GENERATORS,
        &[
            "r1 r2 = r2 r1",
            "s1 s2 = s2 s1",
            "r1 s1 c = c r1 s1 = s1 c r1",
            "r2 s2 c = s2 c r2 = c r2 s2",
        ],
    )
    .expect("well-formed")
}

pub fn generators() -> Arc<Alphabet> {
    presentation().generators().clone()
}

/// `⟨a, b, c, d : d = abc = bca = cab⟩`
pub fn quotient_presentation() -> GroupPresentation {
    GroupPresentation::parse(&["a", "b", "c", "d"], &["d = a b c", "d = b c a", "d = c a b"]).expect("well-formed")
}

/// `r1, r2 ↦ a`, `s1, s2 ↦ b`, `c ↦ c`.
pub fn quotient_map() -> Result<Endomorphism, FreeGroupError> {
    let q = quotient_presentation();
    Endomorphism::parse(
        &generators(),
        q.generators(),
        &[("r1", "a"), ("r2", "a"), ("s1", "b"), ("s2", "b"), ("c", "c")],
    )
}

/// Images of `a, b, c, d` in `Z × F(a, b)`.
pub fn model_images(model: &CentralExtModel) -> Result<Vec<CentralExtElement>, GroupError> {
    Ok(vec![
        model.elem(0, "a")?,
        model.elem(0, "b")?,
        model.elem(1, "b^-1 a^-1")?,
        model.elem(1, "")?,
    ])
}

pub fn base_alphabet() -> Arc<Alphabet> {
    Alphabet::new(&["r'", "s'"]).expect("valid alphabet")
}

/// Projection to `x`: `r1 ↦ r'`, `s2 ↦ s'`, the rest die.
pub fn proj_x() -> Result<Endomorphism, FreeGroupError> {
    Endomorphism::parse(&generators(), &base_alphabet(), &[("r1", "r'"), ("s2", "s'")])
}

/// Exchanges the indices 1 and 2.
pub fn swap() -> Result<Endomorphism, FreeGroupError> {
    let g = generators();
    Endomorphism::parse(&g, &g, &[("r1", "r2"), ("r2", "r1"), ("s1", "s2"), ("s2", "s1"), ("c", "c")])
}

pub fn proj_y() -> Result<Endomorphism, FreeGroupError> {
    proj_x()?.compose(&swap()?)
}

/// Inclusion of the diagonal piece: `r ↦ r1 r2`, `s ↦ s1 s2`, `c ↦ c`.
pub fn diagonal_inclusion() -> Result<Endomorphism, FreeGroupError> {
    let src = Alphabet::new(&["r", "s", "c"])?;
    Endomorphism::parse(&src, &generators(), &[("r", "r1 r2"), ("s", "s1 s2"), ("c", "c")])
}

/// Images of the diagonal generators, the subgroup `Ê`.
pub fn diagonal_generators() -> Result<Vec<FreeWord>, FreeGroupError> {
    Ok(diagonal_inclusion()?.images().to_vec())
}

/// `g = s2 c r1 s1 c r2`.
pub fn g() -> FreeWord {
    FreeWord::parse(&generators(), "s2 c r1 s1 c r2").expect("valid word")
}

/// Substitution `r1 = r r2⁻¹`, `s2 = s s1⁻¹` into the monodromy generators.
pub fn rewrite_to_monodromy(target: &Arc<Alphabet>) -> Result<Endomorphism, FreeGroupError> {
    Endomorphism::parse(
        &generators(),
        target,
        &[("r1", "r r2^-1"), ("r2", "r2"), ("s1", "s1"), ("s2", "s s1^-1"), ("c", "c")],
    )
}
