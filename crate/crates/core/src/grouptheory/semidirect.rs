//! `F(fiber) ⋊ F(base)` with elements in normal form `u·v`.

use std::fmt;
use std::sync::Arc;

use super::{GroupError, GroupModel};
use crate::freegroup::{Alphabet, Endomorphism, FreeWord, Letter};

/// `fiber · base`, both reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemidirectElement {
    pub fiber: FreeWord,
    pub base: FreeWord,
}

impl fmt::Display for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.fiber, self.base)
    }
}

impl fmt::Debug for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Base letter `y` acts on the fiber by `x ↦ y x y⁻¹`.
#[derive(Debug, Clone)]
pub struct SemidirectModel {
    fiber: Arc<Alphabet>,
    base: Arc<Alphabet>,
    /// Per base generator: the action of `y` and of `y⁻¹`.
    actions: Vec<Option<(Endomorphism, Endomorphism)>>,
}

impl SemidirectModel {
    pub fn new(fiber: &Arc<Alphabet>, base: &Arc<Alphabet>) -> Self {
        Self {
            fiber: fiber.clone(),
            base: base.clone(),
            actions: vec![None; base.len()],
        }
    }

    /// Registers monodromy `φ_y` with `y⁻¹ x y = φ_y(x)`, and its inverse.
    /// Then `y` acts by `φ_y⁻¹` and `y⁻¹` by `φ_y`.
    pub fn with_monodromy(mut self, y: &str, phi: &Endomorphism, phi_inv: &Endomorphism) -> Result<Self, GroupError> {
        let i = self
            .base
            .index(y)
            .ok_or_else(|| GroupError::StrayGenerator(y.to_string()))?;
        let probe = FreeWord::identity(&self.fiber);
        for e in [phi, phi_inv] {
            for w in e.images() {
                probe.same_alphabet(w)?;
            }
        }
        self.actions[i] = Some((phi_inv.clone(), phi.clone()));
        Ok(self)
    }

    pub fn fiber_alphabet(&self) -> &Arc<Alphabet> {
        &self.fiber
    }

    pub fn base_alphabet(&self) -> &Arc<Alphabet> {
        &self.base
    }

    fn act_letter(&self, l: Letter, u: &FreeWord) -> Result<FreeWord, GroupError> {
        let (pos, neg) = self.actions[l.gen]
            .as_ref()
            .ok_or_else(|| GroupError::MissingAction(self.base.name(l.gen).to_string()))?;
        Ok(if l.inverse { neg.apply(u)? } else { pos.apply(u)? })
    }

    /// `v u v⁻¹` for a base word `v`.
    pub fn act(&self, v: &FreeWord, u: &FreeWord) -> Result<FreeWord, GroupError> {
        let mut out = u.clone();
        for &l in v.letters().iter().rev() {
            out = self.act_letter(l, &out)?;
        }
        Ok(out)
    }

    pub fn fiber_elem(&self, u: FreeWord) -> SemidirectElement {
        SemidirectElement {
            fiber: u,
            base: FreeWord::identity(&self.base),
        }
    }

    pub fn base_elem(&self, v: FreeWord) -> SemidirectElement {
        SemidirectElement {
            fiber: FreeWord::identity(&self.fiber),
            base: v,
        }
    }

    /// Image of a generator name from either alphabet.
    pub fn generator(&self, name: &str) -> Result<SemidirectElement, GroupError> {
        if let Some(i) = self.fiber.index(name) {
            Ok(self.fiber_elem(FreeWord::generator(&self.fiber, i)))
        } else if let Some(i) = self.base.index(name) {
            Ok(self.base_elem(FreeWord::generator(&self.base, i)))
        } else {
            Err(GroupError::StrayGenerator(name.to_string()))
        }
    }
}

impl GroupModel for SemidirectModel {
    type Elem = SemidirectElement;

    fn identity(&self) -> SemidirectElement {
        self.fiber_elem(FreeWord::identity(&self.fiber))
    }

    fn mul(&self, a: &SemidirectElement, b: &SemidirectElement) -> Result<SemidirectElement, GroupError> {
        Ok(SemidirectElement {
            fiber: a.fiber.mul(&self.act(&a.base, &b.fiber)?)?,
            base: a.base.mul(&b.base)?,
        })
    }

    fn inv(&self, a: &SemidirectElement) -> Result<SemidirectElement, GroupError> {
        let vinv = a.base.inv();
        Ok(SemidirectElement {
            fiber: self.act(&vinv, &a.fiber.inv())?,
            base: vinv,
        })
    }

    fn render(&self, a: &SemidirectElement) -> String {
        a.to_string()
    }
}

/// Normal form of a word over any alphabet whose generators are fiber or
/// base generators of `model` (by name).
pub fn semidirect_normal_form(model: &SemidirectModel, w: &FreeWord) -> Result<SemidirectElement, GroupError> {
    let images = w
        .alphabet()
        .names()
        .iter()
        .map(|n| model.generator(n))
        .collect::<Result<Vec<_>, _>>()?;
    model.evaluate(w, &images)
}
