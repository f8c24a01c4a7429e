use std::fmt;
use std::sync::Arc;

use super::GroupError;
use crate::freegroup::{Alphabet, FreeWord};

/// `⟨generators : relators⟩`, relators reduced and nontrivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Arc<Alphabet>,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generators: &Arc<Alphabet>, relators: Vec<FreeWord>) -> Result<Self, GroupError> {
        let probe = FreeWord::identity(generators);
        for (i, r) in relators.iter().enumerate() {
            probe.same_alphabet(r)?;
            if r.is_identity() {
                return Err(GroupError::TrivialRelator(i));
            }
        }
        Ok(Self {
            generators: generators.clone(),
            relators,
        })
    }

    /// Relators given as text; `u = v` is read as `u v⁻¹`, and a chain
    /// `u = v = w` as the relators `u v⁻¹, v w⁻¹`.
    pub fn parse(generators: &[&str], relations: &[&str]) -> Result<Self, GroupError> {
        let alpha = Alphabet::new(generators)?;
        let mut relators = Vec::new();
        for rel in relations {
            let sides = rel
                .split('=')
                .map(|s| FreeWord::parse(&alpha, s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            if sides.len() == 1 {
                relators.push(sides[0].clone());
            }
            for w in sides.windows(2) {
                relators.push(w[0].mul(&w[1].inv())?);
            }
        }
        Self::new(&alpha, relators)
    }

    pub fn generators(&self) -> &Arc<Alphabet> {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} : {} >", self.generators.names().join(", "), rels.join(", "))
    }
}

/// A group whose elements have a computable normal form.
pub trait GroupModel {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, GroupError>;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, GroupError>;
    fn render(&self, a: &Self::Elem) -> String;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    /// Image of `w` under the map sending generator `i` to `images[i]`.
    fn evaluate(&self, w: &FreeWord, images: &[Self::Elem]) -> Result<Self::Elem, GroupError> {
        let mut acc = self.identity();
        for l in w.letters() {
            let x = if l.inverse { self.inv(&images[l.gen])? } else { images[l.gen].clone() };
            acc = self.mul(&acc, &x)?;
        }
        Ok(acc)
    }
}

/// The free group on an alphabet, elements as reduced words.
#[derive(Debug, Clone)]
pub struct FreeGroupModel {
    pub alphabet: Arc<Alphabet>,
}

impl GroupModel for FreeGroupModel {
    type Elem = FreeWord;

    fn identity(&self) -> FreeWord {
        FreeWord::identity(&self.alphabet)
    }

    fn mul(&self, a: &FreeWord, b: &FreeWord) -> Result<FreeWord, GroupError> {
        Ok(a.mul(b)?)
    }

    fn inv(&self, a: &FreeWord) -> Result<FreeWord, GroupError> {
        Ok(a.inv())
    }

    fn render(&self, a: &FreeWord) -> String {
        a.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCheck {
    pub relator: FreeWord,
    pub image: String,
    pub holds: bool,
}

/// Outcome of [`check_homomorphism`], one entry per relator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    pub checks: Vec<RelatorCheck>,
}

impl HomReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failing(&self) -> Vec<&RelatorCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }
}

/// Does `generator i ↦ images[i]` kill every relator of `p` in `model`?
pub fn check_homomorphism<M: GroupModel>(
    p: &GroupPresentation,
    model: &M,
    images: &[M::Elem],
) -> Result<HomReport, GroupError> {
    if images.len() != p.generators.len() {
        return Err(GroupError::ImageCount {
            expected: p.generators.len(),
            got: images.len(),
        });
    }
    let checks = p
        .relators
        .iter()
        .map(|r| {
            let img = model.evaluate(r, images)?;
            Ok(RelatorCheck {
                relator: r.clone(),
                image: model.render(&img),
                holds: model.is_identity(&img),
            })
        })
        .collect::<Result<_, GroupError>>()?;
    Ok(HomReport { checks })
}
