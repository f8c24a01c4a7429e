use std::fmt;
use std::sync::Arc;

use super::{Alphabet, FreeGroupError, FreeWord};

/// A homomorphism between free groups given by the images of the source
/// generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    source: Arc<Alphabet>,
    target: Arc<Alphabet>,
    images: Vec<FreeWord>,
}

impl Endomorphism {
    pub fn new(
        source: &Arc<Alphabet>,
        target: &Arc<Alphabet>,
        images: Vec<FreeWord>,
    ) -> Result<Self, FreeGroupError> {
        if images.len() != source.len() {
            return Err(FreeGroupError::ImageCount {
                expected: source.len(),
                got: images.len(),
            });
        }
        let probe = FreeWord::identity(target);
        for w in &images {
            probe.same_alphabet(w)?;
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Parses images given as `(source generator, word over target)` pairs;
    /// generators not listed map to the identity.
    pub fn parse(
        source: &Arc<Alphabet>,
        target: &Arc<Alphabet>,
        pairs: &[(&str, &str)],
    ) -> Result<Self, FreeGroupError> {
        let mut images = vec![FreeWord::identity(target); source.len()];
        for (gen, word) in pairs {
            let idx = source
                .index(gen)
                .ok_or_else(|| FreeGroupError::UnknownGenerator(gen.to_string()))?;
            images[idx] = FreeWord::parse(target, word)?;
        }
        Self::new(source, target, images)
    }

    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        let images = (0..alphabet.len()).map(|g| FreeWord::generator(alphabet, g)).collect();
        Self {
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Arc<Alphabet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Alphabet> {
        &self.target
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &FreeWord {
        &self.images[gen]
    }

    pub fn image_of(&self, name: &str) -> Option<&FreeWord> {
        self.source.index(name).map(|g| &self.images[g])
    }

    /// Homomorphic image of `w`, reduced.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        FreeWord::identity(&self.source).same_alphabet(w)?;
        let mut letters = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.gen];
            if l.inverse {
                letters.extend(img.letters().iter().rev().map(|x| x.inv()));
            } else {
                letters.extend_from_slice(img.letters());
            }
        }
        Ok(FreeWord::from_letters(&self.target, letters))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Endomorphism) -> Result<Self, FreeGroupError> {
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&inner.source, &self.target, images)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .images
                .iter()
                .enumerate()
                .all(|(g, w)| w.len() == 1 && w.letters()[0].gen == g && !w.letters()[0].inverse)
    }

    /// Post-composes with conjugation `w ↦ c^-1 w c`.
    pub fn conjugated_by(&self, c: &FreeWord) -> Result<Self, FreeGroupError> {
        let images = self
            .images
            .iter()
            .map(|w| w.conj(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&self.source, &self.target, images)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, w) in self.images.iter().enumerate() {
            if g > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} -> {}", self.source.name(g), w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Endomorphism{{{self}}}")
    }
}

/// Homomorphic image of `w` under `e`.
pub fn apply_endo(e: &Endomorphism, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
    e.apply(w)
}
