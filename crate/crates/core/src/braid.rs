//! Braid words and their action on the free group of the punctured plane.
//!
//! The action of `σᵢ` is `xᵢ ↦ xᵢ xᵢ₊₁ xᵢ⁻¹, xᵢ₊₁ ↦ xᵢ`, every other
//! generator fixed; `σᵢ⁻¹` acts by the inverse substitution. A word
//! `b₁ b₂ ⋯ bₖ` acts by `φ_{b₁} ∘ φ_{b₂} ∘ ⋯ ∘ φ_{bₖ}`. Geometrically `σᵢ`
//! is the counter-clockwise half twist exchanging the punctures in
//! positions `i` and `i+1` (ordered by real part).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::freegroup::{Alphabet, Endomorphism, FreeGroupError, FreeWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand range {lo}..{hi} invalid for {strands} strands")]
    RangeError { lo: usize, hi: usize, strands: usize },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}

/// Which of the two standard Artin actions to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArtinConvention {
    #[default]
    Standard,
    /// `σᵢ` acts as the standard `σᵢ⁻¹`. Only useful as a negative control.
    Mirrored,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    /// 1-based: `σ_index` exchanges strands `index` and `index + 1`.
    pub index: usize,
    pub inverse: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        let b = Self::identity(strands);
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(Self { letters, ..b })
    }

    /// Builds from signed indices: `2` is `σ₂`, `-1` is `σ₁⁻¹`.
    pub fn from_signed(strands: usize, word: &[i64]) -> Result<Self, BraidError> {
        let letters = word
            .iter()
            .map(|&s| BraidLetter {
                index: s.unsigned_abs() as usize,
                inverse: s < 0,
            })
            .collect();
        Self::new(strands, letters)
    }

    /// Parses `s1 s2^-1 s1` style text.
    pub fn parse(strands: usize, src: &str) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for tok in src.split_whitespace() {
            let bad = || BraidError::Parse(format!("bad braid letter {tok:?}"));
            let rest = tok.strip_prefix('s').ok_or_else(bad)?;
            let (idx, inverse) = match rest.strip_suffix("^-1") {
                Some(i) => (i, true),
                None => (rest, false),
            };
            let index: usize = idx.parse().map_err(|_| bad())?;
            letters.push(BraidLetter { index, inverse });
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: BraidLetter) {
        assert!(letter.index >= 1 && letter.index < self.strands, "braid letter out of range");
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "braids on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    /// `perm[p]` is the starting position of the strand that ends at position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            perm.swap(l.index - 1, l.index);
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", l.index)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[{}]({})", self.strands, self)
    }
}

fn generator_action(
    alphabet: &Arc<Alphabet>,
    letter: BraidLetter,
    convention: ArtinConvention,
) -> Result<Endomorphism, BraidError> {
    let i = letter.index - 1;
    let inverse = match convention {
        ArtinConvention::Standard => letter.inverse,
        ArtinConvention::Mirrored => !letter.inverse,
    };
    let xi = FreeWord::generator(alphabet, i);
    let xj = FreeWord::generator(alphabet, i + 1);
    let mut images: Vec<FreeWord> = (0..alphabet.len()).map(|g| FreeWord::generator(alphabet, g)).collect();
    if inverse {
        images[i] = xj.clone();
        images[i + 1] = xi.conj(&xj)?;
    } else {
        images[i] = xj.conj(&xi.inv())?;
        images[i + 1] = xi;
    }
    Ok(Endomorphism::new(alphabet, alphabet, images)?)
}

/// The automorphism of the free group on `alphabet` (one generator per
/// strand, in strand order) induced by `b`.
pub fn artin_action_on(
    b: &BraidWord,
    alphabet: &Arc<Alphabet>,
    convention: ArtinConvention,
) -> Result<Endomorphism, BraidError> {
    assert_eq!(alphabet.len(), b.strands, "alphabet size must equal strand count");
    let mut acc = Endomorphism::identity(alphabet);
    for &l in &b.letters {
        acc = acc.compose(&generator_action(alphabet, l, convention)?)?;
    }
    Ok(acc)
}

/// Artin action on `F⟨x1, …, xn⟩` with the standard convention.
pub fn artin_action(b: &BraidWord) -> Result<Endomorphism, BraidError> {
    let alphabet = Alphabet::numbered("x", b.strands)?;
    artin_action_on(b, &alphabet, ArtinConvention::Standard)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistKind {
    Half,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
}

/// Half or full twist on the consecutive strands `lo..=hi` (1-based).
pub fn block_twist(
    strands: usize,
    lo: usize,
    hi: usize,
    kind: TwistKind,
    orientation: Orientation,
) -> Result<BraidWord, BraidError> {
    if lo == 0 || lo > hi || hi > strands {
        return Err(BraidError::RangeError { lo, hi, strands });
    }
    let mut letters = Vec::new();
    // Garside half twist: (σ_lo ⋯ σ_{hi-1})(σ_lo ⋯ σ_{hi-2}) ⋯ (σ_lo)
    for top in (lo..hi).rev() {
        for index in lo..=top {
            letters.push(BraidLetter { index, inverse: false });
        }
    }
    let half = BraidWord::new(strands, letters)?;
    let twist = match kind {
        TwistKind::Half => half,
        TwistKind::Full => half.concat(&half),
    };
    Ok(match orientation {
        Orientation::CounterClockwise => twist,
        Orientation::Clockwise => twist.inverse(),
    })
}
