//! Free groups: reduced words, homomorphisms given on generators, and
//! Stallings foldings for finitely generated subgroups.

mod endo;
mod stallings;
mod word;

pub use endo::{apply_endo, Endomorphism};
pub use stallings::{
    stallings_fold, subgroup_member, subgroup_rank_index, FoldedEdge, StallingsGraph, SubgroupIndex,
};
pub use word::{reduce, word_arith, Alphabet, FreeWord, Letter, WordOp};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    BadGeneratorName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("words over different alphabets: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("spelling unavailable: rank {rank} differs from the {generators} given generators")]
    SpellingUnavailable { rank: usize, generators: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests;
