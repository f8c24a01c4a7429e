use std::fmt;
use std::sync::Arc;

use super::FreeGroupError;

/// Ordered list of distinct generator names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// The empty alphabet is allowed and gives the trivial group.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>, FreeGroupError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(char::is_whitespace) || n.contains('^') {
                return Err(FreeGroupError::BadGeneratorName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(FreeGroupError::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// Generators `prefix1, prefix2, ...`.
    pub fn numbered(prefix: &str, count: usize) -> Result<Arc<Self>, FreeGroupError> {
        let names: Vec<String> = (1..=count).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.names.join(","))
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Self { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Self { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Self {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word over an alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        Self {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, gen: usize) -> Self {
        assert!(gen < alphabet.len(), "generator index out of range");
        Self {
            alphabet: alphabet.clone(),
            letters: vec![Letter::pos(gen)],
        }
    }

    /// Builds a word from arbitrary letters, reducing freely.
    pub fn from_letters(alphabet: &Arc<Alphabet>, letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::identity(alphabet);
        for l in letters {
            assert!(l.gen < alphabet.len(), "generator index out of range");
            w.push(l);
        }
        w
    }

    /// Parses juxtaposed generator names with optional integer exponents,
    /// e.g. `s2 c r1^-1 a^3`. The empty string (or `1`, `e`) is the identity
    /// unless `e` is itself a generator.
    pub fn parse(alphabet: &Arc<Alphabet>, src: &str) -> Result<Self, FreeGroupError> {
        let mut w = Self::identity(alphabet);
        for tok in src.split_whitespace() {
            if tok == "1" || (tok == "e" && alphabet.index("e").is_none()) {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| FreeGroupError::Parse(format!("bad exponent in {tok:?}")))?;
                    (n, e)
                }
                None => (tok, 1),
            };
            let gen = alphabet
                .index(name)
                .ok_or_else(|| FreeGroupError::UnknownGenerator(name.to_string()))?;
            let letter = if exp < 0 { Letter::neg(gen) } else { Letter::pos(gen) };
            for _ in 0..exp.unsigned_abs() {
                w.push(letter);
            }
        }
        Ok(w)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub(crate) fn same_alphabet(&self, other: &Self) -> Result<(), FreeGroupError> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(FreeGroupError::AlphabetMismatch {
                left: format!("{:?}", self.alphabet),
                right: format!("{:?}", other.alphabet),
            })
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FreeGroupError> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    pub fn inv(&self) -> Self {
        Self {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `w^-1 u w` where `self` is `u`.
    pub fn conj(&self, by: &Self) -> Result<Self, FreeGroupError> {
        by.inv().mul(self)?.mul(by)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut out = Self::identity(&self.alphabet);
        for _ in 0..n.unsigned_abs() {
            for &l in &base.letters {
                out.push(l);
            }
        }
        out
    }

    /// Signed number of occurrences of generator `gen`.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.sign()).sum()
    }

    /// Reinterprets the word over another alphabet by generator name.
    pub fn rename_into(&self, target: &Arc<Alphabet>) -> Result<Self, FreeGroupError> {
        let letters = self
            .letters
            .iter()
            .map(|l| {
                let name = self.alphabet.name(l.gen);
                target
                    .index(name)
                    .map(|gen| Letter { gen, inverse: l.inverse })
                    .ok_or_else(|| FreeGroupError::UnknownGenerator(name.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_letters(target, letters))
    }
}

impl fmt::Display for FreeWord {
    /// Juxtaposed names with `^-1` on inverse letters; the identity is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.alphabet.name(l.gen))?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

/// Freely reduces an arbitrary letter sequence.
pub fn reduce(alphabet: &Arc<Alphabet>, letters: &[Letter]) -> FreeWord {
    FreeWord::from_letters(alphabet, letters.iter().copied())
}

/// Word operation selector mirroring the algebraic operations on [`FreeWord`].
#[derive(Debug, Clone)]
pub enum WordOp<'a> {
    Mul(&'a FreeWord, &'a FreeWord),
    Inv(&'a FreeWord),
    /// `Conj(u, w)` is `w^-1 u w`.
    Conj(&'a FreeWord, &'a FreeWord),
    Pow(&'a FreeWord, i64),
}

pub fn word_arith(op: WordOp<'_>) -> Result<FreeWord, FreeGroupError> {
    match op {
        WordOp::Mul(a, b) => a.mul(b),
        WordOp::Inv(a) => Ok(a.inv()),
        WordOp::Conj(u, w) => u.conj(w),
        WordOp::Pow(a, n) => Ok(a.pow(n)),
    }
}
