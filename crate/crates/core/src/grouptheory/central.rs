//! The model `Z × F(a, b)`: a central exponent and a reduced word.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use super::{GroupError, GroupModel};
use crate::freegroup::{Alphabet, FreeWord, StallingsGraph};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CentralExtElement {
    pub central: i64,
    pub word: FreeWord,
}

impl CentralExtElement {
    pub fn new(central: i64, word: FreeWord) -> Self {
        Self { central, word }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GroupError> {
        Ok(Self::new(self.central + other.central, self.word.mul(&other.word)?))
    }

    pub fn inv(&self) -> Self {
        Self::new(-self.central, self.word.inv())
    }

    pub fn pow(&self, n: i64) -> Self {
        Self::new(self.central * n, self.word.pow(n))
    }

    pub fn is_identity(&self) -> bool {
        self.central == 0 && self.word.is_identity()
    }

    /// Central with trivial word part.
    pub fn is_central(&self) -> bool {
        self.word.is_identity()
    }
}

impl fmt::Display for CentralExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            write!(f, "({}, ε)", self.central)
        } else {
            write!(f, "({}, {})", self.central, self.word)
        }
    }
}

impl fmt::Debug for CentralExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Z × F(alphabet)` as a [`GroupModel`].
#[derive(Debug, Clone)]
pub struct CentralExtModel {
    pub alphabet: Arc<Alphabet>,
}

impl CentralExtModel {
    /// The standard model on `{a, b}`.
    pub fn ab() -> Self {
        Self {
            alphabet: Alphabet::new(&["a", "b"]).expect("valid alphabet"),
        }
    }

    pub fn elem(&self, central: i64, word: &str) -> Result<CentralExtElement, GroupError> {
        Ok(CentralExtElement::new(central, FreeWord::parse(&self.alphabet, word)?))
    }
}

impl GroupModel for CentralExtModel {
    type Elem = CentralExtElement;

    fn identity(&self) -> CentralExtElement {
        CentralExtElement::new(0, FreeWord::identity(&self.alphabet))
    }

    fn mul(&self, a: &CentralExtElement, b: &CentralExtElement) -> Result<CentralExtElement, GroupError> {
        a.mul(b)
    }

    fn inv(&self, a: &CentralExtElement) -> Result<CentralExtElement, GroupError> {
        Ok(a.inv())
    }

    fn render(&self, a: &CentralExtElement) -> String {
        a.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralOp {
    Mul,
    Inv,
    Pow(i64),
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralResult {
    Elem(CentralExtElement),
    Bool(bool),
}

/// `Mul` multiplies all arguments left to right; the others take their
/// first argument (and `Eq` the second).
pub fn central_ext_ops(op: CentralOp, args: &[CentralExtElement]) -> Result<CentralResult, GroupError> {
    let arity = |n: usize| {
        if args.len() < n {
            Err(GroupError::ImageCount {
                expected: n,
                got: args.len(),
            })
        } else {
            Ok(())
        }
    };
    Ok(match op {
        CentralOp::Mul => {
            arity(1)?;
            let mut acc = args[0].clone();
            for x in &args[1..] {
                acc = acc.mul(x)?;
            }
            CentralResult::Elem(acc)
        }
        CentralOp::Inv => {
            arity(1)?;
            CentralResult::Elem(args[0].inv())
        }
        CentralOp::Pow(n) => {
            arity(1)?;
            CentralResult::Elem(args[0].pow(n))
        }
        CentralOp::Eq => {
            arity(2)?;
            CentralResult::Bool(args[0] == args[1])
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerVerdict {
    /// The word part is not in the subgroup generated by the word parts.
    WordNotInSubgroup,
    /// The word part is spelled, but no element of the subgroup with that
    /// word part has the required central exponent.
    CentralMismatch { spelling: FreeWord, implied: i64, required: i64 },
    Member { spelling: FreeWord, kernel_multiple: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCheck {
    pub n: i64,
    pub element: CentralExtElement,
    pub verdict: PowerVerdict,
}

impl PowerCheck {
    pub fn is_member(&self) -> bool {
        matches!(self.verdict, PowerVerdict::Member { .. })
    }
}

/// Membership decisions for `target^n`, `0 < |n| ≤ n_max`, in `⟨H⟩`.
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    pub generators: Vec<CentralExtElement>,
    pub target: CentralExtElement,
    pub rank: usize,
    pub basis: bool,
    /// Central parts of subgroup elements with trivial word part form `kernel_gcd · Z`.
    pub kernel_gcd: i64,
    pub checks: Vec<PowerCheck>,
}

impl MembershipCertificate {
    pub fn all_non_members(&self) -> bool {
        self.checks.iter().all(|c| !c.is_member())
    }

    /// Smallest `|n|` at which a power was found in the subgroup.
    pub fn first_member(&self) -> Option<i64> {
        self.checks.iter().filter(|c| c.is_member()).map(|c| c.n.abs()).min()
    }

    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let mut s = format!(
            "subgroup generated by {}\nword-part rank {} on {} generators, basis: {}\ncentral kernel: {}Z\ntarget {}\n",
            gens.join(", "),
            self.rank,
            self.generators.len(),
            if self.basis { "yes" } else { "no" },
            self.kernel_gcd,
            self.target
        );
        for c in &self.checks {
            let line = match &c.verdict {
                PowerVerdict::WordNotInSubgroup => {
                    format!("n={}: {} not a member (word part outside subgroup)", c.n, c.element)
                }
                PowerVerdict::CentralMismatch {
                    spelling,
                    implied,
                    required,
                } => format!(
                    "n={}: {} not a member (spelling [{}] implies central {} but {} is required)",
                    c.n, c.element, spelling, implied, required
                ),
                PowerVerdict::Member { spelling, kernel_multiple } => format!(
                    "n={}: {} is a member (spelling [{}] plus {} kernel units)",
                    c.n, c.element, spelling, kernel_multiple
                ),
            };
            s.push_str(&line);
            s.push('\n');
        }
        s
    }
}

struct Decider {
    graph: StallingsGraph,
    centrals: Vec<i64>,
    kernel_gcd: i64,
}

impl Decider {
    fn new(h: &[CentralExtElement], alphabet: &Arc<Alphabet>) -> Result<Self, GroupError> {
        let words: Vec<FreeWord> = h.iter().map(|g| g.word.clone()).collect();
        let graph = StallingsGraph::fold(alphabet, &words)?;
        let centrals: Vec<i64> = h.iter().map(|g| g.central).collect();
        let mut kernel_gcd = 0i64;
        for k in graph.kernel() {
            kernel_gcd = kernel_gcd.gcd(&implied_central(k, &centrals));
        }
        Ok(Self {
            graph,
            centrals,
            kernel_gcd,
        })
    }

    fn decide(&self, x: &CentralExtElement) -> Result<PowerVerdict, GroupError> {
        let Some(spelling) = self.graph.spell(&x.word)? else {
            return Ok(PowerVerdict::WordNotInSubgroup);
        };
        let implied = implied_central(&spelling, &self.centrals);
        let gap = x.central - implied;
        let fits = if self.kernel_gcd == 0 { gap == 0 } else { gap % self.kernel_gcd == 0 };
        Ok(if fits {
            PowerVerdict::Member {
                kernel_multiple: if self.kernel_gcd == 0 { 0 } else { gap / self.kernel_gcd },
                spelling,
            }
        } else {
            PowerVerdict::CentralMismatch {
                spelling,
                implied,
                required: x.central,
            }
        })
    }
}

fn implied_central(spelling: &FreeWord, centrals: &[i64]) -> i64 {
    spelling.letters().iter().map(|l| l.sign() * centrals[l.gen]).sum()
}

fn alphabet_of(h: &[CentralExtElement], target: &CentralExtElement) -> Arc<Alphabet> {
    h.first().unwrap_or(target).word.alphabet().clone()
}

/// Decides `x ∈ ⟨H⟩` in `Z × F`.
///
/// A spelling of the word part fixes the central part up to the central
/// values of relations among the word parts; those are read off the
/// kernel of the folding, so with the basis property the answer is exact
/// from the unique spelling alone.
pub fn subgroup_decision(h: &[CentralExtElement], x: &CentralExtElement) -> Result<PowerVerdict, GroupError> {
    Decider::new(h, &alphabet_of(h, x))?.decide(x)
}

pub fn central_power_not_in_subgroup(
    h: &[CentralExtElement],
    target: &CentralExtElement,
    n_max: u32,
) -> Result<MembershipCertificate, GroupError> {
    let decider = Decider::new(h, &alphabet_of(h, target))?;
    let mut checks = Vec::new();
    for k in 1..=i64::from(n_max) {
        for n in [k, -k] {
            let element = target.pow(n);
            let verdict = decider.decide(&element)?;
            checks.push(PowerCheck { n, element, verdict });
        }
    }
    Ok(MembershipCertificate {
        generators: h.to_vec(),
        target: target.clone(),
        rank: decider.graph.rank(),
        basis: decider.graph.is_basis(),
        kernel_gcd: decider.kernel_gcd,
        checks,
    })
}
