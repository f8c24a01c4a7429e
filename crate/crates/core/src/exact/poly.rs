use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{ExactError, ExactScalar};

/// Exponent vector ordered graded-lexicographically: total degree first, then
/// lexicographic in the declared variable order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Every polynomial carries its ordered variable list; arithmetic between
/// polynomials over different variable lists is a programming error and
/// panics. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl Poly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<[String]>, c: ExactScalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &Arc<[String]>, name: &str) -> Result<Self, ExactError> {
        let idx = index_of(vars, name)?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::monomial(vars, ExactScalar::one(), Monomial(exps)))
    }

    pub fn monomial(vars: &Arc<[String]>, c: ExactScalar, m: Monomial) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds the variable list shared by a family of polynomials.
    pub fn ring(names: &[&str]) -> Arc<[String]> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// Parses `+ - * ^`, parentheses, integer and `p/q` literals.
    pub fn parse(vars: &Arc<[String]>, src: &str) -> Result<Self, ExactError> {
        super::parse::parse_poly(vars, src)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, ExactError> {
        index_of(&self.vars, name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter().rev()
    }

    pub fn constant_value(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(&self.vars, ExactScalar::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * &ExactScalar::from(i64::from(e)));
        }
        out
    }

    /// Evaluates at a full assignment. Variables that do not occur in `self`
    /// may be left unassigned.
    pub fn eval(&self, point: &[(&str, ExactScalar)]) -> Result<ExactScalar, ExactError> {
        let mut values: Vec<Option<&ExactScalar>> = vec![None; self.vars.len()];
        for (name, v) in point {
            values[index_of(&self.vars, name)?] = Some(v);
        }
        let mut powers: HashMap<(usize, u32), ExactScalar> = HashMap::new();
        let mut total = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values[i].ok_or_else(|| ExactError::MissingAssignment(self.vars[i].clone()))?;
                let p = powers.entry((i, e)).or_insert_with(|| v.pow(e));
                t = t * &*p;
            }
            total = total + t;
        }
        Ok(total)
    }

    /// Substitutes a constant for one variable; the variable list is kept.
    pub fn substitute(&self, var: usize, value: &ExactScalar) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::replace(&mut exps[var], 0);
            out.add_term(Monomial(exps), c * &value.pow(e));
        }
        out
    }

    /// Substitutes a polynomial (over the same variables) for one variable.
    pub fn compose(&self, var: usize, value: &Poly) -> Self {
        self.check_ring(value);
        let coeffs = self.coefficients_in(var);
        // Horner in `value`.
        let mut acc = Self::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// The same polynomial over another variable list, matched by name.
    /// Fails if a variable that occurs is missing from `vars`.
    pub fn embed(&self, vars: &Arc<[String]>) -> Result<Self, ExactError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for name in self.vars.iter() {
            map.push(vars.iter().position(|v| v == name));
        }
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| ExactError::UnknownVariable(self.vars[i].clone()))?;
                exps[j] = e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Coefficients as polynomials free of `var`; index `k` holds the
    /// coefficient of `var^k`. The zero polynomial yields an empty vector.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let Some(deg) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut out = vec![Self::zero(&self.vars); deg as usize + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::replace(&mut exps[var], 0);
            out[e as usize].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Exact square root, if `self` is the square of a polynomial with
    /// rational coefficients. The root with positive leading coefficient is
    /// returned.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lead_m, lead_c) = self.terms.iter().next_back()?;
        if lead_m.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        let root_m = Monomial(lead_m.0.iter().map(|e| e / 2).collect());
        let root_c = lead_c.sqrt_exact()?;
        let lead = Self::monomial(&self.vars, root_c, root_m);
        let two_lead = lead.scale(&ExactScalar::from(2));
        let (tm, tc) = two_lead.terms.iter().next_back()?;
        let min_deg = self.terms.keys().map(Monomial::degree).min()?;
        let mut root = lead.clone();
        let mut rem = self - &(&lead * &lead);
        // Root terms are produced in strictly descending grlex order and no
        // root term can have degree below half the lowest degree of `self`.
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            if rm.0.iter().zip(&tm.0).any(|(a, b)| a < b) {
                return None;
            }
            let qm = Monomial(rm.0.iter().zip(&tm.0).map(|(a, b)| a - b).collect());
            if 2 * qm.degree() < min_deg {
                return None;
            }
            let qc = rc.checked_div(tc).ok()?;
            let q = Self::monomial(&self.vars, qc, qm);
            // (root + q)^2 - root^2 = 2 root q + q^2
            let delta = &(&root.scale(&ExactScalar::from(2)) * &q) + &(&q * &q);
            rem = &rem - &delta;
            root = &root + &q;
        }
        Some(root)
    }

    fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &Poly) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }
}

fn index_of(vars: &[String], name: &str) -> Result<usize, ExactError> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = Poly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&ExactScalar::from(-1))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for Poly {
    /// Descending graded-lex order, e.g. `x^2 - 2*x - y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.vars.join(","), self)
    }
}

/// Resultant of `p` and `q` with respect to `var`.
///
/// Convention: the determinant of the Sylvester matrix whose first
/// `deg q` rows carry the coefficients of `p` (highest power first, shifted
/// one column per row) followed by `deg p` rows carrying those of `q`. With
/// this convention `res(t - x, t - y, t) = x - y`.
pub fn resultant(p: &Poly, q: &Poly, var: &str) -> Result<Poly, ExactError> {
    p.check_ring(q);
    let v = p.var_index(var)?;
    if p.is_zero() || q.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    if m == 0 && n == 0 {
        return Ok(Poly::constant(p.vars(), ExactScalar::one()));
    }
    let size = m + n;
    let zero = Poly::zero(p.vars());
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in pc.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in qc.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(determinant(&rows))
}

/// Laplace expansion along rows, memoised over the set of used columns.
fn determinant(rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    assert!(n <= 20, "determinant too large for subset expansion");
    let vars = rows[0][0].vars().clone();
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    fn go(rows: &[Vec<Poly>], row: usize, used: u32, memo: &mut HashMap<u32, Poly>, vars: &Arc<[String]>) -> Poly {
        if row == rows.len() {
            return Poly::constant(vars, ExactScalar::one());
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = Poly::zero(vars);
        let mut sign_pos = true;
        for col in 0..rows.len() {
            if used & (1 << col) != 0 {
                continue;
            }
            let entry = &rows[row][col];
            if !entry.is_zero() {
                let minor = go(rows, row + 1, used | (1 << col), memo, vars);
                let term = entry * &minor;
                acc = if sign_pos { &acc + &term } else { &acc - &term };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(rows, 0, 0, &mut memo, &vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<[String]> {
        Poly::ring(&["t", "x", "y"])
    }

    fn p(s: &str) -> Poly {
        Poly::parse(&ring(), s).unwrap()
    }

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = p("x^2 - y - 2*x + 1");
        assert_eq!(f.eval(&[("x", q("3/4")), ("y", q("3/4"))]).unwrap(), q("-11/16"));
        assert_eq!(p("0").eval(&[]).unwrap(), q("0"));
        assert_eq!(p("x + y - 1").eval(&[("x", q("1/2")), ("y", q("1/2"))]).unwrap(), q("0"));
        assert_eq!(
            p("x + y").eval(&[("x", q("1"))]),
            Err(ExactError::MissingAssignment("y".into()))
        );
    }

    #[test]
    fn grlex_printing() {
        assert_eq!(p("1 - y + x^2 - 2*x").to_string(), "x^2 - 2*x - y + 1");
        assert_eq!(p("(x+y)^2").to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(p("t*x - 3/4").to_string(), "t*x - 3/4");
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p("t - x"), &p("t - y"), "t").unwrap(), p("x - y"));
        assert_eq!(resultant(&p("t^2"), &p("t - 1"), "t").unwrap(), p("1"));
        // Common root t = 2.
        assert!(resultant(&p("t^2 - 4"), &p("t - 2"), "t").unwrap().is_zero());
    }

    #[test]
    fn sqrt_of_squares() {
        let base = p("2*x*y + x^2 - y - 2*x + 1");
        let sq = &base * &base;
        let r = sq.sqrt_exact().unwrap();
        assert!(r == base || r == -&base);
        assert_eq!(p("x^2 + 1").sqrt_exact(), None);
        assert_eq!(p("4/9*x^2").sqrt_exact(), Some(p("2/3*x")));
        assert_eq!(p("x*y").sqrt_exact(), None);
    }

    #[test]
    fn derivative_and_coefficients() {
        let f = p("t^3*x + 2*t - y");
        assert_eq!(f.derivative(0), p("3*t^2*x + 2"));
        let c = f.coefficients_in(0);
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], p("-y"));
        assert_eq!(c[3], p("x"));
        assert_eq!(f.compose(0, &p("x + 1")), p("(x+1)^3*x + 2*x + 2 - y"));
    }

    #[test]
    fn embed_into_other_rings() {
        let f = p("x^2*t - 3*y");
        let wider = Poly::ring(&["y", "w", "x", "t"]);
        let g = f.embed(&wider).unwrap();
        assert_eq!(g.to_string(), Poly::parse(&wider, "x^2*t - 3*y").unwrap().to_string());
        assert_eq!(g.embed(&ring()).unwrap(), f);
        assert!(f.embed(&Poly::ring(&["t", "x"])).is_err());
        assert_eq!(p("t + 1").embed(&Poly::ring(&["t"])).unwrap().to_string(), "t + 1");
    }
}
