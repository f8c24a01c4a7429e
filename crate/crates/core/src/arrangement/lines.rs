use std::collections::BTreeSet;
use std::fmt;

use super::{ArrangementError, ExactComplex};
use crate::exact::ExactScalar;

/// Which coordinate the arrangement is projected onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Projection {
    #[default]
    X,
    Y,
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Projection::X => "x",
            Projection::Y => "y",
        })
    }
}

/// `a·x + b·y = c`, normalized so the first nonzero of `(a, b)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    name: String,
    a: ExactScalar,
    b: ExactScalar,
    c: ExactScalar,
}

impl Line {
    pub fn new(name: &str, a: ExactScalar, b: ExactScalar, c: ExactScalar) -> Result<Self, ArrangementError> {
        if name.is_empty() || name.contains(char::is_whitespace) || name.contains('^') {
            return Err(ArrangementError::DegenerateInput(format!("bad line name {name:?}")));
        }
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(ArrangementError::DegenerateInput(format!("line {name} has a = b = 0")));
        };
        let k = lead.recip().expect("nonzero");
        Ok(Self {
            name: name.to_string(),
            a: &a * &k,
            b: &b * &k,
            c: &c * &k,
        })
    }

    pub fn from_ints(name: &str, a: i64, b: i64, c: i64) -> Result<Self, ArrangementError> {
        Self::new(name, a.into(), b.into(), c.into())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficients(&self) -> (&ExactScalar, &ExactScalar, &ExactScalar) {
        (&self.a, &self.b, &self.c)
    }

    /// Coefficients with the projected coordinate first.
    fn oriented(&self, proj: Projection) -> (&ExactScalar, &ExactScalar, &ExactScalar) {
        match proj {
            Projection::X => (&self.a, &self.b, &self.c),
            Projection::Y => (&self.b, &self.a, &self.c),
        }
    }

    /// Vertical with respect to the projection: a union of fibers.
    pub fn is_vertical(&self, proj: Projection) -> bool {
        self.oriented(proj).1.is_zero()
    }

    /// `(slope, intercept)` of `v = slope·u + intercept` in projected coordinates.
    pub(crate) fn graph(&self, proj: Projection) -> Option<(ExactScalar, ExactScalar)> {
        let (a, b, c) = self.oriented(proj);
        let binv = b.recip().ok()?;
        Some((-(a * &binv), c * &binv))
    }

    /// Base value of a vertical line.
    pub(crate) fn foot(&self, proj: Projection) -> Option<ExactScalar> {
        let (a, b, c) = self.oriented(proj);
        if !b.is_zero() {
            return None;
        }
        Some(c.checked_div(a).expect("normalized line"))
    }

    fn same_locus(&self, other: &Line) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (coef, var) in [(&self.a, "x"), (&self.b, "y")] {
            if coef.is_zero() {
                continue;
            }
            let term = if coef.is_one() {
                var.to_string()
            } else if (-coef).is_one() {
                format!("-{var}")
            } else {
                format!("{coef}*{var}")
            };
            parts.push(term);
        }
        let mut lhs = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => lhs.push_str(&format!(" - {rest}")),
                None => lhs.push_str(&format!(" + {p}")),
            }
        }
        write!(f, "{}: {} = {}", self.name, lhs, self.c)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One fiber puncture, a strand of the braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Strand {
    pub name: String,
    pub slope: ExactScalar,
    pub intercept: ExactScalar,
}

impl Strand {
    pub fn at(&self, x: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.intercept + &self.slope * &x.re, &self.slope * &x.im)
    }

    /// Base value where two strands meet, if they are not parallel.
    pub fn meets(&self, other: &Strand) -> Option<ExactScalar> {
        let dm = &self.slope - &other.slope;
        let dk = &other.intercept - &self.intercept;
        dk.checked_div(&dm).ok()
    }
}

/// Generic lines `L`, fiber lines `J` and an optional section of the projection.
#[derive(Debug, Clone)]
pub struct Arrangement {
    projection: Projection,
    generic: Vec<Line>,
    fibers: Vec<Line>,
    section: Option<Line>,
}

impl Arrangement {
    /// Splits `lines` into generic and vertical lines for `projection`.
    pub fn new(lines: Vec<Line>, projection: Projection) -> Result<Self, ArrangementError> {
        let (fibers, generic): (Vec<Line>, Vec<Line>) = lines.into_iter().partition(|l| l.is_vertical(projection));
        Self::with_parts(generic, fibers, projection)
    }

    /// Explicit `L` and `J`. A vertical line in `L` is a degenerate projection.
    pub fn with_parts(generic: Vec<Line>, fibers: Vec<Line>, projection: Projection) -> Result<Self, ArrangementError> {
        if generic.is_empty() {
            return Err(ArrangementError::DegenerateInput("no generic lines".into()));
        }
        if let Some(l) = generic.iter().find(|l| l.is_vertical(projection)) {
            return Err(ArrangementError::DegenerateProjection(l.name().to_string()));
        }
        if let Some(l) = fibers.iter().find(|l| !l.is_vertical(projection)) {
            return Err(ArrangementError::DegenerateInput(format!("{} is not a fiber of the projection", l.name())));
        }
        let all: Vec<&Line> = generic.iter().chain(&fibers).collect();
        for (i, l) in all.iter().enumerate() {
            for m in &all[..i] {
                if m.name == l.name {
                    return Err(ArrangementError::DegenerateInput(format!("duplicate name {}", l.name)));
                }
                if m.same_locus(l) {
                    return Err(ArrangementError::DegenerateInput(format!("{} and {} coincide", m.name, l.name)));
                }
            }
        }
        Ok(Self {
            projection,
            generic,
            fibers,
            section: None,
        })
    }

    /// Adds a section: the fiber basepoint travels along this non-vertical line.
    pub fn with_section(mut self, section: Line) -> Result<Self, ArrangementError> {
        if section.is_vertical(self.projection) {
            return Err(ArrangementError::DegenerateProjection(section.name().to_string()));
        }
        for l in self.generic.iter().chain(&self.fibers) {
            if l.name == section.name {
                return Err(ArrangementError::DegenerateInput(format!("duplicate name {}", l.name)));
            }
            if l.same_locus(&section) {
                return Err(ArrangementError::DegenerateInput(format!("section coincides with {}", l.name)));
            }
        }
        self.section = Some(section);
        Ok(self)
    }

    pub fn projection(&self) -> Projection {
        self.projection
    }

    pub fn generic_lines(&self) -> &[Line] {
        &self.generic
    }

    pub fn fiber_lines(&self) -> &[Line] {
        &self.fibers
    }

    pub fn section(&self) -> Option<&Line> {
        self.section.as_ref()
    }

    /// The same arrangement without its section.
    pub fn without_section(&self) -> Self {
        Self {
            section: None,
            ..self.clone()
        }
    }

    pub(crate) fn strands(&self) -> Vec<Strand> {
        self.generic.iter().map(|l| self.strand_of(l)).collect()
    }

    pub(crate) fn section_strand(&self) -> Option<Strand> {
        self.section.as_ref().map(|l| self.strand_of(l))
    }

    fn strand_of(&self, l: &Line) -> Strand {
        let (slope, intercept) = l.graph(self.projection).expect("generic line");
        Strand {
            name: l.name.clone(),
            slope,
            intercept,
        }
    }

    /// Base values of fiber lines, with the line names.
    pub fn fiber_feet(&self) -> Vec<(String, ExactScalar)> {
        self.fibers
            .iter()
            .map(|l| (l.name.clone(), l.foot(self.projection).expect("vertical")))
            .collect()
    }

    /// Images of the pairwise intersections of `L` together with the feet of `J`.
    pub fn base_punctures(&self) -> Vec<ExactComplex> {
        let strands = self.strands();
        let mut out = BTreeSet::new();
        for (i, s) in strands.iter().enumerate() {
            for t in &strands[..i] {
                if let Some(u) = s.meets(t) {
                    out.insert(u);
                }
            }
        }
        out.extend(self.fiber_feet().into_iter().map(|(_, u)| u));
        out.into_iter().map(ExactComplex::real).collect()
    }

    /// Base values where the section meets a generic line.
    pub fn section_punctures(&self) -> Vec<ExactComplex> {
        let Some(sec) = self.section_strand() else {
            return Vec::new();
        };
        let out: BTreeSet<ExactScalar> = self.strands().iter().filter_map(|s| s.meets(&sec)).collect();
        out.into_iter().map(ExactComplex::real).collect()
    }

    /// Every point a loop in the base must avoid.
    pub fn avoid_points(&self) -> Vec<ExactComplex> {
        let mut all: BTreeSet<ExactComplex> = self.base_punctures().into_iter().collect();
        all.extend(self.section_punctures());
        all.into_iter().collect()
    }

    /// Fiber punctures over `x`, sorted by real part then imaginary part.
    pub fn fiber_punctures(&self, x: &ExactComplex) -> Result<Vec<(String, ExactComplex)>, ArrangementError> {
        if self.base_punctures().contains(x) {
            return Err(ArrangementError::OnPuncture(x.to_string()));
        }
        let mut pts: Vec<(String, ExactComplex)> = self.strands().iter().map(|s| (s.name.clone(), s.at(x))).collect();
        pts.sort_by(|p, q| p.1.cmp(&q.1));
        Ok(pts)
    }
}
