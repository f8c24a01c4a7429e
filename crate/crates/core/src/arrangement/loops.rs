use super::{ArrangementError, ExactComplex};
use crate::exact::ExactScalar;

/// A closed polyline in the base starting and ending at the basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseLoop {
    vertices: Vec<ExactComplex>,
}

impl BaseLoop {
    /// `vertices` must start and end at the same point.
    pub fn new(vertices: Vec<ExactComplex>) -> Result<Self, ArrangementError> {
        match (vertices.first(), vertices.last()) {
            (Some(a), Some(b)) if a == b => Ok(Self { vertices }),
            _ => Err(ArrangementError::NotClosed),
        }
    }

    /// Closes `interior` at `basepoint` on both ends.
    pub fn through(basepoint: ExactComplex, interior: Vec<ExactComplex>) -> Self {
        let mut vertices = Vec::with_capacity(interior.len() + 2);
        vertices.push(basepoint.clone());
        vertices.extend(interior);
        vertices.push(basepoint);
        Self { vertices }
    }

    pub fn constant(basepoint: ExactComplex) -> Self {
        Self {
            vertices: vec![basepoint],
        }
    }

    /// Meridian around `puncture`: straight down from the basepoint, across
    /// below the real axis, once counter-clockwise around a square, and back.
    /// The half-width is half the max-norm distance from `puncture` to the
    /// nearest of `avoid` and the basepoint.
    pub fn lasso(basepoint: &ExactComplex, puncture: &ExactComplex, avoid: &[ExactComplex]) -> Result<Self, ArrangementError> {
        let rho = avoid
            .iter()
            .chain(std::iter::once(basepoint))
            .filter(|q| *q != puncture)
            .map(|q| q.linf_dist(puncture))
            .min()
            .ok_or_else(|| ArrangementError::DegenerateInput("lasso needs a reference point".into()))?;
        if rho.is_zero() {
            return Err(ArrangementError::OnPuncture(puncture.to_string()));
        }
        let rho = rho * ExactScalar::frac(1, 2);
        let p = puncture;
        let at = |dr: &ExactScalar, di: &ExactScalar| ExactComplex::new(&p.re + dr, &p.im + di);
        let zero = ExactScalar::zero();
        let neg = -&rho;
        let down = ExactComplex::new(basepoint.re.clone(), &basepoint.im - &rho);
        let bottom = at(&zero, &neg);
        let interior = vec![
            down.clone(),
            bottom.clone(),
            at(&rho, &neg),
            at(&rho, &rho),
            at(&neg, &rho),
            at(&neg, &neg),
            bottom,
            down,
        ];
        Ok(Self::through(basepoint.clone(), interior))
    }

    /// Counter-clockwise square of half-width `radius` centred on 0, reached
    /// straight down from the basepoint. Encloses everything of norm below `radius`.
    pub fn enclosing(basepoint: &ExactComplex, radius: &ExactScalar) -> Self {
        let r = radius.clone();
        let neg = -&r;
        let down = ExactComplex::new(basepoint.re.clone(), neg.clone());
        let interior = vec![
            down.clone(),
            ExactComplex::new(r.clone(), neg.clone()),
            ExactComplex::new(r.clone(), r.clone()),
            ExactComplex::new(neg.clone(), r.clone()),
            ExactComplex::new(neg.clone(), neg),
            down,
        ];
        Self::through(basepoint.clone(), interior)
    }

    pub fn basepoint(&self) -> &ExactComplex {
        &self.vertices[0]
    }

    pub fn vertices(&self) -> &[ExactComplex] {
        &self.vertices
    }

    pub fn segments(&self) -> impl Iterator<Item = (&ExactComplex, &ExactComplex)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    /// Path product: `self` first, then `other`. Basepoints must agree.
    pub fn then(&self, other: &Self) -> Result<Self, ArrangementError> {
        if self.basepoint() != other.basepoint() {
            return Err(ArrangementError::DegenerateInput("loops have different basepoints".into()));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(Self { vertices })
    }

    pub fn passes_through(&self, p: &ExactComplex) -> bool {
        if self.vertices.len() == 1 {
            return &self.vertices[0] == p;
        }
        self.segments().any(|(a, b)| on_segment(a, b, p))
    }

    /// Exact winding number around `p`.
    pub fn winding_number(&self, p: &ExactComplex) -> Result<i64, ArrangementError> {
        if self.passes_through(p) {
            return Err(ArrangementError::OnPuncture(p.to_string()));
        }
        let mut wn = 0;
        for (a, b) in self.segments() {
            let side = (b - a).cross(&(p - a));
            if a.im <= p.im {
                if b.im > p.im && !side.is_negative() && !side.is_zero() {
                    wn += 1;
                }
            } else if b.im <= p.im && side.is_negative() {
                wn -= 1;
            }
        }
        Ok(wn)
    }
}

fn on_segment(a: &ExactComplex, b: &ExactComplex, p: &ExactComplex) -> bool {
    let d = b - a;
    let e = p - a;
    if !d.cross(&e).is_zero() {
        return false;
    }
    let t = d.dot(&e);
    !t.is_negative() && t <= d.dot(&d)
}
