use super::map::point_order;
use super::{critical_data, evaluate_map, family, RationalError, RationalMap};
use crate::exact::{ExactScalar, ProjectivePoint};

/// Required combinatorics of a map on the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortraitSpec {
    pub degree: u32,
    /// `(p, F(p), local degree at p)`.
    pub arrows: Vec<(ProjectivePoint, ProjectivePoint, u32)>,
    /// The exact set of critical values, if prescribed. `None` inside means
    /// the prescribed value itself is undefined.
    pub critical_values: Option<Vec<Option<ProjectivePoint>>>,
    /// Marked points of the source that must be pairwise distinct.
    pub distinct_sources: Vec<Option<ProjectivePoint>>,
    /// Marked points of the target that must be pairwise distinct.
    pub distinct_targets: Vec<Option<ProjectivePoint>>,
}

fn fin(q: &ExactScalar) -> ProjectivePoint {
    ProjectivePoint::Finite(q.clone())
}

fn int(n: i64) -> ProjectivePoint {
    ProjectivePoint::Finite(ExactScalar::from(n))
}

impl PortraitSpec {
    /// `0 ↦² ∞ ↦ 1 ↦ y`, `x ↦ 0`, `cv = {∞, z}`, `{0,1,∞,x}` and `{0,1,∞,y,z}` distinct.
    pub fn family(x: &ExactScalar, y: &ExactScalar) -> Result<Self, RationalError> {
        let z = family::z_at(x, y)?;
        Ok(Self {
            degree: 2,
            arrows: vec![
                (int(0), ProjectivePoint::Infinity, 2),
                (ProjectivePoint::Infinity, int(1), 1),
                (int(1), fin(y), 1),
                (fin(x), int(0), 1),
            ],
            critical_values: Some(vec![Some(ProjectivePoint::Infinity), z.clone()]),
            distinct_sources: vec![Some(int(0)), Some(int(1)), Some(ProjectivePoint::Infinity), Some(fin(x))],
            distinct_targets: vec![Some(int(0)), Some(int(1)), Some(ProjectivePoint::Infinity), Some(fin(y)), z],
        })
    }

    /// The superattracting cycle `0 ↦² ∞ ↦ 1 ↦ a ↦ 0`.
    pub fn cycle(a: &ExactScalar) -> Self {
        let cyc = vec![Some(int(0)), Some(ProjectivePoint::Infinity), Some(int(1)), Some(fin(a))];
        Self {
            degree: 2,
            arrows: vec![
                (int(0), ProjectivePoint::Infinity, 2),
                (ProjectivePoint::Infinity, int(1), 1),
                (int(1), fin(a), 1),
                (fin(a), int(0), 1),
            ],
            critical_values: None,
            distinct_sources: cyc.clone(),
            distinct_targets: cyc,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortraitCondition {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortraitReport {
    pub conditions: Vec<PortraitCondition>,
}

impl PortraitReport {
    pub fn ok(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.conditions.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect()
    }

    pub fn distinctness_fails(&self) -> bool {
        self.conditions.iter().any(|c| !c.holds && c.name.contains("distinct"))
    }
}

fn show(p: &Option<ProjectivePoint>) -> String {
    p.as_ref().map_or("undefined".to_string(), |p| p.to_string())
}

fn distinct(points: &[Option<ProjectivePoint>]) -> (bool, String) {
    for (i, p) in points.iter().enumerate() {
        let Some(p) = p else {
            return (false, "a marked point is undefined".into());
        };
        for q in points[..i].iter().flatten() {
            if p == q {
                return (false, format!("{p} repeats"));
            }
        }
    }
    (true, "pairwise distinct".into())
}

/// Checks every condition of `spec`, reporting each one.
pub fn verify_portrait(m: &RationalMap, spec: &PortraitSpec) -> Result<PortraitReport, RationalError> {
    let mut conditions = Vec::new();
    let mut push = |name: String, holds: bool, detail: String| conditions.push(PortraitCondition { name, holds, detail });

    let (ok, detail) = distinct(&spec.distinct_sources);
    push("source points distinct".into(), ok, detail);
    let (ok, detail) = distinct(&spec.distinct_targets);
    push("target points distinct".into(), ok, detail);

    let deg = m.reduced_degree()?;
    push(format!("degree {}", spec.degree), deg == spec.degree, format!("degree {deg} after cancellation"));

    let crit = critical_data(m).ok();
    for (p, q, k) in &spec.arrows {
        match evaluate_map(m, p) {
            Ok(v) => push(format!("F({p}) = {q}"), v == *q, format!("F({p}) = {v}")),
            Err(e) => push(format!("F({p}) = {q}"), false, e.to_string()),
        }
        if *k > 1 {
            let have = crit.as_ref().map_or(0, |c| c.multiplicity_at(p)) + 1;
            push(format!("local degree {k} at {p}"), have == *k, format!("local degree {have}"));
        }
    }
    if let Some(want) = &spec.critical_values {
        let name = format!("cv(F) = {{{}}}", want.iter().map(show).collect::<Vec<_>>().join(", "));
        match (&crit, want.iter().cloned().collect::<Option<Vec<_>>>()) {
            (Some(c), Some(mut w)) => {
                w.sort_by(point_order);
                w.dedup();
                let have = c.value_set();
                let detail = format!("cv(F) = {{{}}}", have.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
                push(name, have == w, detail);
            }
            (None, _) => push(name, false, "critical data unavailable".into()),
            (_, None) => push(name, false, "prescribed value undefined".into()),
        }
    }
    Ok(PortraitReport { conditions })
}
