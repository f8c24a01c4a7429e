use std::fmt::Write as _;
use std::sync::Arc;

use super::tracking::sectioned_braid_along;
use super::{Arrangement, ArrangementError, BaseLoop, ExactComplex};
use crate::braid::{artin_action_on, ArtinConvention, BraidWord};
use crate::freegroup::{Alphabet, Endomorphism, FreeWord, Letter};

/// Monodromy of one base loop.
#[derive(Debug, Clone)]
pub struct LoopMonodromy {
    pub label: String,
    pub puncture: ExactComplex,
    /// Braid on all strands, the section strand included.
    pub braid: BraidWord,
    pub action: Endomorphism,
    pub inverse_action: Endomorphism,
}

/// Fiber free group, one base generator per meridian, and the monodromy
/// relations `y⁻¹ x y = φ_y(x)`.
#[derive(Debug, Clone)]
pub struct ZvkPresentation {
    fiber: Arc<Alphabet>,
    base: Arc<Alphabet>,
    loops: Vec<LoopMonodromy>,
    killed: Vec<bool>,
}

/// Based monodromy of a loop as an automorphism of the fiber group.
///
/// With a section strand `b`, the Artin action sends `x_b ↦ W x_b W⁻¹`.
/// Killing `x_b` (the basepoint rides on the section) leaves the
/// images `h̄(x)` and `W̄`, and the based action is `x ↦ W̄⁻¹ h̄(x) W̄`.
pub fn loop_action(
    arr: &Arrangement,
    lp: &BaseLoop,
    convention: ArtinConvention,
) -> Result<(BraidWord, Arc<Alphabet>, Endomorphism), ArrangementError> {
    let (braid, names) = sectioned_braid_along(arr, lp)?;
    let full = Alphabet::new(&names)?;
    let action = artin_action_on(&braid, &full, convention)?;
    let Some(sec) = arr.section() else {
        return Ok((braid, full, action));
    };
    let b = full.index(sec.name()).expect("section strand");
    let fiber_names: Vec<&String> = names.iter().filter(|n| *n != sec.name()).collect();
    let fiber = Alphabet::new(&fiber_names)?;
    let kill_images: Vec<FreeWord> = (0..full.len())
        .map(|g| match fiber.index(full.name(g)) {
            Some(k) => FreeWord::generator(&fiber, k),
            None => FreeWord::identity(&fiber),
        })
        .collect();
    let kill = Endomorphism::new(&full, &fiber, kill_images)?;

    let img = action.image(b);
    let mid = img.len() / 2;
    if img.len() % 2 == 0 || img.letters()[mid] != Letter::pos(b) {
        return Err(ArrangementError::SectionUndefined(format!("section image {img} is not a conjugate")));
    }
    let w = FreeWord::from_letters(&full, img.letters()[..mid].iter().copied());
    let w_bar = kill.apply(&w)?;
    let images = fiber
        .names()
        .iter()
        .map(|n| {
            let h = kill.apply(action.image(full.index(n).expect("fiber name")))?;
            h.conj(&w_bar)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((braid, fiber.clone(), Endomorphism::new(&fiber, &fiber, images)?))
}

/// Assembles the presentation from one labelled meridian per base puncture.
pub fn zvk_presentation(arr: &Arrangement, loops: &[(String, BaseLoop)]) -> Result<ZvkPresentation, ArrangementError> {
    zvk_presentation_with(arr, loops, ArtinConvention::Standard)
}

#[doc(hidden)]
pub fn zvk_presentation_with(
    arr: &Arrangement,
    loops: &[(String, BaseLoop)],
    convention: ArtinConvention,
) -> Result<ZvkPresentation, ArrangementError> {
    let punctures = arr.base_punctures();
    let section_only: Vec<ExactComplex> = arr
        .section_punctures()
        .into_iter()
        .filter(|p| !punctures.contains(p))
        .collect();
    let labels: Vec<&str> = loops.iter().map(|(l, _)| l.as_str()).collect();
    let base = Alphabet::new(&labels)?;

    let mut covered = vec![false; punctures.len()];
    let mut out = Vec::with_capacity(loops.len());
    let mut fiber: Option<Arc<Alphabet>> = None;
    for (label, lp) in loops {
        let mut around = None;
        for (i, p) in punctures.iter().enumerate() {
            match lp.winding_number(p)? {
                0 => {}
                1 if around.is_none() => around = Some(i),
                w => {
                    return Err(ArrangementError::NotMeridian {
                        label: label.clone(),
                        detail: format!("winds {w} times around {p}"),
                    })
                }
            }
        }
        let Some(i) = around else {
            return Err(ArrangementError::NotMeridian {
                label: label.clone(),
                detail: "encloses no puncture".into(),
            });
        };
        if covered[i] {
            return Err(ArrangementError::NotGeometricBasis(format!("two loops around {}", punctures[i])));
        }
        covered[i] = true;
        for p in &section_only {
            if lp.winding_number(p)? != 0 {
                return Err(ArrangementError::SectionUndefined(format!("loop {label} encloses {p}")));
            }
        }

        let (braid, alpha, action) = loop_action(arr, lp, convention)?;
        let (_, _, inverse_action) = loop_action(arr, &lp.reversed(), convention)?;
        match &fiber {
            None => fiber = Some(alpha.clone()),
            Some(f) if f.names() != alpha.names() => {
                return Err(ArrangementError::NotGeometricBasis("loops have different basepoints".into()))
            }
            _ => {}
        }
        let a = action.compose(&inverse_action)?;
        let b = inverse_action.compose(&action)?;
        if !a.is_identity() || !b.is_identity() {
            return Err(ArrangementError::NotAutomorphism(label.clone()));
        }
        out.push(LoopMonodromy {
            label: label.clone(),
            puncture: punctures[i].clone(),
            braid,
            action,
            inverse_action,
        });
    }
    if let Some(i) = covered.iter().position(|c| !c) {
        return Err(ArrangementError::NotGeometricBasis(format!("no loop around {}", punctures[i])));
    }
    let fiber = match fiber {
        Some(f) => f,
        None => {
            let names: Vec<&str> = arr.generic_lines().iter().map(|l| l.name()).collect();
            Alphabet::new(&names)?
        }
    };
    let feet: Vec<ExactComplex> = arr.fiber_feet().into_iter().map(|(_, u)| ExactComplex::real(u)).collect();
    let killed = out.iter().map(|m| !feet.contains(&m.puncture)).collect();
    Ok(ZvkPresentation {
        fiber,
        base,
        loops: out,
        killed,
    })
}

impl ZvkPresentation {
    pub fn fiber_alphabet(&self) -> &Arc<Alphabet> {
        &self.fiber
    }

    pub fn base_alphabet(&self) -> &Arc<Alphabet> {
        &self.base
    }

    pub fn loops(&self) -> &[LoopMonodromy] {
        &self.loops
    }

    pub fn monodromy(&self, base_gen: &str) -> Option<&Endomorphism> {
        self.loops.iter().find(|m| m.label == base_gen).map(|m| &m.action)
    }

    pub fn inverse_monodromy(&self, base_gen: &str) -> Option<&Endomorphism> {
        self.loops.iter().find(|m| m.label == base_gen).map(|m| &m.inverse_action)
    }

    pub fn killed(&self) -> Vec<&str> {
        self.loops
            .iter()
            .zip(&self.killed)
            .filter(|(_, k)| **k)
            .map(|(m, _)| m.label.as_str())
            .collect()
    }

    /// Fiber generators followed by the surviving base generators.
    pub fn generators(&self) -> Arc<Alphabet> {
        let mut names: Vec<&str> = self.fiber.names().iter().map(String::as_str).collect();
        for (m, k) in self.loops.iter().zip(&self.killed) {
            if !k {
                names.push(&m.label);
            }
        }
        Alphabet::new(&names).expect("fiber and base labels are distinct")
    }

    /// Relators `y⁻¹ x y φ_y(x)⁻¹`, with killed `y` set to 1. Trivial ones are dropped.
    pub fn relators(&self) -> Result<Vec<FreeWord>, ArrangementError> {
        let gens = self.generators();
        let mut out = Vec::new();
        for (m, killed) in self.loops.iter().zip(&self.killed) {
            let y = if *killed {
                FreeWord::identity(&gens)
            } else {
                FreeWord::generator(&gens, gens.index(&m.label).expect("base label"))
            };
            for (g, img) in m.action.images().iter().enumerate() {
                let x = FreeWord::generator(&gens, g);
                let rel = x.conj(&y)?.mul(&img.rename_into(&gens)?.inv())?;
                if !rel.is_identity() {
                    out.push(rel);
                }
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "fiber-generators: {}", self.fiber.names().join(" "));
        let _ = writeln!(s, "base-generators: {}", self.base.names().join(" "));
        for m in &self.loops {
            for (g, img) in m.action.images().iter().enumerate() {
                let _ = writeln!(s, "rel {}: {} -> {}", m.label, self.fiber.name(g), img);
            }
        }
        let killed = self.killed();
        let _ = writeln!(s, "killed: {}", if killed.is_empty() { "none".to_string() } else { killed.join(" ") });
        s
    }
}
