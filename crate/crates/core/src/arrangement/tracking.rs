//! Exact fiber tracking along polyline loops.
//!
//! Over a straight segment `x(t) = p + t·(q − p)` every strand moves affinely,
//! so two strands can only swap left-right order when `Re x(t)` equals the
//! base value where their lines meet. Between such instants the order is
//! constant; at an instant the swapping strands share a real part and the
//! crossing sign is read off their imaginary parts.

use std::collections::BTreeSet;

use super::lines::{Arrangement, Strand};
use super::{ArrangementError, BaseLoop, ExactComplex};
use crate::braid::{BraidLetter, BraidWord};
use crate::exact::ExactScalar;

/// Strand indices sorted by `(Re, Im)` of their position over `x`.
fn order_at(strands: &[Strand], x: &ExactComplex) -> Result<Vec<usize>, ArrangementError> {
    let pos: Vec<ExactComplex> = strands.iter().map(|s| s.at(x)).collect();
    let mut idx: Vec<usize> = (0..strands.len()).collect();
    idx.sort_by(|&i, &j| pos[i].cmp(&pos[j]));
    for w in idx.windows(2) {
        if pos[w[0]] == pos[w[1]] {
            return Err(collision(strands, w[0], w[1], x));
        }
    }
    Ok(idx)
}

fn collision(strands: &[Strand], i: usize, j: usize, x: &ExactComplex) -> ArrangementError {
    ArrangementError::PunctureCollision {
        strands: (strands[i].name.clone(), strands[j].name.clone()),
        at: x.to_string(),
    }
}

/// Moves `cur` to `target` by adjacent swaps, emitting one crossing per swap.
fn transition(
    braid: &mut BraidWord,
    cur: &mut [usize],
    target: &[usize],
    strands: &[Strand],
    at: &ExactComplex,
) -> Result<(), ArrangementError> {
    let mut rank = vec![0; strands.len()];
    for (p, &s) in target.iter().enumerate() {
        rank[s] = p;
    }
    let n = cur.len();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            let (l, r) = (cur[i], cur[i + 1]);
            if rank[l] <= rank[r] {
                continue;
            }
            let (yl, yr) = (strands[l].at(at), strands[r].at(at));
            assert_eq!(yl.re, yr.re, "swap away from a real-part tie");
            if yl.im == yr.im {
                return Err(collision(strands, l, r, at));
            }
            braid.push(BraidLetter {
                index: i + 1,
                inverse: yl.im > yr.im,
            });
            cur.swap(i, i + 1);
            swapped = true;
        }
        if !swapped {
            return Ok(());
        }
    }
}

/// Braid traced by `strands` over `lp`, positions numbered at the basepoint.
pub(crate) fn track(strands: &[Strand], lp: &BaseLoop) -> Result<BraidWord, ArrangementError> {
    let mut crit = BTreeSet::new();
    for (i, s) in strands.iter().enumerate() {
        for (j, t) in strands[..i].iter().enumerate() {
            if let Some(u) = s.meets(t) {
                let x = ExactComplex::real(u.clone());
                if lp.passes_through(&x) {
                    return Err(collision(strands, i, j, &x));
                }
                crit.insert(u);
            }
        }
    }
    let mut braid = BraidWord::identity(strands.len());
    let mut cur = order_at(strands, lp.basepoint())?;
    let half = ExactScalar::frac(1, 2);
    for (p, q) in lp.segments() {
        let d = q - p;
        let mut times = BTreeSet::from([ExactScalar::zero(), ExactScalar::one()]);
        if !d.re.is_zero() {
            for u in &crit {
                let t = (u - &p.re).checked_div(&d.re).expect("nonzero");
                if !t.is_negative() && t < ExactScalar::one() {
                    times.insert(t);
                }
            }
        }
        let times: Vec<ExactScalar> = times.into_iter().collect();
        let point = |t: &ExactScalar| p + &d.scale(t);
        for w in times.windows(2) {
            let start = point(&w[0]);
            let mid = point(&((&w[0] + &w[1]) * &half));
            let end = point(&w[1]);
            transition(&mut braid, &mut cur, &order_at(strands, &mid)?, strands, &start)?;
            transition(&mut braid, &mut cur, &order_at(strands, &end)?, strands, &end)?;
        }
    }
    Ok(braid)
}

/// Braid of the generic-line punctures along `lp`.
pub fn braid_along(arr: &Arrangement, lp: &BaseLoop) -> Result<BraidWord, ArrangementError> {
    track(&arr.strands(), lp)
}

/// Braid including the section strand, with strand names in basepoint order.
pub fn sectioned_braid_along(arr: &Arrangement, lp: &BaseLoop) -> Result<(BraidWord, Vec<String>), ArrangementError> {
    let mut strands = arr.strands();
    strands.extend(arr.section_strand());
    let names = order_at(&strands, lp.basepoint())?
        .into_iter()
        .map(|i| strands[i].name.clone())
        .collect();
    Ok((track(&strands, lp)?, names))
}
