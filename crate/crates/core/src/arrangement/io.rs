//! Text formats.
//!
//! Arrangement file, one item per line, `#` starts a comment:
//!
//! ```text
//! project x
//! R1 1 0 1        # name a b c  for  a*x + b*y = c
//! section d -1 1 0
//! ```
//!
//! Loop file: `basepoint re im`, then any number of `loop <label>` blocks
//! (one `re im` vertex per line, the basepoint implied at both ends) or
//! `lasso <label> re im` meridians around a puncture.

use super::{Arrangement, ArrangementError, BaseLoop, ExactComplex, Line, Projection};
use crate::exact::ExactScalar;

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn err(line: usize, msg: impl Into<String>) -> ArrangementError {
    ArrangementError::Parse {
        line,
        msg: msg.into(),
    }
}

fn scalar(tok: &str, line: usize) -> Result<ExactScalar, ArrangementError> {
    tok.parse().map_err(|_| err(line, format!("bad rational {tok:?}")))
}

fn point(toks: &[&str], line: usize) -> Result<ExactComplex, ArrangementError> {
    match toks {
        [re, im] => Ok(ExactComplex::new(scalar(re, line)?, scalar(im, line)?)),
        _ => Err(err(line, "expected `re im`")),
    }
}

pub fn parse_arrangement(src: &str) -> Result<Arrangement, ArrangementError> {
    let mut projection = None;
    let mut lines = Vec::new();
    let mut section = None;
    for (no, raw) in src.lines().enumerate() {
        let no = no + 1;
        let toks: Vec<&str> = strip(raw).split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["project", axis] => {
                let p = match *axis {
                    "x" => Projection::X,
                    "y" => Projection::Y,
                    _ => return Err(err(no, format!("unknown axis {axis:?}"))),
                };
                if projection.replace(p).is_some() {
                    return Err(err(no, "projection given twice"));
                }
            }
            ["section", name, a, b, c] => {
                let l = Line::new(name, scalar(a, no)?, scalar(b, no)?, scalar(c, no)?)?;
                if section.replace(l).is_some() {
                    return Err(err(no, "section given twice"));
                }
            }
            [name, a, b, c] => lines.push(Line::new(name, scalar(a, no)?, scalar(b, no)?, scalar(c, no)?)?),
            _ => return Err(err(no, format!("cannot parse {:?}", raw.trim()))),
        }
    }
    let arr = Arrangement::new(lines, projection.unwrap_or_default())?;
    match section {
        Some(s) => arr.with_section(s),
        None => Ok(arr),
    }
}

/// Lassos are built against `arr.avoid_points()`.
pub fn parse_loops(src: &str, arr: &Arrangement) -> Result<Vec<(String, BaseLoop)>, ArrangementError> {
    let mut basepoint: Option<ExactComplex> = None;
    let mut out: Vec<(String, BaseLoop)> = Vec::new();
    let mut open: Option<(String, Vec<ExactComplex>)> = None;
    let close = |open: &mut Option<(String, Vec<ExactComplex>)>, out: &mut Vec<(String, BaseLoop)>, bp: &ExactComplex| {
        if let Some((label, pts)) = open.take() {
            out.push((label, BaseLoop::through(bp.clone(), pts)));
        }
    };
    for (no, raw) in src.lines().enumerate() {
        let no = no + 1;
        let toks: Vec<&str> = strip(raw).split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["basepoint", rest @ ..] => {
                if basepoint.is_some() {
                    return Err(err(no, "basepoint given twice"));
                }
                basepoint = Some(point(rest, no)?);
            }
            [kw, label, rest @ ..] if *kw == "loop" || *kw == "lasso" => {
                let bp = basepoint.clone().ok_or_else(|| err(no, "basepoint must come first"))?;
                close(&mut open, &mut out, &bp);
                if *kw == "loop" {
                    if !rest.is_empty() {
                        return Err(err(no, "`loop` takes only a label"));
                    }
                    open = Some((label.to_string(), Vec::new()));
                } else {
                    let p = point(rest, no)?;
                    out.push((label.to_string(), BaseLoop::lasso(&bp, &p, &arr.avoid_points())?));
                }
            }
            [_, _] => match open.as_mut() {
                Some((_, pts)) => pts.push(point(&toks, no)?),
                None => return Err(err(no, "vertex outside a loop block")),
            },
            _ => return Err(err(no, format!("cannot parse {:?}", raw.trim()))),
        }
    }
    if let Some(bp) = &basepoint {
        close(&mut open, &mut out, bp);
    }
    Ok(out)
}
