use std::fmt::Write as _;
use std::path::Path;

use super::RationalError;
use crate::exact::{ExactScalar, Poly};

/// The eight polynomials in `(x, y)` cutting out the forbidden set.
#[derive(Debug, Clone)]
pub struct DeltaSet {
    conditions: Vec<(String, Poly)>,
}

pub const DELTA_CONDITIONS: [&str; 8] = [
    "x",
    "y",
    "y - 1",
    "x - 1",
    "y - 1 + x",
    "x^2 - y - 2*x + 1",
    "x^2 + y - 1",
    "2*x*y + x^2 - y - 2*x + 1",
];

impl DeltaSet {
    pub fn new() -> Self {
        let ring = Poly::ring(&["x", "y"]);
        let conditions = DELTA_CONDITIONS
            .iter()
            .map(|s| (format!("{s} = 0"), Poly::parse(&ring, s).expect("fixed polynomial")))
            .collect();
        Self { conditions }
    }

    pub fn conditions(&self) -> &[(String, Poly)] {
        &self.conditions
    }

    /// Names of the conditions that vanish at `(x, y)`.
    pub fn violated(&self, x: &ExactScalar, y: &ExactScalar) -> Vec<&str> {
        let at = [("x", x.clone()), ("y", y.clone())];
        self.conditions
            .iter()
            .filter(|(_, p)| p.eval(&at).expect("x and y given").is_zero())
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

impl Default for DeltaSet {
    fn default() -> Self {
        Self::new()
    }
}

/// `Some(first violated condition)` when `(x, y)` lies in the forbidden set.
pub fn delta_contains(x: &ExactScalar, y: &ExactScalar) -> Option<String> {
    DeltaSet::new().violated(x, y).first().map(|s| s.to_string())
}

/// Plot window `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotWindow {
    pub x0: ExactScalar,
    pub x1: ExactScalar,
    pub y0: ExactScalar,
    pub y1: ExactScalar,
}

impl PlotWindow {
    pub fn new(x0: ExactScalar, x1: ExactScalar, y0: ExactScalar, y1: ExactScalar) -> Self {
        Self { x0, x1, y0, y1 }
    }

    pub fn is_empty(&self) -> bool {
        self.x0 >= self.x1 || self.y0 >= self.y1
    }

    pub fn contains(&self, x: &ExactScalar, y: &ExactScalar) -> bool {
        self.x0 <= *x && *x <= self.x1 && self.y0 <= *y && *y <= self.y1
    }
}

enum Curve {
    Vertical(f64),
    Graph(fn(f64) -> f64),
}

const SIZE: f64 = 600.0;
const SAMPLES: usize = 800;

fn curves() -> Vec<(&'static str, &'static str, Curve)> {
    vec![
        ("x = 0", "#d62728", Curve::Vertical(0.0)),
        ("y = 0", "#1f77b4", Curve::Graph(|_| 0.0)),
        ("y = 1", "#2ca02c", Curve::Graph(|_| 1.0)),
        ("x = 1", "#ff7f0e", Curve::Vertical(1.0)),
        ("y - 1 + x = 0", "#9467bd", Curve::Graph(|x| 1.0 - x)),
        ("x^2 - y - 2x + 1 = 0", "#8c564b", Curve::Graph(|x| (x - 1.0) * (x - 1.0))),
        ("x^2 + y - 1 = 0", "#e377c2", Curve::Graph(|x| 1.0 - x * x)),
        ("2xy + x^2 - y - 2x + 1 = 0", "#17becf", Curve::Graph(|x| -(x - 1.0) * (x - 1.0) / (2.0 * x - 1.0))),
        ("diagonal", "#000000", Curve::Graph(|x| x)),
    ]
}

/// SVG of the real loci of the forbidden set and the diagonal. Sampled in
/// floating point; for display only.
pub fn render_delta_svg(window: &PlotWindow) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    if window.is_empty() {
        s.push_str("</svg>\n");
        return s;
    }
    let (x0, x1, y0, y1) = (window.x0.to_f64(), window.x1.to_f64(), window.y0.to_f64(), window.y1.to_f64());
    let px = |x: f64| (x - x0) / (x1 - x0) * SIZE;
    let py = |y: f64| SIZE - (y - y0) / (y1 - y0) * SIZE;
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##);
    for (label, color, curve) in curves() {
        let _ = writeln!(s, r#"<g class="curve" data-label="{label}" stroke="{color}" fill="none"><title>{label}</title>"#);
        let mut runs: Vec<Vec<(f64, f64)>> = Vec::new();
        match curve {
            Curve::Vertical(c) => {
                if x0 <= c && c <= x1 {
                    runs.push(vec![(c, y0), (c, y1)]);
                }
            }
            Curve::Graph(g) => {
                let mut run = Vec::new();
                for i in 0..=SAMPLES {
                    let x = x0 + (x1 - x0) * i as f64 / SAMPLES as f64;
                    let y = g(x);
                    if y.is_finite() && y0 <= y && y <= y1 {
                        run.push((x, y));
                    } else if !run.is_empty() {
                        runs.push(std::mem::take(&mut run));
                    }
                }
                if !run.is_empty() {
                    runs.push(run);
                }
            }
        }
        for run in runs.iter().filter(|r| r.len() > 1) {
            let pts: Vec<String> = run.iter().map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
            let _ = writeln!(s, r#"<polyline stroke-width="2" points="{}"/>"#, pts.join(" "));
        }
        s.push_str("</g>\n");
    }
    let b = ExactScalar::frac(3, 4);
    if window.contains(&b, &b) {
        let _ = writeln!(
            s,
            r##"<circle class="basepoint" cx="{:.2}" cy="{:.2}" r="5" fill="#000000"><title>basepoint (3/4, 3/4)</title></circle>"##,
            px(0.75),
            py(0.75)
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn plot_delta(window: &PlotWindow, out: &Path) -> Result<String, RationalError> {
    let svg = render_delta_svg(window);
    std::fs::write(out, &svg).map_err(|e| RationalError::Io(format!("{}: {e}", out.display())))?;
    Ok(svg)
}
