//! SVG drawing of a special polygon in the upper half plane.

use std::fmt::Write;

use crate::geometry::{ArcEnd, ArcKind};
use crate::symbol::{FareySymbol, Pairing};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 30.0;

struct Frame {
    x_min: f64,
    scale: f64,
    baseline: f64,
    top: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x_min) * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        self.baseline - y * self.scale
    }
}

fn colour(p: Pairing) -> String {
    match p {
        Pairing::Even => "#1f6fb2".into(),
        Pairing::Odd => "#c0392b".into(),
        Pairing::Free(n) => format!("hsl({}, 60%, 40%)", (n as u64 * 137) % 360),
    }
}

/// Path from `p` to `q` (either may be `None` for `∞`) along their geodesic.
fn geodesic(fr: &Frame, p: Option<(f64, f64)>, q: Option<(f64, f64)>) -> String {
    match (p, q) {
        (None, None) => String::new(),
        (Some((x, y)), None) | (None, Some((x, y))) => {
            format!(
                "M {:.2} {:.2} L {:.2} {:.2}",
                fr.px(x),
                fr.py(y),
                fr.px(x),
                fr.top
            )
        }
        (Some((x1, y1)), Some((x2, y2))) => {
            if (x1 - x2).abs() < 1e-12 {
                return format!(
                    "M {:.2} {:.2} L {:.2} {:.2}",
                    fr.px(x1),
                    fr.py(y1),
                    fr.px(x2),
                    fr.py(y2)
                );
            }
            // centre on the real axis equidistant from both points
            let c = (x2 * x2 + y2 * y2 - x1 * x1 - y1 * y1) / (2.0 * (x2 - x1));
            let r = ((x1 - c).powi(2) + y1 * y1).sqrt() * fr.scale;
            let sweep = u8::from(x1 < x2);
            format!(
                "M {:.2} {:.2} A {r:.2} {r:.2} 0 0 {sweep} {:.2} {:.2}",
                fr.px(x1),
                fr.py(y1),
                fr.px(x2),
                fr.py(y2)
            )
        }
    }
}

pub fn render_svg(f: &FareySymbol) -> String {
    let v = f.vertices();
    let (lo, hi) = (v[0].to_f64() - 1.0, v[v.len() - 1].to_f64() + 1.0);
    let scale = (WIDTH - 2.0 * MARGIN) / (hi - lo);
    let geometry = f.geometry();
    let max_radius = f
        .pairings()
        .iter()
        .enumerate()
        .filter_map(|(k, _)| {
            let (x, y) = f.edge(k);
            (x.is_finite() && y.is_finite()).then(|| (y.to_f64() - x.to_f64()) / 2.0)
        })
        .fold(1.0f64, f64::max);
    let height = (max_radius * 1.3 * scale).clamp(200.0, 600.0) + 2.0 * MARGIN;
    let fr = Frame {
        x_min: lo,
        scale,
        baseline: height - MARGIN,
        top: MARGIN / 2.0,
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {height:.0}" width="{WIDTH}" height="{height:.0}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        out,
        r##"<rect width="100%" height="100%" fill="#fdfdfb"/>"##
    );
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{b:.2}" x2="{WIDTH}" y2="{b:.2}" stroke="#999"/>"##,
        b = fr.baseline
    );
    for arc in &geometry.arcs {
        let d = geodesic(&fr, arc.from.to_point(), arc.to.to_point());
        let dash = if arc.kind == ArcKind::Odd {
            r#" stroke-dasharray="6 3""#
        } else {
            ""
        };
        let _ = writeln!(
            out,
            r#"<path d="{d}" fill="none" stroke="{}" stroke-width="2"{dash}><title>edge {} ({})</title></path>"#,
            colour(arc.pairing),
            arc.edge,
            arc.pairing
        );
        if let ArcEnd::RhoImage(_) = arc.to {
            if let Some((x, y)) = arc.to.to_point() {
                let _ = writeln!(
                    out,
                    r##"<circle cx="{:.2}" cy="{:.2}" r="3" fill="#c0392b"/>"##,
                    fr.px(x),
                    fr.py(y)
                );
            }
        }
    }
    for (k, &p) in f.pairings().iter().enumerate() {
        let (x, y) = f.edge(k);
        let (lx, ly) = match (x.is_finite(), y.is_finite()) {
            (true, true) => {
                let (a, b) = (x.to_f64(), y.to_f64());
                ((a + b) / 2.0, (b - a) / 2.0)
            }
            (false, _) => (y.to_f64(), 1.5),
            (_, false) => (x.to_f64(), 1.5),
        };
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" fill="{}">{p}</text>"#,
            fr.px(lx) + 6.0,
            fr.py(ly).max(fr.top + 12.0) - 4.0,
            colour(p)
        );
    }
    for x in v {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{x}</text>"#,
            fr.px(x.to_f64()),
            fr.baseline + 16.0
        );
    }
    out.push_str("</svg>\n");
    out
}
