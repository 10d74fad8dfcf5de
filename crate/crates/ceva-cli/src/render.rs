//! Deterministic SVG figures: the base triangle with cevian-triangle
//! overlays. No timestamps, fixed 12-significant-digit coordinates, so equal
//! inputs give byte-identical documents.

use ceva::operator::apply;
use ceva::oracle::{self, PlanarTriangle, Vec2};
use ceva::{ExtReal, Triangle};
use std::fmt::Write;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Rounds to 12 significant digits; the shortest decimal form of the rounded
/// value is then stable across runs.
fn sig12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let exp = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(11 - exp);
    (x * scale).round() / scale
}

fn num(x: f64) -> String {
    format!("{}", sig12(x))
}

/// Flips into SVG's y-down convention.
fn point(p: Vec2) -> (f64, f64) {
    (p.x, -p.y)
}

fn polygon(out: &mut String, tri: &PlanarTriangle, stroke: &str, width: f64, dash: Option<f64>) {
    let pts = [point(tri.a), point(tri.b), point(tri.c)]
        .map(|(x, y)| format!("{},{}", num(x), num(y)))
        .join(" ");
    let dash_attr = match dash {
        Some(d) => format!(" stroke-dasharray=\"{}\"", num(d)),
        None => String::new(),
    };
    writeln!(
        out,
        "  <polygon points=\"{pts}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\"{dash_attr}/>",
        num(width)
    )
    .expect("writing to string");
}

fn label(out: &mut String, at: Vec2, size: f64, fill: &str, text: &str) {
    let (x, y) = point(at);
    writeln!(
        out,
        "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"monospace\" fill=\"{fill}\">{text}</text>",
        num(x),
        num(y),
        num(size)
    )
    .expect("writing to string");
}

/// The full document: base triangle plus one overlay per parameter.
/// Parameters inside (0, 1) are drawn in place via the parallelogram
/// construction; everything else is anchored at the origin like the base.
pub fn render(t: &Triangle, rhos: &[ExtReal]) -> String {
    let base = oracle::embed(t);

    // view box: base bounding box with a 10% margin
    let xs = [base.a.x, base.b.x, base.c.x];
    let ys = [base.a.y, base.b.y, base.c.y];
    let (min_x, max_x) = (xs.iter().cloned().fold(f64::MAX, f64::min), xs.iter().cloned().fold(f64::MIN, f64::max));
    let (min_y, max_y) = (ys.iter().cloned().fold(f64::MAX, f64::min), ys.iter().cloned().fold(f64::MIN, f64::max));
    let (w, h) = (max_x - min_x, max_y - min_y);
    let pad = 0.1 * w.max(h);
    let view = (min_x - pad, -(max_y + pad), w + 2.0 * pad, h + 2.0 * pad);

    let scale = w.max(h);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(view.0),
        num(view.1),
        num(view.2),
        num(view.3)
    )
    .expect("writing to string");

    polygon(&mut out, &base, "#000000", 0.008 * scale, None);
    label(&mut out, base.b, 0.045 * scale, "#000000", "T");

    for (i, &rho) in rhos.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let overlay = match rho {
            ExtReal::Finite(r) if r > 0.0 && r < 1.0 => oracle::parallelogram_copy(&base, r),
            _ => oracle::embed(&apply(t, rho)),
        };
        polygon(&mut out, &overlay, color, 0.006 * scale, Some(0.025 * scale));
        label(&mut out, overlay.c, 0.04 * scale, color, &format!("C_{rho}"));
    }

    out.push_str("</svg>\n");
    out
}
