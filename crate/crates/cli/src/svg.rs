//! SVG figure of the points and the fitted lines.
//!
//! Fixed 800×600 canvas, one scale for both axes, 5% margin. Y is drawn
//! dotted, X dashed and D solid; a degenerate D fit is a marked centroid.

use std::fmt::Write as _;

use linefit::{FittedLine, Method, NormalLine, OrthogonalFit, Point};

use crate::report::{fmt_short, RunReport};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 0.05;

/// Maps data coordinates onto the canvas with equal scaling on both axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    center: Point,
    scale: f64,
}

impl Viewport {
    pub fn fit(points: impl Iterator<Item = Point>) -> Self {
        let (mut lo, mut hi) = (
            Point::new(f64::INFINITY, f64::INFINITY),
            Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let (dx, dy) = (hi.x - lo.x, hi.y - lo.y);
        let inner_w = WIDTH * (1.0 - 2.0 * MARGIN);
        let inner_h = HEIGHT * (1.0 - 2.0 * MARGIN);
        let sx = if dx > 0.0 {
            inner_w / dx
        } else {
            f64::INFINITY
        };
        let sy = if dy > 0.0 {
            inner_h / dy
        } else {
            f64::INFINITY
        };
        let mut scale = sx.min(sy);
        if !scale.is_finite() {
            // all points coincide
            scale = inner_h / 2.0;
        }
        Viewport {
            center: Point::new((lo.x + hi.x) / 2.0, (lo.y + hi.y) / 2.0),
            scale,
        }
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn to_canvas(&self, p: Point) -> Point {
        Point::new(
            WIDTH / 2.0 + (p.x - self.center.x) * self.scale,
            HEIGHT / 2.0 - (p.y - self.center.y) * self.scale,
        )
    }

    /// The part of `line` inside the canvas, in data coordinates.
    pub fn clip(&self, line: &NormalLine) -> Option<(Point, Point)> {
        let half_w = WIDTH / 2.0 / self.scale;
        let half_h = HEIGHT / 2.0 / self.scale;
        let (a, d) = line.anchor_and_direction();
        let mut t0 = f64::NEG_INFINITY;
        let mut t1 = f64::INFINITY;
        for (a, d, lo, hi) in [
            (a.x, d.x, self.center.x - half_w, self.center.x + half_w),
            (a.y, d.y, self.center.y - half_h, self.center.y + half_h),
        ] {
            if d.abs() < 1e-15 {
                if a < lo || a > hi {
                    return None;
                }
                continue;
            }
            let (u, v) = ((lo - a) / d, (hi - a) / d);
            t0 = t0.max(u.min(v));
            t1 = t1.min(u.max(v));
        }
        (t0 < t1).then(|| {
            (
                Point::new(a.x + t0 * d.x, a.y + t0 * d.y),
                Point::new(a.x + t1 * d.x, a.y + t1 * d.y),
            )
        })
    }
}

fn dash(method: Method) -> &'static str {
    match method {
        Method::Y => r#" stroke-dasharray="2 5" stroke-linecap="round""#,
        Method::X => r#" stroke-dasharray="12 7""#,
        Method::D => "",
    }
}

fn legend_label(method: Method) -> &'static str {
    match method {
        Method::Y => "Y (vertical offsets)",
        Method::X => "X (horizontal offsets)",
        Method::D => "D (perpendicular offsets)",
    }
}

pub fn render_svg(r: &RunReport) -> String {
    let view = Viewport::fit(r.points.points());
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    let mut legend = Vec::new();
    let mut degenerate = None;
    let _ = writeln!(
        out,
        r#"<g class="fits" fill="none" stroke="black" stroke-width="1.5">"#
    );
    for (method, result) in &r.fits {
        let Ok(report) = result else { continue };
        if let FittedLine::Orthogonal(OrthogonalFit::AllLinesThroughCentroid {
            centroid,
            objective,
        }) = report.line
        {
            degenerate = Some((centroid, objective));
            continue;
        }
        let Some((p0, p1)) = report.line.normal_form().and_then(|n| view.clip(&n)) else {
            continue;
        };
        let (a, b) = (view.to_canvas(p0), view.to_canvas(p1));
        let _ = writeln!(
            out,
            r#"  <path class="fit fit-{}" d="M {:.3} {:.3} L {:.3} {:.3}"{}/>"#,
            method.as_str(),
            a.x,
            a.y,
            b.x,
            b.y,
            dash(*method)
        );
        legend.push(*method);
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g class="points" fill="#555555">"##);
    for p in r.points.points() {
        let c = view.to_canvas(p);
        let _ = writeln!(
            out,
            r#"  <circle class="point" cx="{:.3}" cy="{:.3}" r="3"/>"#,
            c.x, c.y
        );
    }
    let _ = writeln!(out, "</g>");

    if let Some((centroid, objective)) = degenerate {
        let c = view.to_canvas(centroid);
        let _ = writeln!(out, r#"<g class="centroid">"#);
        let _ = writeln!(
            out,
            r#"  <rect x="{:.3}" y="{:.3}" width="10" height="10" fill="none" stroke="black" stroke-width="1.5"/>"#,
            c.x - 5.0,
            c.y - 5.0
        );
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12">D: every line through centroid ({}, {}) is optimal, objective {}</text>"#,
            (c.x + 10.0).min(WIDTH - 420.0),
            c.y - 10.0,
            fmt_short(centroid.x),
            fmt_short(centroid.y),
            fmt_short(objective)
        );
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(
        out,
        r#"<g class="legend" font-family="sans-serif" font-size="12" stroke="black" stroke-width="1.5">"#
    );
    for (i, method) in legend.iter().enumerate() {
        let y = 20.0 + 18.0 * i as f64;
        let _ = writeln!(
            out,
            r#"  <line x1="12" y1="{y}" x2="52" y2="{y}"{}/>"#,
            dash(*method)
        );
        let _ = writeln!(
            out,
            r#"  <text x="60" y="{}" stroke="none">{}</text>"#,
            y + 4.0,
            legend_label(*method)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
