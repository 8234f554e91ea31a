//! Rigid motions of point sets and lines, and the fit-then-move versus
//! move-then-fit comparison used to check invariance of each method.

use crate::error::{Error, Result};
use crate::fit::{fit, FitReport, FittedLine, Method, OrthogonalFit};
use crate::geometry::{NormalLine, Point};
use crate::stats::{summarize, PairedSample};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RigidMotion {
    /// `(x, y) ↦ (x + u, y + v)`.
    Translation { u: f64, v: f64 },
    /// Counter-clockwise rotation by `phi` radians about `center`.
    Rotation { phi: f64, center: Point },
}

impl RigidMotion {
    pub fn rotation_about_origin(phi: f64) -> Self {
        RigidMotion::Rotation {
            phi,
            center: Point::new(0.0, 0.0),
        }
    }

    /// Rotation about the sample centroid, the default center.
    pub fn rotation_about_centroid(phi: f64, p: &PairedSample) -> Self {
        RigidMotion::Rotation {
            phi,
            center: summarize(p).centroid(),
        }
    }

    pub fn inverse(&self) -> Self {
        match *self {
            RigidMotion::Translation { u, v } => RigidMotion::Translation { u: -u, v: -v },
            RigidMotion::Rotation { phi, center } => RigidMotion::Rotation { phi: -phi, center },
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        match *self {
            RigidMotion::Translation { u, v } => Point::new(p.x + u, p.y + v),
            RigidMotion::Rotation { phi, center } => {
                let (s, c) = phi.sin_cos();
                let (dx, dy) = (p.x - center.x, p.y - center.y);
                Point::new(center.x + c * dx - s * dy, center.y + s * dx + c * dy)
            }
        }
    }
}

pub fn apply_motion_points(p: &PairedSample, g: &RigidMotion) -> PairedSample {
    let moved: Vec<Point> = p.points().map(|q| g.apply(q)).collect();
    PairedSample::from_points(&moved).expect("rigid motion of a valid sample stays valid")
}

fn translate_line(line: &NormalLine, u: f64, v: f64) -> NormalLine {
    let (s, c) = line.theta().sin_cos();
    NormalLine::new(line.theta(), line.c() + u * s - v * c).expect("finite line")
}

/// Image of `line` under `g`, canonicalised.
pub fn transform_line(line: &NormalLine, g: &RigidMotion) -> NormalLine {
    match *g {
        RigidMotion::Translation { u, v } => translate_line(line, u, v),
        RigidMotion::Rotation { phi, center } => {
            // about the origin the offset is unchanged and θ' = θ + φ
            let at_origin = translate_line(line, -center.x, -center.y);
            let rotated =
                NormalLine::new(at_origin.theta() + phi, at_origin.c()).expect("finite line");
            translate_line(&rotated, center.x, center.y)
        }
    }
}

/// Moves a fit result by `g`, re-expressed in the method's own representation.
pub fn transform_fitted_line(line: &FittedLine, g: &RigidMotion) -> Result<FittedLine> {
    match line {
        FittedLine::Orthogonal(OrthogonalFit::AllLinesThroughCentroid {
            centroid,
            objective,
        }) => Ok(FittedLine::Orthogonal(
            OrthogonalFit::AllLinesThroughCentroid {
                centroid: g.apply(*centroid),
                objective: *objective,
            },
        )),
        FittedLine::Orthogonal(OrthogonalFit::UniqueLine { line, case }) => {
            Ok(FittedLine::Orthogonal(OrthogonalFit::UniqueLine {
                line: transform_line(line, g),
                case: *case,
            }))
        }
        FittedLine::SlopeIntercept(l) => transform_line(&l.to_normal(), g)
            .to_slope_intercept()
            .map(FittedLine::SlopeIntercept),
        FittedLine::InverseSlope(l) => transform_line(&l.to_normal(), g)
            .to_inverse_slope()
            .map(FittedLine::InverseSlope),
    }
}

/// `|sin(θ₁ − θ₂)| + |c₁ − ±c₂|`, the sign of `c₂` following the orientation of the two normals.
pub fn line_discrepancy(a: &NormalLine, b: &NormalLine) -> f64 {
    let delta = a.theta() - b.theta();
    let c2 = if delta.cos() < 0.0 { -b.c() } else { b.c() };
    delta.sin().abs() + (a.c() - c2).abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Discrepancy {
    Measured(f64),
    /// The moved line cannot be written in the method's form (vertical for Y, horizontal for X).
    ExpectedNotRepresentable,
    /// One side is a unique line and the other the degenerate line family.
    KindMismatch,
    /// The method's fit does not exist on the original or the moved data.
    FitUnavailable,
}

impl Discrepancy {
    pub fn value(&self) -> Option<f64> {
        match self {
            Discrepancy::Measured(v) => Some(*v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceReport {
    pub method: Method,
    pub motion: RigidMotion,
    /// Fit of the moved data.
    pub line_from_transformed_data: Result<FittedLine>,
    /// Original fit moved by the motion; what an invariant method would produce.
    pub expected_if_invariant: Result<FittedLine>,
    pub discrepancy: Discrepancy,
}

impl InvarianceReport {
    pub fn is_invariant_within(&self, tol: f64) -> bool {
        matches!(self.discrepancy, Discrepancy::Measured(d) if d < tol)
    }
}

pub fn invariance_report(p: &PairedSample, g: &RigidMotion, method: Method) -> InvarianceReport {
    let moved = apply_motion_points(p, g);
    let actual = fit(&moved, method).map(|r: FitReport| r.line);
    let original = fit(p, method).map(|r| r.line);
    let expected = original
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|l| transform_fitted_line(l, g));

    let discrepancy = match (&original, &expected, &actual) {
        (Err(_), _, _) | (_, _, Err(_)) => Discrepancy::FitUnavailable,
        (Ok(_), Err(Error::NotRepresentable(_)), _) => Discrepancy::ExpectedNotRepresentable,
        (Ok(_), Err(_), _) => Discrepancy::FitUnavailable,
        (Ok(_), Ok(exp), Ok(act)) => compare(exp, act),
    };

    InvarianceReport {
        method,
        motion: *g,
        line_from_transformed_data: actual,
        expected_if_invariant: expected,
        discrepancy,
    }
}

fn compare(expected: &FittedLine, actual: &FittedLine) -> Discrepancy {
    use OrthogonalFit::AllLinesThroughCentroid as Pencil;
    match (expected, actual) {
        (
            FittedLine::Orthogonal(Pencil { centroid: a, .. }),
            FittedLine::Orthogonal(Pencil { centroid: b, .. }),
        ) => Discrepancy::Measured(a.distance(b)),
        _ => match (expected.normal_form(), actual.normal_form()) {
            (Some(a), Some(b)) => Discrepancy::Measured(line_discrepancy(&a, &b)),
            _ => Discrepancy::KindMismatch,
        },
    }
}
