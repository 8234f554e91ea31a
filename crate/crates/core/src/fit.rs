//! The three least-squares line fits.
//!
//! * **Y** minimises the mean squared vertical offset, giving `y = m·x + b`
//!   with `m = cov/var(x)`. Needs `var(x) > 0`.
//! * **X** minimises the mean squared horizontal offset, giving
//!   `x = μ·y + β` with `μ = cov/var(y)`. Needs `var(y) > 0`.
//! * **D** minimises the mean squared perpendicular distance, giving
//!   `x·sin θ − y·cos θ = c` with `tan 2θ = 2·cov/(var(x) − var(y))` and
//!   `c = x̄·sin θ − ȳ·cos θ`. Always solvable; when `var(x) = var(y)` and
//!   `cov = 0` every line through the centroid is optimal.
//!
//! The angle of the D fit is resolved without `arctan` branch ambiguity by
//! splitting on the signs of `var(x) − var(y)` and `cov`, see [`CaseTag`].

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{InverseSlopeLine, NormalLine, Point, SlopeInterceptLine};
use crate::stats::{summarize, PairedSample, SummaryStats};

/// Which offsets a fit minimises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Vertical offsets.
    Y,
    /// Horizontal offsets.
    X,
    /// Perpendicular distances.
    D,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Y, Method::X, Method::D];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Y => "y",
            Method::X => "x",
            Method::D => "d",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Y => "Y",
            Method::X => "X",
            Method::D => "D",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "y" => Ok(Method::Y),
            "x" => Ok(Method::X),
            "d" => Ok(Method::D),
            other => Err(format!("unknown method '{other}' (expected y, x or d)")),
        }
    }
}

/// Numerical thresholds used for degeneracy decisions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// `var(x) = var(y)` and `cov = 0` are tested as `|·| ≤ isotropic·(var(x) + var(y) + 1)`.
    pub isotropic: f64,
    /// Data are collinear when `cs_gap ≤ collinear·(var(x)·var(y) + 1)`.
    pub collinear: f64,
    /// Y (X) fits are refused when `var(x) ≤ precondition·mean(x²)` (resp. y).
    pub precondition: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            isotropic: 1e-12,
            collinear: 1e-12,
            precondition: 1e-300,
        }
    }
}

impl Tolerances {
    pub fn isotropic_eps(&self, s: &SummaryStats) -> f64 {
        self.isotropic * (s.var_x + s.var_y + 1.0)
    }

    pub fn is_collinear(&self, s: &SummaryStats) -> bool {
        s.cs_gap() <= self.collinear * (s.var_x * s.var_y + 1.0)
    }
}

/// Sign pattern of `(var(x) − var(y), cov)`.
///
/// | tag | var(x) − var(y) | cov | θ range |
/// |-----|-----------------|-----|---------|
/// | I   | > 0 | ≥ 0 | `[0, π/4)` |
/// | II  | > 0 | < 0 | `(−π/4, 0)` |
/// | III | < 0 | ≥ 0 | `(π/4, π/2]` |
/// | IV  | < 0 | < 0 | `(−π/2, −π/4)` |
/// | V   | = 0 | > 0 | `π/4` |
/// | VI  | = 0 | < 0 | `−π/4` |
/// | Isotropic | = 0 | = 0 | any |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    I,
    II,
    III,
    IV,
    V,
    VI,
    Isotropic,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
            CaseTag::IV => "IV",
            CaseTag::V => "V",
            CaseTag::VI => "VI",
            CaseTag::Isotropic => "isotropic",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Resolved case of a perpendicular fit together with `E = 2·cov/(var(x) − var(y))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalCase {
    pub tag: CaseTag,
    /// Present for cases I–IV, absent for V, VI and Isotropic.
    pub e: Option<f64>,
}

/// Angle of a fitted line with its cosine and sine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orientation {
    pub theta: f64,
    pub cos: f64,
    pub sin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrthogonalFit {
    UniqueLine {
        line: NormalLine,
        case: OrthogonalCase,
    },
    /// Every line through the centroid attains the same objective.
    AllLinesThroughCentroid { centroid: Point, objective: f64 },
}

impl OrthogonalFit {
    pub fn line(&self) -> Option<&NormalLine> {
        match self {
            OrthogonalFit::UniqueLine { line, .. } => Some(line),
            OrthogonalFit::AllLinesThroughCentroid { .. } => None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, OrthogonalFit::AllLinesThroughCentroid { .. })
    }
}

/// The fitted line in the natural form of its method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FittedLine {
    SlopeIntercept(SlopeInterceptLine),
    InverseSlope(InverseSlopeLine),
    Orthogonal(OrthogonalFit),
}

impl FittedLine {
    /// Normal form, absent for the degenerate perpendicular outcome.
    pub fn normal_form(&self) -> Option<NormalLine> {
        match self {
            FittedLine::SlopeIntercept(l) => Some(l.to_normal()),
            FittedLine::InverseSlope(l) => Some(l.to_normal()),
            FittedLine::Orthogonal(fit) => fit.line().copied(),
        }
    }

    /// `dy/dx` of the line, when it exists and is unique.
    pub fn slope(&self) -> Option<f64> {
        match self {
            FittedLine::SlopeIntercept(l) => Some(l.slope),
            FittedLine::InverseSlope(l) => l.dy_dx(),
            FittedLine::Orthogonal(fit) => fit.line().and_then(NormalLine::slope),
        }
    }

    /// Signed residual of `p` in the line's own equation (zero when `p` is on it).
    pub fn equation_residual(&self, p: Point) -> f64 {
        match self {
            FittedLine::SlopeIntercept(l) => l.y_at(p.x) - p.y,
            FittedLine::InverseSlope(l) => l.x_at(p.y) - p.x,
            FittedLine::Orthogonal(OrthogonalFit::UniqueLine { line, .. }) => line.residual(p),
            FittedLine::Orthogonal(OrthogonalFit::AllLinesThroughCentroid { centroid, .. }) => {
                centroid.distance(&p)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitReport {
    pub method: Method,
    pub line: FittedLine,
    /// Minimum of the method's mean squared offset, from the completed-square closed form.
    pub objective_min: f64,
    pub stats: SummaryStats,
}

pub fn fit_y(p: &PairedSample) -> Result<FitReport> {
    fit_y_stats(&summarize(p), &Tolerances::default())
}

pub fn fit_x(p: &PairedSample) -> Result<FitReport> {
    fit_x_stats(&summarize(p), &Tolerances::default())
}

pub fn fit_d(p: &PairedSample) -> OrthogonalFit {
    fit_d_stats(&summarize(p), &Tolerances::default())
}

pub fn fit(p: &PairedSample, method: Method) -> Result<FitReport> {
    fit_stats(&summarize(p), method, &Tolerances::default())
}

pub fn fit_stats(s: &SummaryStats, method: Method, tol: &Tolerances) -> Result<FitReport> {
    match method {
        Method::Y => fit_y_stats(s, tol),
        Method::X => fit_x_stats(s, tol),
        Method::D => {
            let fit = fit_d_stats(s, tol);
            Ok(FitReport {
                method: Method::D,
                line: FittedLine::Orthogonal(fit),
                objective_min: orthogonal_minimum(s, &fit),
                stats: *s,
            })
        }
    }
}

pub fn fit_y_stats(s: &SummaryStats, tol: &Tolerances) -> Result<FitReport> {
    if s.var_x <= tol.precondition * s.mean_xx {
        return Err(Error::VerticalData);
    }
    let slope = s.cov_xy / s.var_x;
    Ok(FitReport {
        method: Method::Y,
        line: FittedLine::SlopeIntercept(SlopeInterceptLine {
            slope,
            intercept: s.mean_y - slope * s.mean_x,
        }),
        objective_min: s.cs_gap().max(0.0) / s.var_x,
        stats: *s,
    })
}

pub fn fit_x_stats(s: &SummaryStats, tol: &Tolerances) -> Result<FitReport> {
    if s.var_y <= tol.precondition * s.mean_yy {
        return Err(Error::HorizontalData);
    }
    let slope = s.cov_xy / s.var_y;
    Ok(FitReport {
        method: Method::X,
        line: FittedLine::InverseSlope(InverseSlopeLine {
            slope,
            intercept: s.mean_x - slope * s.mean_y,
        }),
        objective_min: s.cs_gap().max(0.0) / s.var_y,
        stats: *s,
    })
}

pub fn fit_d_stats(s: &SummaryStats, tol: &Tolerances) -> OrthogonalFit {
    let case = resolve_case_with(s, tol);
    match trig_from_case(&case) {
        Ok(o) => {
            let c = s.mean_x * o.sin - s.mean_y * o.cos;
            OrthogonalFit::UniqueLine {
                line: NormalLine::new(o.theta, c).expect("finite angle and offset"),
                case,
            }
        }
        Err(_) => OrthogonalFit::AllLinesThroughCentroid {
            centroid: s.centroid(),
            objective: (s.var_x + s.var_y) / 2.0,
        },
    }
}

/// Smaller eigenvalue of the covariance matrix, written as `cs_gap / λ_max`
/// so collinear data give a clean zero.
fn orthogonal_minimum(s: &SummaryStats, fit: &OrthogonalFit) -> f64 {
    match fit {
        OrthogonalFit::AllLinesThroughCentroid { objective, .. } => *objective,
        OrthogonalFit::UniqueLine { .. } => {
            let lambda_max =
                (s.var_x + s.var_y) / 2.0 + ((s.var_x - s.var_y) / 2.0).hypot(s.cov_xy);
            if lambda_max > 0.0 {
                s.cs_gap().max(0.0) / lambda_max
            } else {
                0.0
            }
        }
    }
}

pub fn resolve_case(s: &SummaryStats) -> OrthogonalCase {
    resolve_case_with(s, &Tolerances::default())
}

pub fn resolve_case_with(s: &SummaryStats, tol: &Tolerances) -> OrthogonalCase {
    let eps = tol.isotropic_eps(s);
    let diff = s.var_x - s.var_y;
    let cov = s.cov_xy;

    if diff.abs() <= eps {
        let tag = if cov.abs() <= eps {
            CaseTag::Isotropic
        } else if cov > 0.0 {
            CaseTag::V
        } else {
            CaseTag::VI
        };
        return OrthogonalCase { tag, e: None };
    }

    let e = 2.0 * cov / diff;
    // cov = 0 belongs to both I/II (resp. III/IV); it is resolved toward I (resp. III)
    let tag = match (diff > 0.0, cov >= 0.0) {
        (true, true) => CaseTag::I,
        (true, false) => CaseTag::II,
        (false, true) => CaseTag::III,
        (false, false) => CaseTag::IV,
    };
    OrthogonalCase { tag, e: Some(e) }
}

/// Closed-form `cos θ`, `sin θ` and `θ` for a resolved case.
///
/// With `s = √(1 + E²)` the larger of `|cos θ|`, `|sin θ|` is `√((1 + 1/s)/2)`;
/// the smaller is recovered from `|sin 2θ| = |E|/s`, which avoids the
/// cancellation in `√((1 − 1/s)/2)` for small `E`.
pub fn trig_from_case(case: &OrthogonalCase) -> Result<Orientation> {
    let needs_e = matches!(
        case.tag,
        CaseTag::I | CaseTag::II | CaseTag::III | CaseTag::IV
    );
    if needs_e != case.e.is_some() {
        return Err(Error::InvalidCase(
            "E must be present exactly for cases I-IV",
        ));
    }

    match case.tag {
        CaseTag::Isotropic => Err(Error::Isotropic),
        CaseTag::V => Ok(Orientation {
            theta: FRAC_PI_4,
            cos: FRAC_1_SQRT_2,
            sin: FRAC_1_SQRT_2,
        }),
        CaseTag::VI => Ok(Orientation {
            theta: -FRAC_PI_4,
            cos: FRAC_1_SQRT_2,
            sin: -FRAC_1_SQRT_2,
        }),
        tag => {
            let e = case.e.expect("checked above");
            if !e.is_finite() {
                return Err(Error::InvalidCase("E must be finite"));
            }
            let s = 1f64.hypot(e);
            let major = ((1.0 + 1.0 / s) / 2.0).sqrt();
            let minor = e.abs() / s / (2.0 * major);
            let half = 0.5 * e.atan();
            let o = match tag {
                CaseTag::I => Orientation {
                    theta: half,
                    cos: major,
                    sin: minor,
                },
                CaseTag::II => Orientation {
                    theta: half,
                    cos: major,
                    sin: -minor,
                },
                CaseTag::III => Orientation {
                    theta: half + FRAC_PI_2,
                    cos: minor,
                    sin: major,
                },
                CaseTag::IV => Orientation {
                    theta: half - FRAC_PI_2,
                    cos: minor,
                    sin: -major,
                },
                _ => unreachable!(),
            };
            // IV at E = 0 lands on −π/2, the same line as π/2
            if o.theta <= -FRAC_PI_2 {
                return Ok(Orientation {
                    theta: o.theta + std::f64::consts::PI,
                    cos: -o.cos,
                    sin: -o.sin,
                });
            }
            Ok(o)
        }
    }
}

/// Slope `tan θ` of the perpendicular fit; absent for vertical lines and the isotropic case.
pub fn tan_theta(case: &OrthogonalCase) -> Option<f64> {
    match (case.tag, case.e) {
        (CaseTag::Isotropic, _) => None,
        (CaseTag::V, _) => Some(1.0),
        (CaseTag::VI, _) => Some(-1.0),
        (_, Some(e)) if e.abs() < 1e-8 => {
            let o = trig_from_case(case).ok()?;
            (o.cos != 0.0).then(|| o.sin / o.cos)
        }
        (CaseTag::I | CaseTag::II, Some(e)) => Some(e / (1.0 + 1f64.hypot(e))),
        (CaseTag::III | CaseTag::IV, Some(e)) => Some(-(1.0 + 1f64.hypot(e)) / e),
        _ => None,
    }
}

/// Mean squared vertical offset of the points from `y = m·x + b`.
pub fn objective_y(p: &PairedSample, m: f64, b: f64) -> f64 {
    p.points().map(|q| (m * q.x + b - q.y).powi(2)).sum::<f64>() / p.len() as f64
}

/// Mean squared horizontal offset of the points from `x = μ·y + β`.
pub fn objective_x(p: &PairedSample, mu: f64, beta: f64) -> f64 {
    p.points()
        .map(|q| (mu * q.y + beta - q.x).powi(2))
        .sum::<f64>()
        / p.len() as f64
}

/// Mean squared distance of the points from `x·sin θ − y·cos θ = c`.
pub fn objective_d(p: &PairedSample, theta: f64, c: f64) -> f64 {
    let (s, co) = theta.sin_cos();
    p.points()
        .map(|q| (q.x * s - q.y * co - c).powi(2))
        .sum::<f64>()
        / p.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn three_points() -> PairedSample {
        PairedSample::from_vecs(vec![0.0, 1.0, 2.0], vec![0.0, 0.0, 1.0]).unwrap()
    }

    fn stats(var_x: f64, var_y: f64, cov_xy: f64) -> SummaryStats {
        SummaryStats {
            n: 3,
            mean_x: 0.0,
            mean_y: 0.0,
            var_x,
            var_y,
            cov_xy,
            mean_xx: var_x,
            mean_yy: var_y,
            mean_xy: cov_xy,
        }
    }

    fn unit_circle(n: usize) -> PairedSample {
        let (xs, ys) = (1..=n)
            .map(|i| {
                let a = 2.0 * PI * i as f64 / n as f64;
                (a.cos(), a.sin())
            })
            .unzip();
        PairedSample::from_vecs(xs, ys).unwrap()
    }

    #[test]
    fn fit_y_examples() {
        let r = fit_y(&three_points()).unwrap();
        let FittedLine::SlopeIntercept(l) = r.line else {
            panic!()
        };
        assert_abs_diff_eq!(l.slope, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(l.intercept, -1.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.objective_min, 1.0 / 18.0, epsilon = 1e-15);

        let p = PairedSample::from_vecs(vec![0.0, 1.0, 2.0], vec![0.0, 2.0, 4.0]).unwrap();
        let r = fit_y(&p).unwrap();
        let FittedLine::SlopeIntercept(l) = r.line else {
            panic!()
        };
        assert_eq!((l.slope, l.intercept, r.objective_min), (2.0, 0.0, 0.0));
    }

    #[test]
    fn fit_y_rejects_vertical() {
        let p = PairedSample::from_vecs(vec![3.0; 4], vec![0.0, 1.0, 2.0, 5.0]).unwrap();
        assert_eq!(fit_y(&p), Err(Error::VerticalData));
        let p = PairedSample::from_vecs(vec![0.0; 3], vec![0.0, 1.0, 5.0]).unwrap();
        assert_eq!(fit_y(&p), Err(Error::VerticalData));
    }

    #[test]
    fn fit_x_examples() {
        let r = fit_x(&three_points()).unwrap();
        let FittedLine::InverseSlope(l) = r.line else {
            panic!()
        };
        assert_abs_diff_eq!(l.slope, 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(l.intercept, 0.5, epsilon = 1e-15);

        // x = 3y − 1
        let ys = vec![-1.0, 0.0, 0.5, 2.0];
        let xs = ys.iter().map(|y| 3.0 * y - 1.0).collect();
        let r = fit_x(&PairedSample::from_vecs(xs, ys).unwrap()).unwrap();
        let FittedLine::InverseSlope(l) = r.line else {
            panic!()
        };
        assert_abs_diff_eq!(l.slope, 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(l.intercept, -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r.objective_min, 0.0, epsilon = 1e-14);

        let p = PairedSample::from_vecs(vec![0.0, 1.0, 2.0], vec![2.0; 3]).unwrap();
        assert_eq!(fit_x(&p), Err(Error::HorizontalData));
    }

    #[test]
    fn resolve_case_examples() {
        let c = resolve_case(&stats(2.0 / 3.0, 2.0 / 9.0, 1.0 / 3.0));
        assert_eq!(c.tag, CaseTag::I);
        assert_relative_eq!(c.e.unwrap(), 1.5, max_relative = 1e-15);

        assert_eq!(
            resolve_case(&stats(2.0 / 9.0, 2.0 / 3.0, -1.0 / 3.0)).tag,
            CaseTag::IV
        );
        assert_eq!(
            resolve_case(&stats(0.5, 0.5, 0.0)),
            OrthogonalCase {
                tag: CaseTag::Isotropic,
                e: None
            }
        );
        assert_eq!(resolve_case(&stats(0.5, 0.5, 0.1)).tag, CaseTag::V);
        assert_eq!(resolve_case(&stats(0.5, 0.5, -0.1)).tag, CaseTag::VI);
        assert_eq!(resolve_case(&stats(2.0, 1.0, -0.1)).tag, CaseTag::II);
        assert_eq!(resolve_case(&stats(1.0, 2.0, 0.1)).tag, CaseTag::III);
        // cov = 0 boundaries
        assert_eq!(resolve_case(&stats(2.0, 1.0, 0.0)).tag, CaseTag::I);
        assert_eq!(resolve_case(&stats(1.0, 2.0, 0.0)).tag, CaseTag::III);
    }

    #[test]
    fn trig_examples() {
        let case = OrthogonalCase {
            tag: CaseTag::I,
            e: Some(1.5),
        };
        let o = trig_from_case(&case).unwrap();
        let expected = (13f64.sqrt() - 2.0) / 3.0;
        assert_relative_eq!(o.sin / o.cos, expected, max_relative = 1e-14);
        assert_relative_eq!(o.theta.tan(), expected, max_relative = 1e-14);
        assert_relative_eq!(tan_theta(&case).unwrap(), expected, max_relative = 1e-14);
        assert_abs_diff_eq!(expected, 0.53518, epsilon = 1e-5);

        let o = trig_from_case(&OrthogonalCase {
            tag: CaseTag::I,
            e: Some(0.0),
        })
        .unwrap();
        assert_eq!((o.theta, o.cos, o.sin), (0.0, 1.0, 0.0));

        let o = trig_from_case(&OrthogonalCase {
            tag: CaseTag::V,
            e: None,
        })
        .unwrap();
        assert_eq!(
            (o.theta, o.cos, o.sin),
            (FRAC_PI_4, FRAC_1_SQRT_2, FRAC_1_SQRT_2)
        );

        let o = trig_from_case(&OrthogonalCase {
            tag: CaseTag::III,
            e: Some(0.0),
        })
        .unwrap();
        assert_eq!((o.theta, o.cos, o.sin), (FRAC_PI_2, 0.0, 1.0));

        assert_eq!(
            trig_from_case(&OrthogonalCase {
                tag: CaseTag::Isotropic,
                e: None
            }),
            Err(Error::Isotropic)
        );
        assert!(trig_from_case(&OrthogonalCase {
            tag: CaseTag::I,
            e: None
        })
        .is_err());
    }

    #[test]
    fn case_iv_at_zero_wraps_to_vertical() {
        let o = trig_from_case(&OrthogonalCase {
            tag: CaseTag::IV,
            e: Some(0.0),
        })
        .unwrap();
        assert_eq!(o.theta, FRAC_PI_2);
        assert_eq!((o.cos, o.sin), (0.0, 1.0));
    }

    #[test]
    fn fit_d_examples() {
        let OrthogonalFit::UniqueLine { line, case } = fit_d(&three_points()) else {
            panic!()
        };
        assert_eq!(case.tag, CaseTag::I);
        let l = line.to_slope_intercept().unwrap();
        assert_abs_diff_eq!(l.slope, 0.53518, epsilon = 1e-5);
        assert_abs_diff_eq!(l.intercept, -0.20185, epsilon = 1e-5);

        let OrthogonalFit::AllLinesThroughCentroid {
            centroid,
            objective,
        } = fit_d(&unit_circle(4))
        else {
            panic!()
        };
        assert_abs_diff_eq!(centroid.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(centroid.y, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(objective, 0.5, epsilon = 1e-15);

        let p = PairedSample::from_vecs(vec![0.0, 0.0, 0.0], vec![0.0, 1.0, 5.0]).unwrap();
        let OrthogonalFit::UniqueLine { line, case } = fit_d(&p) else {
            panic!()
        };
        assert_eq!(case.tag, CaseTag::III);
        assert_eq!(line.theta(), FRAC_PI_2);
        assert_eq!(line.c(), 0.0);
    }

    #[test]
    fn fit_d_recovers_collinear_slopes() {
        for alpha in [-10.0, -1.0, -0.3, 0.0, 0.3, 1.0, 2.0, 10.0] {
            let xs = vec![-1.0, 0.0, 0.5, 2.0, 3.0];
            let ys = xs.iter().map(|x| alpha * x).collect();
            let r = fit(&PairedSample::from_vecs(xs, ys).unwrap(), Method::D).unwrap();
            let FittedLine::Orthogonal(OrthogonalFit::UniqueLine { line, .. }) = r.line else {
                panic!()
            };
            assert_abs_diff_eq!(
                line.slope().unwrap(),
                alpha,
                epsilon = 1e-12 * (1.0 + alpha * alpha)
            );
            assert_abs_diff_eq!(line.c(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(r.objective_min, 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn objective_y_examples() {
        let p = three_points();
        assert_abs_diff_eq!(
            objective_y(&p, 0.5, -1.0 / 6.0),
            1.0 / 18.0,
            epsilon = 1e-15
        );
        let base = objective_y(&p, 0.5, -1.0 / 6.0);
        for d in [-0.1, 0.1] {
            assert!(objective_y(&p, 0.5 + d, -1.0 / 6.0) > base);
        }
        let line = PairedSample::from_vecs(vec![0.0, 1.0, 2.0], vec![1.0, 3.0, 5.0]).unwrap();
        assert_eq!(objective_y(&line, 2.0, 1.0), 0.0);
    }

    #[test]
    fn objective_d_flat_on_circle() {
        let p = unit_circle(8);
        let s = summarize(&p);
        for theta in [0.0, PI / 6.0, PI / 3.0] {
            let c = s.mean_x * theta.sin() - s.mean_y * theta.cos();
            assert_abs_diff_eq!(objective_d(&p, theta, c), 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn objective_minima_match_residual_sums() {
        let p = three_points();
        for method in Method::ALL {
            let r = fit(&p, method).unwrap();
            let direct = match r.line {
                FittedLine::SlopeIntercept(l) => objective_y(&p, l.slope, l.intercept),
                FittedLine::InverseSlope(l) => objective_x(&p, l.slope, l.intercept),
                FittedLine::Orthogonal(f) => {
                    let l = f.line().unwrap();
                    objective_d(&p, l.theta(), l.c())
                }
            };
            assert_relative_eq!(r.objective_min, direct, max_relative = 1e-12);
        }
    }

    #[test]
    fn method_parsing() {
        assert_eq!("Y".parse::<Method>(), Ok(Method::Y));
        assert_eq!("d".parse::<Method>(), Ok(Method::D));
        assert!("z".parse::<Method>().is_err());
    }
}
