//! Side-by-side comparison of the three fitted slopes.
//!
//! With `m = cov/var(x)` (Y method), `m_X = var(y)/cov` (X method) and
//! `tan θ` (D method):
//!
//! * `var(x)·var(y) ≥ cov²`, with equality exactly for collinear data;
//! * the three slopes share a sign;
//! * `|m| ≤ √(var(y)/var(x)) ≤ |m_X|`;
//! * `|m| ≤ |tan θ| ≤ |m_X|` in cases I, II, V and VI, and in cases III and
//!   IV when `2·cov² ≥ var(x)·|var(x) − var(y)|`.
//!
//! Outside that gate the ordering is recorded as observed, never asserted.

use crate::fit::{
    fit_d_stats, resolve_case_with, tan_theta, CaseTag, OrthogonalCase, OrthogonalFit, Tolerances,
};
use crate::stats::{summarize, PairedSample, SummaryStats};

/// Slope of the perpendicular fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrthogonalSlope {
    Finite(f64),
    Vertical,
    /// Every line through the centroid is optimal.
    AllLines,
}

impl OrthogonalSlope {
    pub fn finite(&self) -> Option<f64> {
        match self {
            OrthogonalSlope::Finite(v) => Some(*v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundOrdering {
    /// Strict inequalities hold.
    Holds,
    /// Collinear data: all quantities coincide.
    Equality,
    /// A slope does not exist.
    NotApplicable,
    /// The computed values contradict the inequality.
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthogonalOrdering {
    Holds,
    /// Cases III/IV with `2·cov² < var(x)·|var(x) − var(y)|`.
    ConditionNotMet,
    NotApplicable,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonReport {
    pub slope_y: Option<f64>,
    pub slope_x: Option<f64>,
    pub slope_d: OrthogonalSlope,
    pub case: OrthogonalCase,
    /// `√(var(y)/var(x))`, absent when `var(x) = 0`.
    pub ratio_bound: Option<f64>,
    pub ordering_e: BoundOrdering,
    pub ordering_f: OrthogonalOrdering,
    /// `|m| ≤ |tan θ| ≤ |m_X|` as observed, whenever all three slopes exist.
    pub ordering_f_observed: Option<bool>,
    /// Whether the sign-consistency claim holds; absent unless all existing slopes are nonzero.
    pub signs_agree: Option<bool>,
    pub cs_gap: f64,
    pub collinear: bool,
}

pub fn compare(p: &PairedSample) -> ComparisonReport {
    compare_stats(&summarize(p), &Tolerances::default())
}

/// Relative slack used when checking the inequalities on rounded values.
const ORDER_SLACK: f64 = 1e-12;

fn le(a: f64, b: f64) -> bool {
    a <= b * (1.0 + ORDER_SLACK) + f64::MIN_POSITIVE
}

pub fn compare_stats(s: &SummaryStats, tol: &Tolerances) -> ComparisonReport {
    let iso = tol.isotropic_eps(s);
    let y_exists = s.var_x > tol.precondition * s.mean_xx;
    let slope_y = y_exists.then(|| s.cov_xy / s.var_x);
    let slope_x = (s.cov_xy.abs() > iso).then(|| s.var_y / s.cov_xy);
    let ratio_bound = y_exists.then(|| (s.var_y / s.var_x).sqrt());

    let case = resolve_case_with(s, tol);
    let slope_d = match fit_d_stats(s, tol) {
        OrthogonalFit::AllLinesThroughCentroid { .. } => OrthogonalSlope::AllLines,
        OrthogonalFit::UniqueLine { line, case } => match tan_theta(&case) {
            Some(t) if !line.is_vertical() => OrthogonalSlope::Finite(t),
            _ => OrthogonalSlope::Vertical,
        },
    };

    let cs_gap = s.cs_gap();
    let collinear = tol.is_collinear(s);

    let ordering_e = match (slope_y, ratio_bound, slope_x) {
        (Some(m), Some(r), Some(mx)) => {
            if collinear {
                BoundOrdering::Equality
            } else if le(m.abs(), r) && le(r, mx.abs()) {
                BoundOrdering::Holds
            } else {
                BoundOrdering::Violated
            }
        }
        _ => BoundOrdering::NotApplicable,
    };

    let ordering_f_observed = match (slope_y, slope_d.finite(), slope_x) {
        (Some(m), Some(t), Some(mx)) => Some(le(m.abs(), t.abs()) && le(t.abs(), mx.abs())),
        _ => None,
    };
    let ordering_f = match ordering_f_observed {
        None => OrthogonalOrdering::NotApplicable,
        Some(observed) => {
            let gated = match case.tag {
                CaseTag::III | CaseTag::IV => {
                    2.0 * s.cov_xy * s.cov_xy >= s.var_x * (s.var_x - s.var_y).abs()
                }
                _ => true,
            };
            match (gated, observed) {
                (false, _) => OrthogonalOrdering::ConditionNotMet,
                (true, true) => OrthogonalOrdering::Holds,
                (true, false) => OrthogonalOrdering::Violated,
            }
        }
    };

    let signs: Vec<f64> = [slope_y, slope_x, slope_d.finite()]
        .into_iter()
        .flatten()
        .collect();
    let signs_agree = (!signs.is_empty() && signs.iter().all(|v| *v != 0.0))
        .then(|| signs.iter().all(|v| v.signum() == signs[0].signum()));

    ComparisonReport {
        slope_y,
        slope_x,
        slope_d,
        case,
        ratio_bound,
        ordering_e,
        ordering_f,
        ordering_f_observed,
        signs_agree,
        cs_gap,
        collinear,
    }
}
