//! Fit results for one point set, rendered as a text table or a JSON document.

use std::fmt::Write as _;

use linefit::oracle::{grid_min_d, grid_min_x, grid_min_y, GridSpec};
use linefit::{
    compare_stats, fit_stats, summarize, BoundOrdering, ComparisonReport, FitReport, FittedLine,
    Method, OrthogonalFit, OrthogonalOrdering, OrthogonalSlope, PairedSample, SummaryStats,
    Tolerances,
};
use serde_json::{json, Map, Value};

/// Grid search result next to the closed form for one method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleCheck {
    pub method: Method,
    /// `(slope, intercept)` for Y and X, `(θ, c)` for D.
    pub params: (f64, f64),
    pub objective: f64,
    /// Largest parameter difference; absent when the closed form is a line family.
    pub param_delta: Option<f64>,
    /// Closed-form objective minus grid objective.
    pub objective_delta: f64,
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub points: PairedSample,
    pub stats: SummaryStats,
    pub fits: Vec<(Method, linefit::Result<FitReport>)>,
    pub comparison: ComparisonReport,
    pub oracle: Option<Vec<OracleCheck>>,
}

impl RunReport {
    pub fn build(points: PairedSample, methods: &[Method], tol: &Tolerances, oracle: bool) -> Self {
        let stats = summarize(&points);
        let fits: Vec<_> = methods
            .iter()
            .map(|&m| (m, fit_stats(&stats, m, tol)))
            .collect();
        let comparison = compare_stats(&stats, tol);
        let oracle = oracle.then(|| {
            fits.iter()
                .filter_map(|(m, r)| r.as_ref().ok().map(|r| oracle_check(&points, *m, r)))
                .collect()
        });
        RunReport {
            points,
            stats,
            fits,
            comparison,
            oracle,
        }
    }

    /// Whether at least one requested method produced a fit.
    pub fn any_success(&self) -> bool {
        self.fits.iter().any(|(_, r)| r.is_ok())
    }
}

fn oracle_check(p: &PairedSample, method: Method, report: &FitReport) -> OracleCheck {
    let grid = GridSpec::default();
    let (g, closed) = match (method, &report.line) {
        (Method::Y, FittedLine::SlopeIntercept(l)) => {
            (grid_min_y(p, &grid), Some((l.slope, l.intercept)))
        }
        (Method::X, FittedLine::InverseSlope(l)) => {
            (grid_min_x(p, &grid), Some((l.slope, l.intercept)))
        }
        (_, line) => (
            grid_min_d(p, &grid),
            line.normal_form().map(|n| (n.theta(), n.c())),
        ),
    };
    let param_delta = closed.map(|(a, b)| {
        if method == Method::D {
            // angles are compared modulo π, with the offset sign following the angle
            let d = a - g.params.0;
            let c2 = if d.cos() < 0.0 {
                -g.params.1
            } else {
                g.params.1
            };
            d.sin().abs().max((b - c2).abs())
        } else {
            (a - g.params.0).abs().max((b - g.params.1).abs())
        }
    });
    OracleCheck {
        method,
        params: g.params,
        objective: g.objective,
        param_delta,
        objective_delta: report.objective_min - g.objective,
    }
}

/// Fixed-point for ordinary magnitudes, scientific otherwise; trailing zeros dropped.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if (1e-4..1e6).contains(&a) {
        trim_zeros(format!("{v:.10}"))
    } else {
        format!("{v:.9e}")
    }
}

/// Six decimals, for equations and short messages.
pub fn fmt_short(v: f64) -> String {
    let s = trim_zeros(format!("{v:.6}"));
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn signed_term(v: f64) -> String {
    if v < 0.0 {
        format!("- {}", fmt_short(-v))
    } else {
        format!("+ {}", fmt_short(v))
    }
}

/// The line in its method's own form, e.g. `y = 0.5x - 0.166667`.
pub fn equation(line: &FittedLine) -> String {
    match line {
        FittedLine::SlopeIntercept(l) => {
            format!("y = {}x {}", fmt_short(l.slope), signed_term(l.intercept))
        }
        FittedLine::InverseSlope(l) => {
            format!("x = {}y {}", fmt_short(l.slope), signed_term(l.intercept))
        }
        FittedLine::Orthogonal(OrthogonalFit::UniqueLine { line, .. }) => {
            match line.to_slope_intercept() {
                Ok(l) => format!("y = {}x {}", fmt_short(l.slope), signed_term(l.intercept)),
                Err(_) => format!("x = {}", fmt_short(line.c() / line.theta().sin())),
            }
        }
        FittedLine::Orthogonal(OrthogonalFit::AllLinesThroughCentroid {
            centroid,
            objective,
        }) => format!(
            "degenerate: every line through centroid ({}, {}), objective {}",
            fmt_short(centroid.x),
            fmt_short(centroid.y),
            fmt_short(*objective)
        ),
    }
}

/// `(slope, intercept)` shown in the table: natural form for Y and X, `y = m·x + b` for D.
fn table_params(line: &FittedLine) -> (Option<f64>, Option<f64>) {
    match line {
        FittedLine::SlopeIntercept(l) => (Some(l.slope), Some(l.intercept)),
        FittedLine::InverseSlope(l) => (Some(l.slope), Some(l.intercept)),
        FittedLine::Orthogonal(fit) => match fit.line().map(|n| n.to_slope_intercept()) {
            Some(Ok(l)) => (Some(l.slope), Some(l.intercept)),
            _ => (None, None),
        },
    }
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), fmt_num)
}

fn bound_str(o: BoundOrdering) -> &'static str {
    match o {
        BoundOrdering::Holds => "holds",
        BoundOrdering::Equality => "equality",
        BoundOrdering::NotApplicable => "not_applicable",
        BoundOrdering::Violated => "violated",
    }
}

fn orthogonal_str(o: OrthogonalOrdering) -> &'static str {
    match o {
        OrthogonalOrdering::Holds => "holds",
        OrthogonalOrdering::ConditionNotMet => "condition_not_met",
        OrthogonalOrdering::NotApplicable => "not_applicable",
        OrthogonalOrdering::Violated => "violated",
    }
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub fn render_table(r: &RunReport) -> String {
    let mut out = String::new();
    let c = r.stats.centroid();
    let _ = writeln!(
        out,
        "n = {}, centroid ({}, {})",
        r.stats.n,
        fmt_num(c.x),
        fmt_num(c.y)
    );
    let _ = writeln!(
        out,
        "var(x) = {}, var(y) = {}, cov = {}\n",
        fmt_num(r.stats.var_x),
        fmt_num(r.stats.var_y),
        fmt_num(r.stats.cov_xy)
    );
    let _ = writeln!(
        out,
        "{:<7}{:<30}{:>18}{:>18}{:>18}{:>18}{:>18}",
        "method", "equation", "slope", "intercept", "theta", "c", "objective"
    );
    for (method, result) in &r.fits {
        match result {
            Err(e) => {
                let _ = writeln!(out, "{:<7}unavailable: {e}", method.to_string());
            }
            Ok(report)
                if matches!(
                    report.line,
                    FittedLine::Orthogonal(OrthogonalFit::AllLinesThroughCentroid { .. })
                ) =>
            {
                let _ = writeln!(out, "{:<7}{}", method.to_string(), equation(&report.line));
            }
            Ok(report) => {
                let (slope, intercept) = table_params(&report.line);
                let normal = report.line.normal_form();
                let _ = writeln!(
                    out,
                    "{:<7}{:<30}{:>18}{:>18}{:>18}{:>18}{:>18}",
                    method.to_string(),
                    equation(&report.line),
                    cell(slope),
                    cell(intercept),
                    cell(normal.map(|n| n.theta())),
                    cell(normal.map(|n| n.c())),
                    fmt_num(report.objective_min)
                );
            }
        }
    }

    let cmp = &r.comparison;
    let _ = writeln!(out, "\ncomparison");
    let e = cmp
        .case
        .e
        .map_or_else(String::new, |e| format!(" (E = {})", fmt_num(e)));
    let _ = writeln!(out, "  D case           {}{e}", cmp.case.tag);
    let slope_d = match cmp.slope_d {
        OrthogonalSlope::Finite(v) => fmt_num(v),
        OrthogonalSlope::Vertical => "vertical".into(),
        OrthogonalSlope::AllLines => "any".into(),
    };
    let _ = writeln!(
        out,
        "  slopes           Y {}   X {}   D {}",
        cell(cmp.slope_y),
        cell(cmp.slope_x),
        slope_d
    );
    let _ = writeln!(
        out,
        "  |m| <= sqrt(var(y)/var(x)) <= |m_X|   {} (bound {})",
        bound_str(cmp.ordering_e),
        cell(cmp.ratio_bound)
    );
    let _ = writeln!(
        out,
        "  |m| <= |tan theta| <= |m_X|           {} (observed: {})",
        orthogonal_str(cmp.ordering_f),
        yes_no(cmp.ordering_f_observed)
    );
    let _ = writeln!(out, "  signs agree      {}", yes_no(cmp.signs_agree));
    let _ = writeln!(
        out,
        "  cs gap           {} (collinear: {})",
        fmt_num(cmp.cs_gap),
        yes_no(Some(cmp.collinear))
    );

    if let Some(checks) = &r.oracle {
        let _ = writeln!(out, "\noracle (grid search)");
        for ch in checks {
            let _ = writeln!(
                out,
                "  {}  params ({}, {})  param delta {}  objective delta {}",
                ch.method,
                fmt_num(ch.params.0),
                fmt_num(ch.params.1),
                cell(ch.param_delta),
                fmt_num(ch.objective_delta)
            );
        }
    }
    out
}

fn stats_json(s: &SummaryStats) -> Value {
    json!({
        "n": s.n,
        "mean_x": s.mean_x,
        "mean_y": s.mean_y,
        "var_x": s.var_x,
        "var_y": s.var_y,
        "cov_xy": s.cov_xy,
        "mean_xx": s.mean_xx,
        "mean_yy": s.mean_yy,
        "mean_xy": s.mean_xy,
    })
}

fn fit_json(result: &linefit::Result<FitReport>) -> Value {
    let report = match result {
        Err(e) => return json!({ "status": "precondition_failed", "error": e.to_string() }),
        Ok(r) => r,
    };
    let normal = report
        .line
        .normal_form()
        .map(|n| json!({ "theta": n.theta(), "c": n.c() }));
    match &report.line {
        FittedLine::SlopeIntercept(l) => json!({
            "status": "ok",
            "slope": l.slope,
            "intercept": l.intercept,
            "normal_form": normal,
            "objective_min": report.objective_min,
        }),
        FittedLine::InverseSlope(l) => json!({
            "status": "ok",
            "slope": l.slope,
            "intercept": l.intercept,
            "normal_form": normal,
            "objective_min": report.objective_min,
        }),
        FittedLine::Orthogonal(OrthogonalFit::UniqueLine { line, case }) => {
            let (slope, intercept) = match line.to_slope_intercept() {
                Ok(l) => (Some(l.slope), Some(l.intercept)),
                Err(_) => (None, None),
            };
            json!({
                "status": "ok",
                "theta": line.theta(),
                "c": line.c(),
                "case": case.tag.as_str(),
                "e": case.e,
                "slope": slope,
                "intercept": intercept,
                "normal_form": normal,
                "objective_min": report.objective_min,
            })
        }
        FittedLine::Orthogonal(OrthogonalFit::AllLinesThroughCentroid {
            centroid,
            objective,
        }) => json!({
            "status": "all_lines_through_centroid",
            "centroid": [centroid.x, centroid.y],
            "objective": objective,
        }),
    }
}

fn comparison_json(c: &ComparisonReport) -> Value {
    let slope_d = match c.slope_d {
        OrthogonalSlope::Finite(v) => json!(v),
        OrthogonalSlope::Vertical => json!("vertical"),
        OrthogonalSlope::AllLines => json!("all_lines"),
    };
    json!({
        "slope_y": c.slope_y,
        "slope_x": c.slope_x,
        "slope_d": slope_d,
        "case": { "tag": c.case.tag.as_str(), "e": c.case.e },
        "ratio_bound": c.ratio_bound,
        "ordering_e": bound_str(c.ordering_e),
        "ordering_f": orthogonal_str(c.ordering_f),
        "ordering_f_observed": c.ordering_f_observed,
        "signs_agree": c.signs_agree,
        "cs_gap": c.cs_gap,
        "collinear": c.collinear,
    })
}

pub fn to_json(r: &RunReport) -> Value {
    let points: Vec<Value> = r.points.points().map(|q| json!([q.x, q.y])).collect();
    let mut fits = Map::new();
    for (method, result) in &r.fits {
        fits.insert(method.as_str().into(), fit_json(result));
    }
    let mut doc = json!({
        "points": points,
        "stats": stats_json(&r.stats),
        "fits": fits,
        "comparison": comparison_json(&r.comparison),
    });
    if let Some(checks) = &r.oracle {
        let mut oracle = Map::new();
        for ch in checks {
            oracle.insert(
                ch.method.as_str().into(),
                json!({
                    "params": [ch.params.0, ch.params.1],
                    "objective": ch.objective,
                    "param_delta": ch.param_delta,
                    "objective_delta": ch.objective_delta,
                }),
            );
        }
        doc["oracle"] = Value::Object(oracle);
    }
    doc
}
