//! Benchmark datasets: symmetric parallel-line ladders, evenly spaced circle
//! points and seeded noisy lines.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::stats::{mean, variance, PairedSample, Sample};
use crate::transform::{apply_motion_points, RigidMotion};

/// Points on two parallel lines, paired so each rung is perpendicular to both.
#[derive(Debug, Clone, PartialEq)]
pub enum ParallelSpec {
    /// Points `(±half_gap, t_i)` on the lines `x = ±half_gap`.
    Vertical { half_gap: f64, t: Sample },
    /// Points `(t_i, M·t_i + B)` on `y = M·x + B` and their perpendicular
    /// partners on `y = M·x − B`.
    Slanted { slope: f64, offset: f64, t: Sample },
}

/// Closed-form statistics of a parallel ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderStats {
    pub mean_x: f64,
    pub mean_y: f64,
    pub var_x: f64,
    pub var_y: f64,
    pub cov_xy: f64,
}

impl ParallelSpec {
    fn validate(&self) -> Result<()> {
        match self {
            ParallelSpec::Vertical { half_gap, t } => {
                if !(half_gap.is_finite() && *half_gap > 0.0) {
                    return Err(Error::InvalidSpec(format!(
                        "half gap must be positive, got {half_gap}"
                    )));
                }
                if variance(t) <= 0.0 {
                    return Err(Error::InvalidSpec("t must have positive variance".into()));
                }
            }
            ParallelSpec::Slanted { slope, offset, .. } => {
                if !slope.is_finite() {
                    return Err(Error::InvalidSpec(format!(
                        "slope must be finite, got {slope}"
                    )));
                }
                if !(offset.is_finite() && *offset > 0.0) {
                    return Err(Error::InvalidSpec(format!(
                        "offset must be positive, got {offset}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn t(&self) -> &Sample {
        match self {
            ParallelSpec::Vertical { t, .. } | ParallelSpec::Slanted { t, .. } => t,
        }
    }

    /// Squared distance from each line to the midline.
    pub fn half_gap_squared(&self) -> f64 {
        match self {
            ParallelSpec::Vertical { half_gap, .. } => half_gap * half_gap,
            ParallelSpec::Slanted { slope, offset, .. } => offset * offset / (slope * slope + 1.0),
        }
    }

    /// Variance of the points' position measured along the lines.
    ///
    /// The perpendicular fit returns the midline when this exceeds
    /// [`half_gap_squared`](Self::half_gap_squared), the perpendicular
    /// through the centroid when it is smaller, and every line through the
    /// centroid at equality. For slanted ladders the along-line coordinate is
    /// `t·√(1 + M²)`, so the transition sits at `var(t) = B²/(M² + 1)²`.
    pub fn along_line_variance(&self) -> f64 {
        match self {
            ParallelSpec::Vertical { t, .. } => variance(t),
            ParallelSpec::Slanted { slope, t, .. } => (1.0 + slope * slope) * variance(t),
        }
    }

    pub fn expected_stats(&self) -> LadderStats {
        let t_mean = mean(self.t());
        let t_var = variance(self.t());
        match self {
            ParallelSpec::Vertical { half_gap, .. } => LadderStats {
                mean_x: 0.0,
                mean_y: t_mean,
                var_x: half_gap * half_gap,
                var_y: t_var,
                cov_xy: 0.0,
            },
            ParallelSpec::Slanted {
                slope: m,
                offset: b,
                ..
            } => {
                let q = m * m + 1.0;
                LadderStats {
                    mean_x: t_mean + m * b / q,
                    mean_y: m * t_mean + m * m * b / q,
                    var_x: t_var + m * m * b * b / (q * q),
                    var_y: m * m * t_var + b * b / (q * q),
                    cov_xy: m * t_var - m * b * b / (q * q),
                }
            }
        }
    }
}

/// Generates `2n` points, each `L+` point immediately followed by its `L−` partner.
pub fn gen_parallel(spec: &ParallelSpec) -> Result<PairedSample> {
    spec.validate()?;
    let mut points = Vec::with_capacity(2 * spec.t().len());
    match *spec {
        ParallelSpec::Vertical { half_gap, ref t } => {
            for &ti in t.values() {
                points.push(Point::new(half_gap, ti));
                points.push(Point::new(-half_gap, ti));
            }
        }
        ParallelSpec::Slanted {
            slope: m,
            offset: b,
            ref t,
        } => {
            let q = m * m + 1.0;
            for &ti in t.values() {
                points.push(Point::new(ti, m * ti + b));
                points.push(Point::new(
                    ti + 2.0 * m * b / q,
                    m * ti + (m * m - 1.0) * b / q,
                ));
            }
        }
    }
    PairedSample::from_points(&points)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleSpec {
    pub n: usize,
    pub phase: f64,
    pub radius: f64,
    pub center: Point,
}

impl CircleSpec {
    pub fn unit(n: usize, phase: f64) -> Self {
        CircleSpec {
            n,
            phase,
            radius: 1.0,
            center: Point::new(0.0, 0.0),
        }
    }
}

/// `(cos(α + 2πi/n), sin(α + 2πi/n))` for `i = 1..=n`, then scaled and moved to the center.
pub fn gen_circle(spec: &CircleSpec) -> Result<PairedSample> {
    if spec.n < 3 {
        return Err(Error::InvalidSpec(format!(
            "circle needs n >= 3, got {}",
            spec.n
        )));
    }
    if !(spec.radius.is_finite() && spec.radius > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "radius must be positive, got {}",
            spec.radius
        )));
    }
    if !(spec.phase.is_finite() && spec.center.x.is_finite() && spec.center.y.is_finite()) {
        return Err(Error::InvalidSpec("phase and center must be finite".into()));
    }
    let n = spec.n as f64;
    let points: Vec<Point> = (1..=spec.n)
        .map(|i| {
            let (s, c) = (spec.phase + 2.0 * PI * i as f64 / n).sin_cos();
            Point::new(spec.radius * c, spec.radius * s)
        })
        .collect();
    let unit = PairedSample::from_points(&points)?;
    if spec.center == Point::new(0.0, 0.0) {
        return Ok(unit);
    }
    Ok(apply_motion_points(
        &unit,
        &RigidMotion::Translation {
            u: spec.center.x,
            v: spec.center.y,
        },
    ))
}

/// Points on `y = slope·x + intercept` with `x` uniform in `x_range` and a
/// vertical perturbation uniform in `[−perturbation, perturbation]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoisyLineSpec {
    pub slope: f64,
    pub intercept: f64,
    pub n: usize,
    pub x_range: (f64, f64),
    pub perturbation: f64,
    pub seed: u64,
}

pub fn gen_noisy_line(spec: &NoisyLineSpec) -> Result<PairedSample> {
    let (lo, hi) = spec.x_range;
    if spec.n < 2 {
        return Err(Error::InvalidSpec(format!(
            "noisy line needs n >= 2, got {}",
            spec.n
        )));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidSpec(format!("bad x range [{lo}, {hi}]")));
    }
    if !(spec.perturbation.is_finite() && spec.perturbation >= 0.0) {
        return Err(Error::InvalidSpec(
            "perturbation must be finite and >= 0".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut xs = Vec::with_capacity(spec.n);
    let mut ys = Vec::with_capacity(spec.n);
    for _ in 0..spec.n {
        let x = rng.gen_range(lo..hi);
        let noise = if spec.perturbation > 0.0 {
            rng.gen_range(-spec.perturbation..=spec.perturbation)
        } else {
            0.0
        };
        xs.push(x);
        ys.push(spec.slope * x + spec.intercept + noise);
    }
    PairedSample::from_vecs(xs, ys)
}

/// `n` values uniform in `[-spread, spread]`, for ladder positions.
pub fn seeded_positions(n: usize, spread: f64, seed: u64) -> Result<Sample> {
    if !(spread.is_finite() && spread > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "spread must be positive, got {spread}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Sample::new((0..n).map(|_| rng.gen_range(-spread..=spread)).collect())
}
