//! Brute-force grid minimisers that check the closed-form fits.
//!
//! Nothing here uses variances, covariances or the angle formulas; the
//! objectives are evaluated by direct residual summation. Only verification
//! code should call into this module.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::geometry::NormalLine;
use crate::stats::PairedSample;

/// Coarse grid followed by refinement rounds centred on the incumbent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub coarse_steps: usize,
    pub refinement_rounds: usize,
    /// Each round shrinks the search interval by this factor.
    pub shrink_factor: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            coarse_steps: 2000,
            refinement_rounds: 6,
            shrink_factor: 0.05,
        }
    }
}

impl GridSpec {
    /// Clamps to the minimum admissible grid (≥ 100 steps, ≥ 3 rounds, shrink in (0, 1)).
    pub fn sanitized(self) -> Self {
        GridSpec {
            coarse_steps: self.coarse_steps.max(100),
            refinement_rounds: self.refinement_rounds.max(3),
            shrink_factor: if self.shrink_factor > 0.0 && self.shrink_factor < 1.0 {
                self.shrink_factor
            } else {
                0.05
            },
        }
    }

    /// Spacing of the last refinement grid for an initial interval of `width`.
    pub fn final_resolution(&self, width: f64) -> f64 {
        width * self.shrink_factor.powi(self.refinement_rounds as i32) / self.coarse_steps as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridResult {
    /// `(θ, c)` for the perpendicular search, `(slope, intercept)` otherwise.
    pub params: (f64, f64),
    pub objective: f64,
    /// Largest minus smallest objective over the coarse grid.
    pub coarse_spread: f64,
}

/// Minimises `f` over `[lo, hi]`; returns `(argmin, min, coarse spread)`.
fn refine_1d(f: impl Fn(f64) -> f64, lo: f64, hi: f64, grid: &GridSpec) -> (f64, f64, f64) {
    let steps = grid.coarse_steps;
    let mut best = (lo, f64::INFINITY);
    let mut worst = f64::NEG_INFINITY;
    for k in 0..=steps {
        let t = lo + (hi - lo) * k as f64 / steps as f64;
        let v = f(t);
        worst = worst.max(v);
        if v < best.1 {
            best = (t, v);
        }
    }
    let spread = worst - best.1;

    let mut half_width = (hi - lo) / 2.0;
    for _ in 0..grid.refinement_rounds {
        half_width *= grid.shrink_factor;
        let center = best.0;
        // odd count keeps the incumbent on the grid
        let half_steps = steps / 2;
        for k in 0..=2 * half_steps {
            let t = center - half_width + half_width * k as f64 / half_steps as f64;
            let v = f(t);
            if v < best.1 {
                best = (t, v);
            }
        }
    }
    (best.0, best.1, spread)
}

fn mean_sq(p: &PairedSample, residual: impl Fn(f64, f64) -> f64) -> f64 {
    let xs = p.xs().values();
    let ys = p.ys().values();
    xs.iter()
        .zip(ys)
        .map(|(&x, &y)| residual(x, y).powi(2))
        .sum::<f64>()
        / xs.len() as f64
}

fn centroid(p: &PairedSample) -> (f64, f64) {
    let n = p.len() as f64;
    (
        p.xs().values().iter().sum::<f64>() / n,
        p.ys().values().iter().sum::<f64>() / n,
    )
}

/// Searches `θ ∈ (−π/2, π/2]` with `c = x̄·sin θ − ȳ·cos θ`.
pub fn grid_min_d(p: &PairedSample, grid: &GridSpec) -> GridResult {
    let grid = grid.sanitized();
    let (mx, my) = centroid(p);
    let objective = |theta: f64| {
        let (s, c) = theta.sin_cos();
        let offset = mx * s - my * c;
        mean_sq(p, |x, y| x * s - y * c - offset)
    };
    let lo = -FRAC_PI_2 + PI / grid.coarse_steps as f64;
    let (theta, value, spread) = refine_1d(objective, lo, FRAC_PI_2, &grid);
    let offset = mx * theta.sin() - my * theta.cos();
    let line = NormalLine::new(theta, offset).expect("finite");
    GridResult {
        params: (line.theta(), line.c()),
        objective: value,
        coarse_spread: spread,
    }
}

/// Slope bracket `|m| ≤ 10·range(dep)/range(indep) + 10`.
fn slope_bracket(indep: &[f64], dep: &[f64]) -> f64 {
    let range = |v: &[f64]| {
        let (lo, hi) = v
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
        hi - lo
    };
    let ri = range(indep);
    if ri > 0.0 {
        10.0 * range(dep) / ri + 10.0
    } else {
        10.0
    }
}

/// For each trial slope the intercept is the mean of `dep − slope·indep`,
/// the minimiser of a one-variable quadratic.
fn grid_min_slope(indep: &[f64], dep: &[f64], grid: &GridSpec) -> GridResult {
    let grid = grid.sanitized();
    let n = indep.len() as f64;
    let intercept_for = |m: f64| indep.iter().zip(dep).map(|(&u, &v)| v - m * u).sum::<f64>() / n;
    let objective = |m: f64| {
        let b = intercept_for(m);
        indep
            .iter()
            .zip(dep)
            .map(|(&u, &v)| (m * u + b - v).powi(2))
            .sum::<f64>()
            / n
    };
    let bound = slope_bracket(indep, dep);
    let (m, value, spread) = refine_1d(objective, -bound, bound, &grid);
    GridResult {
        params: (m, intercept_for(m)),
        objective: value,
        coarse_spread: spread,
    }
}

/// Searches `y = m·x + b`.
pub fn grid_min_y(p: &PairedSample, grid: &GridSpec) -> GridResult {
    grid_min_slope(p.xs().values(), p.ys().values(), grid)
}

/// Searches `x = μ·y + β`.
pub fn grid_min_x(p: &PairedSample, grid: &GridSpec) -> GridResult {
    grid_min_slope(p.ys().values(), p.xs().values(), grid)
}
