//! Means, variances and covariances of paired samples.
//!
//! All quantities use the population normalisation (divide by `n`):
//!
//! ```text
//! mean(x)   = (1/n) Σ x_i
//! var(x)    = mean(x²) − mean(x)²
//! cov(x, y) = mean(xy) − mean(x)·mean(y)
//! ```
//!
//! Evaluation goes through centred deviations rather than the raw-moment
//! differences above, so a sample and its translate produce the same
//! variance and covariance to rounding.

use crate::error::{Error, Result};
use crate::geometry::Point;

/// A sequence of at least two finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample(Vec<f64>);

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewValues(values.len()));
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(Sample(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Sample::new(values)
    }
}

/// Point set `(x_i, y_i)`, stored as two equal-length samples.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSample {
    xs: Sample,
    ys: Sample,
}

impl PairedSample {
    pub fn new(xs: Sample, ys: Sample) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch {
                xs: xs.len(),
                ys: ys.len(),
            });
        }
        Ok(PairedSample { xs, ys })
    }

    pub fn from_vecs(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch {
                xs: xs.len(),
                ys: ys.len(),
            });
        }
        PairedSample::new(Sample::new(xs)?, Sample::new(ys)?)
    }

    pub fn from_points(points: &[Point]) -> Result<Self> {
        let (xs, ys) = points.iter().map(|p| (p.x, p.y)).unzip();
        PairedSample::from_vecs(xs, ys)
    }

    pub fn xs(&self) -> &Sample {
        &self.xs
    }

    pub fn ys(&self) -> &Sample {
        &self.ys
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.xs
            .values()
            .iter()
            .zip(self.ys.values())
            .map(|(&x, &y)| Point::new(x, y))
    }
}

/// Sufficient statistics shared by all three fitting methods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub n: usize,
    pub mean_x: f64,
    pub mean_y: f64,
    pub var_x: f64,
    pub var_y: f64,
    pub cov_xy: f64,
    pub mean_xx: f64,
    pub mean_yy: f64,
    pub mean_xy: f64,
}

impl SummaryStats {
    pub fn centroid(&self) -> Point {
        Point::new(self.mean_x, self.mean_y)
    }

    /// `var(x)·var(y) − cov(x,y)²`; nonnegative, zero exactly for collinear data.
    pub fn cs_gap(&self) -> f64 {
        self.var_x * self.var_y - self.cov_xy * self.cov_xy
    }
}

fn accurate_mean(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let rough = values.iter().sum::<f64>() / n;
    // one correction pass; constant input comes back bit-exact
    rough + values.iter().map(|v| v - rough).sum::<f64>() / n
}

/// `(1/n) Σ (a_i − ā)(b_i − b̄)` with the usual first-order rounding correction.
fn centred_product(a: &[f64], mean_a: f64, b: &[f64], mean_b: f64) -> f64 {
    let n = a.len() as f64;
    let (mut sum_prod, mut sum_da, mut sum_db) = (0.0, 0.0, 0.0);
    for (&ai, &bi) in a.iter().zip(b) {
        let da = ai - mean_a;
        let db = bi - mean_b;
        sum_prod += da * db;
        sum_da += da;
        sum_db += db;
    }
    (sum_prod - sum_da * sum_db / n) / n
}

pub fn mean(s: &Sample) -> f64 {
    accurate_mean(s.values())
}

pub fn variance(s: &Sample) -> f64 {
    let m = mean(s);
    centred_product(s.values(), m, s.values(), m).max(0.0)
}

pub fn covariance(p: &PairedSample) -> f64 {
    let (xs, ys) = (p.xs.values(), p.ys.values());
    centred_product(xs, accurate_mean(xs), ys, accurate_mean(ys))
}

pub fn summarize(p: &PairedSample) -> SummaryStats {
    let (xs, ys) = (p.xs.values(), p.ys.values());
    let n = xs.len();
    let nf = n as f64;

    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }

    let mean_x = accurate_mean(xs);
    let mean_y = accurate_mean(ys);
    SummaryStats {
        n,
        mean_x,
        mean_y,
        var_x: centred_product(xs, mean_x, xs, mean_x).max(0.0),
        var_y: centred_product(ys, mean_y, ys, mean_y).max(0.0),
        cov_xy: centred_product(xs, mean_x, ys, mean_y),
        mean_xx: sxx / nf,
        mean_yy: syy / nf,
        mean_xy: sxy / nf,
    }
}
