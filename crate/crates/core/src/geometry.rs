//! Points and the three line representations used by the fitters.
//!
//! * [`SlopeInterceptLine`]: `y = m·x + b` (no vertical lines)
//! * [`InverseSlopeLine`]: `x = μ·y + β` (no horizontal lines)
//! * [`NormalLine`]: `x·sin θ − y·cos θ = c` with `θ ∈ (−π/2, π/2]` (every line)
//!
//! [`GeneralLine`] (`a·x + b·y = c`) is kept only for distance queries.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Below this `|cos θ|` a normal-form line is treated as vertical.
pub const VERTICAL_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// `y = slope·x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeInterceptLine {
    pub slope: f64,
    pub intercept: f64,
}

impl SlopeInterceptLine {
    pub fn new(slope: f64, intercept: f64) -> Result<Self> {
        if !slope.is_finite() || !intercept.is_finite() {
            return Err(Error::InvalidLine("slope and intercept must be finite"));
        }
        Ok(SlopeInterceptLine { slope, intercept })
    }

    pub fn y_at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }

    pub fn to_normal(&self) -> NormalLine {
        slope_to_normal(self)
    }
}

/// `x = slope·y + intercept`, the horizontal-offset line written with `x` as the dependent variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseSlopeLine {
    pub slope: f64,
    pub intercept: f64,
}

impl InverseSlopeLine {
    pub fn new(slope: f64, intercept: f64) -> Result<Self> {
        if !slope.is_finite() || !intercept.is_finite() {
            return Err(Error::InvalidLine("slope and intercept must be finite"));
        }
        Ok(InverseSlopeLine { slope, intercept })
    }

    pub fn x_at(&self, y: f64) -> f64 {
        self.slope * y + self.intercept
    }

    /// `dy/dx` of the line, absent when the line is vertical.
    pub fn dy_dx(&self) -> Option<f64> {
        (self.slope != 0.0).then(|| 1.0 / self.slope)
    }

    pub fn to_normal(&self) -> NormalLine {
        // x − μy = β scaled by sin θ, where cot θ = μ
        let theta = canonical_angle(1.0f64.atan2(self.slope)).0;
        NormalLine {
            theta,
            c: self.intercept * theta.sin(),
        }
    }
}

/// `x·sin θ − y·cos θ = c`, `θ` the inclination of the line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalLine {
    theta: f64,
    c: f64,
}

/// Shift `theta` by a multiple of π into `(−π/2, π/2]`; the flag is set when
/// the shift was an odd multiple (which flips the sign of `c`).
fn canonical_angle(theta: f64) -> (f64, bool) {
    let k = ((theta - FRAC_PI_2) / PI).ceil();
    let mut t = theta - k * PI;
    let mut flipped = (k as i64).rem_euclid(2) == 1;
    while t > FRAC_PI_2 {
        t -= PI;
        flipped = !flipped;
    }
    while t <= -FRAC_PI_2 {
        t += PI;
        flipped = !flipped;
    }
    (t, flipped)
}

impl NormalLine {
    /// Builds the line, canonicalising any finite angle into `(−π/2, π/2]`.
    pub fn new(theta: f64, c: f64) -> Result<Self> {
        if !theta.is_finite() || !c.is_finite() {
            return Err(Error::InvalidLine("angle and offset must be finite"));
        }
        let (theta, flipped) = canonical_angle(theta);
        Ok(NormalLine {
            theta,
            c: if flipped { -c } else { c },
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Signed residual `x·sin θ − y·cos θ − c`; its magnitude is the point's distance to the line.
    pub fn residual(&self, p: Point) -> f64 {
        let (s, c) = self.theta.sin_cos();
        p.x * s - p.y * c - self.c
    }

    pub fn to_general(&self) -> GeneralLine {
        let (s, c) = self.theta.sin_cos();
        GeneralLine {
            a: s,
            b: -c,
            c: self.c,
        }
    }

    /// The point of the line closest to the origin and a unit direction vector.
    pub fn anchor_and_direction(&self) -> (Point, Point) {
        let (s, c) = self.theta.sin_cos();
        (Point::new(self.c * s, -self.c * c), Point::new(c, s))
    }

    pub fn is_vertical(&self) -> bool {
        self.theta.cos().abs() <= VERTICAL_EPS
    }

    /// Slope `tan θ`, absent for vertical lines.
    pub fn slope(&self) -> Option<f64> {
        (!self.is_vertical()).then(|| self.theta.tan())
    }

    pub fn to_slope_intercept(&self) -> Result<SlopeInterceptLine> {
        normal_to_slope(self)
    }

    pub fn to_inverse_slope(&self) -> Result<InverseSlopeLine> {
        let (s, c) = self.theta.sin_cos();
        if s.abs() <= VERTICAL_EPS {
            return Err(Error::NotRepresentable("inverse-slope (horizontal line)"));
        }
        Ok(InverseSlopeLine {
            slope: c / s,
            intercept: self.c / s,
        })
    }
}

/// `a·x + b·y = c`, coefficients kept exactly as supplied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralLine {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl GeneralLine {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::InvalidLine("coefficients must be finite"));
        }
        if a == 0.0 && b == 0.0 {
            return Err(Error::InvalidLine("a and b are both zero"));
        }
        Ok(GeneralLine { a, b, c })
    }
}

/// Euclidean distance `|a·x + b·y − c| / √(a² + b²)`.
pub fn point_line_distance(p: Point, line: &GeneralLine) -> f64 {
    (line.a * p.x + line.b * p.y - line.c).abs() / line.a.hypot(line.b)
}

/// Converts `x·sin θ − y·cos θ = c` into `y = tan θ·x − c / cos θ`.
pub fn normal_to_slope(line: &NormalLine) -> Result<SlopeInterceptLine> {
    let (s, c) = line.theta.sin_cos();
    if c.abs() <= VERTICAL_EPS {
        return Err(Error::NotRepresentable("slope-intercept (vertical line)"));
    }
    Ok(SlopeInterceptLine {
        slope: s / c,
        intercept: -line.c / c,
    })
}

pub fn slope_to_normal(line: &SlopeInterceptLine) -> NormalLine {
    let theta = line.slope.atan();
    NormalLine {
        theta,
        c: -line.intercept * theta.cos(),
    }
}
