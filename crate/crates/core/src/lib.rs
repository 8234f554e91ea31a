//! Least-squares line fitting by vertical, horizontal and perpendicular offsets.
//!
//! ```
//! use linefit::{fit_d, fit_y, FittedLine, PairedSample};
//!
//! let p = PairedSample::from_vecs(vec![0.0, 1.0, 2.0], vec![0.0, 0.0, 1.0]).unwrap();
//! let FittedLine::SlopeIntercept(y) = fit_y(&p).unwrap().line else { unreachable!() };
//! assert!((y.slope - 0.5).abs() < 1e-12);
//!
//! let d = fit_d(&p).line().unwrap().to_slope_intercept().unwrap();
//! assert!((d.slope - 0.53518).abs() < 1e-5);
//! ```

pub mod diagnostics;
pub mod error;
pub mod fit;
pub mod generate;
pub mod geometry;
pub mod oracle;
pub mod stats;
pub mod transform;

pub use diagnostics::{
    compare, compare_stats, BoundOrdering, ComparisonReport, OrthogonalOrdering, OrthogonalSlope,
};
pub use error::{Error, Result};
pub use fit::{
    fit, fit_d, fit_d_stats, fit_stats, fit_x, fit_x_stats, fit_y, fit_y_stats, objective_d,
    objective_x, objective_y, resolve_case, resolve_case_with, tan_theta, trig_from_case, CaseTag,
    FitReport, FittedLine, Method, Orientation, OrthogonalCase, OrthogonalFit, Tolerances,
};
pub use generate::{
    gen_circle, gen_noisy_line, gen_parallel, CircleSpec, NoisyLineSpec, ParallelSpec,
};
pub use geometry::{
    normal_to_slope, point_line_distance, slope_to_normal, GeneralLine, InverseSlopeLine,
    NormalLine, Point, SlopeInterceptLine,
};
pub use stats::{covariance, mean, summarize, variance, PairedSample, Sample, SummaryStats};
pub use transform::{
    apply_motion_points, invariance_report, transform_line, Discrepancy, InvarianceReport,
    RigidMotion,
};
