use std::f64::consts::{FRAC_PI_2, PI};

use linefit::{
    apply_motion_points, compare, fit, fit_d, fit_x, fit_y, gen_circle, gen_noisy_line,
    gen_parallel, invariance_report, objective_d, objective_x, objective_y, resolve_case,
    summarize, tan_theta, trig_from_case, variance, BoundOrdering, CaseTag, CircleSpec, FittedLine,
    Method, NoisyLineSpec, OrthogonalCase, OrthogonalFit, OrthogonalOrdering, PairedSample,
    ParallelSpec, Point, RigidMotion, Sample,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn points(min_len: usize, max_len: usize) -> impl Strategy<Value = PairedSample> {
    prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), min_len..=max_len).prop_map(|v| {
        let (xs, ys) = v.into_iter().unzip();
        PairedSample::from_vecs(xs, ys).unwrap()
    })
}

fn random_sample(rng: &mut ChaCha8Rng, n: usize) -> PairedSample {
    let (xs, ys) = (0..n)
        .map(|_| (rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
        .unzip();
    PairedSample::from_vecs(xs, ys).unwrap()
}

fn pairwise(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    let mut acc = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            acc += (x[i] - x[j]) * (y[i] - y[j]);
        }
    }
    acc / (n * n) as f64
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn covariance_three_ways(p in points(2, 40)) {
        let s = summarize(&p);
        let (x, y) = (p.xs().values(), p.ys().values());
        let n = x.len() as f64;
        let centred = x.iter().zip(y).map(|(a, b)| (a - s.mean_x) * (b - s.mean_y)).sum::<f64>() / n;
        let scale = s.var_x.sqrt() * s.var_y.sqrt() + 1e-300;
        prop_assert!((s.cov_xy - centred).abs() <= 1e-12 * scale.max(s.cov_xy.abs()));
        prop_assert!((s.cov_xy - pairwise(x, y)).abs() <= 1e-12 * scale.max(s.cov_xy.abs()));
        prop_assert!((s.var_x - pairwise(x, x)).abs() <= 1e-12 * s.var_x.max(1e-300));
    }

    #[test]
    fn variance_nonnegative_and_zero_only_on_constants(v in prop::collection::vec(-1e3f64..1e3, 2..30), k in -1e3f64..1e3, n in 2usize..30) {
        let s = Sample::new(v.clone()).unwrap();
        let var = variance(&s);
        prop_assert!(var >= 0.0);
        let spread = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - v.iter().cloned().fold(f64::INFINITY, f64::min);
        prop_assert_eq!(var == 0.0, spread == 0.0);
        prop_assert_eq!(variance(&Sample::new(vec![k; n]).unwrap()), 0.0);
    }

    #[test]
    fn cauchy_schwarz_gap(p in points(2, 30)) {
        let s = summarize(&p);
        prop_assert!(s.cs_gap() >= -1e-12 * (s.var_x * s.var_y + 1.0));
    }

    #[test]
    fn cauchy_schwarz_zero_on_lines(xs in prop::collection::vec(-50.0f64..50.0, 2..30), a in -20.0f64..20.0, b in -50.0f64..50.0) {
        let ys = xs.iter().map(|x| a * x + b).collect();
        let s = summarize(&PairedSample::from_vecs(xs, ys).unwrap());
        prop_assert!(s.cs_gap().abs() <= 1e-12 * (s.var_x * s.var_y + 1.0));
    }

    #[test]
    fn stats_translation_invariant(p in points(2, 30), u in -1e3f64..1e3, v in -1e3f64..1e3) {
        let s = summarize(&p);
        let t = summarize(&apply_motion_points(&p, &RigidMotion::Translation { u, v }));
        let tol = 1e-12 * (s.var_x + s.var_y);
        prop_assert!((s.var_x - t.var_x).abs() <= tol);
        prop_assert!((s.var_y - t.var_y).abs() <= tol);
        prop_assert!((s.cov_xy - t.cov_xy).abs() <= tol);
    }

    #[test]
    fn centroid_on_every_line(p in points(2, 30)) {
        let s = summarize(&p);
        let c = s.centroid();
        for m in Method::ALL {
            if let Ok(r) = fit(&p, m) {
                let scale = 1.0 + c.x.abs() + c.y.abs();
                prop_assert!(r.line.equation_residual(c).abs() <= 1e-10 * scale);
            }
        }
    }

    #[test]
    fn fitted_objective_is_optimal(p in points(3, 30), dt in -0.5f64..0.5, dc in -2.0f64..2.0, ds in -0.5f64..0.5) {
        let y = fit_y(&p).unwrap();
        let FittedLine::SlopeIntercept(l) = y.line else { unreachable!() };
        prop_assert!(y.objective_min <= objective_y(&p, l.slope + ds, l.intercept + dc) + 1e-12);
        let x = fit_x(&p).unwrap();
        let FittedLine::InverseSlope(l) = x.line else { unreachable!() };
        prop_assert!(x.objective_min <= objective_x(&p, l.slope + ds, l.intercept + dc) + 1e-12);
        let d = fit(&p, Method::D).unwrap();
        if let Some(l) = d.line.normal_form() {
            prop_assert!(d.objective_min <= objective_d(&p, l.theta() + dt, l.c() + dc) + 1e-12 * (1.0 + d.objective_min));
            let direct = objective_d(&p, l.theta(), l.c());
            prop_assert!((direct - d.objective_min).abs() <= 1e-10 * (1.0 + direct));
        }
    }

    #[test]
    fn tan_two_theta_relation(p in points(3, 30)) {
        let s = summarize(&p);
        let case = resolve_case(&s);
        if let Some(e) = case.e {
            let o = trig_from_case(&case).unwrap();
            prop_assert!((o.cos * o.cos + o.sin * o.sin - 1.0).abs() <= 1e-14);
            let lhs = (2.0 * o.theta).tan() * (s.var_x - s.var_y);
            prop_assert!((lhs - 2.0 * s.cov_xy).abs() <= 1e-10 * (2.0 * s.cov_xy).abs().max(1e-10 * (s.var_x + s.var_y)), "E {}", e);
        }
    }

    #[test]
    fn rotation_stat_identities(p in points(2, 30), phi in -PI..PI) {
        // s: stats of the original data, r: stats after rotating by φ
        let s = summarize(&p);
        let r = summarize(&apply_motion_points(&p, &RigidMotion::rotation_about_origin(phi)));
        let (sn, cs) = phi.sin_cos();
        let tol = 1e-10 * (s.var_x + s.var_y + 1.0);
        prop_assert!((s.var_x - (r.var_x * cs * cs + r.cov_xy * (2.0 * phi).sin() + r.var_y * sn * sn)).abs() <= tol);
        prop_assert!((s.var_y - (r.var_x * sn * sn - r.cov_xy * (2.0 * phi).sin() + r.var_y * cs * cs)).abs() <= tol);
        prop_assert!((2.0 * s.cov_xy - (-r.var_x * (2.0 * phi).sin() + 2.0 * r.cov_xy * (2.0 * phi).cos() + r.var_y * (2.0 * phi).sin())).abs() <= tol);
    }

    #[test]
    fn e_transforms_by_tangent_addition(p in points(3, 30), phi in -1.4f64..1.4) {
        let s = summarize(&p);
        let r = summarize(&apply_motion_points(&p, &RigidMotion::rotation_about_origin(phi)));
        let (Some(e), Some(e_rot)) = (resolve_case(&s).e, resolve_case(&r).e) else { return Ok(()) };
        let t = (2.0 * phi).tan();
        let denom = 1.0 - e * t;
        prop_assume!(denom.abs() > 1e-3 && e.abs() < 1e3 && e_rot.abs() < 1e3 && t.abs() < 1e3);
        let predicted = (e + t) / denom;
        prop_assert!((predicted - e_rot).abs() <= 1e-8 * (1.0 + e_rot.abs()), "{predicted} vs {e_rot}");
    }
}

#[test]
fn arctan_and_closed_forms_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for tag in [CaseTag::I, CaseTag::II, CaseTag::III, CaseTag::IV] {
        for _ in 0..1000 {
            let magnitude = 10f64.powf(rng.gen_range(-10.0..6.0));
            let e = match tag {
                CaseTag::I | CaseTag::IV => magnitude,
                _ => -magnitude,
            };
            let case = OrthogonalCase { tag, e: Some(e) };
            let o = trig_from_case(&case).unwrap();
            let theta = match tag {
                CaseTag::I | CaseTag::II => 0.5 * e.atan(),
                CaseTag::III => 0.5 * e.atan() + FRAC_PI_2,
                _ => 0.5 * e.atan() - FRAC_PI_2,
            };
            assert!((o.cos - theta.cos()).abs() <= 1e-12, "{tag} E={e}");
            assert!((o.sin - theta.sin()).abs() <= 1e-12, "{tag} E={e}");
            assert!((o.cos.powi(2) + o.sin.powi(2) - 1.0).abs() <= 1e-14);
            if let Some(t) = tan_theta(&case) {
                // compare angles; tan itself is ill-conditioned near vertical
                assert!((t.atan() - theta).sin().abs() <= 1e-12, "{tag} E={e}: {t}");
            }
        }
    }
}

#[test]
fn slope_signs_and_orderings_on_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut gated = 0;
    for _ in 0..500 {
        let n = rng.gen_range(3..40);
        let base = random_sample(&mut rng, n);
        // correlate the data so every case shows up
        let k = rng.gen_range(-3.0..3.0);
        let (xs, ys): (Vec<f64>, Vec<f64>) = base.points().map(|q| (q.x, q.y + k * q.x)).unzip();
        let p = PairedSample::from_vecs(xs, ys).unwrap();
        let r = compare(&p);
        if r.case.tag == CaseTag::Isotropic || summarize(&p).cov_xy == 0.0 {
            continue;
        }
        assert_eq!(r.signs_agree, Some(true));
        let m = r.slope_y.unwrap();
        let mx = r.slope_x.unwrap();
        assert!(m.signum() == mx.signum());
        assert_eq!(r.ordering_e, BoundOrdering::Holds);
        assert_ne!(r.ordering_f, OrthogonalOrdering::Violated);
        if r.ordering_f == OrthogonalOrdering::Holds {
            gated += 1;
        }
    }
    assert!(gated > 400);
}

#[test]
fn slope_ordering_gate_in_cases_iii_iv() {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    let mut seen = 0;
    for _ in 0..2000 {
        let n = rng.gen_range(3..30);
        let (xs, ys): (Vec<f64>, Vec<f64>) = (0..n)
            .map(|_| {
                let x = rng.gen_range(-1.0..1.0);
                (x, rng.gen_range(-3.0..3.0) + rng.gen_range(-2.0..2.0) * x)
            })
            .unzip();
        let p = PairedSample::from_vecs(xs, ys).unwrap();
        let s = summarize(&p);
        let r = compare(&p);
        if !matches!(r.case.tag, CaseTag::III | CaseTag::IV) || r.slope_x.is_none() {
            continue;
        }
        if 2.0 * s.cov_xy.powi(2) >= s.var_x * (s.var_x - s.var_y).abs() {
            assert_eq!(r.ordering_f, OrthogonalOrdering::Holds);
            seen += 1;
        } else {
            assert_eq!(r.ordering_f, OrthogonalOrdering::ConditionNotMet);
        }
    }
    assert!(seen > 0);
}

#[test]
fn exact_lines_are_recovered() {
    let xs: Vec<f64> = vec![-3.0, -1.25, 0.0, 0.5, 2.0, 4.75];
    for alpha in [0.0, 0.1, -0.1, 1.0, -1.0, 10.0, -10.0] {
        for b in [0.0, 2.5, -7.0] {
            let ys = xs.iter().map(|x| alpha * x + b).collect();
            let p = PairedSample::from_vecs(xs.clone(), ys).unwrap();
            let FittedLine::SlopeIntercept(y) = fit_y(&p).unwrap().line else {
                unreachable!()
            };
            assert!((y.slope - alpha).abs() < 1e-10 && (y.intercept - b).abs() < 1e-10);
            if alpha != 0.0 {
                let FittedLine::InverseSlope(x) = fit_x(&p).unwrap().line else {
                    unreachable!()
                };
                assert!((x.slope - 1.0 / alpha).abs() < 1e-10);
                assert!((x.intercept + b / alpha).abs() < 1e-10);
            } else {
                assert!(fit_x(&p).is_err());
            }
            let d = fit_d(&p)
                .line()
                .copied()
                .unwrap()
                .to_slope_intercept()
                .unwrap();
            assert!(
                (d.slope - alpha).abs() < 1e-10,
                "alpha {alpha}: {}",
                d.slope
            );
            assert!((d.intercept - b).abs() < 1e-10);
        }
    }
    let p = PairedSample::from_vecs(vec![-2.0; 5], vec![0.0, 1.0, 3.0, -4.0, 2.2]).unwrap();
    assert!(fit_y(&p).is_err());
    let FittedLine::InverseSlope(x) = fit_x(&p).unwrap().line else {
        unreachable!()
    };
    assert_eq!((x.slope, x.intercept), (0.0, -2.0));
    let l = *fit_d(&p).line().unwrap();
    assert_eq!(l.theta(), FRAC_PI_2);
    assert!((l.c() + 2.0).abs() < 1e-12);
}

#[test]
fn d_fit_rotates_with_the_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.gen_range(3..40);
        let p = random_sample(&mut rng, n);
        let phi = rng.gen_range(-PI..PI);
        let g = RigidMotion::rotation_about_centroid(phi, &p);
        let r = invariance_report(&p, &g, Method::D);
        assert!(r.is_invariant_within(1e-9), "{:?}", r.discrepancy);
    }
    for n in [3, 4, 7, 12] {
        let p = gen_circle(&CircleSpec::unit(n, 0.3)).unwrap();
        let g = RigidMotion::Rotation {
            phi: 1.1,
            center: Point::new(2.0, -1.0),
        };
        let moved = fit_d(&apply_motion_points(&p, &g));
        let OrthogonalFit::AllLinesThroughCentroid { centroid, .. } = moved else {
            panic!("n={n}")
        };
        let expected = g.apply(summarize(&p).centroid());
        assert!(centroid.distance(&expected) < 1e-10);
    }
}

#[test]
fn translations_shift_intercepts_by_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(3..30);
        let p = random_sample(&mut rng, n);
        let (u, v) = (rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0));
        let q = apply_motion_points(&p, &RigidMotion::Translation { u, v });

        let (FittedLine::SlopeIntercept(a), FittedLine::SlopeIntercept(b)) =
            (fit_y(&p).unwrap().line, fit_y(&q).unwrap().line)
        else {
            unreachable!()
        };
        assert!(close(a.slope, b.slope, 1e-10));
        assert!(
            (b.intercept - (a.intercept - a.slope * u + v)).abs()
                < 1e-10 * (1.0 + a.slope.abs()) * 100.0
        );

        let (FittedLine::InverseSlope(a), FittedLine::InverseSlope(b)) =
            (fit_x(&p).unwrap().line, fit_x(&q).unwrap().line)
        else {
            unreachable!()
        };
        assert!(close(a.slope, b.slope, 1e-10));
        assert!(
            (b.intercept - (a.intercept - a.slope * v + u)).abs()
                < 1e-10 * (1.0 + a.slope.abs()) * 100.0
        );

        let (Some(a), Some(b)) = (fit_d(&p).line().copied(), fit_d(&q).line().copied()) else {
            continue;
        };
        assert!((a.theta() - b.theta()).abs() < 1e-10);
        let expected_c = a.c() + u * a.theta().sin() - v * a.theta().cos();
        assert!((b.c() - expected_c).abs() < 1e-10 * 100.0);

        for m in Method::ALL {
            assert!(invariance_report(&p, &RigidMotion::Translation { u, v }, m)
                .is_invariant_within(1e-9));
        }
    }
}

#[test]
fn circle_sums_match_trigonometric_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    // Σ_{i=1}^{n} cos(iθ) = sin((n + 1/2)θ) / (2 sin(θ/2)) − 1/2
    // Σ_{i=1}^{n} sin(iθ) = sin((n+1)θ/2) sin(nθ/2) / sin(θ/2)
    let cos_sum = |n: f64, t: f64| ((n + 0.5) * t).sin() / (2.0 * (t / 2.0).sin()) - 0.5;
    let sin_sum =
        |n: f64, t: f64| ((n + 1.0) * t / 2.0).sin() * (n * t / 2.0).sin() / (t / 2.0).sin();
    for n in 3..=30usize {
        let nf = n as f64;
        let step = 2.0 * PI / nf;
        let mean_x = cos_sum(nf, step) / nf;
        let mean_y = sin_sum(nf, step) / nf;
        let var_x = 0.5 + cos_sum(nf, 2.0 * step) / (2.0 * nf);
        let var_y = 0.5 - cos_sum(nf, 2.0 * step) / (2.0 * nf);
        let cov = sin_sum(nf, 2.0 * step) / (2.0 * nf);
        for k in 0..11 {
            let phase = if k == 0 {
                0.0
            } else {
                rng.gen_range(0.0..2.0 * PI)
            };
            let p = gen_circle(&CircleSpec::unit(n, phase)).unwrap();
            let s = summarize(&p);
            assert!((s.mean_x - mean_x).abs() < 1e-12 && (s.mean_y - mean_y).abs() < 1e-12);
            assert!((s.var_x - var_x).abs() < 1e-12 && (s.var_y - var_y).abs() < 1e-12);
            assert!((s.cov_xy - cov).abs() < 1e-12, "n={n}");

            let FittedLine::SlopeIntercept(y) = fit_y(&p).unwrap().line else {
                unreachable!()
            };
            assert!(y.slope.abs() < 1e-10 && y.intercept.abs() < 1e-10);
            let FittedLine::InverseSlope(x) = fit_x(&p).unwrap().line else {
                unreachable!()
            };
            assert!(x.slope.abs() < 1e-10 && x.intercept.abs() < 1e-10);
            assert!(fit_d(&p).is_degenerate());
        }
    }
}

#[test]
fn ladder_pairs_are_perpendicular_rungs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let t = Sample::new((0..12).map(|_| rng.gen_range(-20.0..20.0)).collect()).unwrap();
        let m = rng.gen_range(-5.0..5.0);
        let b = rng.gen_range(0.1..30.0);
        let p = gen_parallel(&ParallelSpec::Slanted {
            slope: m,
            offset: b,
            t,
        })
        .unwrap();
        let pts: Vec<Point> = p.points().collect();
        for pair in pts.chunks(2) {
            let dot = (pair[1].x - pair[0].x) + m * (pair[1].y - pair[0].y);
            assert!(dot.abs() < 1e-12 * (1.0 + b * (1.0 + m.abs())), "{dot}");
        }
    }
}

#[test]
fn collinearity_flag_separates_exact_and_noisy_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for seed in 0..100 {
        let slope = rng.gen_range(-2.0..2.0);
        let intercept = rng.gen_range(-1.0..1.0);
        let exact = NoisyLineSpec {
            slope,
            intercept,
            n: 25,
            x_range: (-1.0, 1.0),
            perturbation: 0.0,
            seed,
        };
        assert!(compare(&gen_noisy_line(&exact).unwrap()).collinear);

        let noisy = NoisyLineSpec {
            perturbation: 10f64.powf(rng.gen_range(-4.0..0.0)),
            ..exact
        };
        let r = compare(&gen_noisy_line(&noisy).unwrap());
        assert!(!r.collinear, "perturbation {}", noisy.perturbation);
        assert!(r.cs_gap > 0.0);
    }
}

#[test]
fn y_minimum_times_var_x_is_cs_gap() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let n = rng.gen_range(3..30);
        let p = random_sample(&mut rng, n);
        let s = summarize(&p);
        let r = compare(&p);
        let y = fit_y(&p).unwrap();
        assert!(close(y.objective_min * s.var_x, r.cs_gap, 1e-10));
    }
}
