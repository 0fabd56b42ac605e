mod common;

use std::f64::consts::PI;

use common::*;
use proptest::prelude::*;
use set_completion::geodesic::{bracket_by, golden_by, GeodesicObjective, C1, C2};
use set_completion::*;

#[test]
fn unit_norm_and_half_turn_symmetry() {
    let mut rng = rng(41);
    for k in 0..1000 {
        let x = if k % 10 == 0 {
            fixture::example_matrix()
        } else {
            random_dense_observations(&mut rng, 3 + k % 7, 4, 0.6)
        };
        let ray = random_ray(&mut rng, x.rows());
        let t = PI * (k as f64 + 0.5) / 1000.0;
        let u = geodesic_point(&ray, t);
        let n = dot(u.as_slice(), u.as_slice()).sqrt();
        assert!((n - 1.0).abs() <= 1e-10);
        let f = eval_f(&u, &x).unwrap();
        let f_neg = eval_f(&u.negated(), &x).unwrap();
        let f_shift = eval_f(&geodesic_point(&ray, t + PI), &x).unwrap();
        assert!((f - f_neg).abs() <= 1e-10);
        assert!((f - f_shift).abs() <= 1e-10);
    }
}

#[test]
fn profile_values_match_projection() {
    let mut rng = rng(7);
    for _ in 0..50 {
        let x = random_instance(&mut rng);
        let ray = random_ray(&mut rng, x.rows());
        let objective = GeodesicObjective::new(&ray, &x).unwrap();
        for _ in 0..20 {
            let t = rand::Rng::random_range(&mut rng, 0.0..PI);
            let direct = direct_value(&ray, &x, t);
            assert!((objective.value(t) - direct).abs() <= 1e-10 * direct.max(1.0));
        }
    }
}

#[test]
fn bracket_returns_second_probe_on_immediate_rise() {
    // x_Ω = (1, 0) is fitted exactly by u = e1; along h = e2 the misfit is sin² t
    let x = ObservedMatrix::new(2, 1, [(0, 0, 1.0), (1, 0, 0.0)]).unwrap();
    let ray = GeodesicRay::new(UnitVector::basis(2, 0), vec![0.0, 1.0]).unwrap();
    let t_max = bracket_minimum(&ray, &x, 1e-9).unwrap();
    assert_eq!(t_max, C2 * 1e-9 * PI);
    let (grid_min, _) = grid_extrema(100_000, |t| direct_value(&ray, &x, t));
    assert!(grid_min <= t_max);
}

#[test]
fn bracket_at_blocked_start_contains_first_minimizer() {
    let x = fixture::example_matrix();
    let ray = descent_ray(&fixture::blocked_start(), &x).unwrap();
    let t_max = bracket_minimum(&ray, &x, 1e-9).unwrap();
    assert!(t_max > 0.0 && t_max <= PI);

    // grid oracle: first local minimizer of f along the ray
    let n = 100_000;
    let vals: Vec<f64> = (0..n)
        .map(|k| direct_value(&ray, &x, PI * k as f64 / n as f64))
        .collect();
    let first_local = (1..n - 1)
        .find(|&k| vals[k] <= vals[k - 1] && vals[k] <= vals[k + 1])
        .map(|k| PI * k as f64 / n as f64)
        .unwrap();
    assert!(first_local <= t_max, "{first_local} > {t_max}");

    let best = golden_section(&ray, &x, t_max, 10).unwrap();
    assert!(best.value <= eval_f(ray.base(), &x).unwrap());
    // the line search stops in front of the contour f_1 = 8
    assert!(eval_atomic(&best.point, &x, 0).unwrap() < 8.0);
}

/// One observed column whose misfit falls from `t = 0` into its minimizer.
fn descending_single_column(
    rng: &mut rand_chacha::ChaCha8Rng,
) -> (ObservedMatrix, GeodesicRay, f64) {
    loop {
        let m = rand::Rng::random_range(&mut *rng, 2..6);
        let values = gaussian(rng, m);
        let x =
            ObservedMatrix::new(m, 1, values.iter().enumerate().map(|(i, v)| (i, 0, *v))).unwrap();
        let ray = random_ray(rng, m);
        let prof = atomic_profile(&ray, &x, 0).unwrap();
        let Ok(ext) = atomic_extrema(&prof) else {
            continue;
        };
        // unimodal on [0, t_min] and beyond up to t_max
        if prof.slope(0.0) < -1e-3 && ext.t_min < ext.t_max && ext.t_min > 0.05 {
            return (x, ray, ext.t_min);
        }
    }
}

#[test]
fn golden_section_finds_closed_form_minimizer() {
    let mut rng = rng(99);
    for _ in 0..200 {
        let (x, ray, t_star) = descending_single_column(&mut rng);
        let t_max = bracket_minimum(&ray, &x, 1e-9).unwrap();
        assert!(t_star <= t_max);
        let best = golden_section(&ray, &x, t_max, 10).unwrap();
        assert!(
            (best.t - t_star).abs() <= C1.powi(10) * t_max,
            "t* {} analytic {t_star} t_max {t_max}",
            best.t
        );
        assert_eq!(best.evaluations, 14);
    }
}

#[test]
fn golden_section_bracket_width() {
    let out = golden_by(|t| (t - 1.3).powi(2), PI, 10);
    assert!(out.interval.1 - out.interval.0 <= 0.0081 * PI);
    assert!((C1.powi(10) - 0.0081).abs() < 1e-4);
}

#[test]
fn constant_objective_returns_base_value() {
    let x = ObservedMatrix::new(4, 2, [(0, 0, 0.0), (3, 1, 0.0)]).unwrap();
    let mut rng = rng(3);
    let ray = random_ray(&mut rng, 4);
    let t_max = bracket_minimum(&ray, &x, 1e-9).unwrap();
    let best = golden_section(&ray, &x, t_max, 10).unwrap();
    assert_eq!(
        eval_f(&best.point, &x).unwrap(),
        eval_f(ray.base(), &x).unwrap()
    );
}

#[test]
fn counted_evaluations() {
    let mut calls = 0;
    let t_max = bracket_by(
        |t| {
            calls += 1;
            (t - 0.5).powi(2)
        },
        1e-9,
    );
    assert!(calls > 2 && t_max < 1.0);
    let mut calls = 0;
    golden_by(
        |t| {
            calls += 1;
            (t - 0.5).powi(2)
        },
        t_max,
        10,
    );
    assert_eq!(calls, 14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn line_search_never_increases_f(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let x = random_dense_observations(&mut rng, 6, 6, 0.5);
        let ray = random_ray(&mut rng, 6);
        let f0 = eval_f(ray.base(), &x).unwrap();
        let best = line_search(&ray, &x, 1e-9, 10).unwrap();
        prop_assert!(best.value <= f0 + 1e-12);
        prop_assert!(eval_f(&best.point, &x).unwrap() <= f0 + 1e-12 * f0.max(1.0));
    }
}
