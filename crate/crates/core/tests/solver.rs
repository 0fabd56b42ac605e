mod common;

use common::*;
use rand::Rng;
use set_completion::*;

fn from(init: UnitVector, transfer_enabled: bool) -> SolverConfig {
    SolverConfig {
        init: Some(init),
        transfer_enabled,
        ..Default::default()
    }
}

/// `‖P_Ω(u wᵀ) - X_Ω‖² / ‖X_Ω‖²` straight from the entries.
fn relative_residual(u: &[f64], w: &[f64], x: &ObservedMatrix) -> f64 {
    let err: f64 = x
        .entries()
        .iter()
        .map(|e| (u[e.row] * w[e.col] - e.value).powi(2))
        .sum();
    let total: f64 = x.entries().iter().map(|e| e.value * e.value).sum();
    err / total
}

#[test]
fn transfer_crosses_the_example_barrier() {
    let x = fixture::example_matrix();
    let report = solve(&x, &from(fixture::blocked_start(), true)).unwrap();
    assert!(report.success);
    assert!(report.relative_residual <= 1e-6);
    assert!(report.transfers_performed >= 1);
    assert!(!report.stationary);
}

#[test]
fn without_transfer_the_example_stalls() {
    let x = fixture::example_matrix();
    let report = solve(&x, &from(fixture::blocked_start(), false)).unwrap();
    assert!(!report.success);
    assert_eq!(report.transfers_performed, 0);
    assert!(report.relative_residual > 0.05);
    assert!(report.final_objective >= 1.0);
    assert!(report.stationary || report.outer_iterations == 2000);
    // never crosses the contour f_1 = 8
    assert!(eval_atomic(&report.u, &x, 0).unwrap() < 8.0);
}

#[test]
fn example_succeeds_from_any_seed() {
    let x = fixture::example_matrix();
    for seed in 0..100 {
        let config = SolverConfig {
            rng_seed: seed,
            ..Default::default()
        };
        let report = solve(&x, &config).unwrap();
        assert!(report.success, "seed {seed}: {}", report.relative_residual);
    }
}

#[test]
fn reconstruction_at_generating_direction_is_exact() {
    let x = fixture::example_matrix();
    let u = fixture::generating_direction();
    let w = reconstruct(&u, &x).unwrap();
    for e in x.entries() {
        assert!((u.as_slice()[e.row] * w[e.col] - e.value).abs() < 1e-12);
    }
    let with_empty = ObservedMatrix::new(3, 3, [(0, 0, 1.0), (1, 2, 4.0)]).unwrap();
    assert_eq!(reconstruct(&u, &with_empty).unwrap()[1], 0.0);
}

#[test]
fn residual_identity() {
    let mut rng = rng(12);
    for _ in 0..50 {
        let x = random_instance(&mut rng);
        let u = random_unit(&mut rng, x.rows());
        let w = reconstruct(&u, &x).unwrap();
        let direct: f64 = x
            .entries()
            .iter()
            .map(|e| (u.as_slice()[e.row] * w[e.col] - e.value).powi(2))
            .sum();
        let f = eval_f(&u, &x).unwrap();
        assert!((direct - f).abs() <= 1e-10 * f.max(1e-300));
    }
}

#[test]
fn fully_observed_rank_one_matches_svd() {
    let mut rng = rng(5);
    for k in 0..20 {
        let (m, n) = (rng.random_range(2..15), rng.random_range(2..15));
        let inst = bench::generate_instance(m, n, 1, m * n, k).unwrap();
        let dense = nalgebra::DMatrix::from_row_slice(m, n, &inst.full);
        let svd = dense.svd(true, false);
        let u1 = svd.u.unwrap().column(0).into_owned();
        let report = solve(
            &inst.observed,
            &SolverConfig {
                rng_seed: k,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(report.success);
        // the left singular direction, up to sign
        let align: f64 = report
            .u
            .as_slice()
            .iter()
            .zip(u1.iter())
            .map(|(a, b)| a * b)
            .sum();
        assert!(align.abs() > 1.0 - 1e-6, "alignment {align}");
    }
}

#[test]
fn objective_never_increases_without_transfer() {
    let mut rng = rng(314);
    for k in 0..100 {
        let x = random_instance(&mut rng);
        let config = SolverConfig {
            transfer_enabled: false,
            max_outer_iters: 200,
            rng_seed: k,
            ..Default::default()
        };
        let report = solve(&x, &config).unwrap();
        for pair in report.objective_history.windows(2) {
            assert!(pair[1] <= pair[0] * (1.0 + 1e-12) + 1e-300, "{pair:?}");
        }
    }
}

#[test]
fn success_flag_matches_recomputed_residual() {
    let mut rng = rng(2);
    for k in 0..60 {
        let x = random_instance(&mut rng);
        let config = SolverConfig {
            rng_seed: k,
            max_outer_iters: 300,
            ..Default::default()
        };
        let report = solve(&x, &config).unwrap();
        let rel = relative_residual(report.u.as_slice(), &report.w, &x);
        assert!((rel - report.relative_residual).abs() <= 1e-10 * rel.max(1e-12));
        if (rel - config.eps_e).abs() > 1e-9 * config.eps_e {
            assert_eq!(report.success, rel < config.eps_e);
        }
    }
}

#[test]
fn repeated_solves_are_identical() {
    let mut rng = rng(9);
    for k in 0..10 {
        let x = random_instance(&mut rng);
        let config = SolverConfig {
            rng_seed: k,
            max_outer_iters: 300,
            ..Default::default()
        };
        assert_eq!(solve(&x, &config).unwrap(), solve(&x, &config).unwrap());
    }
}

#[test]
fn observer_sees_every_iteration() {
    let x = fixture::example_matrix();
    let mut events = Vec::new();
    let report = solve_with_observer(&x, &from(fixture::blocked_start(), true), |e| {
        events.push(e.clone())
    })
    .unwrap();
    assert_eq!(events.len(), report.outer_iterations);
    let first = &events[0];
    assert!((first.objective - 144.0 / 101.0).abs() < 1e-10);
    let rec = first
        .barrier
        .expect("barrier crossed on the first iteration");
    assert_eq!((rec.blocking_column, rec.blocked_column), (0, 1));
    assert!((eval_atomic(&first.transferred, &x, 0).unwrap() - 8.0).abs() < 1e-10);
}

#[test]
fn random_init_is_isotropic() {
    let draws = 10_000;
    let mut mean = [0.0; 3];
    for seed in 0..draws {
        let u = random_init(3, seed);
        assert!((dot(u.as_slice(), u.as_slice()).sqrt() - 1.0).abs() <= 1e-12);
        for (m, c) in mean.iter_mut().zip(u.as_slice()) {
            *m += c / draws as f64;
        }
    }
    assert!(mean.iter().all(|m| m.abs() < 0.05), "{mean:?}");
}
