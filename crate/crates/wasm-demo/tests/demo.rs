use std::f64::consts::PI;

use set_completion::{eval_f, fixture};
use set_wasm_demo::*;

#[test]
fn chart_round_trip() {
    for (y, z) in [(0.0, 0.0), (0.5, 0.5), (-0.1, -0.1), (3.0, -2.0)] {
        let (y2, z2) = chart_coords(&chart_point(y, z));
        assert!((y - y2).abs() < 1e-12 && (z - z2).abs() < 1e-12);
    }
    let (y, z) = chart_coords(&fixture::blocked_start());
    assert!((y + 0.1).abs() < 1e-15 && (z + 0.1).abs() < 1e-15);
    let (y, z) = chart_coords(&fixture::generating_direction());
    assert!((y - 0.5).abs() < 1e-15 && (z - 0.5).abs() < 1e-15);
}

#[test]
fn landscape_peaks_on_the_diagonal() {
    let res = 40;
    let grid = landscape(1.0, res);
    assert_eq!(grid.len(), 2 * res * res);
    for k in 0..res {
        // cell centres with z = -y
        let cell = (res - 1 - k) * res + k;
        assert!((grid[2 * cell + 1] - 8.0).abs() < 1e-10);
    }
    assert!(grid.chunks(2).all(|c| c[0] >= 0.0 && c[1] <= 8.0 + 1e-12));
    let x = fixture::example_matrix();
    assert_eq!(
        grid[0],
        eval_f(&chart_point(-1.0 + 1.0 / 40.0, -1.0 + 1.0 / 40.0), &x).unwrap()
    );
}

#[test]
fn paths_from_the_blocked_start() {
    let on = solve_path(-0.1, -0.1, true, 2000);
    assert!(on.success());
    assert!(on.relative_residual() <= 1e-6);
    assert_eq!(on.transfers(), 1);
    let jumps = on.jumps();
    assert_eq!(jumps.len(), 4);
    // the jump lands on the contour z = -y
    assert!((jumps[2] + jumps[3]).abs() < 1e-9);
    let points = on.points();
    assert_eq!(&points[..2], &[-0.1, -0.1]);
    let n = points.len();
    assert!((points[n - 2] - 0.5).abs() < 1e-2 && (points[n - 1] - 0.5).abs() < 1e-2);
    assert_eq!(on.objective().len(), on.iterations() + 1);

    let off = solve_path(-0.1, -0.1, false, 2000);
    assert!(!off.success());
    assert_eq!(off.transfers(), 0);
    assert!(off.jumps().is_empty());
    // every iterate stays on the starting side of the contour
    assert!(off.points().chunks(2).all(|p| p[0] + p[1] < 0.0));
}

#[test]
fn profile_at_the_blocked_start() {
    let prof = geodesic_profile(-0.1, -0.1, 1000).unwrap();
    assert_eq!(prof.t().len(), 1000);
    assert_eq!((prof.blocking(), prof.blocked()), (0, 1));
    assert!(0.0 < prof.t_o() && prof.t_o() < prof.t_p() && prof.t_p() < PI);
    assert!(prof.step() < prof.t_o());
    let (f, f1, f2) = (prof.f(), prof.f1(), prof.f2());
    assert!((f[0] - 144.0 / 101.0).abs() < 1e-10);
    for k in 0..1000 {
        assert!((f[k] - f1[k] - f2[k]).abs() < 1e-12);
    }
    let peak = f1.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    assert!((peak - 8.0).abs() < 1e-3);
}

#[test]
fn profile_without_barrier_or_gradient() {
    let prof = geodesic_profile(0.6, 0.4, 100).unwrap();
    assert!(prof.t_o().is_nan());
    assert_eq!(prof.blocking(), -1);
    assert!(geodesic_profile(0.5, 0.5, 100).is_none());
}
