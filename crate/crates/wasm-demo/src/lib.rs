//! Browser demo on the 3x2 barrier example
//!
//! ```text
//!     [ ?  2 ]
//! X = [ 2  ? ]
//!     [ 2  1 ]
//! ```
//!
//! Unit vectors are shown in the chart `(y, z) ↦ (1, y, z) / ‖(1, y, z)‖`,
//! which identifies `u` with `-u` and maps geodesics to straight lines. The
//! generating direction sits at `(0.5, 0.5)`, the blocked start at
//! `(-0.1, -0.1)` and the contour `f_1 = 8` is the diagonal `z = -y`.

use set_completion::{
    descent_ray, eval_atomic, eval_f, fixture, geodesic_point, line_search, solve_with_observer,
    transfer, ObservedMatrix, SolverConfig, UnitVector,
};
use wasm_bindgen::prelude::*;

fn example() -> ObservedMatrix {
    fixture::example_matrix()
}

pub fn chart_point(y: f64, z: f64) -> UnitVector {
    UnitVector::normalize(vec![1.0, y, z]).expect("first component is nonzero")
}

/// Chart coordinates of `u`; NaN when `u` lies on the chart's horizon.
pub fn chart_coords(u: &UnitVector) -> (f64, f64) {
    let u = u.as_slice();
    if u[0] == 0.0 {
        (f64::NAN, f64::NAN)
    } else {
        (u[1] / u[0], u[2] / u[0])
    }
}

/// `(f, f_1)` at the centres of a `res × res` grid over `[-half_width,
/// half_width]²`, row by row from `z = -half_width` upwards, `y` increasing
/// along each row.
#[wasm_bindgen]
pub fn landscape(half_width: f64, res: usize) -> Vec<f64> {
    let x = example();
    let step = 2.0 * half_width / res as f64;
    let mut out = Vec::with_capacity(2 * res * res);
    for iz in 0..res {
        let z = -half_width + step * (iz as f64 + 0.5);
        for iy in 0..res {
            let y = -half_width + step * (iy as f64 + 0.5);
            let u = chart_point(y, z);
            out.push(eval_f(&u, &x).unwrap());
            out.push(eval_atomic(&u, &x, 0).unwrap());
        }
    }
    out
}

#[wasm_bindgen]
pub struct SolvePath {
    points: Vec<f64>,
    jumps: Vec<f64>,
    objective: Vec<f64>,
    success: bool,
    relative_residual: f64,
    iterations: usize,
    transfers: usize,
}

#[wasm_bindgen]
impl SolvePath {
    /// Chart coordinates of every visited point, flattened `y, z` pairs.
    pub fn points(&self) -> Vec<f64> {
        self.points.clone()
    }

    /// Transfer steps as `y_from, z_from, y_to, z_to`.
    pub fn jumps(&self) -> Vec<f64> {
        self.jumps.clone()
    }

    pub fn objective(&self) -> Vec<f64> {
        self.objective.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn success(&self) -> bool {
        self.success
    }

    #[wasm_bindgen(getter)]
    pub fn relative_residual(&self) -> f64 {
        self.relative_residual
    }

    #[wasm_bindgen(getter)]
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    #[wasm_bindgen(getter)]
    pub fn transfers(&self) -> usize {
        self.transfers
    }
}

/// Runs the solver from the chart point `(y, z)`.
#[wasm_bindgen]
pub fn solve_path(y: f64, z: f64, transfer: bool, max_iter: usize) -> SolvePath {
    let x = example();
    let config = SolverConfig {
        init: Some(chart_point(y, z)),
        transfer_enabled: transfer,
        max_outer_iters: max_iter.max(1),
        ..Default::default()
    };
    let mut points = vec![y, z];
    let mut jumps = Vec::new();
    let report = solve_with_observer(&x, &config, |e| {
        if e.barrier.is_some() {
            let (y0, z0) = chart_coords(&e.start);
            let (y1, z1) = chart_coords(&e.transferred);
            jumps.extend([y0, z0, y1, z1]);
            points.extend([y1, z1]);
        }
        let (y, z) = chart_coords(&e.end);
        points.extend([y, z]);
    })
    .expect("the example is well formed");
    SolvePath {
        points,
        jumps,
        objective: report.objective_history,
        success: report.success,
        relative_residual: report.relative_residual,
        iterations: report.outer_iterations,
        transfers: report.transfers_performed,
    }
}

#[wasm_bindgen]
pub struct GeodesicProfile {
    t: Vec<f64>,
    f: Vec<f64>,
    f1: Vec<f64>,
    f2: Vec<f64>,
    end: Vec<f64>,
    step: f64,
    t_o: f64,
    t_p: f64,
    blocking: i32,
    blocked: i32,
}

#[wasm_bindgen]
impl GeodesicProfile {
    pub fn t(&self) -> Vec<f64> {
        self.t.clone()
    }

    pub fn f(&self) -> Vec<f64> {
        self.f.clone()
    }

    pub fn f1(&self) -> Vec<f64> {
        self.f1.clone()
    }

    pub fn f2(&self) -> Vec<f64> {
        self.f2.clone()
    }

    /// Chart coordinates of `u(t)` at `t = π/2`, the far end of the
    /// geodesic as drawn.
    pub fn end(&self) -> Vec<f64> {
        self.end.clone()
    }

    /// Step chosen by the line search.
    #[wasm_bindgen(getter)]
    pub fn step(&self) -> f64 {
        self.step
    }

    /// Peak of the blocking column, NaN without a barrier.
    #[wasm_bindgen(getter)]
    pub fn t_o(&self) -> f64 {
        self.t_o
    }

    /// Pit of the blocked column, NaN without a barrier.
    #[wasm_bindgen(getter)]
    pub fn t_p(&self) -> f64 {
        self.t_p
    }

    /// Zero-based blocking column, -1 without a barrier.
    #[wasm_bindgen(getter)]
    pub fn blocking(&self) -> i32 {
        self.blocking
    }

    #[wasm_bindgen(getter)]
    pub fn blocked(&self) -> i32 {
        self.blocked
    }
}

/// `f`, `f_1` and `f_2` along the descent geodesic from `(y, z)`, sampled
/// at `samples` points of `[0, π)`. `None` at a stationary point.
#[wasm_bindgen]
pub fn geodesic_profile(y: f64, z: f64, samples: usize) -> Option<GeodesicProfile> {
    let x = example();
    let ray = descent_ray(&chart_point(y, z), &x).ok()?;
    let samples = samples.max(2);
    let mut profile = GeodesicProfile {
        t: Vec::with_capacity(samples),
        f: Vec::with_capacity(samples),
        f1: Vec::with_capacity(samples),
        f2: Vec::with_capacity(samples),
        end: Vec::new(),
        step: line_search(&ray, &x, 1e-9, 10).ok()?.t,
        t_o: f64::NAN,
        t_p: f64::NAN,
        blocking: -1,
        blocked: -1,
    };
    for k in 0..samples {
        let t = std::f64::consts::PI * k as f64 / samples as f64;
        let u = geodesic_point(&ray, t);
        let f1 = eval_atomic(&u, &x, 0).unwrap();
        let f2 = eval_atomic(&u, &x, 1).unwrap();
        profile.t.push(t);
        profile.f.push(f1 + f2);
        profile.f1.push(f1);
        profile.f2.push(f2);
    }
    let (ye, ze) = chart_coords(&geodesic_point(&ray, std::f64::consts::FRAC_PI_2));
    profile.end = vec![ye, ze];
    if let Some(rec) = transfer(&ray, &x).ok()?.barrier {
        profile.t_o = rec.t_o;
        profile.t_p = rec.t_p;
        profile.blocking = rec.blocking_column as i32;
        profile.blocked = rec.blocked_column as i32;
    }
    Some(profile)
}
