#![allow(dead_code)]

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use set_completion::{bench, GeodesicRay, ObservedMatrix, UnitVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.sample(StandardNormal)).collect()
}

pub fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> UnitVector {
    UnitVector::normalize(gaussian(rng, dim)).unwrap()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A unit vector orthogonal to `u`.
pub fn random_tangent(rng: &mut ChaCha8Rng, u: &UnitVector) -> Vec<f64> {
    let mut d = gaussian(rng, u.dim());
    let c = dot(&d, u.as_slice());
    d.iter_mut()
        .zip(u.as_slice())
        .for_each(|(d, u)| *d -= c * u);
    let n = dot(&d, &d).sqrt();
    d.iter_mut().for_each(|d| *d /= n);
    d
}

pub fn random_ray(rng: &mut ChaCha8Rng, dim: usize) -> GeodesicRay {
    let u = random_unit(rng, dim);
    let h = random_tangent(rng, &u);
    GeodesicRay::new(u, h).unwrap()
}

/// Random rank-1 observations: `m, n ∈ [2, 30]`, 30-70% of entries observed.
pub fn random_instance(rng: &mut ChaCha8Rng) -> ObservedMatrix {
    let m = rng.random_range(2..=30);
    let n = rng.random_range(2..=30);
    let rate: f64 = rng.random_range(0.3..=0.7);
    let omega = ((rate * (m * n) as f64).round() as usize).max(1);
    bench::generate_instance(m, n, 1, omega, rng.random())
        .unwrap()
        .observed
}

/// Random observations of a generic (full-rank) matrix.
pub fn random_dense_observations(
    rng: &mut ChaCha8Rng,
    m: usize,
    n: usize,
    rate: f64,
) -> ObservedMatrix {
    let mut triplets = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if rng.random::<f64>() < rate {
                triplets.push((i, j, rng.sample::<f64, _>(StandardNormal)));
            }
        }
    }
    ObservedMatrix::new(m, n, triplets).unwrap()
}

/// Distance between two angles on the circle of circumference `π`.
pub fn half_turn_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// `(argmin, argmax)` of `f` over `points` uniform samples of `[0, π)`.
pub fn grid_extrema(points: usize, f: impl Fn(f64) -> f64) -> (f64, f64) {
    let (mut tmin, mut tmax) = (0.0, 0.0);
    let (mut fmin, mut fmax) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in 0..points {
        let t = PI * k as f64 / points as f64;
        let v = f(t);
        if v < fmin {
            fmin = v;
            tmin = t;
        }
        if v > fmax {
            fmax = v;
            tmax = t;
        }
    }
    (tmin, tmax)
}

/// Misfit of one column at `v`, by dense least squares through nalgebra.
pub fn column_misfit_lstsq(v: &[f64], x: &ObservedMatrix, j: usize) -> f64 {
    let col = x.column(j);
    if col.is_empty() {
        return 0.0;
    }
    let a = nalgebra::DMatrix::from_iterator(col.len(), 1, col.iter().map(|e| v[e.row]));
    let b = nalgebra::DVector::from_iterator(col.len(), col.iter().map(|e| e.value));
    if a.norm() == 0.0 {
        return b.norm_squared();
    }
    let svd = a.clone().svd(true, true);
    let w = svd.solve(&b, 1e-300).unwrap();
    (b - a * w).norm_squared()
}

pub fn misfit_lstsq(v: &[f64], x: &ObservedMatrix) -> f64 {
    (0..x.cols()).map(|j| column_misfit_lstsq(v, x, j)).sum()
}

/// `f(u(t))` by projecting the geodesic point, independent of profiles.
pub fn direct_value(ray: &GeodesicRay, x: &ObservedMatrix, t: f64) -> f64 {
    set_completion::eval_f(&set_completion::geodesic_point(ray, t), x).unwrap()
}

pub fn direct_atomic(ray: &GeodesicRay, x: &ObservedMatrix, j: usize, t: f64) -> f64 {
    set_completion::eval_atomic(&set_completion::geodesic_point(ray, t), x, j).unwrap()
}
