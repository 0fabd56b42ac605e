//! Subspace evolution: line search for a minimizer of `f(u(t))` along a
//! descent geodesic.
//!
//! The search brackets a minimizer by growing a trial step geometrically from
//! a tiny fraction of `π` (Step A), then shrinks the bracket with a fixed
//! number of golden-section iterations (Step B).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::profile::AtomicProfile;
use crate::types::{Entry, GeodesicRay, ObservedMatrix, UnitVector};

/// Golden-section ratio `(√5 - 1)/2`.
pub const C1: f64 = 0.618_033_988_749_894_9;
/// Bracket growth factor `c1 / (1 - c1)`, the golden ratio.
pub const C2: f64 = C1 / (1.0 - C1);

/// `u cos t + h sin t`, renormalized.
pub fn geodesic_point(ray: &GeodesicRay, t: f64) -> UnitVector {
    let (s, c) = t.sin_cos();
    let v = ray
        .base()
        .as_slice()
        .iter()
        .zip(ray.direction())
        .map(|(u, h)| u * c + h * s)
        .collect();
    UnitVector::normalize(v).expect("a point on a unit geodesic is nonzero")
}

pub(crate) fn column_profile(ray: &GeodesicRay, j: usize, column: &[Entry]) -> AtomicProfile {
    let (u, h) = (ray.base().as_slice(), ray.direction());
    AtomicProfile::from_triples(j, column.iter().map(|e| (u[e.row], h[e.row], e.value)))
}

/// `f(u(t))` along one ray, evaluated through per-column profiles in `O(n)`
/// per point after an `O(|Ω|)` setup.
#[derive(Debug, Clone)]
pub struct GeodesicObjective {
    profiles: Vec<AtomicProfile>,
}

impl GeodesicObjective {
    pub fn new(ray: &GeodesicRay, x: &ObservedMatrix) -> Result<Self> {
        if ray.dim() != x.rows() {
            return Err(Error::DimensionMismatch {
                expected: x.rows(),
                actual: ray.dim(),
            });
        }
        let profiles = (0..x.cols())
            .map(|j| column_profile(ray, j, x.column(j)))
            .collect();
        Ok(Self { profiles })
    }

    pub fn profiles(&self) -> &[AtomicProfile] {
        &self.profiles
    }

    pub fn value(&self, t: f64) -> f64 {
        self.profiles.iter().map(|p| p.value(t)).sum()
    }

    /// `d/dt f(u(t))`.
    pub fn slope(&self, t: f64) -> f64 {
        self.profiles.iter().map(|p| p.slope(t)).sum()
    }
}

/// Step A on an arbitrary objective of `t`.
pub fn bracket_by(mut f: impl FnMut(f64) -> f64, eps_step: f64) -> f64 {
    let mut t_prev = eps_step * PI;
    let mut f_prev = f(t_prev);
    loop {
        let t_next = C2 * t_prev;
        if t_next > PI {
            return PI;
        }
        let f_next = f(t_next);
        if f_next > f_prev {
            return t_next;
        }
        t_prev = t_next;
        f_prev = f_next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenOutcome {
    pub t: f64,
    pub value: f64,
    pub evaluations: usize,
    /// Final `[t1, t4]`.
    pub interval: (f64, f64),
}

/// Step B on an arbitrary objective of `t`; exactly `it_n + 4` evaluations.
pub fn golden_by(mut f: impl FnMut(f64) -> f64, t_max: f64, it_n: usize) -> GoldenOutcome {
    let mut t1 = t_max / (C2 * C2);
    let mut t2 = t_max / C2;
    let mut t4 = t_max;
    let mut t3 = t1 + C1 * (t4 - t1);
    let (mut f1, mut f2, mut f3, mut f4) = (f(t1), f(t2), f(t3), f(t4));
    let mut evaluations = 4;

    for _ in 0..it_n {
        if f1 > f2 && f2 > f3 {
            (t1, f1) = (t2, f2);
            (t2, f2) = (t3, f3);
            t3 = t1 + C1 * (t4 - t1);
            f3 = f(t3);
        } else {
            (t4, f4) = (t3, f3);
            (t3, f3) = (t2, f2);
            t2 = t1 + (1.0 - C1) * (t4 - t1);
            f2 = f(t2);
        }
        evaluations += 1;
    }

    let (t, value) =
        [(t1, f1), (t2, f2), (t3, f3), (t4, f4)]
            .into_iter()
            .fold(
                (t1, f1),
                |best, cand| if cand.1 < best.1 { cand } else { best },
            );
    GoldenOutcome {
        t,
        value,
        evaluations,
        interval: (t1, t4),
    }
}

/// Finds `t_max ∈ (0, π]` such that a minimizer of `f(u(t))` lies in
/// `[0, t_max]`.
pub fn bracket_minimum(ray: &GeodesicRay, x: &ObservedMatrix, eps_step: f64) -> Result<f64> {
    let objective = GeodesicObjective::new(ray, x)?;
    Ok(bracket_by(|t| objective.value(t), eps_step))
}

/// Result of a line search along one ray.
#[derive(Debug, Clone, PartialEq)]
pub struct LineMinimum {
    pub t: f64,
    pub point: UnitVector,
    /// `f(u(t))` as evaluated along the ray.
    pub value: f64,
    /// Objective evaluations spent by the golden-section loop.
    pub evaluations: usize,
}

/// Golden-section refinement of `[0, t_max]`.
///
/// If the best golden-section candidate is worse than the base point the
/// base point itself is returned with `t = 0`, so a call never increases `f`.
pub fn golden_section(
    ray: &GeodesicRay,
    x: &ObservedMatrix,
    t_max: f64,
    it_n: usize,
) -> Result<LineMinimum> {
    let objective = GeodesicObjective::new(ray, x)?;
    Ok(golden_on(ray, &objective, t_max, it_n))
}

pub(crate) fn golden_on(
    ray: &GeodesicRay,
    objective: &GeodesicObjective,
    t_max: f64,
    it_n: usize,
) -> LineMinimum {
    let outcome = golden_by(|t| objective.value(t), t_max, it_n);
    let base_value = objective.value(0.0);
    if outcome.value > base_value {
        return LineMinimum {
            t: 0.0,
            point: ray.base().clone(),
            value: base_value,
            evaluations: outcome.evaluations,
        };
    }
    LineMinimum {
        t: outcome.t,
        point: geodesic_point(ray, outcome.t),
        value: outcome.value,
        evaluations: outcome.evaluations,
    }
}

/// Step A followed by Step B.
pub fn line_search(
    ray: &GeodesicRay,
    x: &ObservedMatrix,
    eps_step: f64,
    it_n: usize,
) -> Result<LineMinimum> {
    let objective = GeodesicObjective::new(ray, x)?;
    let t_max = bracket_by(|t| objective.value(t), eps_step);
    Ok(golden_on(ray, &objective, t_max, it_n))
}
