//! Subspace transfer.
//!
//! Along a descent geodesic each column's misfit `f_j(u(t))` has a single
//! maximizer and a single minimizer in `[0, π)`. Column `k` blocks column `j`
//! when `f_k` peaks before `f_j` bottoms out (`t_max,k < t_min,j < t_max,j`)
//! while the total objective is still decreasing at the peak. Line search
//! stops in front of such a peak, so the transfer step jumps straight to it.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geodesic::{column_profile, geodesic_point, GeodesicObjective};
use crate::profile::AtomicProfile;
use crate::types::{GeodesicRay, ObservedMatrix, UnitVector};

/// Total slopes in `[-SLOPE_TOL, ∞)` never form a barrier.
pub const SLOPE_TOL: f64 = 1e-12;

/// Maximizer and minimizer of one atomic function along a geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrema {
    pub t_min: f64,
    pub t_max: f64,
}

/// Column `blocking_column` forms a barrier in front of `blocked_column`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierRecord {
    pub blocking_column: usize,
    pub blocked_column: usize,
    /// Maximizer of the blocking column's misfit.
    pub t_o: f64,
    /// Minimizer of the blocked column's misfit.
    pub t_p: f64,
    /// `d/dt f(u(t))` at `t_o`.
    pub total_slope_at_t_o: f64,
}

/// Outcome of one transfer step.
#[derive(Debug, Clone, PartialEq)]
pub struct Transfer {
    /// Zero when no barrier was found.
    pub t_st: f64,
    pub point: UnitVector,
    /// The barrier that was crossed.
    pub barrier: Option<BarrierRecord>,
}

fn wrap_half_turn(t: f64) -> f64 {
    let w = t.rem_euclid(PI);
    if w >= PI {
        0.0
    } else {
        w
    }
}

/// Eigenvector of the largest eigenvalue of the symmetric-definite pencil
/// `(a, b)`, from the roots of `det(a - λ b) = 0`. `b` must be positive
/// definite.
fn top_generalized_eigenvector(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [f64; 2] {
    let det_b = b[0][0] * b[1][1] - b[0][1] * b[0][1];
    let det_a = a[0][0] * a[1][1] - a[0][1] * a[0][1];
    let mid = a[0][0] * b[1][1] + a[1][1] * b[0][0] - 2.0 * a[0][1] * b[0][1];
    let disc = (mid * mid - 4.0 * det_a * det_b).max(0.0);
    let lambda = (mid + disc.sqrt()) / (2.0 * det_b);

    let m = [
        [a[0][0] - lambda * b[0][0], a[0][1] - lambda * b[0][1]],
        [a[0][1] - lambda * b[0][1], a[1][1] - lambda * b[1][1]],
    ];
    let row0 = m[0][0].hypot(m[0][1]);
    let row1 = m[1][0].hypot(m[1][1]);
    if row0 == 0.0 && row1 == 0.0 {
        // a = λ b: every direction is optimal
        [1.0, 0.0]
    } else if row0 >= row1 {
        [-m[0][1], m[0][0]]
    } else {
        [-m[1][1], m[1][0]]
    }
}

/// Coefficients of one column's misfit along `ray`.
pub fn atomic_profile(ray: &GeodesicRay, x: &ObservedMatrix, j: usize) -> Result<AtomicProfile> {
    if ray.dim() != x.rows() {
        return Err(Error::DimensionMismatch {
            expected: x.rows(),
            actual: ray.dim(),
        });
    }
    x.check_column(j)?;
    Ok(column_profile(ray, j, x.column(j)))
}

/// Closed-form `argmin` and `argmax` of a profile over `[0, π)`.
///
/// The maximizer is where the fitted part `a cos t + b sin t` vanishes. The
/// minimizer maximizes the Rayleigh quotient `vᵀ A v / vᵀ B v` over
/// `v = (cos t, sin t)`, with `A = (a, b)(a, b)ᵀ` and `B = [[p, q], [q, r]]`.
pub fn atomic_extrema(profile: &AtomicProfile) -> Result<Extrema> {
    let &AtomicProfile {
        column,
        a,
        b,
        p,
        q,
        r,
        x_norm_sq,
        degenerate,
        ..
    } = profile;
    if degenerate {
        return Err(Error::DegenerateProfile { col: column });
    }
    // Cauchy-Schwarz bounds a² + b² by (p + r)‖x‖²; far below that the column
    // sees nothing of the span of u and h and its misfit is flat.
    if a * a + b * b <= 1e-28 * (p + r) * x_norm_sq {
        return Err(Error::ConstantProfile { col: column });
    }
    let t_max = wrap_half_turn(a.atan2(-b));
    let v = top_generalized_eigenvector([[a * a, a * b], [a * b, b * b]], [[p, q], [q, r]]);
    let t_min = wrap_half_turn(v[1].atan2(v[0]));
    Ok(Extrema { t_min, t_max })
}

/// `d/dt f(u(t))` at `t`.
pub fn total_slope(ray: &GeodesicRay, x: &ObservedMatrix, t: f64) -> Result<f64> {
    Ok(GeodesicObjective::new(ray, x)?.slope(t))
}

/// Every `(blocking, blocked)` column pair along `ray`, ordered by blocking
/// then blocked column.
pub fn detect_barriers(ray: &GeodesicRay, x: &ObservedMatrix) -> Result<Vec<BarrierRecord>> {
    Ok(barriers_on(&GeodesicObjective::new(ray, x)?))
}

pub(crate) fn barriers_on(objective: &GeodesicObjective) -> Vec<BarrierRecord> {
    let extrema: Vec<Option<Extrema>> = objective
        .profiles()
        .iter()
        .map(|p| atomic_extrema(p).ok())
        .collect();

    let mut records = Vec::new();
    for (k, ek) in extrema.iter().enumerate() {
        let Some(ek) = ek else { continue };
        if !extrema
            .iter()
            .enumerate()
            .any(|(j, ej)| j != k && ej.is_some_and(|ej| blocks(ek, &ej)))
        {
            continue;
        }
        let slope = objective.slope(ek.t_max);
        if slope >= -SLOPE_TOL {
            continue;
        }
        for (j, ej) in extrema.iter().enumerate() {
            let Some(ej) = ej else { continue };
            if j != k && blocks(ek, ej) {
                records.push(BarrierRecord {
                    blocking_column: k,
                    blocked_column: j,
                    t_o: ek.t_max,
                    t_p: ej.t_min,
                    total_slope_at_t_o: slope,
                });
            }
        }
    }
    records
}

fn blocks(blocking: &Extrema, blocked: &Extrema) -> bool {
    blocking.t_max < blocked.t_min && blocked.t_min < blocked.t_max
}

/// Picks the barrier to cross: the blocked column whose minimizer comes
/// first, then the last of its blockers. Ties go to the lowest column index.
pub fn select_barrier(records: &[BarrierRecord]) -> Option<BarrierRecord> {
    let target = records
        .iter()
        .fold(None::<&BarrierRecord>, |best, rec| match best {
            Some(b) if (b.t_p, b.blocked_column) <= (rec.t_p, rec.blocked_column) => Some(b),
            _ => Some(rec),
        })?;
    records
        .iter()
        .filter(|rec| rec.blocked_column == target.blocked_column)
        .fold(None::<&BarrierRecord>, |best, rec| match best {
            Some(b)
                if b.t_o > rec.t_o
                    || (b.t_o == rec.t_o && b.blocking_column <= rec.blocking_column) =>
            {
                Some(b)
            }
            _ => Some(rec),
        })
        .copied()
}

/// Moves the base point of `ray` onto the nearest barrier, if any.
pub fn transfer(ray: &GeodesicRay, x: &ObservedMatrix) -> Result<Transfer> {
    Ok(transfer_on(ray, &GeodesicObjective::new(ray, x)?))
}

pub(crate) fn transfer_on(ray: &GeodesicRay, objective: &GeodesicObjective) -> Transfer {
    match select_barrier(&barriers_on(objective)) {
        Some(rec) => Transfer {
            t_st: rec.t_o,
            point: geodesic_point(ray, rec.t_o),
            barrier: Some(rec),
        },
        None => Transfer {
            t_st: 0.0,
            point: ray.base().clone(),
            barrier: None,
        },
    }
}
