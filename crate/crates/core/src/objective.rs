//! The column-space objective
//! `f(u) = min_w ‖X_Ω - P_Ω(u wᵀ)‖_F²` and its gradient.
//!
//! For a fixed `u` the inner minimization splits into one scalar least-squares
//! problem per column, so `f` is a sum of per-column (atomic) terms.

use crate::error::{Error, Result};
use crate::types::{norm, Entry, GeodesicRay, ObservedMatrix, UnitVector};

/// Least-squares coefficient of one column: `⟨u_Ωj, x_Ωj⟩ / ‖u_Ωj‖²`,
/// or zero when `u` vanishes on the column's observed rows.
fn column_weight(u: &[f64], column: &[Entry]) -> f64 {
    let (mut ux, mut uu) = (0.0, 0.0);
    for e in column {
        ux += u[e.row] * e.value;
        uu += u[e.row] * u[e.row];
    }
    if uu > 0.0 {
        ux / uu
    } else {
        0.0
    }
}

fn column_misfit(u: &[f64], column: &[Entry], w: f64) -> f64 {
    column
        .iter()
        .map(|e| {
            let r = e.value - u[e.row] * w;
            r * r
        })
        .sum()
}

fn check_dim(u: &UnitVector, x: &ObservedMatrix) -> Result<()> {
    if u.dim() == x.rows() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: x.rows(),
            actual: u.dim(),
        })
    }
}

/// The coefficient vector `w_u` attaining `f(u)`.
pub fn optimal_w(u: &UnitVector, x: &ObservedMatrix) -> Result<Vec<f64>> {
    check_dim(u, x)?;
    let u = u.as_slice();
    Ok((0..x.cols())
        .map(|j| column_weight(u, x.column(j)))
        .collect())
}

/// The `j`-th atomic term `f_j(u)`.
pub fn eval_atomic(u: &UnitVector, x: &ObservedMatrix, j: usize) -> Result<f64> {
    check_dim(u, x)?;
    x.check_column(j)?;
    let column = x.column(j);
    let w = column_weight(u.as_slice(), column);
    Ok(column_misfit(u.as_slice(), column, w))
}

/// `f(u) = Σ_j f_j(u)`.
///
/// Each term is accumulated from the residual itself rather than from
/// `‖x‖² - ⟨u, x⟩²/‖u‖²`, which loses all precision near a solution.
pub fn eval_f(u: &UnitVector, x: &ObservedMatrix) -> Result<f64> {
    check_dim(u, x)?;
    let u = u.as_slice();
    Ok((0..x.cols())
        .map(|j| {
            let column = x.column(j);
            column_misfit(u, column, column_weight(u, column))
        })
        .sum())
}

/// Squared misfit of the explicit pair `(u, w)` on the observed entries,
/// `‖P_Ω(u wᵀ) - X_Ω‖_F²`.
pub fn misfit(u: &[f64], w: &[f64], x: &ObservedMatrix) -> f64 {
    x.entries()
        .iter()
        .map(|e| {
            let r = e.value - u[e.row] * w[e.col];
            r * r
        })
        .sum()
}

/// Residual `X_r = X_Ω - P_Ω(u w_uᵀ)` over the same index set.
pub fn residual(u: &UnitVector, x: &ObservedMatrix) -> Result<ObservedMatrix> {
    let w = optimal_w(u, x)?;
    let u = u.as_slice();
    ObservedMatrix::new(
        x.rows(),
        x.cols(),
        x.entries()
            .iter()
            .map(|e| (e.row, e.col, e.value - u[e.row] * w[e.col])),
    )
}

/// Euclidean gradient `∇f = -2 X_r w_u`.
pub fn gradient(u: &UnitVector, x: &ObservedMatrix) -> Result<Vec<f64>> {
    let w = optimal_w(u, x)?;
    let u = u.as_slice();
    let mut grad = vec![0.0; x.rows()];
    for e in x.entries() {
        let wj = w[e.col];
        grad[e.row] -= 2.0 * wj * (e.value - u[e.row] * wj);
    }
    Ok(grad)
}

/// Gradient norms at or below `1e-12 · max(1, ‖X_Ω‖_F)` count as stationary.
pub fn stationary_tolerance(x: &ObservedMatrix) -> f64 {
    1e-12 * x.norm_sq().sqrt().max(1.0)
}

/// The steepest-descent geodesic at `u`, with direction `-∇f / ‖∇f‖`.
pub fn descent_ray(u: &UnitVector, x: &ObservedMatrix) -> Result<GeodesicRay> {
    let mut grad = gradient(u, x)?;
    let gnorm = norm(&grad);
    if !(gnorm > stationary_tolerance(x)) {
        return Err(Error::VanishingGradient { norm: gnorm });
    }
    grad.iter_mut().for_each(|g| *g = -*g / gnorm);
    GeodesicRay::new(u.clone(), grad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn generating_direction_fits_exactly() {
        let x = fixture::example_matrix();
        let u = fixture::generating_direction();
        let w = optimal_w(&u, &x).unwrap();
        let s6 = 6f64.sqrt();
        assert!(close(w[0], 2.0 * s6, 1e-14));
        assert!(close(w[1], s6, 1e-14));
        assert!(eval_f(&u, &x).unwrap().abs() < 1e-12);
        assert!(norm(&gradient(&u, &x).unwrap()) < 1e-12);
        assert!(matches!(
            descent_ray(&u, &x),
            Err(Error::VanishingGradient { .. })
        ));
    }

    #[test]
    fn blocked_start_values() {
        let x = fixture::example_matrix();
        let u0 = fixture::blocked_start();
        assert!(eval_atomic(&u0, &x, 0).unwrap().abs() < 1e-12);
        assert!(close(
            eval_atomic(&u0, &x, 1).unwrap(),
            144.0 / 101.0,
            1e-12
        ));
        assert!(close(eval_f(&u0, &x).unwrap(), 144.0 / 101.0, 1e-12));
    }

    #[test]
    fn contour_of_first_column() {
        let x = fixture::example_matrix();
        for (a, b) in [(0.0, 1.0), (3.0, -0.2), (-10.0, 1.0), (1.0, 5.0)] {
            let u = UnitVector::normalize(vec![a, b, -b]).unwrap();
            assert!(close(eval_atomic(&u, &x, 0).unwrap(), 8.0, 1e-12));
        }
    }

    #[test]
    fn empty_and_invisible_columns() {
        let x = ObservedMatrix::new(3, 3, [(0, 0, 1.0), (1, 0, 2.0), (2, 2, 3.0)]).unwrap();
        // column 1 has no observations; column 2 only sees row 2, where u is zero
        let u = UnitVector::normalize(vec![1.0, 1.0, 0.0]).unwrap();
        let w = optimal_w(&u, &x).unwrap();
        assert_eq!(w[1], 0.0);
        assert_eq!(w[2], 0.0);
        assert_eq!(eval_atomic(&u, &x, 1).unwrap(), 0.0);
        assert_eq!(eval_atomic(&u, &x, 2).unwrap(), 9.0);
        assert!(matches!(
            eval_atomic(&u, &x, 3),
            Err(Error::ColumnOutOfRange { col: 3, cols: 3 })
        ));
    }

    #[test]
    fn zero_observations_have_zero_gradient() {
        let x = ObservedMatrix::new(3, 2, [(0, 0, 0.0), (2, 1, 0.0)]).unwrap();
        let u = UnitVector::normalize(vec![0.3, -1.0, 2.0]).unwrap();
        assert!(gradient(&u, &x).unwrap().iter().all(|g| *g == 0.0));
    }

    #[test]
    fn residual_matches_objective() {
        let x = fixture::example_matrix();
        let u = UnitVector::normalize(vec![0.4, -0.7, 1.3]).unwrap();
        let res = residual(&u, &x).unwrap();
        assert!(close(res.norm_sq(), eval_f(&u, &x).unwrap(), 1e-12));
        let w = optimal_w(&u, &x).unwrap();
        assert!(close(misfit(u.as_slice(), &w, &x), res.norm_sq(), 1e-12));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let x = fixture::example_matrix();
        let u = UnitVector::basis(4, 0);
        assert!(matches!(
            eval_f(&u, &x),
            Err(Error::DimensionMismatch {
                expected: 3,
                actual: 4
            })
        ));
    }
}
