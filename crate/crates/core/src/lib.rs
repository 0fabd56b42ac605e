//! Rank-1 consistent matrix completion by subspace evolution and transfer.
//!
//! Given the observed entries `X_Ω` of a rank-1 matrix, the solver searches
//! for a unit vector `u` whose span admits a rank-1 matrix `u wᵀ` that agrees
//! with every observation. The misfit
//!
//! ```text
//! f(u) = min_w ‖X_Ω - P_Ω(u wᵀ)‖_F²  =  Σ_j f_j(u)
//! ```
//!
//! splits into one term per column. Each outer iteration
//!
//! 1. follows the steepest-descent geodesic `u(t) = u cos t + h sin t`,
//! 2. looks for columns whose misfit peaks before another column's misfit
//!    bottoms out (a *barrier*) and, if found, jumps onto the nearest peak,
//! 3. line-searches the descent geodesic from there (geometric bracketing,
//!    then golden-section refinement).
//!
//! ```
//! use set_completion::{fixture, solve, SolverConfig};
//!
//! let x = fixture::example_matrix();
//! let report = solve(&x, &SolverConfig::default()).unwrap();
//! assert!(report.success);
//! ```

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod barrier;
pub mod bench;
mod error;
pub mod fixture;
pub mod geodesic;
pub mod io;
pub mod objective;
pub mod profile;
pub mod solver;
mod types;

pub use barrier::{
    atomic_extrema, atomic_profile, detect_barriers, total_slope, transfer, BarrierRecord, Extrema,
    Transfer,
};
pub use error::{Error, Result};
pub use geodesic::{bracket_minimum, geodesic_point, golden_section, line_search, LineMinimum};
pub use objective::{descent_ray, eval_atomic, eval_f, gradient, optimal_w};
pub use profile::AtomicProfile;
pub use solver::{
    random_init, reconstruct, solve, solve_with_observer, IterationEvent, SolveReport, SolverConfig,
};
pub use types::{Entry, GeodesicRay, ObservedMatrix, UnitVector, TANGENCY_TOL, UNIT_NORM_TOL};
