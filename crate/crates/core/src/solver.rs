//! The outer loop: at every iteration, cross the nearest barrier on the
//! descent geodesic (if any), then line-search along the descent geodesic of
//! the current point.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::barrier::{transfer_on, BarrierRecord};
use crate::error::{Error, Result};
use crate::geodesic::{bracket_by, golden_on, GeodesicObjective};
use crate::objective::{descent_ray, eval_f, misfit, optimal_w};
use crate::types::{ObservedMatrix, UnitVector};

/// RNG stream used for initial points; instance generation uses stream 0.
pub(crate) const INIT_STREAM: u64 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Only rank 1 is supported.
    pub rank: usize,
    /// Success when `f < eps_e · ‖X_Ω‖_F²`.
    pub eps_e: f64,
    pub max_outer_iters: usize,
    /// First bracketing probe, as a fraction of `π`.
    pub eps_step: f64,
    /// Golden-section iterations per line search.
    pub it_n: usize,
    pub transfer_enabled: bool,
    pub rng_seed: u64,
    /// Explicit starting point; drawn from `rng_seed` when absent.
    pub init: Option<UnitVector>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            rank: 1,
            eps_e: 1e-6,
            max_outer_iters: 2000,
            eps_step: 1e-9,
            it_n: 10,
            transfer_enabled: true,
            rng_seed: 0,
            init: None,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rank != 1 {
            return Err(Error::Config(format!(
                "only rank 1 is supported, got {}",
                self.rank
            )));
        }
        if !(self.eps_e > 0.0) {
            return Err(Error::Config(format!(
                "eps_e must be positive, got {}",
                self.eps_e
            )));
        }
        if self.max_outer_iters == 0 {
            return Err(Error::Config("max_outer_iters must be at least 1".into()));
        }
        if self.it_n == 0 {
            return Err(Error::Config("it_n must be at least 1".into()));
        }
        if !(self.eps_step > 0.0 && self.eps_step < 1.0) {
            return Err(Error::Config(format!(
                "eps_step must lie in (0, 1), got {}",
                self.eps_step
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub success: bool,
    /// `‖P_Ω(u wᵀ) - X_Ω‖_F²` of the returned pair.
    pub final_objective: f64,
    /// `final_objective / ‖X_Ω‖_F²`, zero for all-zero observations.
    pub relative_residual: f64,
    pub outer_iterations: usize,
    pub transfers_performed: usize,
    /// The solver stopped at a point with vanishing gradient.
    pub stationary: bool,
    pub u: UnitVector,
    pub w: Vec<f64>,
    /// `f` at the start of every outer iteration, then at the returned point.
    pub objective_history: Vec<f64>,
}

impl SolveReport {
    /// The completed matrix `u wᵀ`, row-major.
    pub fn completed(&self) -> Vec<f64> {
        let u = self.u.as_slice();
        u.iter()
            .flat_map(|ui| self.w.iter().map(move |wj| ui * wj))
            .collect()
    }
}

/// What happened in one outer iteration, for tracing.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationEvent {
    pub index: usize,
    pub objective: f64,
    pub start: UnitVector,
    pub barrier: Option<BarrierRecord>,
    /// Point after the transfer (equal to `start` without one).
    pub transferred: UnitVector,
    pub step: f64,
    pub end: UnitVector,
}

/// An isotropic random unit vector in `R^m`.
pub fn random_init(m: usize, rng_seed: u64) -> UnitVector {
    assert!(m >= 1, "dimension must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rng.set_stream(INIT_STREAM);
    loop {
        let v: Vec<f64> = (0..m).map(|_| StandardNormal.sample(&mut rng)).collect();
        if let Ok(u) = UnitVector::normalize(v) {
            return u;
        }
    }
}

/// The coefficient vector completing `u` into `X' = u wᵀ`.
pub fn reconstruct(u: &UnitVector, x: &ObservedMatrix) -> Result<Vec<f64>> {
    optimal_w(u, x)
}

pub fn solve(x: &ObservedMatrix, config: &SolverConfig) -> Result<SolveReport> {
    solve_with_observer(x, config, |_| {})
}

/// [`solve`], reporting every outer iteration to `observer`.
pub fn solve_with_observer(
    x: &ObservedMatrix,
    config: &SolverConfig,
    mut observer: impl FnMut(&IterationEvent),
) -> Result<SolveReport> {
    config.validate()?;
    let mut u = match &config.init {
        Some(init) => {
            if init.dim() != x.rows() {
                return Err(Error::DimensionMismatch {
                    expected: x.rows(),
                    actual: init.dim(),
                });
            }
            init.clone()
        }
        None => random_init(x.rows(), config.rng_seed),
    };

    let norm_sq = x.norm_sq();
    let threshold = config.eps_e * norm_sq;
    let mut history = Vec::new();
    let mut transfers = 0;
    let mut iterations = 0;
    let mut stationary = false;

    if norm_sq > 0.0 {
        while iterations < config.max_outer_iters {
            let f = eval_f(&u, x)?;
            history.push(f);
            if f < threshold {
                break;
            }
            let ray = match descent_ray(&u, x) {
                Ok(ray) => ray,
                Err(Error::VanishingGradient { .. }) => {
                    stationary = true;
                    break;
                }
                Err(e) => return Err(e),
            };
            iterations += 1;

            let start = u.clone();
            let mut barrier = None;
            let mut ray = ray;
            if config.transfer_enabled {
                let crossing = transfer_on(&ray, &GeodesicObjective::new(&ray, x)?);
                if crossing.t_st > 0.0 {
                    transfers += 1;
                    barrier = crossing.barrier;
                    u = crossing.point;
                    match descent_ray(&u, x) {
                        Ok(next) => ray = next,
                        Err(Error::VanishingGradient { .. }) => {
                            observer(&IterationEvent {
                                index: iterations - 1,
                                objective: f,
                                start,
                                barrier,
                                transferred: u.clone(),
                                step: 0.0,
                                end: u.clone(),
                            });
                            continue;
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            let transferred = u.clone();

            let objective = GeodesicObjective::new(&ray, x)?;
            let t_max = bracket_by(|t| objective.value(t), config.eps_step);
            let best = golden_on(&ray, &objective, t_max, config.it_n);
            u = best.point;

            observer(&IterationEvent {
                index: iterations - 1,
                objective: f,
                start,
                barrier,
                transferred,
                step: best.t,
                end: u.clone(),
            });
        }
    }

    let w = optimal_w(&u, x)?;
    let final_objective = misfit(u.as_slice(), &w, x);
    if history.last() != Some(&final_objective) {
        history.push(final_objective);
    }
    let relative_residual = if norm_sq > 0.0 {
        final_objective / norm_sq
    } else {
        0.0
    };
    Ok(SolveReport {
        success: relative_residual < config.eps_e,
        final_objective,
        relative_residual,
        outer_iterations: iterations,
        transfers_performed: transfers,
        stationary,
        u,
        w,
        objective_history: history,
    })
}
