//! Monte-Carlo success rates on random rank-1 instances.
//!
//! An instance is `X = s · u_X v_Xᵀ` with `u_X`, `v_X` isotropic unit vectors
//! and `s ~ N(0, 1)`, observed on an index set drawn uniformly among all sets
//! of the requested size. A trial succeeds when the solver reports a
//! consistent completion; the distance to `X` itself is reported separately.

use std::fmt::Write as _;
use std::path::Path;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::io::write_atomic;
use crate::solver::{solve, SolverConfig};
use crate::types::{ObservedMatrix, UnitVector};

/// Header of the sweep CSV.
pub const CSV_HEADER: &str =
    "sampling_rate,trials,successes,success_rate,mean_iters,mean_transfers,mean_exact_recovery_err";

/// Sampling rates swept by default.
pub const DEFAULT_RATES: [f64; 8] = [0.02, 0.05, 0.08, 0.1, 0.15, 0.2, 0.3, 0.5];

/// One point of a sweep: `trials` random instances at one sampling rate.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialSpec {
    pub m: usize,
    pub n: usize,
    pub rank: usize,
    /// `|Ω| / (m n)`, in `(0, 1]`.
    pub sampling_rate: f64,
    pub trials: usize,
    /// Trial `i` uses seed `seed + i`.
    pub seed: u64,
    pub transfer_enabled: bool,
}

impl TrialSpec {
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::EmptyShape {
                rows: self.m,
                cols: self.n,
            });
        }
        if self.rank != 1 {
            return Err(Error::Config(format!(
                "only rank 1 is supported, got {}",
                self.rank
            )));
        }
        if !(self.sampling_rate > 0.0 && self.sampling_rate <= 1.0) {
            return Err(Error::Config(format!(
                "sampling rate must lie in (0, 1], got {}",
                self.sampling_rate
            )));
        }
        if self.omega_size() == 0 {
            return Err(Error::Config(format!(
                "sampling rate {} observes no entry of a {}x{} matrix",
                self.sampling_rate, self.m, self.n
            )));
        }
        Ok(())
    }

    /// `round(sampling_rate · m · n)`.
    pub fn omega_size(&self) -> usize {
        (self.sampling_rate * (self.m * self.n) as f64).round() as usize
    }

    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.seed.wrapping_add(trial as u64)
    }
}

/// A generated rank-1 matrix together with its observed part.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub left: UnitVector,
    pub right: UnitVector,
    pub scale: f64,
    /// `scale · left · rightᵀ`, row-major.
    pub full: Vec<f64>,
    pub observed: ObservedMatrix,
}

fn gaussian_unit(rng: &mut ChaCha8Rng, dim: usize) -> UnitVector {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut *rng)).collect();
        if let Ok(u) = UnitVector::normalize(v) {
            return u;
        }
    }
}

pub fn generate_instance(
    m: usize,
    n: usize,
    rank: usize,
    omega_size: usize,
    seed: u64,
) -> Result<Instance> {
    if rank != 1 {
        return Err(Error::Config(format!(
            "only rank 1 is supported, got {rank}"
        )));
    }
    if m == 0 || n == 0 {
        return Err(Error::EmptyShape { rows: m, cols: n });
    }
    if omega_size == 0 || omega_size > m * n {
        return Err(Error::Config(format!(
            "omega size {omega_size} must lie in [1, {}]",
            m * n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    let left = gaussian_unit(&mut rng, m);
    let right = gaussian_unit(&mut rng, n);
    let scale: f64 = StandardNormal.sample(&mut rng);
    let full: Vec<f64> = left
        .as_slice()
        .iter()
        .flat_map(|ui| right.as_slice().iter().map(move |vj| scale * ui * vj))
        .collect();
    let mut picked = index::sample(&mut rng, m * n, omega_size).into_vec();
    picked.sort_unstable();
    let observed = ObservedMatrix::new(m, n, picked.into_iter().map(|k| (k / n, k % n, full[k])))?;
    Ok(Instance {
        left,
        right,
        scale,
        full,
        observed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialOutcome {
    pub success: bool,
    pub iterations: usize,
    pub transfers: usize,
    /// `‖u wᵀ - X‖_F / ‖X‖_F`.
    pub exact_recovery_err: f64,
}

/// Generates and solves trial `trial` of `spec`.
pub fn run_trial(spec: &TrialSpec, trial: usize, config: &SolverConfig) -> Result<TrialOutcome> {
    let seed = spec.trial_seed(trial);
    let inst = generate_instance(spec.m, spec.n, spec.rank, spec.omega_size(), seed)?;
    let config = SolverConfig {
        rng_seed: seed,
        transfer_enabled: spec.transfer_enabled,
        init: None,
        ..config.clone()
    };
    let report = solve(&inst.observed, &config)?;
    let (mut err, mut total) = (0.0, 0.0);
    for (k, xk) in inst.full.iter().enumerate() {
        let d = report.u.as_slice()[k / spec.n] * report.w[k % spec.n] - xk;
        err += d * d;
        total += xk * xk;
    }
    Ok(TrialOutcome {
        success: report.success,
        iterations: report.outer_iterations,
        transfers: report.transfers_performed,
        exact_recovery_err: if total > 0.0 {
            (err / total).sqrt()
        } else {
            err.sqrt()
        },
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub sampling_rate: f64,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    pub mean_iters: f64,
    pub mean_transfers: f64,
    pub mean_exact_recovery_err: f64,
}

impl SweepPoint {
    fn aggregate(sampling_rate: f64, outcomes: &[TrialOutcome]) -> Self {
        let trials = outcomes.len();
        let successes = outcomes.iter().filter(|o| o.success).count();
        let mean = |f: fn(&TrialOutcome) -> f64| {
            if trials == 0 {
                0.0
            } else {
                outcomes.iter().map(f).sum::<f64>() / trials as f64
            }
        };
        Self {
            sampling_rate,
            trials,
            successes,
            success_rate: if trials == 0 {
                0.0
            } else {
                successes as f64 / trials as f64
            },
            mean_iters: mean(|o| o.iterations as f64),
            mean_transfers: mean(|o| o.transfers as f64),
            mean_exact_recovery_err: mean(|o| o.exact_recovery_err),
        }
    }
}

/// Sweep points in ascending sampling rate.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
}

/// Runs every trial of every spec on the current rayon pool.
///
/// Outcomes are collected in trial order, so the result does not depend on
/// scheduling.
pub fn run_sweep(specs: &[TrialSpec], config: &SolverConfig) -> Result<SweepResult> {
    if specs.is_empty() {
        return Err(Error::Config("a sweep needs at least one spec".into()));
    }
    config.validate()?;
    for spec in specs {
        spec.validate()?;
    }
    let jobs: Vec<(usize, usize)> = specs
        .iter()
        .enumerate()
        .flat_map(|(s, spec)| (0..spec.trials).map(move |t| (s, t)))
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|&(s, t)| run_trial(&specs[s], t, config))
        .collect::<Result<Vec<_>>>()?;

    let mut points = Vec::with_capacity(specs.len());
    let mut offset = 0;
    for spec in specs {
        let chunk = &outcomes[offset..offset + spec.trials];
        offset += spec.trials;
        points.push(SweepPoint::aggregate(spec.sampling_rate, chunk));
    }
    points.sort_by(|a, b| a.sampling_rate.total_cmp(&b.sampling_rate));
    Ok(SweepResult { points })
}

pub fn render_csv(result: &SweepResult) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for p in &result.points {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            p.sampling_rate,
            p.trials,
            p.successes,
            p.success_rate,
            p.mean_iters,
            p.mean_transfers,
            p.mean_exact_recovery_err
        );
    }
    out
}

pub fn emit_csv(result: &SweepResult, path: impl AsRef<Path>) -> Result<()> {
    write_atomic(path, render_csv(result).as_bytes())
}

/// `sampling_rate success_rate` series, one gnuplot data block per arm.
pub fn render_gnuplot(arms: &[(&str, &SweepResult)]) -> String {
    let mut out = String::new();
    for (i, (label, result)) in arms.iter().enumerate() {
        if i > 0 {
            out.push_str("\n\n");
        }
        let _ = writeln!(out, "# {label}");
        for p in &result.points {
            let _ = writeln!(out, "{} {}", p.sampling_rate, p.success_rate);
        }
    }
    out
}

pub fn emit_gnuplot(arms: &[(&str, &SweepResult)], path: impl AsRef<Path>) -> Result<()> {
    write_atomic(path, render_gnuplot(arms).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(rate: f64) -> TrialSpec {
        TrialSpec {
            m: 6,
            n: 5,
            rank: 1,
            sampling_rate: rate,
            trials: 3,
            seed: 11,
            transfer_enabled: true,
        }
    }

    #[test]
    fn spec_validation() {
        assert!(spec(0.5).validate().is_ok());
        assert!(spec(1.5).validate().is_err());
        assert!(spec(0.0).validate().is_err());
        assert!(spec(0.001).validate().is_err());
        assert!(TrialSpec {
            rank: 2,
            ..spec(0.5)
        }
        .validate()
        .is_err());
        assert_eq!(spec(0.5).omega_size(), 15);
    }

    #[test]
    fn instance_generation_contract() {
        assert!(generate_instance(4, 3, 1, 0, 1).is_err());
        assert!(generate_instance(4, 3, 1, 13, 1).is_err());
        assert!(generate_instance(4, 3, 2, 5, 1).is_err());
        let a = generate_instance(4, 3, 1, 5, 9).unwrap();
        assert_eq!(a, generate_instance(4, 3, 1, 5, 9).unwrap());
        assert_eq!(a.observed.len(), 5);
        for e in a.observed.entries() {
            assert_eq!(e.value, a.full[e.row * 3 + e.col]);
        }
        let full = generate_instance(4, 3, 1, 12, 9).unwrap();
        assert_eq!(full.observed.len(), 12);
    }

    #[test]
    fn csv_layout() {
        let result = SweepResult {
            points: vec![SweepPoint::aggregate(
                0.25,
                &[
                    TrialOutcome {
                        success: true,
                        iterations: 4,
                        transfers: 1,
                        exact_recovery_err: 0.0,
                    },
                    TrialOutcome {
                        success: false,
                        iterations: 2000,
                        transfers: 0,
                        exact_recovery_err: 1.0,
                    },
                ],
            )],
        };
        let text = render_csv(&result);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines, [CSV_HEADER, "0.25,2,1,0.5,1002,0.5,0.5"]);
    }

    #[test]
    fn sweep_rows_are_sorted() {
        let result = run_sweep(&[spec(0.9), spec(0.4)], &SolverConfig::default()).unwrap();
        let rates: Vec<_> = result.points.iter().map(|p| p.sampling_rate).collect();
        assert_eq!(rates, [0.4, 0.9]);
        assert!(run_sweep(&[], &SolverConfig::default()).is_err());
    }

    #[test]
    fn gnuplot_blocks() {
        let result = SweepResult {
            points: vec![SweepPoint::aggregate(0.5, &[])],
        };
        let text = render_gnuplot(&[("transfer", &result), ("evolution-only", &result)]);
        assert_eq!(text, "# transfer\n0.5 0\n\n\n# evolution-only\n0.5 0\n");
    }
}
