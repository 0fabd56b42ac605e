//! The `setmc` command line: `solve`, `bench` and `demo`.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when the solver does not
//! reach the tolerance.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use set_completion::bench::{self, SweepResult, TrialSpec, DEFAULT_RATES};
use set_completion::io::{self, InputFormat, OutputFormat};
use set_completion::{
    descent_ray, eval_atomic, eval_f, fixture, solve, solve_with_observer, IterationEvent,
    SolveReport, SolverConfig,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_NO_CONVERGENCE: u8 = 2;

/// Environment variable consulted for `--seed` when the flag is absent.
pub const SEED_ENV: &str = "SETMC_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "setmc",
    version,
    about = "Rank-1 matrix completion by subspace evolution and transfer"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complete one observed matrix.
    Solve(SolveArgs),
    /// Monte-Carlo success rates over sampling rates.
    Bench(BenchArgs),
    /// The 3x2 barrier example, with and without transfer.
    Demo(DemoArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Observed entries.
    pub input: PathBuf,
    /// `mm` (MatrixMarket coordinate, 1-based) or `csv` (`i,j,value`, 0-based).
    #[arg(long, default_value = "mm", value_parser = parse_input_format)]
    pub format: InputFormat,
    /// Matrix shape for CSV input, otherwise inferred from the largest indices.
    #[arg(long, requires = "cols")]
    pub rows: Option<usize>,
    #[arg(long, requires = "rows")]
    pub cols: Option<usize>,
    /// Relative residual below which the completion counts as consistent.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 2000)]
    pub max_iter: usize,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Starting vector, one value per line; normalized on load.
    #[arg(long)]
    pub init: Option<PathBuf>,
    #[arg(long)]
    pub no_transfer: bool,
    /// Where to write the completed matrix; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// `csv` (dense) or `mm` (MatrixMarket array).
    #[arg(long, default_value = "csv", value_parser = parse_output_format)]
    pub output_format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    pub m: usize,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Comma-separated sampling rates in (0, 1].
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_RATES)]
    pub rates: Vec<f64>,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Sweep CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `sampling_rate success_rate` series for gnuplot.
    #[arg(long)]
    pub gnuplot: Option<PathBuf>,
    #[arg(long)]
    pub no_transfer: bool,
    /// Worker threads; all cores when absent.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = 2000)]
    pub max_iter: usize,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Print only every k-th iteration of each arm.
    #[arg(long, default_value_t = 1)]
    pub every: usize,
}

fn parse_input_format(s: &str) -> Result<InputFormat, String> {
    s.parse()
}

fn parse_output_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

/// `x` with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&exp) {
        format!("{x:.5e}")
    } else {
        format!("{:.*}", (5 - exp).max(0) as usize, x)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Solve(args) => cmd_solve(&args, out, err),
        Command::Bench(args) => cmd_bench(&args, out, err),
        Command::Demo(args) => cmd_demo(&args, out, err),
    }
}

fn write_report(out: &mut impl Write, report: &SolveReport) {
    let _ = writeln!(out, "success: {}", report.success);
    let _ = writeln!(out, "iterations: {}", report.outer_iterations);
    let _ = writeln!(out, "transfers: {}", report.transfers_performed);
    let _ = writeln!(out, "objective: {}", sig6(report.final_objective));
    let _ = writeln!(out, "relative residual: {}", sig6(report.relative_residual));
    if report.stationary {
        let _ = writeln!(out, "stopped at a stationary point");
    }
}

pub fn cmd_solve(args: &SolveArgs, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let shape = args.rows.zip(args.cols);
    let x = match io::load_observed_with_shape(&args.input, args.format, shape) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let init = match &args.init {
        Some(path) => match io::load_vector(path) {
            Ok(u) => Some(u),
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        },
        None => None,
    };
    let config = SolverConfig {
        eps_e: args.tol,
        max_outer_iters: args.max_iter,
        transfer_enabled: !args.no_transfer,
        rng_seed: args.seed,
        init,
        ..Default::default()
    };
    let report = match solve(&x, &config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    match &args.output {
        Some(path) => {
            if let Err(e) = io::save_completed(&report.u, &report.w, path, args.output_format) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INPUT;
            }
        }
        None => {
            let _ = write!(
                out,
                "{}",
                io::render_completed(report.u.as_slice(), &report.w, args.output_format)
            );
        }
    }
    write_report(out, &report);
    if report.success {
        EXIT_OK
    } else {
        let _ = writeln!(err, "did not reach relative residual {}", sig6(args.tol));
        EXIT_NO_CONVERGENCE
    }
}

/// Summary table of a sweep.
pub fn render_table(result: &SweepResult) -> String {
    let mut s = format!(
        "{:>10} {:>7} {:>9} {:>12} {:>12} {:>14} {:>14}\n",
        "rate",
        "trials",
        "successes",
        "success_rate",
        "mean_iters",
        "mean_transfers",
        "recovery_err"
    );
    for p in &result.points {
        s.push_str(&format!(
            "{:>10} {:>7} {:>9} {:>12} {:>12} {:>14} {:>14}\n",
            sig6(p.sampling_rate),
            p.trials,
            p.successes,
            sig6(p.success_rate),
            sig6(p.mean_iters),
            sig6(p.mean_transfers),
            sig6(p.mean_exact_recovery_err)
        ));
    }
    s
}

pub fn cmd_bench(args: &BenchArgs, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let specs: Vec<TrialSpec> = args
        .rates
        .iter()
        .map(|&sampling_rate| TrialSpec {
            m: args.m,
            n: args.n,
            rank: 1,
            sampling_rate,
            trials: args.trials,
            seed: args.seed,
            transfer_enabled: !args.no_transfer,
        })
        .collect();
    let config = SolverConfig {
        max_outer_iters: args.max_iter,
        ..Default::default()
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let result = match pool.install(|| bench::run_sweep(&specs, &config)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    if let Some(path) = &args.out {
        if let Err(e) = bench::emit_csv(&result, path) {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    }
    if let Some(path) = &args.gnuplot {
        let label = if args.no_transfer {
            "no-transfer"
        } else {
            "transfer"
        };
        if let Err(e) = bench::emit_gnuplot(&[(label, &result)], path) {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    }
    let _ = write!(out, "{}", render_table(&result));
    EXIT_OK
}

fn demo_arm(out: &mut impl Write, transfer_enabled: bool, every: usize) -> SolveReport {
    let x = fixture::example_matrix();
    let config = SolverConfig {
        init: Some(fixture::blocked_start()),
        transfer_enabled,
        ..Default::default()
    };
    let _ = writeln!(
        out,
        "== transfer {} ==",
        if transfer_enabled {
            "enabled"
        } else {
            "disabled"
        }
    );
    let report = solve_with_observer(&x, &config, |e: &IterationEvent| {
        if let Some(rec) = e.barrier {
            let _ = writeln!(
                out,
                "iter {:>4}  f = {}  barrier: column {} blocks column {}, t_o = {}, t_p = {}, slope = {}",
                e.index,
                sig6(e.objective),
                rec.blocking_column,
                rec.blocked_column,
                sig6(rec.t_o),
                sig6(rec.t_p),
                sig6(rec.total_slope_at_t_o)
            );
            let f1 = eval_atomic(&e.transferred, &x, 0).unwrap_or(f64::NAN);
            let _ = writeln!(out, "           contour probe f_1(u(t_o)) = {}", sig6(f1));
        } else if e.index.is_multiple_of(every) {
            let _ = writeln!(out, "iter {:>4}  f = {}", e.index, sig6(e.objective));
        }
    })
    .expect("the built-in example is well formed");
    write_report(out, &report);
    report
}

pub fn cmd_demo(args: &DemoArgs, out: &mut impl Write, err: &mut impl Write) -> u8 {
    if args.every == 0 {
        let _ = writeln!(err, "error: --every must be at least 1");
        return EXIT_INPUT;
    }
    let x = fixture::example_matrix();
    let u0 = fixture::blocked_start();
    let f0 = eval_f(&u0, &x).expect("the built-in example is well formed");
    let _ = writeln!(
        out,
        "X = [[?, 2], [2, ?], [2, 1]], u0 = (-10, 1, 1)/sqrt(102)"
    );
    let _ = writeln!(
        out,
        "initial f = {} (144/101 = {})",
        sig6(f0),
        sig6(144.0 / 101.0)
    );
    if let Ok(ray) = descent_ray(&u0, &x) {
        let h = ray.direction();
        let _ = writeln!(
            out,
            "descent direction h = ({}, {}, {})",
            sig6(h[0]),
            sig6(h[1]),
            sig6(h[2])
        );
    }
    let on = demo_arm(out, true, args.every);
    let off = demo_arm(out, false, args.every);
    let _ = writeln!(
        out,
        "transfer enabled: {}; transfer disabled: {}",
        if on.success { "success" } else { "failure" },
        if off.success { "success" } else { "failure" }
    );
    EXIT_OK
}
