//! The `kyfan` command line. Exit codes: 0 success, 1 failed reproduction
//! checkpoint, 2 usage or input error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, Measure};
use crate::criteria::{self, CriterionParams, CriterionVerdict, ParamGrid};
use crate::density::BipartiteDensityMatrix;
use crate::error::{Error, Result};
use crate::reproduce::{self, ReproduceOptions};
use crate::states::{self, ChessboardParams};
use crate::sweep::{self, SweepSpec, SweepVariable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECKPOINT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "kyfan", version, about = "Realignment-based entanglement criteria and concurrence/CREN lower bounds")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one criterion or one lower bound on a state.
    Eval(EvalArgs),
    /// Sweep a lower bound over noise weight or alpha = beta and write CSV.
    Sweep(SweepArgs),
    /// Grid-search (alpha, beta) for the largest Ky Fan margin.
    Optimize(OptimizeArgs),
    /// Recompute the reference checkpoints and compare.
    Reproduce(ReproduceArgs),
    /// Write a state to a state file.
    WriteState(WriteStateArgs),
}

/// Where a state comes from. Builtin names: `bell`, `tiles`, `chessboard`,
/// `maximally-mixed`, `random`, `random-separable`; anything else is a state file path.
#[derive(Args, Debug)]
struct StateArgs {
    #[arg(long)]
    state: String,
    /// Chessboard parameters m,n,a,b,c,d.
    #[arg(long, allow_negative_numbers = true, value_delimiter = ',', value_name = "M,N,A,B,C,D", default_values_t = [0.469, -0.3161, 0.33, -0.109, -0.65, 0.8560])]
    chessboard_params: Vec<f64>,
    #[arg(long, default_value_t = 3)]
    dim_a: usize,
    #[arg(long, default_value_t = 3)]
    dim_b: usize,
    /// Number of product terms for `random-separable`.
    #[arg(long, default_value_t = 4)]
    terms: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Ppt,
    Ccnr,
    Enhanced,
    Kyfan,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MeasureArg {
    Concurrence,
    Cren,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Concurrence => Measure::Concurrence,
            MeasureArg::Cren => Measure::Cren,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum VariableArg {
    NoiseWeight,
    AlphaBeta,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    state: StateArgs,
    /// White-noise weight w: the state becomes (1-w) rho + w I/d.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    noise_weight: f64,
    #[arg(long, conflicts_with = "measure", required_unless_present = "measure")]
    criterion: Option<CriterionArg>,
    #[arg(long)]
    measure: Option<MeasureArg>,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    beta: f64,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long)]
    measure: MeasureArg,
    #[arg(long, default_value = "noise-weight")]
    variable: VariableArg,
    #[arg(long, allow_negative_numbers = true)]
    start: f64,
    #[arg(long, allow_negative_numbers = true)]
    stop: f64,
    #[arg(long)]
    steps: usize,
    /// Fixed alpha for noise sweeps.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    alpha: f64,
    /// Fixed beta for noise sweeps.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    beta: f64,
    /// Fixed noise weight for alpha-beta sweeps.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    noise_weight: f64,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args, Debug)]
struct OptimizeArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    noise_weight: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1e-2)]
    grid_min: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1e4)]
    grid_max: f64,
    /// Points on the alpha = beta diagonal.
    #[arg(long, default_value_t = 60)]
    diagonal_points: usize,
    /// Points per axis of the product grid (0 disables it).
    #[arg(long, default_value_t = 15)]
    axis_points: usize,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    /// Override alpha of the chessboard checkpoint (sensitivity check).
    #[arg(long, default_value_t = 250.0, hide = true)]
    chessboard_alpha: f64,
}

#[derive(Args, Debug)]
struct WriteStateArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    noise_weight: f64,
    #[arg(long)]
    output: PathBuf,
}

/// Formats with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.5}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&magnitude) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

impl StateArgs {
    fn load(&self, stderr: &mut dyn Write) -> Result<(String, BipartiteDensityMatrix)> {
        let rho = match self.state.as_str() {
            "bell" => states::bell_state(),
            "tiles" => states::tiles_ppt_state(),
            "chessboard" => {
                let p = &self.chessboard_params;
                if p.len() != 6 {
                    return Err(Error::Parameter(format!("--chessboard-params needs 6 values, got {}", p.len())));
                }
                let params = ChessboardParams { m: p[0], n: p[1], a: p[2], b: p[3], c: p[4], d: p[5] };
                let rho = states::chessboard_state(&params)?;
                let ppt = criteria::ppt_test(&rho)?;
                if ppt.detected {
                    let _ = writeln!(stderr, "warning: chessboard state is not PPT (margin {})", sig6(ppt.margin));
                }
                rho
            }
            "maximally-mixed" => states::maximally_mixed(self.dim_a, self.dim_b)?,
            "random" => states::random_density(self.dim_a, self.dim_b, self.seed)?,
            "random-separable" => states::random_separable(self.dim_a, self.dim_b, self.terms, self.seed)?,
            path => states::read_state(path)?,
        };
        Ok((self.state.clone(), rho))
    }

    fn load_mixed(&self, noise_weight: f64, stderr: &mut dyn Write) -> Result<(String, BipartiteDensityMatrix)> {
        let (name, rho) = self.load(stderr)?;
        if noise_weight == 0.0 {
            return Ok((name, rho));
        }
        Ok((format!("{name}, noise weight {noise_weight}"), states::mix_white_noise(&rho, noise_weight)?))
    }
}

fn print_verdict(out: &mut dyn Write, v: &CriterionVerdict) -> std::io::Result<()> {
    writeln!(out, "criterion: {}", v.criterion)?;
    if let Some(p) = v.params {
        writeln!(out, "alpha: {}", sig6(p.alpha()))?;
        writeln!(out, "beta: {}", sig6(p.beta()))?;
    }
    writeln!(out, "lhs: {}", sig6(v.lhs))?;
    writeln!(out, "rhs: {}", sig6(v.rhs))?;
    writeln!(out, "margin: {}", sig6(v.margin))?;
    writeln!(out, "detected: {}", if v.detected { "yes (entangled)" } else { "no" })
}

fn eval(args: &EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (name, rho) = args.state.load_mixed(args.noise_weight, err)?;
    let params = CriterionParams::new(args.alpha, args.beta)?;
    writeln!(out, "state: {name} ({}x{})", rho.dim_a(), rho.dim_b())?;
    if let Some(measure) = args.measure {
        let report = bounds::lower_bound(measure.into(), &rho, params)?;
        writeln!(out, "measure: {}", report.measure)?;
        writeln!(out, "alpha: {}", sig6(params.alpha()))?;
        writeln!(out, "beta: {}", sig6(params.beta()))?;
        writeln!(out, "bound: {}", sig6(report.bound))?;
        writeln!(out, "raw: {}", sig6(report.raw))?;
        writeln!(out, "clamped: {}", report.clamped)?;
    } else {
        let verdict = match args.criterion.expect("clap enforces criterion or measure") {
            CriterionArg::Ppt => criteria::ppt_test(&rho)?,
            CriterionArg::Ccnr => criteria::ccnr_test(&rho)?,
            CriterionArg::Enhanced => criteria::enhanced_realignment_test(&rho)?,
            CriterionArg::Kyfan => criteria::kyfan_criterion_test(&rho, params)?,
        };
        print_verdict(out, &verdict)?;
    }
    Ok(EXIT_OK)
}

fn sweep(args: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let variable = match args.variable {
        VariableArg::NoiseWeight => SweepVariable::NoiseWeight,
        VariableArg::AlphaBeta => SweepVariable::AlphaBetaDiagonal,
    };
    if variable == SweepVariable::NoiseWeight && args.noise_weight != 0.0 {
        return Err(Error::Parameter("--noise-weight is the swept variable; do not fix it".into()));
    }
    let (_, rho) = args.state.load_mixed(args.noise_weight, err)?;
    let spec = SweepSpec::new(variable, args.start, args.stop, args.steps, CriterionParams::new(args.alpha, args.beta)?)?;
    let rows = sweep::run_sweep(&rho, &spec, args.measure.into())?;
    let file = File::create(&args.output)?;
    sweep::write_csv(&rows, BufWriter::new(file))?;
    writeln!(out, "wrote {} rows to {}", rows.len(), args.output.display())?;
    Ok(EXIT_OK)
}

fn optimize(args: &OptimizeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (name, rho) = args.state.load_mixed(args.noise_weight, err)?;
    let mut grid = ParamGrid::log_diagonal(args.grid_min, args.grid_max, args.diagonal_points)?;
    if args.axis_points > 0 {
        grid = grid.chain(ParamGrid::log_product(args.grid_min, args.grid_max, args.axis_points)?);
    }
    let (best, verdict) = criteria::optimize_params(&rho, &grid)?;
    writeln!(out, "state: {name} ({}x{})", rho.dim_a(), rho.dim_b())?;
    writeln!(out, "grid points: {}", grid.len())?;
    writeln!(out, "best alpha: {}", sig6(best.alpha()))?;
    writeln!(out, "best beta: {}", sig6(best.beta()))?;
    writeln!(out, "margin: {}", sig6(verdict.margin))?;
    writeln!(out, "entanglement certified: {}", if verdict.detected { "yes" } else { "no" })?;
    Ok(EXIT_OK)
}

fn reproduce_cmd(args: &ReproduceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let checkpoints = reproduce::run_checkpoints(ReproduceOptions { chessboard_alpha: args.chessboard_alpha })?;
    writeln!(out, "{:<48} {:>12} {:>12} {:>12} {:>10}  status", "checkpoint", "computed", "expected", "|diff|", "tol")?;
    for cp in &checkpoints {
        writeln!(
            out,
            "{:<48} {:>12} {:>12} {:>12} {:>10}  {}",
            cp.name,
            sig6(cp.computed),
            sig6(cp.expected),
            sig6(cp.deviation()),
            format!("{:e}", cp.tolerance),
            if cp.passed() { "pass" } else { "FAIL" }
        )?;
    }
    let passed = checkpoints.iter().filter(|c| c.passed()).count();
    writeln!(out, "{passed}/{} checkpoints passed", checkpoints.len())?;
    let failed: Vec<_> = checkpoints.iter().filter(|c| !c.passed()).collect();
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        for cp in failed {
            writeln!(err, "checkpoint failed: {}", cp.name)?;
        }
        Ok(EXIT_CHECKPOINT_FAILED)
    }
}

fn write_state_cmd(args: &WriteStateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (_, rho) = args.state.load_mixed(args.noise_weight, err)?;
    states::write_state(&rho, &args.output)?;
    writeln!(out, "wrote {}x{} state to {}", rho.dim_a(), rho.dim_b(), args.output.display())?;
    Ok(EXIT_OK)
}

/// Runs a parsed command line, reporting errors on `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Eval(a) => eval(a, out, err),
        Command::Sweep(a) => sweep(a, out, err),
        Command::Optimize(a) => optimize(a, out, err),
        Command::Reproduce(a) => reproduce_cmd(a, out, err),
        Command::WriteState(a) => write_state_cmd(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            code
        }
    }
}
