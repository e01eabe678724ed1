//! The `gcm` command line: argument definitions and dispatch.

pub mod args;
pub mod output;
pub mod table;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gcm_core::bounds::{
    asymptotic_rate, conditional_expectation_bound, dual_cap, expectation_bound,
    general_truncated_expectation, inverse_power_lower_bound, inverse_power_upper_bound,
    main_lower_bound, normalized_main_bound, profile_agreement, BoundParams, CONDEXP_THRESHOLD,
    DEFAULT_TOL, SHARP_THRESHOLD,
};
use gcm_core::interp::minorant::MIN_GRID_POINTS;
use gcm_core::interp::{aux_eval, build_aux, lp_bound_via_aux, verify_minorant, Precision};
use gcm_core::lattices::{lattice_energy_with_cache, LatticeModel};
use gcm_core::suites::{run_suite, Suite, SuiteConfig, SuiteReport};
use rayon::prelude::*;

use args::{parse_alpha, parse_positive, parse_rows, Rows};
use output::{fmt8, render_records, render_table, Format, Record};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gcm_core::Error),
    #[error("{0}")]
    Usage(String),
    /// Carries the report, which still goes to standard out.
    #[error("{failed} verification suite(s) failed")]
    VerifyFailed { report: String, failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(gcm_core::Error::Domain(_)) | CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_convergence_failure() => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gcm",
    version,
    about = "Energy bounds for the Gaussian core model"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one bound.
    Bound(BoundArgs),
    /// Lower bound next to the best known energy, one row per dimension.
    Table(TableArgs),
    /// Build the truncated auxiliary function and evaluate its bound.
    Aux(AuxArgs),
    /// Energy of a lattice.
    Lattice(LatticeArgs),
    /// Growth rates of the bounds, and the Gaussian profile of the summands.
    Asymptotics(AsymptoticsArgs),
    /// Bounds for the inverse power law potential.
    Powerlaw(PowerlawArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKindArg {
    Main,
    Normalized,
    Expectation,
    CondExpectation,
    Truncated,
    DualCap,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_enum, default_value_t = BoundKindArg::Main)]
    pub kind: BoundKindArg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Decimal, or one of pi, 4pi/e, pi*e.
    #[arg(long, allow_negative_numbers = true, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1")]
    pub rho: f64,
    /// Cut radius for --kind truncated.
    #[arg(long, allow_negative_numbers = true, value_parser = parse_nonnegative)]
    pub r_cut: Option<f64>,
    /// Divisor for --kind truncated.
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive)]
    pub divisor: Option<f64>,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_nonnegative(s: &str) -> Result<f64, String> {
    match s.trim() {
        "0" => Ok(0.0),
        t => parse_positive(t),
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Dimensions, e.g. 1-9,24,100.
    #[arg(long, value_parser = parse_rows, default_value = "1-9,24,100,200,500")]
    pub rows: Rows,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_alpha, default_value = "pi")]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1")]
    pub rho: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Directory for cached lattice theta coefficients.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrecisionArg {
    Standard,
    Extended,
}

#[derive(Debug, Args)]
pub struct AuxArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1")]
    pub rho: f64,
    /// Number of interpolation nodes counted with multiplicity (even).
    #[arg(long, default_value_t = 200)]
    pub m: usize,
    /// Standard is promoted to extended above M = 60.
    #[arg(long, value_enum, default_value_t = PrecisionArg::Extended)]
    pub precision: PrecisionArg,
    /// Relative tolerance of the radial cross-check (fails beyond 100x).
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "2e-3")]
    pub quadrature_tol: f64,
    /// Grid points for the minorant scan.
    #[arg(long, default_value_t = MIN_GRID_POINTS)]
    pub scan_points: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// Z<n>, A2, D4, E8 or Leech.
    #[arg(long, value_parser = parse_model)]
    pub model: LatticeModel,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1")]
    pub rho: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1e-12")]
    pub tol: f64,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_model(s: &str) -> Result<LatticeModel, String> {
    LatticeModel::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct AsymptoticsArgs {
    #[arg(long, allow_negative_numbers = true, value_parser = parse_alpha)]
    pub alpha: f64,
    /// Also compare the summands at this dimension with the Gaussian profile.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1")]
    pub rho: f64,
    /// Half-width of the profile window in units of sqrt(n).
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "2")]
    pub window: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PowerlawArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// The potential is |x|^-(n+s).
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive)]
    pub s: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1")]
    pub rho: f64,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "1e-8")]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Oracle,
    Psd,
    Bgf,
    Minorant,
    Coefficients,
    Sandwich,
    InversePower,
    Alg,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Psd => Suite::Psd,
            SuiteArg::Bgf => Suite::Bgf,
            SuiteArg::Minorant => Suite::Minorant,
            SuiteArg::Coefficients => Suite::Coefficients,
            SuiteArg::Sandwich => Suite::Sandwich,
            SuiteArg::InversePower => Suite::InversePower,
            SuiteArg::Alg => Suite::Alg,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only these suites (repeatable); all by default.
    #[arg(long, value_enum)]
    pub suite: Vec<SuiteArg>,
    #[arg(long, default_value_t = 200)]
    pub m: usize,
    #[arg(long, allow_negative_numbers = true, value_parser = parse_positive, default_value = "2e-3")]
    pub quadrature_tol: f64,
    #[arg(long, default_value_t = 100)]
    pub psd_trials: usize,
    #[arg(long, default_value_t = 17)]
    pub seed: u64,
}

/// Executes one command and returns what goes to standard out.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Bound(a) => bound(a),
        Command::Table(a) => {
            if a.rows.0.is_empty() {
                return Err(CliError::Usage("--rows: no dimensions given".into()));
            }
            let rows = table::table_rows(&a.rows.0, a.alpha, a.rho, a.tol, a.cache_dir.as_deref())?;
            Ok(render_table(&rows, a.format))
        }
        Command::Aux(a) => aux(a),
        Command::Lattice(a) => {
            let e =
                lattice_energy_with_cache(&a.model, a.alpha, a.rho, a.tol, a.cache_dir.as_deref())?;
            let mut rec = Record::from(&e);
            rec.notes.insert(0, format!("lattice {}", a.model));
            Ok(render_records(&[rec], a.format))
        }
        Command::Asymptotics(a) => asymptotics(a),
        Command::Powerlaw(a) => {
            let up = inverse_power_upper_bound(a.n, a.s, a.rho)?;
            let lo = inverse_power_lower_bound(a.n, a.s, a.rho, a.tol)?;
            let mut recs = vec![Record::from(&lo), Record::from(&up)];
            recs[0].notes.push(format!(
                "lower/upper = {}",
                fmt8((lo.log_value - up.log_value).exp())
            ));
            Ok(render_records(&recs, a.format))
        }
        Command::Verify(a) => verify(a),
    }
}

fn bound(a: &BoundArgs) -> Result<String, CliError> {
    let p = BoundParams::new(a.n, a.alpha, a.rho)?;
    if a.kind != BoundKindArg::Truncated && (a.r_cut.is_some() || a.divisor.is_some()) {
        return Err(CliError::Usage(
            "--r-cut and --divisor apply only to --kind truncated".into(),
        ));
    }
    let b = match a.kind {
        BoundKindArg::Main => main_lower_bound(&p, a.tol)?,
        BoundKindArg::Normalized => normalized_main_bound(&p, a.tol)?,
        BoundKindArg::Expectation => expectation_bound(&p),
        BoundKindArg::CondExpectation => conditional_expectation_bound(&p)?,
        BoundKindArg::DualCap => dual_cap(&p)?,
        BoundKindArg::Truncated => {
            let r_cut = a
                .r_cut
                .ok_or_else(|| CliError::Usage("--kind truncated needs --r-cut".into()))?;
            let k = a
                .divisor
                .ok_or_else(|| CliError::Usage("--kind truncated needs --divisor".into()))?;
            general_truncated_expectation(&p, r_cut, k)?
        }
    };
    let mut rec = Record::from(&b);
    if a.kind == BoundKindArg::Normalized {
        rec.kind = "normalized_main_lower".into();
    }
    Ok(render_records(&[rec], a.format))
}

fn aux(a: &AuxArgs) -> Result<String, CliError> {
    let p = BoundParams::new(a.n, a.alpha, a.rho)?;
    let requested = match a.precision {
        PrecisionArg::Standard => Precision::Standard,
        PrecisionArg::Extended => Precision::Extended,
    };
    let h = build_aux(&p, a.m, requested)?;
    let lp = lp_bound_via_aux(&h, a.quadrature_tol)?;
    let radii = h.node_radii();
    let t_max = 0.9 * radii[radii.len() - 1];
    let scan = verify_minorant(&h, t_max, a.scan_points)?;
    let mut rec = Record::from(&lp);
    let precision = match h.precision {
        Precision::Standard => "standard",
        Precision::Extended => "extended",
    };
    rec.notes
        .insert(0, format!("M = {}, precision {precision}", h.m));
    rec.notes.push(format!(
        "h(0) = p_M(0) = {}",
        output::fmt_full(aux_eval(&h, 0.0))
    ));
    rec.notes.push(format!(
        "minorant scan on [0, {t_max:.6}] with {} points: max(p_M - f) = {:.3e} at t = {:.6}",
        a.scan_points, scan.max_violation, scan.argmax
    ));
    Ok(render_records(&[rec], a.format))
}

fn asymptotics(a: &AsymptoticsArgs) -> Result<String, CliError> {
    let rates = asymptotic_rate(a.alpha)?;
    let mut lower = Record::new(
        "asymptotic_lower_rate",
        rates.lower_rate,
        rates.lower_rate.ln(),
    );
    lower.alpha = Some(a.alpha);
    lower.notes.push(if a.alpha < SHARP_THRESHOLD {
        "alpha < 4pi/e: equals the expectation rate sqrt(pi/alpha)".into()
    } else {
        "alpha >= 4pi/e: (1/2) exp(1 - alpha e/(8pi))".into()
    });
    let mut upper = Record::new(
        "asymptotic_upper_rate",
        rates.upper_rate,
        rates.upper_rate.ln(),
    );
    upper.alpha = Some(a.alpha);
    upper.notes.push(if a.alpha <= CONDEXP_THRESHOLD {
        "alpha <= pi e: expectation rate sqrt(pi/alpha)".into()
    } else {
        "alpha > pi e: conditional expectation rate".into()
    });
    let mut recs = vec![lower, upper];
    if let Some(n) = a.n {
        let p = BoundParams::new(n, a.alpha, a.rho)?;
        let prof = profile_agreement(&p, a.window)?;
        let mut r = Record::new(
            "profile_agreement",
            prof.max_deviation,
            prof.max_deviation.ln(),
        );
        r.n = Some(n);
        r.alpha = Some(a.alpha);
        r.rho = Some(a.rho);
        r.terms_used = prof.samples.len();
        r.notes.push(format!(
            "max |actual/predicted - 1| at d = {:.4}",
            prof.argmax_d
        ));
        r.notes.push(format!(
            "window mass: actual {}, predicted {}, relative deviation {:.3e}",
            fmt8(prof.actual_mass),
            fmt8(prof.predicted_mass),
            prof.mass_deviation()
        ));
        recs.push(r);
    }
    Ok(render_records(&recs, a.format))
}

fn verify(a: &VerifyArgs) -> Result<String, CliError> {
    let cfg = SuiteConfig {
        m: a.m,
        quadrature_tol: a.quadrature_tol,
        psd_trials: a.psd_trials,
        seed: a.seed,
    };
    let suites: Vec<Suite> = if a.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suite.iter().map(|&s| s.into()).collect()
    };
    let reports: Vec<SuiteReport> = suites.par_iter().map(|&s| run_suite(s, &cfg)).collect();
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        out.push_str(&format!("all {} suites passed\n", reports.len()));
        Ok(out)
    } else {
        out.push_str(&format!("{failed} of {} suites failed\n", reports.len()));
        Err(CliError::VerifyFailed {
            report: out,
            failed,
        })
    }
}

/// Caps the global thread pool from `GCM_THREADS`.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("GCM_THREADS") else {
        return Ok(());
    };
    let threads = match v.trim().parse::<usize>() {
        Ok(t) if t >= 1 => t,
        _ => {
            return Err(CliError::Usage(format!(
                "GCM_THREADS must be a positive integer, got '{v}'"
            )))
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("GCM_THREADS: {e}")))
}
