//! `u1kepler`: spectrum tables, K-type bookkeeping, verification suites and
//! profile sampling for the U(1)-Kepler problems.
//!
//! Exit status: 0 when every check in scope passes, 1 when a check fails,
//! 2 on invalid configuration.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use u1kepler::exact::{format_rational, rational_to_f64};
use u1kepler::geometry::{verify_metric_decomposition, DEFAULT_SEED};
use u1kepler::oscillator::{self, oscillator_inner_product, oscillator_residual, twist};
use u1kepler::radial::{self, radial_eigenfunction, radial_operator_residual};
use u1kepler::spectra::{spectrum_table, verify_ktype_dimensions};
use u1kepler::suites::{run_all, run_suite, Check, Scope, Suite, Tolerances};
use u1kepler::{fd, ProblemParams};

use report::{Cell, Failure, Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "u1kepler",
    version,
    about = "Exact and numerical checks for the U(1)-Kepler problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(flatten)]
    tol: TolArgs,
}

/// Tolerance overrides; each can also be set from the environment.
#[derive(Debug, Args)]
struct TolArgs {
    #[arg(long, global = true, env = "U1KEPLER_TOL_RADIAL")]
    tol_radial: Option<f64>,
    #[arg(long, global = true, env = "U1KEPLER_TOL_GRAM")]
    tol_gram: Option<f64>,
    #[arg(long, global = true, env = "U1KEPLER_TOL_NORM")]
    tol_norm: Option<f64>,
    #[arg(long, global = true, env = "U1KEPLER_TOL_OSCILLATOR")]
    tol_oscillator: Option<f64>,
    #[arg(long, global = true, env = "U1KEPLER_TOL_ISOMETRY")]
    tol_isometry: Option<f64>,
    #[arg(long, global = true, env = "U1KEPLER_TOL_MICZ")]
    tol_micz: Option<f64>,
    #[arg(long, global = true, env = "U1KEPLER_TOL_METRIC")]
    tol_metric: Option<f64>,
    /// Finite-difference step.
    #[arg(long, global = true, env = "U1KEPLER_STEP")]
    step: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energies, degeneracies and K-types for I = 0..levels-1.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        sigma: i64,
        #[arg(long, default_value_t = 5)]
        levels: u64,
    },
    /// K-type dimensions against sector sums, and the kappa bookkeeping.
    Ktypes {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        sigma: i64,
        #[arg(long, default_value_t = 10)]
        imax: u64,
    },
    /// Run a named verification suite, or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        scope: ScopeArgs,
    },
    /// Sample a normalized radial eigenfunction as `rho,value`.
    Radial(ProfileArgs),
    /// Sample the twisted oscillator profile as `r,value`.
    Oscillator(ProfileArgs),
    /// The n = 2 MICZ-Kepler correspondence checks.
    MiczCheck {
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<i64>,
        #[arg(long)]
        imax: Option<u64>,
    },
    /// Pointwise metric decomposition on random samples.
    GeometryCheck {
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
struct ScopeArgs {
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<i64>,
    #[arg(long)]
    kmax: Option<u64>,
    #[arg(long)]
    imax: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    sigma: i64,
    /// Radial quantum number, starting at 1.
    #[arg(long, default_value_t = 1)]
    k: u64,
    #[arg(long, default_value_t = 0)]
    l: u64,
    /// Number of sample points on the default grid.
    #[arg(long, default_value_t = 200)]
    points: usize,
}

#[derive(Debug)]
enum CliError {
    Config(String),
    Io(String),
}

impl From<u1kepler::Error> for CliError {
    fn from(e: u1kepler::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

fn tolerances(t: &TolArgs) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances::default();
    let slots: [(&str, Option<f64>, &mut f64); 8] = [
        ("tol-radial", t.tol_radial, &mut tol.radial_residual),
        ("tol-gram", t.tol_gram, &mut tol.gram),
        ("tol-norm", t.tol_norm, &mut tol.norm_crosscheck),
        ("tol-oscillator", t.tol_oscillator, &mut tol.oscillator_residual),
        ("tol-isometry", t.tol_isometry, &mut tol.isometry),
        ("tol-micz", t.tol_micz, &mut tol.micz_residual),
        ("tol-metric", t.tol_metric, &mut tol.metric_residual),
        ("step", t.step, &mut tol.step),
    ];
    for (name, value, slot) in slots {
        if let Some(v) = value {
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::Config(format!(
                    "--{name} must be a positive finite number, got {v}"
                )));
            }
            *slot = v;
        }
    }
    Ok(tol)
}

fn checked_n(n: i64) -> Result<u32, CliError> {
    ProblemParams::new(n, 0)?;
    u32::try_from(n).map_err(|_| CliError::Config(format!("n = {n} is too large")))
}

fn rational_cells(r: &num_rational::BigRational) -> [Cell; 2] {
    [Cell::Exact(format_rational(r)), Cell::Float(rational_to_f64(r))]
}

fn spectrum(n: i64, sigma: i64, levels: u64) -> Result<Report, CliError> {
    let params = ProblemParams::new(n, sigma)?;
    let table = spectrum_table(params, levels);
    let mut r = Report::new(&[
        "I",
        "energy_exact",
        "energy_float",
        "degeneracy",
        "left_ktype",
        "right_ktype",
    ]);
    r.param("n", n);
    r.param("sigma_bar", sigma);
    r.param("levels", levels);
    let label: Vec<String> = table.hw_label.iter().map(|h| h.to_string()).collect();
    r.param("hw_label", format!("[{}]", label.join(" ")));
    for lvl in &table.levels {
        let [exact, float] = rational_cells(&lvl.energy);
        r.push(vec![
            Cell::Int(lvl.level),
            exact,
            float,
            Cell::Exact(lvl.degeneracy.to_string()),
            Cell::Exact(lvl.left_ktype.to_string()),
            Cell::Exact(lvl.right_ktype.to_string()),
        ]);
    }
    Ok(r)
}

fn ktypes(n: i64, sigma: i64, imax: u64) -> Result<Report, CliError> {
    let params = ProblemParams::new(n, sigma)?;
    let rep = verify_ktype_dimensions(params, imax);
    let mut r = Report::new(&["I", "left_dim", "right_dim", "binomial_product", "sector_sum", "passed"]);
    r.param("n", n);
    r.param("sigma_bar", sigma);
    r.param("imax", imax);
    r.param("kappa", format_rational(&rep.kappa));
    r.param("kappa_unique", rep.kappa_unique);
    for row in &rep.rows {
        r.push(vec![
            Cell::Int(row.level),
            Cell::Exact(row.left_dim.to_string()),
            Cell::Exact(row.right_dim.to_string()),
            Cell::Exact(row.binomial_product.to_string()),
            Cell::Exact(row.sector_sum.to_string()),
            Cell::Bool(row.passed()),
        ]);
        if !row.passed() {
            r.failures.push(Failure {
                suite: "ktypes".into(),
                case: format!("I={}", row.level),
                lhs: format!("{}*{}", row.left_dim, row.right_dim),
                rhs: row.sector_sum.to_string(),
            });
        }
    }
    if !rep.kappa_unique || format_rational(&rep.kappa) != "1/2" {
        r.failures.push(Failure {
            suite: "ktypes".into(),
            case: "kappa".into(),
            lhs: format_rational(&rep.kappa),
            rhs: "1/2".into(),
        });
    }
    Ok(r)
}

fn check_report(checks: Vec<Check>) -> Report {
    let mut r = Report::new(&["suite", "case", "passed", "lhs", "rhs"]);
    for c in &checks {
        r.push(vec![
            Cell::Text(c.suite.name().to_string()),
            Cell::Text(c.case.clone()),
            Cell::Bool(c.passed),
            Cell::Text(c.lhs.clone()),
            Cell::Text(c.rhs.clone()),
        ]);
    }
    r.failures = checks.iter().filter(|c| !c.passed).map(Failure::from).collect();
    r.param("checks", checks.len());
    r
}

fn scope_param(r: &mut Report, key: &str, v: Option<impl Into<serde_json::Value>>) {
    if let Some(v) = v {
        r.param(key, v);
    }
}

fn verify(suite: &str, s: &ScopeArgs, tol: &Tolerances) -> Result<Report, CliError> {
    let scope = Scope {
        n: s.n.map(checked_n).transpose()?,
        sigma_bar: s.sigma,
        k_max: s.kmax,
        i_max: s.imax,
        seed: s.seed,
    };
    let checks = if suite == "all" {
        run_all(&scope, tol)?
    } else {
        let parsed: Suite = suite
            .parse()
            .map_err(|e: String| CliError::Config(format!("{e}; expected one of: all, {}", suite_names())))?;
        run_suite(parsed, &scope, tol)?
    };
    let mut r = check_report(checks);
    r.param("suite", suite);
    scope_param(&mut r, "n", s.n);
    scope_param(&mut r, "sigma_bar", s.sigma);
    scope_param(&mut r, "kmax", s.kmax);
    scope_param(&mut r, "imax", s.imax);
    scope_param(&mut r, "seed", s.seed);
    Ok(r)
}

fn suite_names() -> String {
    Suite::ALL.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
}

fn bounded_failure(r: &mut Report, suite: &str, case: &str, value: f64, tol: f64) {
    if !(value.is_finite() && value < tol) {
        r.failures.push(Failure {
            suite: suite.into(),
            case: case.into(),
            lhs: format!("{value:e}"),
            rhs: format!("< {tol:e}"),
        });
    }
}

fn resample(grid: &[f64], points: usize) -> Result<Vec<f64>, CliError> {
    if points < 2 {
        return Err(CliError::Config(format!("--points must be at least 2, got {points}")));
    }
    Ok(fd::linspace(grid[0], grid[grid.len() - 1], points))
}

fn radial_profile(a: &ProfileArgs, tol: &Tolerances) -> Result<Report, CliError> {
    let params = ProblemParams::new(a.n, a.sigma)?;
    let f = radial_eigenfunction(a.k, a.l, params)?;
    let grid = radial::default_grid(&f);
    let residual = radial_operator_residual(&f, &grid, tol.step)?;
    let mut r = Report::new(&["rho", "value"]);
    r.param("n", a.n);
    r.param("sigma_bar", a.sigma);
    r.param("k", a.k);
    r.param("l", a.l);
    r.param("I", f.level());
    r.param("energy_exact", format_rational(&f.energy()));
    r.param("energy_float", f.energy_f64());
    r.param("norm_const", f.norm_const());
    r.param("residual", residual);
    for rho in resample(&grid, a.points)? {
        r.push(vec![Cell::Float(rho), Cell::Float(f.eval(rho))]);
    }
    bounded_failure(&mut r, "radial", "residual", residual, tol.radial_residual);
    Ok(r)
}

fn oscillator_profile(a: &ProfileArgs, tol: &Tolerances) -> Result<Report, CliError> {
    let params = ProblemParams::new(a.n, a.sigma)?;
    let p = twist(&radial_eigenfunction(a.k, a.l, params)?);
    let grid = oscillator::default_grid();
    let residual = oscillator_residual(&p, &grid, tol.step)?;
    let norm = oscillator_inner_product(&p, &p)?;
    let mut r = Report::new(&["r", "value"]);
    r.param("n", a.n);
    r.param("sigma_bar", a.sigma);
    r.param("k", a.k);
    r.param("l", a.l);
    r.param("I", p.source().level());
    r.param("harmonic_degree", p.harmonic_degree());
    r.param("eigenvalue", p.eigenvalue());
    r.param("twist_const", p.twist_const());
    r.param("residual", residual);
    r.param("norm", norm);
    for x in resample(&grid, a.points)? {
        r.push(vec![Cell::Float(x), Cell::Float(p.eval(x))]);
    }
    bounded_failure(&mut r, "oscillator", "residual", residual, tol.oscillator_residual);
    bounded_failure(&mut r, "oscillator", "isometry", (norm - 1.0).abs(), tol.isometry);
    Ok(r)
}

fn geometry(n: Option<i64>, seed: u64, samples: usize, tol: &Tolerances) -> Result<Report, CliError> {
    let dims: Vec<u32> = match n {
        Some(n) => vec![checked_n(n)?],
        None => (2..=5).collect(),
    };
    let mut r = Report::new(&["n", "samples", "seed", "max_residual", "passed"]);
    r.param("seed", seed);
    r.param("samples", samples);
    for n in dims {
        let rep = verify_metric_decomposition(n as usize, samples, seed);
        let ok = rep.max_residual < tol.metric_residual;
        r.push(vec![
            Cell::Int(n as u64),
            Cell::Int(samples as u64),
            Cell::Int(seed),
            Cell::Float(rep.max_residual),
            Cell::Bool(ok),
        ]);
        bounded_failure(
            &mut r,
            "geometry",
            &format!("n={n}"),
            rep.max_residual,
            tol.metric_residual,
        );
    }
    Ok(r)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let tol = tolerances(&cli.tol)?;
    match &cli.command {
        Command::Spectrum { n, sigma, levels } => spectrum(*n, *sigma, *levels),
        Command::Ktypes { n, sigma, imax } => ktypes(*n, *sigma, *imax),
        Command::Verify { suite, scope } => verify(suite, scope, &tol),
        Command::Radial(a) => radial_profile(a, &tol),
        Command::Oscillator(a) => oscillator_profile(a, &tol),
        Command::MiczCheck { sigma, imax } => {
            let scope = ScopeArgs {
                n: None,
                sigma: *sigma,
                kmax: None,
                imax: *imax,
                seed: None,
            };
            verify("micz", &scope, &tol)
        }
        Command::GeometryCheck { n, seed, samples } => geometry(*n, *seed, *samples, &tol),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(CliError::Config(msg)) | Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(CliError::Config(msg) | CliError::Io(msg)) = emit(&cli, &report.render(cli.format)) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("{} check(s) failed:", report.failures.len());
        for f in &report.failures {
            eprintln!("  {} {}: {} vs {}", f.suite, f.case, f.lhs, f.rhs);
        }
        ExitCode::from(1)
    }
}
