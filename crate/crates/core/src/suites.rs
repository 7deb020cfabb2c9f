//! Named verification suites with default ranges and tolerances.
//!
//! Each suite produces a flat list of [`Check`]s; exact checks carry both
//! sides as strings, numerical checks carry the measured value and the
//! tolerance it was held to.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::Result;
use crate::exact::{format_rational, rational};
use crate::geometry::{verify_metric_decomposition, DEFAULT_SEED};
use crate::micz::{self, conjugation_residual, sector_correspondence, spectrum_correspondence};
use crate::oscillator::{
    self, harmonic_degree_check, oscillator_inner_product, oscillator_residual, shell_eigenvalue_check, twist,
};
use crate::radial::{
    self, normalization_constant, normalization_constant_quadrature, orthonormality_gram, radial_eigenfunction,
    radial_operator_residual,
};
use crate::repcore::{
    coefficient_check, sector_from_pq, verify_dimension_equality, verify_generating_function, ProblemParams,
};
use crate::spectra::{energy, level_degeneracy, verify_ktype_dimensions};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub radial_residual: f64,
    pub gram: f64,
    pub norm_crosscheck: f64,
    pub oscillator_residual: f64,
    pub isometry: f64,
    pub micz_residual: f64,
    pub metric_residual: f64,
    pub step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            radial_residual: 1e-7,
            gram: 1e-8,
            norm_crosscheck: 1e-10,
            oscillator_residual: 1e-7,
            isometry: 1e-8,
            micz_residual: 1e-6,
            metric_residual: 1e-12,
            step: crate::fd::DEFAULT_STEP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Spectrum,
    DimensionEquality,
    GeneratingFunction,
    KTypes,
    Casimir,
    Radial,
    Orthonormality,
    Oscillator,
    Micz,
    Geometry,
    Hydrogen,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Spectrum,
        Suite::DimensionEquality,
        Suite::GeneratingFunction,
        Suite::KTypes,
        Suite::Casimir,
        Suite::Radial,
        Suite::Orthonormality,
        Suite::Oscillator,
        Suite::Micz,
        Suite::Geometry,
        Suite::Hydrogen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Spectrum => "spectrum",
            Suite::DimensionEquality => "dimension-equality",
            Suite::GeneratingFunction => "generating-function",
            Suite::KTypes => "ktypes",
            Suite::Casimir => "casimir",
            Suite::Radial => "radial",
            Suite::Orthonormality => "orthonormality",
            Suite::Oscillator => "oscillator",
            Suite::Micz => "micz",
            Suite::Geometry => "geometry",
            Suite::Hydrogen => "hydrogen",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Optional narrowing of a suite's default range. `None` means the full
/// acceptance range.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Scope {
    pub n: Option<u32>,
    pub sigma_bar: Option<i64>,
    pub k_max: Option<u64>,
    pub i_max: Option<u64>,
    pub seed: Option<u64>,
}

impl Scope {
    fn dims(&self, default_max: u32) -> Vec<u32> {
        match self.n {
            Some(n) => vec![n],
            None => (2..=default_max).collect(),
        }
    }

    fn charges(&self, bound: i64) -> Vec<i64> {
        match self.sigma_bar {
            Some(s) => vec![s],
            None => (-bound..=bound).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub case: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    fn exact(suite: Suite, case: String, lhs: impl ToString, rhs: impl ToString, passed: bool) -> Self {
        Check {
            suite,
            case,
            passed,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn bounded(suite: Suite, case: String, value: f64, tol: f64) -> Self {
        Check {
            suite,
            case,
            passed: value.is_finite() && value < tol,
            lhs: format!("{value:e}"),
            rhs: format!("< {tol:e}"),
        }
    }
}

pub fn run_suite(suite: Suite, scope: &Scope, tol: &Tolerances) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    match suite {
        Suite::Spectrum => {
            let spots = [
                (0u64, 2i64, 0i64, rational(-1, 2)),
                (2, 3, 1, rational(-1, 32)),
                (0, 4, -3, rational(-2, 49)),
            ];
            for (level, n, sb, expected) in spots {
                let e = energy(level, ProblemParams::new(n, sb)?);
                out.push(Check::exact(
                    suite,
                    format!("E_{level}(n={n}, sigma={sb})"),
                    format_rational(&e),
                    format_rational(&expected),
                    e == expected,
                ));
            }
        }
        Suite::DimensionEquality => {
            for n in scope.dims(6) {
                let report = verify_dimension_equality(n, scope.k_max.unwrap_or(30))?;
                for row in report.rows {
                    out.push(Check::exact(
                        suite,
                        format!("n={n} k={}", row.k),
                        &row.lhs,
                        &row.rhs,
                        row.passed(),
                    ));
                }
            }
        }
        Suite::GeneratingFunction => {
            for n in scope.dims(5) {
                let report = verify_generating_function(n, scope.k_max.unwrap_or(30))?;
                for row in report.rows {
                    let passed = row.passed();
                    out.push(Check::exact(
                        suite,
                        format!("n={n} [t^{}]", row.k),
                        format!("{} {} {}", row.shell_sum, row.double_sum, row.split_form),
                        &row.power_series,
                        passed,
                    ));
                }
            }
        }
        Suite::KTypes => {
            for n in scope.dims(5) {
                for sb in scope.charges(6) {
                    let report = verify_ktype_dimensions(ProblemParams::new(n as i64, sb)?, scope.i_max.unwrap_or(10));
                    for row in &report.rows {
                        out.push(Check::exact(
                            suite,
                            format!("n={n} sigma={sb} I={}", row.level),
                            format!("{}*{}", row.left_dim, row.right_dim),
                            &row.sector_sum,
                            row.passed(),
                        ));
                    }
                    out.push(Check::exact(
                        suite,
                        format!("n={n} sigma={sb} kappa"),
                        format_rational(&report.kappa),
                        "1/2",
                        report.passed(),
                    ));
                }
            }
        }
        Suite::Casimir => {
            for n in scope.dims(6) {
                for sb in scope.charges(6) {
                    let params = ProblemParams::new(n as i64, sb)?;
                    for l in 0..=10 {
                        let c = coefficient_check(l, params);
                        out.push(Check::exact(
                            suite,
                            format!("n={n} sigma={sb} l={l}"),
                            format!("{} {}", c.casimir_route, format_rational(&c.lhs_coefficient)),
                            format!("{} {}", c.closed_form, format_rational(&c.rhs_coefficient)),
                            c.passed(),
                        ));
                    }
                }
            }
        }
        Suite::Radial => {
            for n in scope.dims(4) {
                for sb in scope.charges(4) {
                    let params = ProblemParams::new(n as i64, sb)?;
                    for k in 1..=4 {
                        for l in 0..=3 {
                            let f = radial_eigenfunction(k, l, params)?;
                            let r = radial_operator_residual(&f, &radial::default_grid(&f), tol.step)?;
                            out.push(Check::bounded(
                                suite,
                                format!("n={n} sigma={sb} k={k} l={l}"),
                                r,
                                tol.radial_residual,
                            ));
                            let a = normalization_constant(k, l, params)?;
                            let q = normalization_constant_quadrature(k, l, params)?;
                            out.push(Check::bounded(
                                suite,
                                format!("n={n} sigma={sb} k={k} l={l} norm"),
                                (a - q).abs() / a,
                                tol.norm_crosscheck,
                            ));
                        }
                    }
                }
            }
        }
        Suite::Orthonormality => {
            for n in scope.dims(4) {
                for sb in scope.charges(4) {
                    let params = ProblemParams::new(n as i64, sb)?;
                    for l in 0..=3 {
                        let gram = orthonormality_gram(l, params, scope.k_max.unwrap_or(6).max(1))?;
                        let dev = (gram.clone() - nalgebra::DMatrix::identity(gram.nrows(), gram.ncols()))
                            .abs()
                            .max();
                        out.push(Check::bounded(suite, format!("n={n} sigma={sb} l={l}"), dev, tol.gram));
                    }
                }
            }
        }
        Suite::Oscillator => {
            for n in scope.dims(4) {
                for sb in scope.charges(4) {
                    let params = ProblemParams::new(n as i64, sb)?;
                    for k in 1..=4 {
                        for l in 0..=3 {
                            let p = twist(&radial_eigenfunction(k, l, params)?);
                            let r = oscillator_residual(&p, &oscillator::default_grid(), tol.step)?;
                            out.push(Check::bounded(
                                suite,
                                format!("n={n} sigma={sb} k={k} l={l}"),
                                r,
                                tol.oscillator_residual,
                            ));
                            let norm = oscillator_inner_product(&p, &p)?;
                            out.push(Check::bounded(
                                suite,
                                format!("n={n} sigma={sb} k={k} l={l} isometry"),
                                (norm - 1.0).abs(),
                                tol.isometry,
                            ));
                        }
                    }
                }
            }
            for n in scope.dims(6) {
                let mut held = 0;
                for p in 0..=12 {
                    for q in 0..=12 {
                        if harmonic_degree_check(&sector_from_pq(p, q, n)?).passed() {
                            held += 1;
                        }
                    }
                }
                out.push(Check::exact(
                    suite,
                    format!("n={n} harmonic degree p,q<=12"),
                    held,
                    169,
                    held == 169,
                ));
            }
            for n in scope.dims(5) {
                for row in shell_eigenvalue_check(n, scope.k_max.unwrap_or(30))? {
                    let passed = row.passed();
                    out.push(Check::exact(
                        suite,
                        format!("n={n} shell k={}", row.k),
                        format!(
                            "{} E={:?}",
                            row.dimensions.lhs,
                            row.levels.iter().map(|l| l.2).collect::<Vec<_>>()
                        ),
                        format!("{} E={}", row.dimensions.rhs, row.expected),
                        passed,
                    ));
                }
            }
        }
        Suite::Micz => {
            for sb in scope.charges(8) {
                for l in 0..=12 {
                    let c = sector_correspondence(l, sb);
                    out.push(Check::exact(
                        suite,
                        format!("sigma={sb} l={l} angular"),
                        &c.kepler_eigenvalue,
                        format!("4*{}", format_rational(&c.micz_eigenvalue)),
                        c.passed(),
                    ));
                }
                for row in spectrum_correspondence(sb, scope.i_max.unwrap_or(10)) {
                    out.push(Check::exact(
                        suite,
                        format!("sigma={sb} I={}", row.level),
                        format!("{} {}", format_rational(&row.kepler_energy), row.kepler_degeneracy),
                        format!(
                            "{} {}",
                            format_rational(&row.micz_energy),
                            format_rational(&row.micz_degeneracy)
                        ),
                        row.passed(),
                    ));
                }
            }
            let grid = micz::default_grid();
            for tf in micz::test_function_suite() {
                for l in 0..=2 {
                    for sb in scope.charges(4) {
                        let r = conjugation_residual(&tf.eval, l, sb, &grid, tol.step)?;
                        out.push(Check::bounded(
                            suite,
                            format!("{} l={l} sigma={sb}", tf.name),
                            r,
                            tol.micz_residual,
                        ));
                    }
                }
            }
        }
        Suite::Geometry => {
            let seed = scope.seed.unwrap_or(DEFAULT_SEED);
            let dims: Vec<usize> = match scope.n {
                Some(n) => vec![n as usize],
                None => (2..=5).collect(),
            };
            for n in dims {
                let report = verify_metric_decomposition(n, 1000, seed);
                out.push(Check::bounded(
                    suite,
                    format!("n={n} samples=1000 seed={seed}"),
                    report.max_residual,
                    tol.metric_residual,
                ));
            }
        }
        Suite::Hydrogen => {
            let params = ProblemParams::new(2, 0)?;
            for big_n in 1..=11u64 {
                let level = big_n - 1;
                let e = energy(level, params);
                let d = level_degeneracy(level, params);
                let expected_e = rational(-1, 2 * (big_n * big_n) as i64);
                let expected_d = BigUint::from(big_n * big_n);
                out.push(Check::exact(
                    suite,
                    format!("N={big_n}"),
                    format!("{} {}", format_rational(&e), d),
                    format!("{} {}", format_rational(&expected_e), expected_d),
                    e == expected_e && d == expected_d,
                ));
            }
        }
    }
    Ok(out)
}

/// Runs every suite in canonical order.
pub fn run_all(scope: &Scope, tol: &Tolerances) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for suite in Suite::ALL {
        out.extend(run_suite(suite, scope, tol)?);
    }
    Ok(out)
}
