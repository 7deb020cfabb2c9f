//! The `n = 2` case as a MICZ-Kepler problem with magnetic charge `μ = σ̄/2`.
//!
//! Under `r = ρ²` the conjugated operator `ρ^{-3/2} H ρ^{3/2}` becomes
//! `ĥ_μ = -½Δ_A + μ²/(2r²) - 1/r`. Sector `l` of the U(1)-Kepler problem is
//! matched with monopole harmonics of angular momentum `j = l + |μ|`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{rational, HalfInteger};
use crate::fd::{self, derivative, second_derivative};
use crate::radial::apply_radial_operator;
use crate::repcore::{angular_laplacian_eigenvalue, sector_from_l, ProblemParams};
use crate::spectra::{energy, level_degeneracy};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MiczParams {
    mu: HalfInteger,
    j: HalfInteger,
}

impl MiczParams {
    /// `μ = σ̄/2`, `j = l + |μ|`.
    pub fn from_sector(l: u64, sigma_bar: i64) -> Self {
        let mu = HalfInteger::from_twice(sigma_bar);
        MiczParams {
            mu,
            j: HalfInteger::from_int(l as i64) + HalfInteger::from_twice(sigma_bar.abs()),
        }
    }

    pub fn mu(&self) -> HalfInteger {
        self.mu
    }

    pub fn j(&self) -> HalfInteger {
        self.j
    }

    /// `j(j+1) - μ²`, the monopole-harmonic eigenvalue of `-Δ_A|_{S²}`.
    pub fn angular_eigenvalue(&self) -> BigRational {
        let j = self.j.to_rational();
        let mu = self.mu.to_rational();
        &j * (&j + BigRational::one()) - &mu * &mu
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorCorrespondence {
    pub micz: MiczParams,
    pub kepler_eigenvalue: BigInt,
    pub micz_eigenvalue: BigRational,
}

impl SectorCorrespondence {
    /// `Δ_A|_{CP¹} = 4 (j(j+1) - μ²)`.
    pub fn passed(&self) -> bool {
        BigRational::from_integer(self.kepler_eigenvalue.clone())
            == BigRational::from_integer(BigInt::from(4)) * &self.micz_eigenvalue
    }
}

pub fn sector_correspondence(l: u64, sigma_bar: i64) -> SectorCorrespondence {
    let params = ProblemParams::new(2, sigma_bar).expect("n = 2 is valid");
    let sector = sector_from_l(l, params);
    let micz = MiczParams::from_sector(l, sigma_bar);
    SectorCorrespondence {
        micz,
        kepler_eigenvalue: angular_laplacian_eigenvalue(&sector),
        micz_eigenvalue: micz.angular_eigenvalue(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MiczLevelRow {
    pub level: u64,
    /// `N = I + 1 + |μ|`.
    pub principal: HalfInteger,
    pub kepler_energy: BigRational,
    pub micz_energy: BigRational,
    pub kepler_degeneracy: BigInt,
    /// `N² - μ²`.
    pub micz_degeneracy: BigRational,
}

impl MiczLevelRow {
    pub fn passed(&self) -> bool {
        self.kepler_energy == self.micz_energy
            && BigRational::from_integer(self.kepler_degeneracy.clone()) == self.micz_degeneracy
    }
}

/// Level-by-level comparison of the `n = 2` spectrum with the MICZ-Kepler
/// energies `-1/(2N²)` and degeneracies `N² - μ²`.
pub fn spectrum_correspondence(sigma_bar: i64, i_max: u64) -> Vec<MiczLevelRow> {
    let params = ProblemParams::new(2, sigma_bar).expect("n = 2 is valid");
    let mu = HalfInteger::from_twice(sigma_bar);
    (0..=i_max)
        .map(|level| {
            let principal = HalfInteger::from_int(level as i64 + 1) + HalfInteger::from_twice(sigma_bar.abs());
            let big_n = principal.to_rational();
            let mu_r = mu.to_rational();
            MiczLevelRow {
                level,
                principal,
                kepler_energy: energy(level, params),
                micz_energy: -(rational(1, 2) / (&big_n * &big_n)),
                kepler_degeneracy: BigInt::from(level_degeneracy(level, params)),
                micz_degeneracy: &big_n * &big_n - &mu_r * &mu_r,
            }
        })
        .collect()
}

/// Radial sector of `ĥ_μ`:
/// `-½(f'' + 2f'/r) + (j(j+1) - μ²)/(2r²) f + μ²/(2r²) f - f/r`.
pub fn apply_micz_operator<F: Fn(f64) -> f64>(f: &F, r: f64, h: f64, micz: MiczParams) -> f64 {
    let ang = crate::exact::rational_to_f64(&micz.angular_eigenvalue());
    let mu = micz.mu.to_f64();
    let value = f(r);
    -0.5 * (second_derivative(f, r, h) + 2.0 * derivative(f, r, h) / r)
        + ang / (2.0 * r * r) * value
        + mu * mu / (2.0 * r * r) * value
        - value / r
}

/// `ρ^{-3/2} H_l ρ^{3/2}` applied to `g(ρ) = F(ρ²)`, with `H_l` the `n = 2`
/// separated radial operator.
pub fn apply_conjugated_kepler_operator<F: Fn(f64) -> f64>(
    test_fn: &F,
    rho: f64,
    h: f64,
    l: u64,
    sigma_bar: i64,
) -> f64 {
    let params = ProblemParams::new(2, sigma_bar).expect("n = 2 is valid");
    let lifted = |x: f64| x.powf(1.5) * test_fn(x * x);
    apply_radial_operator(&lifted, rho, h, l, params) / rho.powf(1.5)
}

/// Evaluation points used to screen test functions: they must be finite on
/// `(0, 40]` and decay to below `1e-4` of their peak by `r = 40`.
fn screen_test_function<F: Fn(f64) -> f64>(f: &F) -> Result<()> {
    let probe = fd::linspace(1e-3, 40.0, 400);
    let mut peak: f64 = 0.0;
    for &x in &probe {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::RejectedTestFunction(format!("non-finite value at r = {x}")));
        }
        peak = peak.max(v.abs());
    }
    if peak == 0.0 {
        return Err(Error::RejectedTestFunction("identically zero".into()));
    }
    let tail = f(40.0).abs();
    if tail > 1e-4 * peak {
        return Err(Error::RejectedTestFunction(format!(
            "does not decay: |f(40)| = {tail:e} vs peak {peak:e}"
        )));
    }
    // a second difference much larger than the probe scale flags kinks/jumps
    for w in probe.windows(3) {
        let (a, b, c) = (f(w[0]), f(w[1]), f(w[2]));
        if (a - 2.0 * b + c).abs() > 0.5 * peak {
            return Err(Error::RejectedTestFunction(format!("not smooth near r = {}", w[1])));
        }
    }
    Ok(())
}

/// `max |LHS - RHS| / max |F|` over the `ρ` grid, where LHS is the conjugated
/// Kepler operator applied to `F(ρ²)` and RHS is `ĥ_μ F` evaluated at `r = ρ²`.
pub fn conjugation_residual<F: Fn(f64) -> f64>(
    test_fn: &F,
    l: u64,
    sigma_bar: i64,
    grid: &[f64],
    h: f64,
) -> Result<f64> {
    fd::validate_grid(grid, h)?;
    screen_test_function(test_fn)?;
    let micz = MiczParams::from_sector(l, sigma_bar);
    let scale = grid.iter().map(|&x| test_fn(x * x).abs()).fold(0.0, f64::max);
    let worst = grid
        .iter()
        .map(|&rho| {
            let lhs = apply_conjugated_kepler_operator(test_fn, rho, h, l, sigma_bar);
            let rhs = apply_micz_operator(test_fn, rho * rho, h, micz);
            (lhs - rhs).abs()
        })
        .fold(0.0, f64::max);
    Ok(if scale > 0.0 { worst / scale } else { worst })
}

/// `ρ ∈ [0.5, 2.5]`, i.e. `r ∈ [0.25, 6.25]`.
pub fn default_grid() -> Vec<f64> {
    fd::linspace(0.5, 2.5, 200)
}

pub struct TestFunction {
    pub name: &'static str,
    pub eval: fn(f64) -> f64,
}

/// Fixed suite of smooth decaying radial test functions (version 1).
pub fn test_function_suite() -> Vec<TestFunction> {
    vec![
        TestFunction {
            name: "exp(-r)",
            eval: |r| (-r).exp(),
        },
        TestFunction {
            name: "r*exp(-r^2)",
            eval: |r| r * (-r * r).exp(),
        },
        TestFunction {
            name: "r^2*exp(-r/2)",
            eval: |r| r * r * (-r / 2.0).exp(),
        },
        TestFunction {
            name: "(1+r)*exp(-r^2/2)",
            eval: |r| (1.0 + r) * (-r * r / 2.0).exp(),
        },
        TestFunction {
            name: "(1-r/2)*exp(-r/2)",
            eval: |r| (1.0 - r / 2.0) * (-r / 2.0).exp(),
        },
    ]
}

pub const SUITE_VERSION: u32 = 1;
