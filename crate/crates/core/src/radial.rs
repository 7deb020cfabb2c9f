//! Closed-form radial eigenfunctions of the U(1)-Kepler Hamiltonian.
//!
//! In sector `l` with `L = l + |σ̄|/2` the separated equation reads
//!
//! ```text
//! -(1/(8ρ^{2n-1})) ∂ρ ρ^{2n-2} ∂ρ (R/ρ) + (L² + (n-1)L + (n - 5/4)/4)/(2ρ⁴) R - R/ρ² = E R
//! ```
//!
//! and is solved by
//! `R̃_{kl}(ρ) = c ρ^{2L+3/2} L^{2L+n-1}_{k-1}(2ρ²/n_I) exp(-ρ²/n_I)` with
//! `I = k - 1 + l` and `n_I = I + (n + |σ̄|)/2`. The constant `c` is fixed by
//! unit norm in `L²(R₊, ρ^{2n-2} dρ)` and positivity near the origin.

use nalgebra::DMatrix;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::rational_to_f64;
use crate::fd::{self, derivative, second_derivative};
use crate::quadrature::integrate_half_line;
use crate::repcore::{separated_radial_coefficient, ProblemParams};
use crate::spectra::{energy, principal_number};

/// Relative tolerance for the quadrature routes.
const QUADRATURE_TOL: f64 = 1e-13;

/// Generalized Laguerre polynomial `L^α_m(t)` by the three-term recurrence.
pub fn laguerre(alpha: f64, m: u64, t: f64) -> f64 {
    let mut prev = 1.0;
    if m == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - t;
    for j in 1..m {
        let j = j as f64;
        let next = ((2.0 * j + 1.0 + alpha - t) * cur - (j + alpha) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn ln_factorial(m: u64) -> f64 {
    (2..=m).map(|i| (i as f64).ln()).sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialEigenfunction {
    k: u64,
    l: u64,
    params: ProblemParams,
    level: u64,
    principal: BigRational,
    principal_f64: f64,
    norm_const: f64,
}

impl RadialEigenfunction {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn params(&self) -> ProblemParams {
        self.params
    }

    /// `I = k - 1 + l`.
    pub fn level(&self) -> u64 {
        self.level
    }

    /// `n_I` as an exact rational.
    pub fn principal_number(&self) -> &BigRational {
        &self.principal
    }

    pub fn principal_f64(&self) -> f64 {
        self.principal_f64
    }

    pub fn norm_const(&self) -> f64 {
        self.norm_const
    }

    /// Twice the effective angular momentum, `2l + |σ̄|`.
    pub fn twice_angular(&self) -> u64 {
        2 * self.l + self.params.abs_sigma()
    }

    /// Upper index `2l + |σ̄| + n - 1` of the Laguerre factor.
    pub fn laguerre_alpha(&self) -> u64 {
        self.twice_angular() + self.params.n() as u64 - 1
    }

    pub fn energy(&self) -> BigRational {
        energy(self.level, self.params)
    }

    pub fn energy_f64(&self) -> f64 {
        rational_to_f64(&self.energy())
    }

    /// The unnormalized profile `ρ^{2L+3/2} L(2ρ²/n_I) e^{-ρ²/n_I}`.
    pub fn shape(&self, rho: f64) -> f64 {
        let nu = self.principal_f64;
        let power = self.twice_angular() as f64 + 1.5;
        rho.powf(power)
            * laguerre(self.laguerre_alpha() as f64, self.k - 1, 2.0 * rho * rho / nu)
            * (-rho * rho / nu).exp()
    }

    pub fn eval(&self, rho: f64) -> f64 {
        self.norm_const * self.shape(rho)
    }

    /// The `t = ρ²` profile `R(t) = c t^L L(2t/n_I) e^{-t/n_I}`, written out
    /// independently of [`eval`](Self::eval).
    pub fn t_profile(&self, t: f64) -> f64 {
        let nu = self.principal_f64;
        self.norm_const
            * t.powf(self.twice_angular() as f64 / 2.0)
            * laguerre(self.laguerre_alpha() as f64, self.k - 1, 2.0 * t / nu)
            * (-t / nu).exp()
    }

    /// Exponential decay rate of `R̃²` in the variable `t = ρ²`.
    pub fn decay_rate(&self) -> f64 {
        2.0 / self.principal_f64
    }
}

fn check_indices(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroRadialIndex)
    } else {
        Ok(())
    }
}

/// `c(k, L)` from `∫ s^{α+1} e^{-s} [L^α_{k-1}(s)]² ds = (2k + α - 1) Γ(k + α)/(k-1)!`
/// after `s = 2ρ²/n_I`:
/// `c² = (k-1)! / (n_I (n_I/2)^{α+2} Γ(k + α))`.
pub fn normalization_constant(k: u64, l: u64, params: ProblemParams) -> Result<f64> {
    check_indices(k)?;
    let level = k - 1 + l;
    let nu = rational_to_f64(&principal_number(level, params));
    let alpha = 2 * l + params.abs_sigma() + params.n() as u64 - 1;
    let ln_c2 = ln_factorial(k - 1) - nu.ln() - (alpha as f64 + 2.0) * (nu / 2.0).ln() - ln_factorial(k + alpha - 1);
    Ok((0.5 * ln_c2).exp())
}

/// The same constant from Gauss-Laguerre quadrature of the unnormalized
/// profile, integrated as a function of `ρ` itself.
pub fn normalization_constant_quadrature(k: u64, l: u64, params: ProblemParams) -> Result<f64> {
    let mut f = radial_eigenfunction(k, l, params)?;
    f.norm_const = 1.0;
    let norm_sq = radial_inner_product(&f, &f, 0.0)?;
    Ok(norm_sq.sqrt().recip())
}

pub fn radial_eigenfunction(k: u64, l: u64, params: ProblemParams) -> Result<RadialEigenfunction> {
    check_indices(k)?;
    let level = k - 1 + l;
    let principal = principal_number(level, params);
    Ok(RadialEigenfunction {
        k,
        l,
        params,
        level,
        principal_f64: rational_to_f64(&principal),
        principal,
        norm_const: normalization_constant(k, l, params)?,
    })
}

/// `∫₀^∞ f g ρ^{2n-2} dρ`, integrated in `t = ρ²` where the integrand is a
/// polynomial times an exponential.
///
/// `scale` is the magnitude against which convergence is judged; pass the
/// product of the norms (1 for normalized inputs) or 0 for a relative test.
pub fn radial_inner_product(f: &RadialEigenfunction, g: &RadialEigenfunction, scale: f64) -> Result<f64> {
    let n = f.params.n() as i32;
    let beta = (f.decay_rate() + g.decay_rate()) / 2.0;
    integrate_half_line(
        |t| {
            let rho = t.sqrt();
            f.eval(rho) * g.eval(rho) * rho.powi(2 * n - 2) / (2.0 * rho)
        },
        beta,
        scale,
        QUADRATURE_TOL,
    )
}

/// Applies the separated radial operator of sector `l` to `f` at `rho`.
pub fn apply_radial_operator<F: Fn(f64) -> f64>(f: &F, rho: f64, h: f64, l: u64, params: ProblemParams) -> f64 {
    let n = params.n() as f64;
    let coeff = rational_to_f64(&separated_radial_coefficient(l, params.sigma_bar(), params.n()));
    let u = |r: f64| f(r) / r;
    let kinetic = -(second_derivative(&u, rho, h) + (2.0 * n - 2.0) * derivative(&u, rho, h) / rho) / (8.0 * rho);
    let value = f(rho);
    kinetic + coeff / (2.0 * rho.powi(4)) * value - value / (rho * rho)
}

/// `max |(Op f)(ρ) - E_I f(ρ)| / max |f|` over the grid.
pub fn radial_operator_residual(f: &RadialEigenfunction, grid: &[f64], h: f64) -> Result<f64> {
    fd::validate_grid(grid, h)?;
    let e = f.energy_f64();
    let eval = |r: f64| f.eval(r);
    let scale = grid.iter().map(|&r| f.eval(r).abs()).fold(0.0, f64::max);
    let worst = grid
        .iter()
        .map(|&r| (apply_radial_operator(&eval, r, h, f.l, f.params) - e * f.eval(r)).abs())
        .fold(0.0, f64::max);
    Ok(if scale > 0.0 { worst / scale } else { worst })
}

/// 200 points on `[0.3, 3.0] · √n_I`.
pub fn default_grid(f: &RadialEigenfunction) -> Vec<f64> {
    let s = f.principal_f64.sqrt();
    fd::linspace(0.3 * s, 3.0 * s, 200)
}

/// `G[i][j] = ⟨f_{i+1, l}, f_{j+1, l}⟩` for `i, j < k_max`.
pub fn orthonormality_gram(l: u64, params: ProblemParams, k_max: u64) -> Result<DMatrix<f64>> {
    if k_max == 0 {
        return Err(Error::ZeroRadialIndex);
    }
    let fs = (1..=k_max)
        .map(|k| radial_eigenfunction(k, l, params))
        .collect::<Result<Vec<_>>>()?;
    let size = fs.len();
    let mut gram = DMatrix::zeros(size, size);
    for i in 0..size {
        for j in i..size {
            let v = radial_inner_product(&fs[i], &fs[j], 1.0)?;
            gram[(i, j)] = v;
            gram[(j, i)] = v;
        }
    }
    Ok(gram)
}

/// Sign changes of `f` on `samples` points of `(lo, hi)`.
pub fn count_sign_changes<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, samples: usize) -> usize {
    let mut changes = 0;
    let mut last_sign = 0.0;
    for x in fd::linspace(lo, hi, samples) {
        let v = f(x);
        if v == 0.0 {
            continue;
        }
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            changes += 1;
        }
        last_sign = s;
    }
    changes
}

/// Interior zeros of the radial profile, counted on a grid that extends past
/// the largest Laguerre zero.
pub fn node_count(f: &RadialEigenfunction) -> usize {
    let nu = f.principal_f64;
    let s_max = 4.0 * f.k as f64 + 2.0 * f.laguerre_alpha() as f64 + 20.0;
    let rho_max = (nu * s_max / 2.0).sqrt();
    count_sign_changes(|r| f.eval(r), 1e-6, rho_max, 20_000)
}
