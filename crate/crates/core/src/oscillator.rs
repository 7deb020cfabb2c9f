//! The twist from Kepler bound states to `2n`-dimensional oscillator states.
//!
//! For `ψ_I` in level `I` the twist is `ψ̃_I(Z) = c_I |Z|^{-3/2} ψ_I(√(n_I/2) Z)`.
//! On the radial factor this turns
//! `ρ^{2L+3/2} L^α_{k-1}(2ρ²/n_I) e^{-ρ²/n_I}` into
//! `r^Λ L^α_{k-1}(r²) e^{-r²/2}` with `Λ = 2l + |σ̄|`, an eigenfunction of
//! `-Δ/2 + r²/2` on `R^{2n}` with eigenvalue `2I + |σ̄| + n = 2 n_I`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::fd::{self, derivative, second_derivative};
use crate::quadrature::integrate_half_line;
use crate::radial::{laguerre, RadialEigenfunction};
use crate::repcore::{angular_laplacian_eigenvalue, shell_sectors, AngularSector, ProblemParams};
use crate::spectra::{oscillator_shell_check, OscillatorShellCheck};

#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorProfile {
    source: RadialEigenfunction,
    harmonic_degree: u64,
    eigenvalue: u64,
    twist_const: f64,
    amplitude: f64,
}

impl OscillatorProfile {
    pub fn source(&self) -> &RadialEigenfunction {
        &self.source
    }

    /// `Λ = 2l + |σ̄|`.
    pub fn harmonic_degree(&self) -> u64 {
        self.harmonic_degree
    }

    /// `2I + |σ̄| + n`.
    pub fn eigenvalue(&self) -> u64 {
        self.eigenvalue
    }

    pub fn eigenvalue_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.eigenvalue))
    }

    /// `c_I`.
    pub fn twist_const(&self) -> f64 {
        self.twist_const
    }

    pub fn dimension(&self) -> u32 {
        self.source.params().n()
    }

    /// The profile in closed form, smooth through `r = 0`.
    pub fn eval(&self, r: f64) -> f64 {
        let alpha = self.source.laguerre_alpha() as f64;
        self.amplitude
            * r.powi(self.harmonic_degree as i32)
            * laguerre(alpha, self.source.k() - 1, r * r)
            * (-r * r / 2.0).exp()
    }

    /// The defining formula `c_I r^{-3/2} R̃(√(n_I/2) r)`, for `r > 0`.
    pub fn eval_by_twist(&self, r: f64) -> f64 {
        let scale = (self.source.principal_f64() / 2.0).sqrt();
        self.twist_const * r.powf(-1.5) * self.source.eval(scale * r)
    }
}

/// `c_I = 2 (n_I/2)^{(2n+1)/4}`.
///
/// This is the Jacobian of `ρ = √(n_I/2) r` against the `r^{-3/2}` weight
/// and `ρ^{2n-2} dρ ↦ r^{2n-1} dr`; it depends on the level only.
pub fn twist_constant(principal: f64, n: u32) -> f64 {
    2.0 * (principal / 2.0).powf((2.0 * n as f64 + 1.0) / 4.0)
}

pub fn twist(f: &RadialEigenfunction) -> OscillatorProfile {
    let params = f.params();
    let nu = f.principal_f64();
    let c_i = twist_constant(nu, params.n());
    let lambda = f.twice_angular();
    // r^{-3/2} (√(ν/2) r)^{Λ + 3/2} = (ν/2)^{(Λ + 3/2)/2} r^Λ
    let amplitude = c_i * f.norm_const() * (nu / 2.0).powf((lambda as f64 + 1.5) / 2.0);
    OscillatorProfile {
        source: f.clone(),
        harmonic_degree: lambda,
        eigenvalue: 2 * f.level() + params.abs_sigma() + params.n() as u64,
        twist_const: c_i,
        amplitude,
    }
}

/// `∫₀^∞ a b r^{2n-1} dr`.
pub fn oscillator_inner_product(a: &OscillatorProfile, b: &OscillatorProfile) -> Result<f64> {
    let n = a.dimension() as i32;
    integrate_half_line(
        |t| {
            let r = t.sqrt();
            a.eval(r) * b.eval(r) * r.powi(2 * n - 2) / 2.0
        },
        1.0,
        1.0,
        1e-13,
    )
}

/// Radial `2n`-dimensional oscillator operator
/// `-½(T'' + (2n-1)T'/r - Λ(Λ+2n-2)T/r²) + ½r²T`.
pub fn apply_oscillator_operator<F: Fn(f64) -> f64>(f: &F, r: f64, h: f64, harmonic_degree: u64, n: u32) -> f64 {
    let two_n = 2.0 * n as f64;
    let lam = harmonic_degree as f64;
    let value = f(r);
    -0.5 * (second_derivative(f, r, h) + (two_n - 1.0) * derivative(f, r, h) / r
        - lam * (lam + two_n - 2.0) * value / (r * r))
        + 0.5 * r * r * value
}

pub fn oscillator_residual(p: &OscillatorProfile, grid: &[f64], h: f64) -> Result<f64> {
    fd::validate_grid(grid, h)?;
    let e = p.eigenvalue as f64;
    let eval = |r: f64| p.eval(r);
    let scale = grid.iter().map(|&r| p.eval(r).abs()).fold(0.0, f64::max);
    let worst = grid
        .iter()
        .map(|&r| (apply_oscillator_operator(&eval, r, h, p.harmonic_degree, p.dimension()) - e * p.eval(r)).abs())
        .fold(0.0, f64::max);
    Ok(if scale > 0.0 { worst / scale } else { worst })
}

/// The radial default grid `[0.3, 3.0]·√n_I` pulled back through `ρ = √(n_I/2) r`.
pub fn default_grid() -> Vec<f64> {
    let s = 2f64.sqrt();
    fd::linspace(0.3 * s, 3.0 * s, 200)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicDegreeCheck {
    pub harmonic_degree: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl HarmonicDegreeCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Λ(Λ + 2n - 2) = Δ_A + σ̄²` with `Λ = 2l + |σ̄|`: the sphere Laplacian
/// splits into the twisted Laplacian plus the `U(1)` Casimir.
pub fn harmonic_degree_check(sector: &AngularSector) -> HarmonicDegreeCheck {
    let lambda = sector.harmonic_degree();
    let sb = sector.sigma_bar();
    let lhs = BigInt::from(lambda) * BigInt::from(lambda + 2 * sector.n as u64 - 2);
    let rhs = angular_laplacian_eigenvalue(sector) + BigInt::from(sb * sb);
    HarmonicDegreeCheck {
        harmonic_degree: lambda,
        lhs,
        rhs,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShellEigenvalueRow {
    pub k: u64,
    /// `(σ̄, I, eigenvalue)` for every level landing in shell `k`.
    pub levels: Vec<(i64, u64, u64)>,
    pub expected: u64,
    pub dimensions: OscillatorShellCheck,
}

impl ShellEigenvalueRow {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|&(_, _, e)| e == self.expected) && self.dimensions.passed()
    }
}

/// Every level with `2I + |σ̄| = k` lands at oscillator energy `k + n`, and the
/// shell dimensions add up.
pub fn shell_eigenvalue_check(n: u32, k_max: u64) -> Result<Vec<ShellEigenvalueRow>> {
    (0..=k_max)
        .map(|k| {
            let mut levels: Vec<(i64, u64, u64)> = Vec::new();
            for s in shell_sectors(k) {
                if levels.last().map(|&(sb, _, _)| sb) == Some(s.sigma_bar) {
                    continue;
                }
                let params = ProblemParams::new(n as i64, s.sigma_bar)?;
                // 2 n_I, straight from the principal number
                let two_ni =
                    crate::spectra::principal_number(s.level, params) * BigRational::from_integer(BigInt::from(2));
                let eigen: u64 = two_ni
                    .to_integer()
                    .try_into()
                    .expect("2 n_I is a small positive integer");
                levels.push((s.sigma_bar, s.level, eigen));
            }
            Ok(ShellEigenvalueRow {
                k,
                levels,
                expected: k + n as u64,
                dimensions: oscillator_shell_check(n, k)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::radial_eigenfunction;
    use crate::repcore::{sector_from_l, sector_from_pq};

    fn params(n: i64, s: i64) -> ProblemParams {
        ProblemParams::new(n, s).unwrap()
    }

    fn ln_factorial(m: u64) -> f64 {
        (2..=m).map(|i| (i as f64).ln()).sum()
    }

    #[test]
    fn ground_state_is_gaussian() {
        let p = twist(&radial_eigenfunction(1, 0, params(2, 0)).unwrap());
        assert_eq!(p.eigenvalue(), 2);
        assert_eq!(p.harmonic_degree(), 0);
        let c = p.eval(0.0);
        for &r in &[0.5, 1.0, 2.0] {
            assert!((p.eval(r) - c * (-r * r / 2.0).exp()).abs() < 1e-14);
        }
    }

    #[test]
    fn l_one_profile() {
        let p = twist(&radial_eigenfunction(1, 1, params(2, 0)).unwrap());
        assert_eq!((p.eigenvalue(), p.harmonic_degree()), (4, 2));
        // r² L³₀(r²) e^{-r²/2} = r² e^{-r²/2}
        let c = p.eval(1.0) / (-0.5f64).exp();
        for &r in &[0.3, 1.4, 2.2] {
            assert!((p.eval(r) - c * r * r * (-r * r / 2.0).exp()).abs() < 1e-13);
        }
    }

    #[test]
    fn closed_form_matches_twist_definition() {
        for (k, l, n, sb) in [(1, 0, 2, 0), (2, 1, 3, 2), (4, 3, 4, -4), (3, 0, 2, 1)] {
            let p = twist(&radial_eigenfunction(k, l, params(n, sb)).unwrap());
            for &r in &[0.2, 0.9, 1.7, 3.1] {
                let a = p.eval(r);
                let b = p.eval_by_twist(r);
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-12), "{k} {l} {n} {sb} r={r}");
            }
        }
    }

    #[test]
    fn twist_is_an_isometry() {
        for n in 2..=4 {
            for sb in -3..=3 {
                for k in 1..=4 {
                    for l in 0..=3 {
                        let p = twist(&radial_eigenfunction(k, l, params(n, sb)).unwrap());
                        let norm = oscillator_inner_product(&p, &p).unwrap();
                        assert!((norm - 1.0).abs() < 1e-8, "{n} {sb} {k} {l}: {norm}");
                    }
                }
            }
        }
    }

    #[test]
    fn amplitude_matches_standard_oscillator_normalization() {
        // ∫ r^{2Λ} L² e^{-r²} r^{2n-1} dr = Γ(k+α)/(2 (k-1)!)
        for (k, l, n, sb) in [(1u64, 0u64, 2i64, 0i64), (3, 2, 3, 1), (2, 1, 4, -2)] {
            let f = radial_eigenfunction(k, l, params(n, sb)).unwrap();
            let p = twist(&f);
            let alpha = f.laguerre_alpha();
            let expected = (0.5 * (2f64.ln() + ln_factorial(k - 1) - ln_factorial(k + alpha - 1))).exp();
            let got = p.eval(0.7)
                / (0.7f64.powi(p.harmonic_degree() as i32) * laguerre(alpha as f64, k - 1, 0.49) * (-0.245f64).exp());
            assert!((got - expected).abs() < 1e-12 * expected);
        }
    }

    #[test]
    fn same_degree_profiles_are_orthogonal() {
        // same Λ = 2l + |σ̄|, different k
        let a = twist(&radial_eigenfunction(1, 1, params(3, 2)).unwrap());
        let b = twist(&radial_eigenfunction(3, 1, params(3, 2)).unwrap());
        let c = twist(&radial_eigenfunction(2, 2, params(3, 0)).unwrap());
        assert_eq!(a.harmonic_degree(), c.harmonic_degree());
        assert!(oscillator_inner_product(&a, &b).unwrap().abs() < 1e-8);
        assert!(oscillator_inner_product(&b, &c).unwrap().abs() < 1e-8);
    }

    #[test]
    fn residual_spot_cases() {
        let p = twist(&radial_eigenfunction(1, 0, params(2, 0)).unwrap());
        assert!(oscillator_residual(&p, &default_grid(), 1e-3).unwrap() < 1e-7);
        let p = twist(&radial_eigenfunction(2, 1, params(3, 2)).unwrap());
        assert_eq!(p.eigenvalue(), 9);
        assert!(oscillator_residual(&p, &default_grid(), 1e-3).unwrap() < 1e-7);
    }

    #[test]
    fn residual_is_scale_free() {
        let p = twist(&radial_eigenfunction(2, 1, params(3, 2)).unwrap());
        let mut q = p.clone();
        q.amplitude *= 3.0;
        let a = oscillator_residual(&p, &default_grid(), 1e-3).unwrap();
        let b = oscillator_residual(&q, &default_grid(), 1e-3).unwrap();
        assert!(a < 1e-7 && b < 1e-7);
        assert!((a - b).abs() < 1e-9, "{a} {b}");
    }

    #[test]
    fn harmonic_degree_spot_values() {
        let c = harmonic_degree_check(&sector_from_pq(0, 0, 2).unwrap());
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (BigInt::from(0), BigInt::from(0)));
        let c = harmonic_degree_check(&sector_from_pq(1, 0, 2).unwrap());
        assert_eq!((c.harmonic_degree, c.lhs.clone()), (1, BigInt::from(3)));
        assert!(c.passed());
        let c = harmonic_degree_check(&sector_from_pq(2, 1, 3).unwrap());
        assert_eq!((c.harmonic_degree, c.lhs.clone()), (3, BigInt::from(21)));
        assert!(c.passed());
    }

    #[test]
    fn harmonic_degree_identity_everywhere() {
        for n in 2..=6u32 {
            for p in 0..=12u64 {
                for q in 0..=12u64 {
                    assert!(harmonic_degree_check(&sector_from_pq(p, q, n).unwrap()).passed());
                }
            }
        }
        // the l-labelled route agrees with p + q
        let s = sector_from_l(3, params(4, -2));
        assert_eq!(s.harmonic_degree(), s.p + s.q);
    }

    #[test]
    fn shell_eigenvalues() {
        let rows = shell_eigenvalue_check(2, 2).unwrap();
        assert_eq!(rows[0].levels, vec![(0, 0, 2)]);
        assert_eq!(rows[2].levels, vec![(-2, 0, 4), (0, 1, 4), (2, 0, 4)]);
        let rows = shell_eigenvalue_check(4, 5).unwrap();
        assert!(rows[5].levels.iter().all(|&(_, _, e)| e == 9));
        assert!(rows.iter().all(ShellEigenvalueRow::passed));
    }
}
