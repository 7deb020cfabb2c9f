//! Pointwise checks of the metric decomposition on `C^n \ {0}`.
//!
//! For a base point `Z` and tangent vector `W`:
//!
//! ```text
//! |W|² = dρ(W)² + ρ² (FS(W) + (Im(Z̄·W)/|Z|²)²)
//! dρ(W) = Re(Z̄·W)/|Z|
//! FS(W) = |W|²/|Z|² - |Z·W̄|²/|Z|⁴
//! ```
//!
//! Dropping the vertical term leaves the quotient metric `dρ² + ρ² FS`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Seed used by the randomized suites unless overridden.
pub const DEFAULT_SEED: u64 = 0x5eed_2008;

#[derive(Debug, Clone, PartialEq)]
pub struct TangentSample {
    z: Vec<Complex64>,
    w: Vec<Complex64>,
}

fn hermitian(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    // Σ conj(a_i) b_i
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

impl TangentSample {
    pub fn new(z: Vec<Complex64>, w: Vec<Complex64>) -> Result<Self> {
        if z.len() != w.len() {
            return Err(Error::LengthMismatch {
                base: z.len(),
                tangent: w.len(),
            });
        }
        if norm_sqr(&z) == 0.0 {
            return Err(Error::ZeroBasePoint);
        }
        Ok(TangentSample { z, w })
    }

    /// A sample with independent uniform real and imaginary parts in `[-1, 1]`.
    pub fn random<R: Rng>(rng: &mut R, n: usize) -> Self {
        let mut draw = || Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
        loop {
            let z: Vec<_> = (0..n).map(|_| draw()).collect();
            let w: Vec<_> = (0..n).map(|_| draw()).collect();
            if let Ok(s) = TangentSample::new(z, w) {
                return s;
            }
        }
    }

    pub fn z(&self) -> &[Complex64] {
        &self.z
    }

    pub fn w(&self) -> &[Complex64] {
        &self.w
    }

    pub fn with_tangent(&self, w: Vec<Complex64>) -> Result<Self> {
        TangentSample::new(self.z.clone(), w)
    }

    pub fn base_norm(&self) -> f64 {
        norm_sqr(&self.z).sqrt()
    }

    /// `dρ(W) = Re(Z̄·W)/|Z|`.
    pub fn radial_differential(&self) -> f64 {
        hermitian(&self.z, &self.w).re / self.base_norm()
    }

    /// `Im(Z̄·W)/|Z|²`.
    pub fn vertical_component(&self) -> f64 {
        hermitian(&self.z, &self.w).im / norm_sqr(&self.z)
    }
}

/// `|W|²/|Z|² - |Z·W̄|²/|Z|⁴`.
pub fn fs_quadratic(s: &TangentSample) -> f64 {
    let zz = norm_sqr(&s.z);
    let ww = norm_sqr(&s.w);
    let zw = hermitian(&s.w, &s.z).norm_sqr();
    // clamp the cancellation error on the complex line through Z
    (ww / zz - zw / (zz * zz)).max(0.0)
}

/// `dρ² + ρ² FS`.
pub fn quotient_metric_eval(s: &TangentSample) -> f64 {
    let dr = s.radial_differential();
    dr * dr + norm_sqr(&s.z) * fs_quadratic(s)
}

/// `|LHS - RHS| / |W|²` for the Euclidean metric decomposition; zero for `W = 0`.
pub fn metric_decomposition_residual(s: &TangentSample) -> f64 {
    let lhs = norm_sqr(&s.w);
    if lhs == 0.0 {
        return 0.0;
    }
    let v = s.vertical_component();
    let rhs = quotient_metric_eval(s) + norm_sqr(&s.z) * v * v;
    (lhs - rhs).abs() / lhs
}

/// Splits `W` into radial (`∝ Z`), vertical (`∝ iZ`) and horizontal parts.
pub fn decompose(s: &TangentSample) -> [Vec<Complex64>; 3] {
    let zz = norm_sqr(&s.z);
    let coeff = hermitian(&s.z, &s.w) / zz;
    let radial: Vec<_> = s.z.iter().map(|z| z * coeff.re).collect();
    let vertical: Vec<_> = s.z.iter().map(|z| z * Complex64::new(0.0, coeff.im)).collect();
    let horizontal: Vec<_> =
        s.w.iter()
            .zip(radial.iter().zip(&vertical))
            .map(|(w, (r, v))| w - r - v)
            .collect();
    [radial, horizontal, vertical]
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_residual: f64,
}

/// Worst decomposition residual over `samples` seeded random samples in `C^n`.
pub fn verify_metric_decomposition(n: usize, samples: usize, seed: u64) -> MetricReport {
    // one stream per n so suites with different n stay independent
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let max_residual = (0..samples)
        .map(|_| metric_decomposition_residual(&TangentSample::random(&mut rng, n)))
        .fold(0.0, f64::max);
    MetricReport {
        n,
        samples,
        seed,
        max_residual,
    }
}
