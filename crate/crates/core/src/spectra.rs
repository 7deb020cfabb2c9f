//! Bound-state spectrum, degeneracies and K-type bookkeeping.
//!
//! Level `I` has energy `-1/2 / (I + (n + |σ̄|)/2)²` and carries the angular
//! sectors `l = 0, …, I`. As a module of the maximal compact subgroup it is the
//! product of a conjugated `(-1/2, …, -1/2, -(1/2 + a))` module and a
//! `(1/2 + b, 1/2, …, 1/2)` module.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, HalfInteger};
use crate::repcore::{dim_highest_weight, oscillator_shell_dim, sector_from_l, HighestWeight, ProblemParams};

/// `n_I = I + (n + |σ̄|)/2`.
pub fn principal_number(level: u64, params: ProblemParams) -> BigRational {
    BigRational::new(
        BigInt::from(2 * level + params.n() as u64 + params.abs_sigma()),
        BigInt::from(2),
    )
}

/// `E_I = -(1/2) / n_I²`.
pub fn energy(level: u64, params: ProblemParams) -> BigRational {
    let n_i = principal_number(level, params);
    -(BigRational::new(BigInt::one(), BigInt::from(2)) / (&n_i * &n_i))
}

/// `Σ_{l=0}^{I} dim R_l(σ)`.
pub fn level_degeneracy(level: u64, params: ProblemParams) -> BigUint {
    (0..=level).map(|l| sector_from_l(l, params).dim).sum()
}

/// `(a, b)` with `(a, b) = (I, I + |σ̄|)` for `σ̄ ≥ 0`, mirrored for `σ̄ < 0`.
fn ktype_indices(level: u64, params: ProblemParams) -> (u64, u64) {
    let shifted = level + params.abs_sigma();
    if params.sigma_bar() >= 0 {
        (level, shifted)
    } else {
        (shifted, level)
    }
}

/// The K-type labels of level `I`: the left (conjugated) weight
/// `(-1/2, …, -1/2, -(1/2 + a))` and the right weight `(1/2 + b, 1/2, …, 1/2)`.
pub fn ktype_pair(level: u64, params: ProblemParams) -> (HighestWeight, HighestWeight) {
    let (a, b) = ktype_indices(level, params);
    let n = params.n() as usize;

    let mut left = vec![HalfInteger::NEG_HALF; n];
    left[n - 1] = HalfInteger::NEG_HALF - HalfInteger::from_int(a as i64);
    let mut right = vec![HalfInteger::HALF; n];
    right[0] = HalfInteger::HALF + HalfInteger::from_int(b as i64);

    (
        HighestWeight::new(left).expect("dominant by construction"),
        HighestWeight::new(right).expect("dominant by construction"),
    )
}

/// The `U(n,n)` highest weight of the bound-state module, `2n` half-integers.
///
/// `σ̄ ≥ 0`: `(-1/2, …, -1/2, 1/2 + σ̄, 1/2, …, 1/2)` with `n` leading entries;
/// `σ̄ ≤ 0`: `(-1/2, …, -1/2, -1/2 + σ̄, 1/2, …, 1/2)` with `n` trailing entries.
pub fn hw_label(params: ProblemParams) -> Vec<HalfInteger> {
    let n = params.n() as usize;
    let sb = HalfInteger::from_int(params.sigma_bar());
    let mut label = vec![HalfInteger::NEG_HALF; n];
    label.extend(std::iter::repeat_n(HalfInteger::HALF, n));
    if params.sigma_bar() >= 0 {
        label[n] = HalfInteger::HALF + sb;
    } else {
        label[n - 1] = HalfInteger::NEG_HALF + sb;
    }
    label
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumLevel {
    pub level: u64,
    pub energy: BigRational,
    pub degeneracy: BigUint,
    pub left_ktype: HighestWeight,
    pub right_ktype: HighestWeight,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub params: ProblemParams,
    pub levels: Vec<SpectrumLevel>,
    pub hw_label: Vec<HalfInteger>,
}

/// Levels `I = 0, …, count - 1`.
pub fn spectrum_table(params: ProblemParams, count: u64) -> SpectrumTable {
    let levels = (0..count)
        .map(|level| {
            let (left_ktype, right_ktype) = ktype_pair(level, params);
            SpectrumLevel {
                level,
                energy: energy(level, params),
                degeneracy: level_degeneracy(level, params),
                left_ktype,
                right_ktype,
            }
        })
        .collect();
    SpectrumTable {
        params,
        levels,
        hw_label: hw_label(params),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTypeRow {
    pub level: u64,
    pub left_dim: BigUint,
    pub right_dim: BigUint,
    /// `C(a + n - 1, n - 1) · C(b + n - 1, n - 1)`.
    pub binomial_product: BigUint,
    pub sector_sum: BigUint,
}

impl KTypeRow {
    pub fn passed(&self) -> bool {
        let product = &self.left_dim * &self.right_dim;
        product == self.sector_sum && self.binomial_product == self.sector_sum
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KTypeReport {
    pub params: ProblemParams,
    pub rows: Vec<KTypeRow>,
    /// Solution of `2I + |σ̄| + n = 2I + |σ̄| + 2nκ`.
    pub kappa: BigRational,
    /// Whether every level's oscillator energy matches only at `κ = 1/2`
    /// among the candidates `-5/2, -2, …, 5/2`.
    pub kappa_unique: bool,
}

impl KTypeReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(KTypeRow::passed)
            && self.kappa == BigRational::new(BigInt::one(), BigInt::from(2))
            && self.kappa_unique
    }
}

fn oscillator_energy_with_kappa(level: u64, params: ProblemParams, kappa: &BigRational) -> BigRational {
    let base = BigInt::from(2 * level + params.abs_sigma());
    BigRational::from_integer(base) + BigRational::from_integer(BigInt::from(2 * params.n() as u64)) * kappa
}

/// Checks `dim(left) · dim(right) = level_degeneracy(I)` for `I ≤ i_max` and
/// pins `κ` from the oscillator energy `2I + |σ̄| + n`.
pub fn verify_ktype_dimensions(params: ProblemParams, i_max: u64) -> KTypeReport {
    let n = params.n() as u64;
    let rows = (0..=i_max)
        .map(|level| {
            let (left, right) = ktype_pair(level, params);
            let (a, b) = ktype_indices(level, params);
            KTypeRow {
                level,
                left_dim: dim_highest_weight(&left),
                right_dim: dim_highest_weight(&right),
                binomial_product: binomial(a + n - 1, n - 1) * binomial(b + n - 1, n - 1),
                sector_sum: level_degeneracy(level, params),
            }
        })
        .collect();

    // κ enters only through 2nκ; the offset cancels.
    let kappa = BigRational::new(BigInt::from(n), BigInt::from(2 * n));
    let candidates: Vec<BigRational> = (-5..=5)
        .map(|t| BigRational::new(BigInt::from(t), BigInt::from(2)))
        .collect();
    let kappa_unique = (0..=i_max).all(|level| {
        let target = BigRational::from_integer(BigInt::from(2 * level + params.abs_sigma() + n));
        let matching: Vec<_> = candidates
            .iter()
            .filter(|c| oscillator_energy_with_kappa(level, params, c) == target)
            .collect();
        matching.len() == 1 && *matching[0] == kappa
    });

    KTypeReport {
        params,
        rows,
        kappa,
        kappa_unique,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellContribution {
    pub sigma_bar: i64,
    pub level: u64,
    pub degeneracy: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OscillatorShellCheck {
    pub n: u32,
    pub k: u64,
    pub contributions: Vec<ShellContribution>,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl OscillatorShellCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Σ_{2I + |σ̄| = k} dim σ* · dim H_I(σ) = C(2n + k - 1, 2n - 1)`, with
/// `dim σ* = 1`.
pub fn oscillator_shell_check(n: u32, k: u64) -> Result<OscillatorShellCheck> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n as i64));
    }
    let k_i = k as i64;
    let mut contributions = Vec::new();
    let mut lhs = BigUint::zero();
    for sigma_bar in -k_i..=k_i {
        let rest = k - sigma_bar.unsigned_abs();
        if !rest.is_multiple_of(2) {
            continue;
        }
        let params = ProblemParams::new(n as i64, sigma_bar)?;
        let level = rest / 2;
        let degeneracy = level_degeneracy(level, params);
        lhs += &degeneracy;
        contributions.push(ShellContribution {
            sigma_bar,
            level,
            degeneracy,
        });
    }
    Ok(OscillatorShellCheck {
        n,
        k,
        contributions,
        lhs,
        rhs: oscillator_shell_dim(n, k),
    })
}
