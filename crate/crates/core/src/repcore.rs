//! Exact representation theory of `U(n)` for the angular sectors.
//!
//! Sections of the charge-`σ` line bundle over `CP^{n-1}` decompose into the
//! irreducible modules `R_{p,q}` with highest weight `(p, 0, …, 0, -q)` and
//! `p - q = σ̄`. This module computes their dimensions, Casimir values and the
//! resulting twisted-Laplacian eigenvalues, and checks the shell dimension
//! identity behind the oscillator correspondence. No floating point is used.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, rational, HalfInteger};

/// The pair `(n, σ̄)`: complex dimension `n ≥ 2` and the integer
/// infinitesimal character of the `U(1)` charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemParams {
    n: u32,
    sigma_bar: i64,
}

impl ProblemParams {
    pub fn new(n: i64, sigma_bar: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        let n = u32::try_from(n).map_err(|_| Error::DimensionTooSmall(n))?;
        Ok(ProblemParams { n, sigma_bar })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sigma_bar(&self) -> i64 {
        self.sigma_bar
    }

    pub fn abs_sigma(&self) -> u64 {
        self.sigma_bar.unsigned_abs()
    }

    /// The same problem with the charge conjugated, `σ̄ ↦ -σ̄`.
    pub fn conjugate(&self) -> Self {
        ProblemParams {
            n: self.n,
            sigma_bar: -self.sigma_bar,
        }
    }
}

/// A highest weight of `U(rank)`: weakly decreasing half-integers of one parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    entries: Vec<HalfInteger>,
}

impl HighestWeight {
    pub fn new(entries: Vec<HalfInteger>) -> Result<Self> {
        let weight = HighestWeight { entries };
        if weight.entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(weight.to_string()));
        }
        if let Some(first) = weight.entries.first() {
            let parity = first.is_integer();
            if weight.entries.iter().any(|e| e.is_integer() != parity) {
                return Err(Error::MixedParity(weight.to_string()));
            }
        }
        Ok(weight)
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&v| HalfInteger::from_int(v)).collect())
    }

    /// The weight `(p, 0, …, 0, -q)` of rank `n`.
    pub fn sector_weight(p: u64, q: u64, n: u32) -> Self {
        let n = n as usize;
        let mut entries = vec![HalfInteger::ZERO; n];
        entries[0] = HalfInteger::from_int(p as i64);
        entries[n - 1] = entries[n - 1] - HalfInteger::from_int(q as i64);
        HighestWeight::new(entries).expect("(p,0,...,0,-q) is dominant for n >= 2")
    }

    pub fn entries(&self) -> &[HalfInteger] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Adds `c` to every entry; this tensors with a power of the determinant.
    pub fn shifted(&self, c: HalfInteger) -> Self {
        HighestWeight {
            entries: self.entries.iter().map(|&e| e + c).collect(),
        }
    }
}

impl fmt::Display for HighestWeight {
    /// Bracketed and space separated, e.g. `[-1/2 -3/2]`, so it is safe in CSV.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// The angular sector `R_{p,q}` (also written `R_l(σ)`) together with its
/// exact invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngularSector {
    pub p: u64,
    pub q: u64,
    pub n: u32,
    pub l: u64,
    pub dim: BigUint,
    pub casimir: BigRational,
    pub angular_eigenvalue: BigInt,
}

impl AngularSector {
    pub fn sigma_bar(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    pub fn weight(&self) -> HighestWeight {
        HighestWeight::sector_weight(self.p, self.q, self.n)
    }

    /// Harmonic degree `2l + |σ̄|` of the sector on `S^{2n-1}`; equals `p + q`.
    pub fn harmonic_degree(&self) -> u64 {
        2 * self.l + self.sigma_bar().unsigned_abs()
    }
}

/// The sector with index `l` for the given charge.
///
/// `l = q` when `σ̄ ≥ 0` and `l = p` when `σ̄ ≤ 0`; negative charges are obtained
/// from the positive ones through `(p, q, σ̄) ↦ (q, p, -σ̄)`.
pub fn sector_from_l(l: u64, params: ProblemParams) -> AngularSector {
    let (p, q) = sector_labels(l, params.sigma_bar());
    build_sector(p, q, params.n(), l)
}

fn sector_labels(l: u64, sigma_bar: i64) -> (u64, u64) {
    if sigma_bar < 0 {
        let (p, q) = sector_labels(l, -sigma_bar);
        return (q, p);
    }
    (l + sigma_bar as u64, l)
}

/// The sector `R_{p,q}` for explicit labels.
pub fn sector_from_pq(p: u64, q: u64, n: u32) -> Result<AngularSector> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n as i64));
    }
    Ok(build_sector(p, q, n, p.min(q)))
}

fn build_sector(p: u64, q: u64, n: u32, l: u64) -> AngularSector {
    let weight = HighestWeight::sector_weight(p, q, n);
    let casimir = casimir_u_n(&weight);
    let sigma_bar = p as i64 - q as i64;
    let eigen = angular_eigenvalue_from_casimir(&casimir, sigma_bar);
    AngularSector {
        p,
        q,
        n,
        l,
        dim: dim_sector(p, q, n).expect("n >= 2 checked by caller"),
        casimir,
        angular_eigenvalue: eigen,
    }
}

/// `dim R_{p,q} = ((p+q+n-1)/(n-1)) · C(p+n-2, n-2) · C(q+n-2, n-2)`.
pub fn dim_sector(p: u64, q: u64, n: u32) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n as i64));
    }
    let n = n as u64;
    let numer = BigUint::from(p + q + n - 1) * binomial(p + n - 2, n - 2) * binomial(q + n - 2, n - 2);
    let (dim, rem) = numer.div_rem(&BigUint::from(n - 1));
    debug_assert!(rem.is_zero(), "sector dimension must be integral");
    Ok(dim)
}

/// Weyl dimension `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn dim_highest_weight(lambda: &HighestWeight) -> BigUint {
    let twice: Vec<i64> = lambda.entries().iter().map(|e| e.twice()).collect();
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for i in 0..twice.len() {
        for j in (i + 1)..twice.len() {
            let gap = 2 * (j - i) as i64;
            numer *= BigInt::from(twice[i] - twice[j] + gap);
            denom *= BigInt::from(gap);
        }
    }
    let (dim, rem) = numer.div_rem(&denom);
    debug_assert!(rem.is_zero(), "Weyl dimension must be integral");
    dim.to_biguint().expect("dominant weights have positive dimension")
}

/// `⟨λ, λ + 2ρ⟩ = Σ λ_i² + Σ (n + 1 - 2i) λ_i` in the trace form.
///
/// With this normalization `U(1)` acts on charge `σ̄` by `σ̄²`.
pub fn casimir_u_n(lambda: &HighestWeight) -> BigRational {
    let n = lambda.rank() as i64;
    // accumulate 4 × the value to stay in integers
    let mut four_c = BigInt::zero();
    for (idx, e) in lambda.entries().iter().enumerate() {
        let i = idx as i64 + 1;
        let d = BigInt::from(e.twice());
        four_c += &d * &d + BigInt::from(2 * (n + 1 - 2 * i)) * &d;
    }
    BigRational::new(four_c, BigInt::from(4))
}

fn angular_eigenvalue_from_casimir(casimir: &BigRational, sigma_bar: i64) -> BigInt {
    let sq = BigRational::from_integer(BigInt::from(sigma_bar) * BigInt::from(sigma_bar));
    let value = (casimir - sq) * BigRational::from_integer(BigInt::from(2));
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// `Δ_A|_{CP^{n-1}}` on the sector: `2 (c₂[U(n)] - σ̄²)`.
pub fn angular_laplacian_eigenvalue(sector: &AngularSector) -> BigInt {
    angular_eigenvalue_from_casimir(&sector.casimir, sector.sigma_bar())
}

/// The polynomial form `4pq + 2(n-1)(p+q)` of the angular eigenvalue.
pub fn angular_eigenvalue_closed_form(p: u64, q: u64, n: u32) -> BigInt {
    BigInt::from(4u64 * p * q) + BigInt::from(2 * (n as u64 - 1) * (p + q))
}

/// `L = l + |σ̄|/2`.
pub fn effective_angular_momentum(l: u64, sigma_bar: i64) -> BigRational {
    rational(2 * l as i64 + sigma_bar.abs(), 2)
}

/// Coefficient of `1/(2ρ⁴)` in the separated radial equation:
/// `L² + (n-1)L + (n - 5/4)/4`.
pub fn separated_radial_coefficient(l: u64, sigma_bar: i64, n: u32) -> BigRational {
    let big_l = effective_angular_momentum(l, sigma_bar);
    let n = BigRational::from_integer(BigInt::from(n));
    &big_l * &big_l + (&n - BigRational::one()) * &big_l + (n - rational(5, 4)) * rational(1, 4)
}

/// Result of the Casimir route vs. separated-equation route comparison for one
/// sector.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientCheck {
    pub l: u64,
    pub sigma_bar: i64,
    pub n: u32,
    pub casimir_route: BigInt,
    pub closed_form: BigInt,
    pub l_form: BigRational,
    pub lhs_coefficient: BigRational,
    pub rhs_coefficient: BigRational,
}

impl CoefficientCheck {
    pub fn passed(&self) -> bool {
        BigRational::from_integer(self.casimir_route.clone()) == self.l_form
            && self.casimir_route == self.closed_form
            && self.lhs_coefficient == self.rhs_coefficient
    }
}

/// Compares three exact evaluations of the angular term:
/// `2(c₂ - σ̄²)`, `4pq + 2(n-1)(p+q)`, `4L² + 4(n-1)L - σ̄²`, and checks
/// `eigenvalue + σ̄² + (n - 5/4) = 4 · coefficient`.
pub fn coefficient_check(l: u64, params: ProblemParams) -> CoefficientCheck {
    let sector = sector_from_l(l, params);
    let n = params.n();
    let sb = params.sigma_bar();
    let big_l = effective_angular_momentum(l, sb);
    let n_rat = BigRational::from_integer(BigInt::from(n));
    let sb_sq = BigRational::from_integer(BigInt::from(sb * sb));
    let four = BigRational::from_integer(BigInt::from(4));
    let l_form = &four * &big_l * &big_l + &four * (&n_rat - BigRational::one()) * &big_l - &sb_sq;
    let eigen = angular_laplacian_eigenvalue(&sector);
    let lhs = BigRational::from_integer(eigen.clone()) + sb_sq + n_rat - rational(5, 4);
    let rhs = four * separated_radial_coefficient(l, sb, n);
    CoefficientCheck {
        l,
        sigma_bar: sb,
        n,
        casimir_route: eigen,
        closed_form: angular_eigenvalue_closed_form(sector.p, sector.q, n),
        l_form,
        lhs_coefficient: lhs,
        rhs_coefficient: rhs,
    }
}

/// One sector contributing to an oscillator shell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellSector {
    pub sigma_bar: i64,
    pub level: u64,
    pub l: u64,
    pub p: u64,
    pub q: u64,
}

/// All `(σ̄, I, l)` with `2I + |σ̄| = k` and `l ≤ I`, ascending `σ̄` then `l`.
pub fn shell_sectors(k: u64) -> Vec<ShellSector> {
    let k_i = k as i64;
    let mut out = Vec::new();
    for sigma_bar in -k_i..=k_i {
        let rest = k - sigma_bar.unsigned_abs();
        if !rest.is_multiple_of(2) {
            continue;
        }
        let level = rest / 2;
        for l in 0..=level {
            let (p, q) = sector_labels(l, sigma_bar);
            out.push(ShellSector {
                sigma_bar,
                level,
                l,
                p,
                q,
            });
        }
    }
    out
}

/// `dim H_k = C(2n + k - 1, 2n - 1)` for the `2n`-dimensional oscillator.
pub fn oscillator_shell_dim(n: u32, k: u64) -> BigUint {
    let n = n as u64;
    binomial(2 * n + k - 1, 2 * n - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellRow {
    pub k: u64,
    pub sector_count: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl ShellRow {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionEqualityReport {
    pub n: u32,
    pub rows: Vec<ShellRow>,
}

impl DimensionEqualityReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(ShellRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ShellRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

/// Sums `dim R_{p,q}` over every sector in shell `k` and compares with
/// `C(2n + k - 1, 2n - 1)`, for each `k ≤ k_max`.
pub fn verify_dimension_equality(n: u32, k_max: u64) -> Result<DimensionEqualityReport> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n as i64));
    }
    let rows = (0..=k_max)
        .map(|k| {
            let sectors = shell_sectors(k);
            let lhs = sectors
                .iter()
                .map(|s| dim_sector(s.p, s.q, n).expect("n checked"))
                .sum();
            ShellRow {
                k,
                sector_count: sectors.len(),
                lhs,
                rhs: oscillator_shell_dim(n, k),
            }
        })
        .collect();
    Ok(DimensionEqualityReport { n, rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesRow {
    pub k: u64,
    /// Shell sum of sector dimensions.
    pub shell_sum: BigUint,
    /// Coefficient of `t^k` in `Σ_{p,q} dim R_{p,q} t^{p+q} / (1 - t²)`.
    pub double_sum: BigUint,
    /// Coefficient of `t^k` in `(1 - t)^{-2n+1} (1 + t) / (1 - t²)`.
    pub split_form: BigUint,
    /// Coefficient of `t^k` in `(1 - t)^{-2n}`, by repeated convolution.
    pub power_series: BigUint,
}

impl SeriesRow {
    pub fn passed(&self) -> bool {
        self.shell_sum == self.power_series
            && self.double_sum == self.power_series
            && self.split_form == self.power_series
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingFunctionReport {
    pub n: u32,
    pub rows: Vec<SeriesRow>,
}

impl GeneratingFunctionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(SeriesRow::passed)
    }
}

type Series = Vec<BigUint>;

fn convolve(a: &[BigUint], b: &[BigUint], len: usize) -> Series {
    let mut out = vec![BigUint::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn geometric(len: usize, step: usize) -> Series {
    (0..len)
        .map(|i| if i % step == 0 { BigUint::one() } else { BigUint::zero() })
        .collect()
}

/// Checks every link of the generating-function chain up to `t^{k_max}`:
/// shell sums, the `(p, q)` double sum over `1 - t²`, the Pascal-split form,
/// and the power series of `(1 - t)^{-2n}`.
pub fn verify_generating_function(n: u32, k_max: u64) -> Result<GeneratingFunctionReport> {
    let shells = verify_dimension_equality(n, k_max)?;
    let len = k_max as usize + 1;
    let nn = n as u64;

    // Σ_{p,q} dim R_{p,q} t^{p+q}
    let mut pq_series: Series = vec![BigUint::zero(); len];
    for (total, slot) in pq_series.iter_mut().enumerate() {
        let total = total as u64;
        for p in 0..=total {
            *slot += dim_sector(p, total - p, n)?;
        }
    }
    let over_one_minus_t2 = geometric(len, 2);
    let double_sum = convolve(&pq_series, &over_one_minus_t2, len);

    // (1 - t)^{-(2n-1)} · (1 + t) / (1 - t²)
    let inv_one_minus_t = geometric(len, 1);
    let mut pow = geometric(len, 1);
    for _ in 1..(2 * nn - 1) {
        pow = convolve(&pow, &inv_one_minus_t, len);
    }
    let one_plus_t: Series = (0..len)
        .map(|i| if i <= 1 { BigUint::one() } else { BigUint::zero() })
        .collect();
    let split_form = convolve(&convolve(&pow, &one_plus_t, len), &over_one_minus_t2, len);

    // (1 - t)^{-2n}
    let power_series = convolve(&pow, &inv_one_minus_t, len);

    let rows = shells
        .rows
        .into_iter()
        .map(|row| {
            let k = row.k as usize;
            SeriesRow {
                k: row.k,
                shell_sum: row.lhs,
                double_sum: double_sum[k].clone(),
                split_form: split_form[k].clone(),
                power_series: power_series[k].clone(),
            }
        })
        .collect();
    Ok(GeneratingFunctionReport { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: i64, s: i64) -> ProblemParams {
        ProblemParams::new(n, s).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(ProblemParams::new(1, 0), Err(Error::DimensionTooSmall(1)));
        assert!(dim_sector(0, 0, 1).is_err());
        assert!(verify_dimension_equality(1, 3).is_err());
    }

    #[test]
    fn sector_labels_follow_sign_of_charge() {
        let s = sector_from_l(0, params(2, 0));
        assert_eq!((s.p, s.q), (0, 0));
        let s = sector_from_l(1, params(2, 2));
        assert_eq!((s.p, s.q, s.l), (3, 1, 1));
        let s = sector_from_l(2, params(3, -1));
        assert_eq!((s.p, s.q, s.l), (2, 3, 2));
    }

    #[test]
    fn weight_validation() {
        assert!(matches!(
            HighestWeight::from_ints(&[0, 1]),
            Err(Error::NotDecreasing(_))
        ));
        let mixed = vec![HalfInteger::from_twice(1), HalfInteger::from_twice(0)];
        assert!(matches!(HighestWeight::new(mixed), Err(Error::MixedParity(_))));
        let w = HighestWeight::new(vec![HalfInteger::HALF, HalfInteger::NEG_HALF]).unwrap();
        assert_eq!(w.to_string(), "[1/2 -1/2]");
    }

    #[test]
    fn sector_dimensions() {
        assert_eq!(dim_sector(0, 0, 5).unwrap(), big(1));
        assert_eq!(dim_sector(1, 0, 2).unwrap(), big(2));
        assert_eq!(dim_sector(1, 1, 3).unwrap(), big(8));
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(
            dim_highest_weight(&HighestWeight::from_ints(&[0, 0, 0]).unwrap()),
            big(1)
        );
        assert_eq!(
            dim_highest_weight(&HighestWeight::from_ints(&[1, 0, -1]).unwrap()),
            big(8)
        );
        assert_eq!(dim_highest_weight(&HighestWeight::from_ints(&[1, 0]).unwrap()), big(2));
    }

    #[test]
    fn symmetric_power_weights() {
        // (1/2 + l, 1/2, ..., 1/2) is Sym^l shifted by det^{1/2}
        for n in 2..=5u32 {
            for l in 0..=10u64 {
                let mut entries = vec![HalfInteger::HALF; n as usize];
                entries[0] = HalfInteger::from_twice(1 + 2 * l as i64);
                let w = HighestWeight::new(entries).unwrap();
                assert_eq!(dim_highest_weight(&w), binomial(l + n as u64 - 1, n as u64 - 1));
            }
        }
    }

    #[test]
    fn casimir_values() {
        assert_eq!(
            casimir_u_n(&HighestWeight::from_ints(&[0, 0, 0]).unwrap()),
            rational(0, 1)
        );
        assert_eq!(casimir_u_n(&HighestWeight::from_ints(&[1, 0]).unwrap()), rational(2, 1));
        assert_eq!(
            casimir_u_n(&HighestWeight::from_ints(&[1, 0, -1]).unwrap()),
            rational(6, 1)
        );
        // U(1) on charge σ̄ gives σ̄²
        assert_eq!(casimir_u_n(&HighestWeight::from_ints(&[-3]).unwrap()), rational(9, 1));
    }

    #[test]
    fn casimir_on_sector_weights_matches_closed_form() {
        for n in 2..=6u32 {
            for p in 0..=8u64 {
                for q in 0..=8u64 {
                    let c = casimir_u_n(&HighestWeight::sector_weight(p, q, n));
                    let expected = (p * p + q * q + (n as u64 - 1) * (p + q)) as i64;
                    assert_eq!(c, rational(expected, 1));
                }
            }
        }
    }

    #[test]
    fn angular_eigenvalues() {
        let s = sector_from_pq(0, 0, 4).unwrap();
        assert_eq!(angular_laplacian_eigenvalue(&s), BigInt::from(0));
        let s = sector_from_pq(1, 0, 2).unwrap();
        assert_eq!(angular_laplacian_eigenvalue(&s), BigInt::from(2));
        assert_eq!(angular_eigenvalue_closed_form(1, 0, 2), BigInt::from(2));
        let s = sector_from_pq(1, 1, 3).unwrap();
        assert_eq!(angular_laplacian_eigenvalue(&s), BigInt::from(12));
        assert_eq!(angular_eigenvalue_closed_form(1, 1, 3), BigInt::from(12));
    }

    #[test]
    fn eigenvalue_conjugation_symmetry() {
        for n in 2..=5u32 {
            for sb in -6i64..=6 {
                for l in 0..=6u64 {
                    let a = sector_from_l(l, params(n as i64, sb));
                    let b = sector_from_l(l, params(n as i64, -sb));
                    assert_eq!((a.p, a.q), (b.q, b.p));
                    assert_eq!(a.angular_eigenvalue, b.angular_eigenvalue);
                    assert_eq!(a.dim, b.dim);
                }
            }
        }
    }

    #[test]
    fn coefficient_routes_agree() {
        for n in 2..=6 {
            for sb in -6..=6 {
                for l in 0..=10 {
                    let check = coefficient_check(l, params(n, sb));
                    assert!(check.passed(), "{check:?}");
                }
            }
        }
    }

    #[test]
    fn shell_enumeration_n2_k2() {
        let sectors = shell_sectors(2);
        let labels: Vec<_> = sectors.iter().map(|s| (s.sigma_bar, s.l, s.p, s.q)).collect();
        assert_eq!(labels, vec![(-2, 0, 0, 2), (0, 0, 0, 0), (0, 1, 1, 1), (2, 0, 2, 0)]);
        let dims: Vec<_> = sectors.iter().map(|s| dim_sector(s.p, s.q, 2).unwrap()).collect();
        assert_eq!(dims, vec![big(3), big(1), big(3), big(3)]);
    }

    #[test]
    fn dimension_equality_spot_values() {
        let r = verify_dimension_equality(2, 2).unwrap();
        assert_eq!(r.rows[0].lhs, big(1));
        assert_eq!(r.rows[2].lhs, big(10));
        assert_eq!(r.rows[2].rhs, big(10));
        let r = verify_dimension_equality(3, 4).unwrap();
        assert_eq!(r.rows[4].lhs, big(126));
        assert!(r.passed());
    }

    #[test]
    fn generating_function_small_cases() {
        let r = verify_generating_function(2, 0).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].power_series, big(1));
        assert!(r.passed());
        assert!(verify_generating_function(2, 10).unwrap().passed());
        let r = verify_generating_function(4, 20).unwrap();
        assert!(r.passed());
        assert_eq!(r.rows[20].power_series, binomial(27, 7));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn dominant_weight() -> impl Strategy<Value = HighestWeight> {
            (
                1usize..=6,
                any::<bool>(),
                -8i64..=8,
                proptest::collection::vec(0i64..=5, 0..6),
            )
                .prop_map(|(rank, half, top, gaps)| {
                    let mut v = top * 2 + if half { 1 } else { 0 };
                    let mut entries = vec![HalfInteger::from_twice(v)];
                    for g in gaps.iter().cycle().take(rank - 1) {
                        v -= 2 * g;
                        entries.push(HalfInteger::from_twice(v));
                    }
                    HighestWeight::new(entries).unwrap()
                })
        }

        proptest! {
            #[test]
            fn weyl_dimension_is_shift_invariant(w in dominant_weight(), shift in -20i64..=20) {
                let shifted = w.shifted(HalfInteger::from_twice(shift));
                prop_assert_eq!(dim_highest_weight(&w), dim_highest_weight(&shifted));
            }

            #[test]
            fn sector_dim_matches_weyl(p in 0u64..=12, q in 0u64..=12, n in 2u32..=6) {
                let w = HighestWeight::sector_weight(p, q, n);
                prop_assert_eq!(dim_sector(p, q, n).unwrap(), dim_highest_weight(&w));
            }

            #[test]
            fn casimir_route_matches_polynomial(p in 0u64..=12, q in 0u64..=12, n in 2u32..=6) {
                let s = sector_from_pq(p, q, n).unwrap();
                prop_assert_eq!(angular_laplacian_eigenvalue(&s), angular_eigenvalue_closed_form(p, q, n));
                prop_assert!(s.angular_eigenvalue >= BigInt::zero());
            }
        }
    }
}
