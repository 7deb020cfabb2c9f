use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use u1kepler::repcore::dim_sector;
use u1kepler::spectra::{energy, level_degeneracy, spectrum_table};
use u1kepler::ProblemParams;

#[test]
fn energies_match_closed_form_over_a_wide_range() {
    // -(1/2) / (I + (n + |σ̄|)/2)² = -2 / (2I + n + |σ̄|)²
    for n in 2..=6i64 {
        for sb in -6..=6i64 {
            let params = ProblemParams::new(n, sb).unwrap();
            for level in 0..=20u64 {
                let d = 2 * level as i64 + n + sb.abs();
                let want = BigRational::new(BigInt::from(-2), BigInt::from(d * d));
                assert_eq!(energy(level, params), want, "n={n} sigma={sb} I={level}");
            }
        }
    }
}

#[test]
fn degeneracy_is_a_sum_of_sector_dimensions() {
    for n in 2..=5u32 {
        for sb in -4..=4i64 {
            let params = ProblemParams::new(n as i64, sb).unwrap();
            for level in 0..=8u64 {
                let mut want = BigUint::from(0u32);
                for l in 0..=level {
                    // σ̄ = p - q, l = min(p, q)
                    let (p, q) = if sb >= 0 {
                        (l + sb as u64, l)
                    } else {
                        (l, l + sb.unsigned_abs())
                    };
                    want += dim_sector(p, q, n).unwrap();
                }
                assert_eq!(level_degeneracy(level, params), want, "n={n} sigma={sb} I={level}");
            }
        }
    }
}

#[test]
fn table_is_ordered_and_conjugation_symmetric() {
    let a = spectrum_table(ProblemParams::new(4, 3).unwrap(), 6);
    let b = spectrum_table(ProblemParams::new(4, -3).unwrap(), 6);
    for (i, (x, y)) in a.levels.iter().zip(&b.levels).enumerate() {
        assert_eq!(x.level, i as u64);
        assert_eq!(x.energy, y.energy);
        assert_eq!(x.degeneracy, y.degeneracy);
    }
    assert!(a.levels.windows(2).all(|w| w[0].energy < w[1].energy));
}
