//! Exact arithmetic helpers shared by the representation-theory modules.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A number in `Z/2`, stored as twice its value so all arithmetic is integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub const HALF: HalfInteger = HalfInteger { twice: 1 };
    pub const NEG_HALF: HalfInteger = HalfInteger { twice: -1 };
    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub const fn from_int(v: i64) -> Self {
        HalfInteger { twice: 2 * v }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.twice), BigInt::from(2))
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> HalfInteger {
        HalfInteger::from_twice(-self.twice)
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Converts an exact rational to the nearest `f64`, ties to even.
///
/// Works on the normal `f64` range; anything that would land in the
/// subnormal or overflow range falls back to the generic conversion.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    let negative = num.sign() == Sign::Minus;
    let a = num.abs().to_biguint().expect("abs is nonnegative");
    let b = den.abs().to_biguint().expect("abs is nonnegative");

    let lo = BigUint::one() << 52u32;
    let hi = BigUint::one() << 53u32;
    // scale so that the integer quotient has exactly 53 significant bits
    let mut shift: i64 = 53 - (a.bits() as i64 - b.bits() as i64);
    let (mut q, mut rem, mut div) = scaled_div(&a, &b, shift);
    if q >= hi {
        shift -= 1;
        (q, rem, div) = scaled_div(&a, &b, shift);
    } else if q < lo {
        shift += 1;
        (q, rem, div) = scaled_div(&a, &b, shift);
    }
    debug_assert!(q >= lo && q < hi);

    let twice_rem: BigUint = rem << 1u32;
    let round_up = match twice_rem.cmp(&div) {
        Ordering::Greater => true,
        Ordering::Equal => q.is_odd(),
        Ordering::Less => false,
    };
    if round_up {
        q += 1u32;
    }

    let exponent = -shift;
    if !(-1000..=1000).contains(&exponent) {
        return r.to_f64().unwrap_or(f64::NAN);
    }
    let mantissa = q.to_f64().expect("at most 2^53");
    let magnitude = mantissa * 2f64.powi(exponent as i32);
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

fn scaled_div(a: &BigUint, b: &BigUint, shift: i64) -> (BigUint, BigUint, BigUint) {
    let (num, den) = if shift >= 0 {
        (a << (shift as u64), b.clone())
    } else {
        (a.clone(), b << ((-shift) as u64))
    };
    let (q, r) = num.div_rem(&den);
    (q, r, den)
}
