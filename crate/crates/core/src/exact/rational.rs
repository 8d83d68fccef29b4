//! Arbitrary-precision rationals and a few integer helpers.
//!
//! `BigRat` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_int(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

/// True when `x * scale` has denominator one.
pub fn is_integral_after(x: &BigRat, scale: &BigInt) -> bool {
    (scale * x.numer()).is_multiple_of(x.denom())
}

/// Binomial coefficient C(n, k) for 0 <= k <= n, zero otherwise.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Number of decimal digits of |n| (at least 1).
pub fn decimal_len(n: &BigInt) -> u32 {
    if n.is_zero() {
        1
    } else {
        n.abs().to_string().len() as u32
    }
}

/// Ceiling of log10 of |x| for nonzero x, as a coarse magnitude; 0 for zero.
pub fn magnitude_digits(x: &BigRat) -> i64 {
    if x.is_zero() {
        return 0;
    }
    decimal_len(x.numer()) as i64 - decimal_len(x.denom()) as i64 + 1
}
