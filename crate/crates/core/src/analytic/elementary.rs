//! Logarithm and exponential on `HighPrec` intervals.
//!
//! Both run at the caller's precision plus guard digits and fold the series
//! truncation error into the result radius.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::highprec::HighPrec;
use crate::exact::rational::{ratio, BigRat};

const GUARD: u32 = 10;

/// 2 atanh(z) for exact 0 <= z <= 1/3, at `digits`.
fn two_atanh(z: &BigRat, digits: u32) -> HighPrec {
    let w = digits + GUARD;
    let zh = HighPrec::from_rat(z, w);
    let z2 = zh.mul(&zh);
    let threshold = BigRat::new(BigInt::one(), BigInt::from(10).pow(w + 2));
    let z_sq = z * z;
    let mut power = zh.clone();
    let mut exact_power = z.clone();
    let mut sum = HighPrec::zero(w);
    let mut k: i64 = 0;
    loop {
        let odd = 2 * k + 1;
        sum = sum.add(&power.mul_rat(&ratio(1, odd)));
        exact_power = &exact_power * &z_sq;
        power = power.mul(&z2);
        k += 1;
        if exact_power.abs() < threshold {
            break;
        }
    }
    // tail: sum_{i >= k} z^(2i+1)/(2i+1) <= z^(2k+1) / ((2k+1)(1 - z^2))
    let tail =
        &exact_power / (BigRat::from_integer(BigInt::from(2 * k + 1)) * (BigRat::one() - &z_sq));
    sum.widen(&tail).mul_rat(&ratio(2, 1)).with_digits(digits)
}

/// ln 2 = 2 atanh(1/3).
pub fn ln2(digits: u32) -> HighPrec {
    two_atanh(&ratio(1, 3), digits)
}

/// Natural log of an exact positive rational.
pub fn ln_rat(x: &BigRat, digits: u32) -> Option<HighPrec> {
    if !x.is_positive() {
        return None;
    }
    let w = digits + GUARD;
    // x = 2^k * y with y in [1, 2)
    let mut k: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let two = BigRat::from_integer(BigInt::from(2));
    let mut y = x / pow_rat(&two, k);
    while y >= two {
        y /= &two;
        k += 1;
    }
    while y < BigRat::one() {
        y *= &two;
        k -= 1;
    }
    let z = (&y - BigRat::one()) / (&y + BigRat::one());
    let res = two_atanh(&z, w).add(&ln2(w).mul_int(&BigInt::from(k)));
    Some(res.with_digits(digits))
}

fn pow_rat(b: &BigRat, e: i64) -> BigRat {
    if e >= 0 {
        num_traits::pow(b.clone(), e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

/// Natural log of a positive interval. The propagated error uses
/// |ln a - ln b| <= |a - b| / min(a, b).
pub fn ln(x: &HighPrec) -> Option<HighPrec> {
    let lo = x.lo();
    if !lo.is_positive() {
        return None;
    }
    let core = ln_rat(&x.mid(), x.digits())?;
    Some(core.widen(&(x.radius() / lo)))
}

/// exp of an exact rational with |x| <= 4, by the Taylor series.
pub fn exp_rat(x: &BigRat, digits: u32) -> HighPrec {
    assert!(x.abs() <= BigRat::from_integer(BigInt::from(4)));
    let w = digits + GUARD;
    let threshold = BigRat::new(BigInt::one(), BigInt::from(10).pow(w + 2));
    let mut term = BigRat::one();
    let mut sum = HighPrec::from_int(1, w);
    let mut k: i64 = 0;
    loop {
        k += 1;
        term = term * x / BigRat::from_integer(BigInt::from(k));
        sum = sum.add(&HighPrec::from_rat(&term, w));
        if term.abs() < threshold && k as u64 > 8 {
            break;
        }
    }
    // geometric bound on the remaining terms once k > 2|x|
    let tail = term.abs() * BigRat::from_integer(BigInt::from(2));
    if tail.is_zero() {
        return sum.with_digits(digits);
    }
    sum.widen(&tail).with_digits(digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn ln2_digits() {
        let l = ln2(50);
        assert!(l
            .truncated_string()
            .starts_with("0.693147180559945309417232121458176568075500134360"));
    }

    #[test]
    fn ln_of_ten_and_inverse() {
        let l = ln_rat(&rat(10), 40).unwrap();
        assert!(l
            .truncated_string()
            .starts_with("2.302585092994045684017991454684364207"));
        let m = ln_rat(&ratio(1, 10), 40).unwrap();
        assert!(l.add(&m).contains_zero());
    }

    #[test]
    fn exp_two() {
        let e2 = exp_rat(&rat(2), 40);
        assert!(e2
            .truncated_string()
            .starts_with("7.389056098930650227230427460575007813"));
    }

    #[test]
    fn ln_rejects_nonpositive() {
        assert!(ln_rat(&rat(0), 10).is_none());
        assert!(ln(&HighPrec::from_int(-1, 10)).is_none());
    }

    #[test]
    fn ln_interval_widening() {
        let x = HighPrec::from_rat_with_radius(&rat(3), &ratio(1, 1000), 20);
        let l = ln(&x).unwrap();
        assert!(l.radius() >= ratio(1, 3000));
    }
}
