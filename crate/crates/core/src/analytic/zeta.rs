//! zeta(3) and Hurwitz-type tails sum_{t >= a} t^-s.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::highprec::HighPrec;
use crate::exact::rational::{binomial, ratio, BigRat};

/// Extra stored decimals so that the radius stays below 10^-digits.
pub const RESULT_GUARD: u32 = 3;

static ZETA3: OnceLock<Mutex<HashMap<u32, HighPrec>>> = OnceLock::new();

/// zeta(3) with |result - zeta(3)| <= radius < 10^-digits.
///
/// Uses the alternating central-binomial series
/// zeta(3) = 5/2 sum_{k>=1} (-1)^(k+1) / (k^3 C(2k, k)),
/// whose tail is bounded by the first omitted term.
pub fn zeta3(digits: u32) -> HighPrec {
    let cache = ZETA3.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&digits) {
        return v.clone();
    }
    let w = digits + RESULT_GUARD + 8;
    let threshold = BigRat::new(BigInt::one(), BigInt::from(10).pow(w + 2));
    let mut sum = HighPrec::zero(w);
    let mut k: u64 = 1;
    let tail = loop {
        let term = BigRat::new(BigInt::one(), BigInt::from(k).pow(3) * binomial(2 * k, k));
        if term < threshold {
            break term;
        }
        let h = HighPrec::from_rat(&term, w);
        sum = if k % 2 == 1 { sum.add(&h) } else { sum.sub(&h) };
        k += 1;
    };
    let value = sum
        .widen(&tail)
        .mul_rat(&ratio(5, 2))
        .with_digits(digits + RESULT_GUARD);
    cache.lock().unwrap().insert(digits, value.clone());
    value
}

/// Brute-force enclosure of zeta(3) from the first `terms` terms of
/// sum 1/k^3 and the integral test:
/// 1/(2(N+1)^2) < sum_{k>N} 1/k^3 < 1/(2N^2).
pub fn zeta3_direct_bracket(terms: u64, digits: u32) -> HighPrec {
    let w = digits + 10;
    let mut sum = HighPrec::zero(w);
    for k in 1..=terms {
        sum = sum.add(&HighPrec::from_rat(
            &BigRat::new(BigInt::one(), BigInt::from(k).pow(3)),
            w,
        ));
    }
    let n = BigInt::from(terms);
    let lo = BigRat::new(BigInt::one(), BigInt::from(2) * (&n + 1u32).pow(2));
    let hi = BigRat::new(BigInt::one(), BigInt::from(2) * n.pow(2));
    let mid = (&lo + &hi) / BigRat::from_integer(BigInt::from(2));
    let half = (&hi - &lo) / BigRat::from_integer(BigInt::from(2));
    sum.add(&HighPrec::from_rat_with_radius(&mid, &half, w))
}

static BERNOULLI: OnceLock<Mutex<Vec<BigRat>>> = OnceLock::new();

/// Bernoulli number B_m (B_1 = -1/2 convention).
pub fn bernoulli(m: usize) -> BigRat {
    let cache = BERNOULLI.get_or_init(|| Mutex::new(vec![BigRat::one()]));
    let mut table = cache.lock().unwrap();
    while table.len() <= m {
        let j = table.len();
        // sum_{k=0}^{j} C(j+1, k) B_k = 0
        let mut acc = BigRat::zero();
        for (k, b) in table.iter().enumerate() {
            acc += BigRat::from_integer(binomial(j as u64 + 1, k as u64)) * b;
        }
        let next = -acc / BigRat::from_integer(BigInt::from(j + 1));
        table.push(next);
    }
    table[m].clone()
}

/// sum_{t >= a} t^-s for s >= 2, a >= 1 via Euler-Maclaurin.
///
/// x^-s is completely monotone, so the remainder after the last Bernoulli
/// term used is bounded in size by the first omitted term. Returns `None` if
/// the asymptotic terms stop shrinking before the target accuracy.
pub fn power_tail(s: u32, a: u64, digits: u32) -> Option<HighPrec> {
    assert!(s >= 2 && a >= 1);
    let target = BigRat::new(BigInt::one(), BigInt::from(10).pow(digits + 2));
    let a_int = BigInt::from(a);
    let a_rat = BigRat::from_integer(a_int.clone());
    let a_pow_s = BigRat::from_integer(a_int.pow(s));
    // integral + half endpoint
    let mut sum = a_rat.clone() / (a_pow_s.clone() * BigRat::from_integer(BigInt::from(s - 1)))
        + (a_pow_s.clone() * BigRat::from_integer(BigInt::from(2))).recip();
    // rising factorial (s)_(2i-1) and a^(s + 2i - 1)
    let mut rising = BigRat::from_integer(BigInt::from(s));
    let mut a_power = a_pow_s * &a_rat;
    let mut factorial = BigRat::from_integer(BigInt::from(2));
    let mut prev_mag: Option<BigRat> = None;
    let mut i: u64 = 1;
    loop {
        let term = bernoulli(2 * i as usize) / &factorial * &rising / &a_power;
        let mag = term.abs();
        if mag < target {
            return Some(HighPrec::from_rat_with_radius(
                &sum,
                &mag,
                digits + RESULT_GUARD,
            ));
        }
        if prev_mag.as_ref().is_some_and(|p| &mag >= p) {
            return None;
        }
        sum += term;
        prev_mag = Some(mag);
        // advance to i + 1
        let s_i = BigInt::from(s) + BigInt::from(2 * i - 1);
        rising *= BigRat::from_integer(s_i.clone() * (s_i + 1u32));
        a_power = a_power * &a_rat * &a_rat;
        factorial *= BigRat::from_integer(BigInt::from((2 * i + 1) * (2 * i + 2)));
        i += 1;
    }
}

/// Smallest tail start for which `power_tail` reaches `digits`.
pub fn safe_tail_start(digits: u32) -> u64 {
    // the smallest Euler-Maclaurin term is about exp(-2 pi a)
    (digits as u64 * 2) / 5 + 20
}
