//! D_n = lcm(1, ..., n) via prime powers.

use num_bigint::BigInt;
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorLcm {
    pub n: u64,
    pub value: BigInt,
}

/// Primes up to `n` by a plain sieve of Eratosthenes.
pub fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Largest power of `p` not exceeding `n` (n >= p).
fn max_power(p: u64, n: u64) -> u64 {
    let mut q = p;
    while q <= n / p {
        q *= p;
    }
    q
}

pub fn lcm_upto(n: u64) -> DenominatorLcm {
    let value = primes_upto(n)
        .into_iter()
        .fold(BigInt::one(), |acc, p| acc * BigInt::from(max_power(p, n)));
    DenominatorLcm { n, value }
}

/// D_0, ..., D_n in one pass.
pub fn lcm_table(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    let primes = primes_upto(n);
    for m in 1..=n {
        // D_m = p * D_{m-1} when m is a power of the prime p, else D_{m-1}
        if let Some(&p) = primes.iter().find(|&&p| m % p == 0) {
            let mut r = m;
            while r % p == 0 {
                r /= p;
            }
            if r == 1 {
                acc *= p;
            }
        }
        out.push(acc.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn small_values() {
        assert_eq!(lcm_upto(0).value, BigInt::from(1));
        assert_eq!(lcm_upto(1).value, BigInt::from(1));
        assert_eq!(lcm_upto(6).value, BigInt::from(60));
        assert_eq!(lcm_upto(10).value, BigInt::from(2520));
    }

    #[test]
    fn table_matches_direct_lcm() {
        let table = lcm_table(60);
        let mut acc = BigInt::one();
        for m in 1..=60u64 {
            acc = acc.lcm(&BigInt::from(m));
            assert_eq!(table[m as usize], acc, "m = {m}");
            assert_eq!(lcm_upto(m).value, acc);
        }
    }
}
