//! Generalized harmonic numbers H_j(k) = sum_{l=1..k} l^(-j), cached.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::BigRat;

static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigRat>>>> = OnceLock::new();

/// H_j(0), ..., H_j(k_max).
pub fn harmonic_prefix(order: u32, k_max: usize) -> Vec<BigRat> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("harmonic cache poisoned");
    let table = guard.entry(order).or_insert_with(|| vec![BigRat::zero()]);
    while table.len() <= k_max {
        let l = table.len();
        let term = BigRat::new(BigInt::one(), BigInt::from(l).pow(order));
        let next = table.last().unwrap() + term;
        table.push(next);
    }
    table[..=k_max].to_vec()
}

pub fn harmonic(order: u32, k: usize) -> BigRat {
    harmonic_prefix(order, k).pop().unwrap()
}
