use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::rational::BigRat;
use crate::exact::Poly;

#[derive(Debug, Error)]
pub enum Error {
    #[error("evaluation at a pole t = {at}")]
    Pole { at: BigRat },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error(
        "nonzero polynomial part: numerator degree {num_degree} >= denominator degree {den_degree}"
    )]
    PolynomialPart {
        num_degree: usize,
        den_degree: usize,
    },

    #[error("denominator does not divide the supplied pole product")]
    PoleMismatch,

    #[error("{what} is only defined for n >= {min}, got n = {n}")]
    OutOfDomain {
        what: &'static str,
        n: u64,
        min: u64,
    },

    #[error("internal consistency failure at n = {n}: {detail}")]
    Consistency { n: u64, detail: String },

    #[error("invariant violated at n = {n}: {detail}")]
    Invariant { n: u64, detail: String },

    #[error("certificate ansatz has no solution at n = {n}")]
    NoSolution { n: u64 },

    #[error("certificate ansatz is underdetermined at n = {n}: rank {rank} < {unknowns}")]
    Rank {
        n: u64,
        rank: usize,
        unknowns: usize,
    },

    #[error("transcribed certificate differs from the fitted one at n = {n}: transcribed {transcribed}, fitted {fitted}")]
    Transcription {
        n: u64,
        transcribed: Poly,
        fitted: Poly,
    },

    #[error("interval too wide: {0}")]
    Precision(String),

    #[error("sequence too short: need at least 3 terms, got {0}")]
    ShortSequence(usize),

    #[error("{0} is not an integer")]
    NotInteger(BigInt),
}

pub type Result<T> = std::result::Result<T, Error>;
