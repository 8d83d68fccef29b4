//! Exact arithmetic: rationals, polynomials, rational functions, partial
//! fractions, lcm(1..n) and a small linear solver.

pub mod harmonic;
pub mod lcm;
pub mod linalg;
pub mod partial_fraction;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod surd;

pub use lcm::{lcm_table, lcm_upto, DenominatorLcm};
pub use partial_fraction::{pf_decompose, pf_decompose_checked, PartialFraction};
pub use poly::Poly;
pub use ratfunc::{
    cleared_combination, combination_is_zero, numerator_over, pole_lcm, PoleMap, RatFunc,
};
pub use rational::BigRat;
pub use surd::Sqrt2Surd;
