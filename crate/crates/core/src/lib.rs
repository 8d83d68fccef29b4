//! Exact and high-precision machinery for the Apéry and Ball linear forms
//! in 1 and zeta(3).
//!
//! - [`exact`]: rationals, polynomials, rational functions, partial
//!   fractions, lcm(1..n).
//! - [`apery`]: R_n, its coefficients A_{jk}, the forms (u_n, v_n), the
//!   certificate s_n and the three-term recurrence.
//! - [`ball`]: the well-poised function R~_n, its coefficients, its
//!   certificate and the growth bound.
//! - [`analytic`]: certified decimal evaluation, the coincidence check and
//!   the irrationality gate.

pub mod analytic;
pub mod apery;
pub mod ball;
pub mod error;
pub mod exact;
mod memo;

pub use error::{Error, Result};
