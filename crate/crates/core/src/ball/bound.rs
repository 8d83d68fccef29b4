//! Supporting constants of the growth bound: the maximiser tau0 of
//!
//! f(tau) = log( tau^(5 tau) (tau+2)^(tau+2) / ((tau-1)^(tau-1) (tau+1)^(5(tau+1))) ),
//!
//! the value f(tau0) = 4 log(sqrt 2 - 1), and the e^2 majorant that turns the
//! pointwise estimate into the constant 20.

use num_traits::{One, Zero};

use crate::analytic::elementary::{exp_rat, ln};
use crate::analytic::zeta::power_tail;
use crate::analytic::{zeta3, HighPrec};
use crate::error::{Error, Result};
use crate::exact::rational::{rat, ratio, BigRat};
use crate::exact::{Poly, Sqrt2Surd};

use super::decay_rate;

#[derive(Clone, Debug)]
pub struct BoundAnalysis {
    pub digits: u32,
    /// -1/2 + sqrt(5/4 + sqrt 2)
    pub tau0: HighPrec,
    /// Final bisection bracket on the sign of f'.
    pub tau0_bracket: (BigRat, BigRat),
    pub f_prime_at_tau0: HighPrec,
    /// f(tau0) from the definition.
    pub sup_f: HighPrec,
    /// 2 log(tau0+2) + log(tau0-1) - 5 log(tau0+1)
    pub sup_f_reduced: HighPrec,
    pub four_log_sqrt2_minus_1: HighPrec,
    /// (sqrt 2 - 1)^4 as an exact surd and as a decimal.
    pub rate: Sqrt2Surd,
    pub rate_decimal: HighPrec,
    /// The constant 20 in the final bound.
    pub prefactor_constant: BigRat,
    pub e_squared: HighPrec,
    /// e^2 (2 zeta(5) + 5 n zeta(4) + 2 n^2 zeta(3)) < 20 (n+1)^2 termwise.
    pub majorant_ok: bool,
    /// tau^5 (tau+2) - (tau-1)(tau+1)^5 = -(tau+1/2)(2(tau+1/2)^4 - 5(tau+1/2)^2 - 7/8)
    pub factorization_ok: bool,
}

impl BoundAnalysis {
    /// tau0 from the closed form lies in the bisection bracket.
    pub fn tau0_agrees(&self) -> bool {
        let (lo, hi) = &self.tau0_bracket;
        self.tau0.lo() <= *hi && *lo <= self.tau0.hi()
    }

    pub fn f_prime_vanishes_within(&self, digits: u32) -> bool {
        self.f_prime_at_tau0.abs_upper() < ratio(1, 10).pow(digits as i32)
    }

    pub fn sup_matches_within(&self, digits: u32) -> bool {
        let tol = ratio(1, 10).pow(digits as i32);
        self.sup_f.sub(&self.four_log_sqrt2_minus_1).abs_upper() < tol
            && self
                .sup_f_reduced
                .sub(&self.four_log_sqrt2_minus_1)
                .abs_upper()
                < tol
    }
}

/// tau^5 (tau+2) - (tau-1)(tau+1)^5, whose sign is the sign of f'(tau) on tau > 1.
fn derivative_sign_poly() -> Poly {
    let t = Poly::t();
    let lhs = &t.pow(5) * &Poly::linear(rat(2));
    let rhs = &Poly::linear(rat(-1)) * &Poly::linear(rat(1)).pow(5);
    &lhs - &rhs
}

fn factorization_identity_holds() -> bool {
    let s = Poly::linear(ratio(1, 2));
    let s2 = &s * &s;
    let inner = &(&(&s2 * &s2).scale(&rat(2)) - &s2.scale(&rat(5))) - &Poly::constant(ratio(7, 8));
    let rhs = (&s * &inner).scale(&rat(-1));
    derivative_sign_poly() == rhs
}

/// Bisection on the exact sign of f' over [1 + 10^-6, 10].
fn bisect_tau0(digits: u32) -> Result<(BigRat, BigRat)> {
    let g = derivative_sign_poly();
    let mut lo = BigRat::one() + ratio(1, 1_000_000);
    let mut hi = rat(10);
    let positive = |x: &BigRat| g.eval(x) > BigRat::zero();
    if !positive(&lo) || positive(&hi) || g.eval(&hi).is_zero() {
        return Err(Error::Precision(
            "f' has no sign change on the bracket".into(),
        ));
    }
    let width = ratio(1, 10).pow(digits as i32 + 2);
    let mut steps = 0;
    while &hi - &lo > width {
        let mid = (&lo + &hi) / rat(2);
        if positive(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
        steps += 1;
        if steps > 20 * (digits as usize + 10) {
            return Err(Error::Precision("bisection did not converge".into()));
        }
    }
    Ok((lo, hi))
}

fn xlogx(x: &HighPrec) -> Result<HighPrec> {
    let l = ln(x).ok_or_else(|| Error::Precision("log of a non-positive interval".into()))?;
    Ok(x.mul(&l))
}

fn log(x: &HighPrec) -> Result<HighPrec> {
    ln(x).ok_or_else(|| Error::Precision("log of a non-positive interval".into()))
}

/// f(tau) from its definition.
pub fn f_tau(tau: &HighPrec) -> Result<HighPrec> {
    let d = tau.digits();
    let one = HighPrec::from_int(1, d);
    let two = HighPrec::from_int(2, d);
    let a = xlogx(tau)?.mul_int(&5.into());
    let b = xlogx(&tau.add(&two))?;
    let c = xlogx(&tau.sub(&one))?;
    let e = xlogx(&tau.add(&one))?.mul_int(&5.into());
    Ok(a.add(&b).sub(&c).sub(&e))
}

/// f'(tau) = log(tau^5 (tau+2) / ((tau-1)(tau+1)^5)).
pub fn f_prime(tau: &HighPrec) -> Result<HighPrec> {
    let d = tau.digits();
    let one = HighPrec::from_int(1, d);
    let two = HighPrec::from_int(2, d);
    Ok(log(tau)?
        .mul_int(&5.into())
        .add(&log(&tau.add(&two))?)
        .sub(&log(&tau.sub(&one))?)
        .sub(&log(&tau.add(&one))?.mul_int(&5.into())))
}

/// log(sqrt 2 - 1) at `digits`.
pub fn ln_sqrt2_minus_1(digits: u32) -> HighPrec {
    let sqrt2 = HighPrec::from_int(2, digits).sqrt().expect("2 > 0");
    ln(&sqrt2.sub(&HighPrec::from_int(1, digits))).expect("sqrt 2 - 1 > 0")
}

fn zeta_value(s: u32, digits: u32) -> HighPrec {
    if s == 3 {
        return zeta3(digits);
    }
    let start = 40;
    let head: BigRat = (1..start)
        .map(|t: i64| BigRat::new(1.into(), num_bigint::BigInt::from(t).pow(s)))
        .sum();
    power_tail(s, start as u64, digits)
        .expect("tail start large enough for modest precision")
        .add(&HighPrec::from_rat(&head, digits + 3))
}

pub fn bound_analysis(digits: u32) -> Result<BoundAnalysis> {
    if digits < 20 {
        return Err(Error::Precision(format!(
            "bound analysis needs >= 20 digits, got {digits}"
        )));
    }
    let w = digits + 15;
    let sqrt2 = HighPrec::from_int(2, w).sqrt().expect("2 > 0");
    let inner = HighPrec::from_rat(&ratio(5, 4), w).add(&sqrt2);
    let tau0 = inner
        .sqrt()
        .expect("positive")
        .sub(&HighPrec::from_rat(&ratio(1, 2), w));
    let tau0_bracket = bisect_tau0(digits)?;
    let f_prime_at_tau0 = f_prime(&tau0)?;
    let sup_f = f_tau(&tau0)?;
    let two = HighPrec::from_int(2, w);
    let one = HighPrec::from_int(1, w);
    let sup_f_reduced = log(&tau0.add(&two))?
        .mul_int(&2.into())
        .add(&log(&tau0.sub(&one))?)
        .sub(&log(&tau0.add(&one))?.mul_int(&5.into()));
    let four_log = ln_sqrt2_minus_1(w).mul_int(&4.into());
    let rate = decay_rate();
    let rate_decimal = HighPrec::from_int(17, w).sub(&sqrt2.mul_int(&12.into()));

    let e_squared = exp_rat(&rat(2), w);
    let z3 = zeta_value(3, 30);
    let z4 = zeta_value(4, 30);
    let z5 = zeta_value(5, 30);
    let e2 = e_squared.with_digits(30);
    // compare coefficients of 1, n, n^2 against 20, 40, 20
    let majorant_ok = e2
        .mul(&z5)
        .mul_int(&2.into())
        .certainly_lt(&HighPrec::from_int(20, 30))
        && e2
            .mul(&z4)
            .mul_int(&5.into())
            .certainly_lt(&HighPrec::from_int(40, 30))
        && e2
            .mul(&z3)
            .mul_int(&2.into())
            .certainly_lt(&HighPrec::from_int(20, 30));

    Ok(BoundAnalysis {
        digits,
        tau0,
        tau0_bracket,
        f_prime_at_tau0,
        sup_f,
        sup_f_reduced,
        four_log_sqrt2_minus_1: four_log,
        rate,
        rate_decimal,
        prefactor_constant: rat(20),
        e_squared,
        majorant_ok,
        factorization_ok: factorization_identity_holds(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_is_exact() {
        assert!(factorization_identity_holds());
    }

    #[test]
    fn analysis_at_30_digits() {
        let a = bound_analysis(30).unwrap();
        assert!(a.tau0.truncated_string().starts_with("1.1322418823"));
        assert!(a.tau0_agrees());
        assert!(a.f_prime_vanishes_within(30));
        assert!(a.sup_matches_within(30));
        assert!(a.sup_f.truncated_string().starts_with("-3.525494"));
        assert!(a.rate_decimal.truncated_string().starts_with("0.0294372"));
        assert!(a.majorant_ok);
        assert!(a.factorization_ok);
    }

    #[test]
    fn rejects_low_precision() {
        assert!(bound_analysis(10).is_err());
    }
}
