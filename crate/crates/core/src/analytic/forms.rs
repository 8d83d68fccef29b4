//! Two independent evaluations of F_n = -sum_{t>=1} R_n'(t) and
//! F~_n = sum_{t>=1} R~_n(t):
//!
//! - from the exact linear form, u zeta(3) - v;
//! - from the defining series: an exact head over t = 1..T plus the tail
//!   sum_{t>T} of each partial-fraction term c / (t+k)^j.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::highprec::HighPrec;
use super::zeta::{power_tail, safe_tail_start, zeta3, RESULT_GUARD};
use crate::apery::{apery_coeffs, apery_uv, build_r, recurrence_check, FormKind, LinearForm};
use crate::ball::{ball_coeffs, ball_uv, ball_uv_from, build_ball_r};
use crate::error::{Error, Result};
use crate::exact::harmonic::harmonic_prefix;
use crate::exact::rational::{decimal_len, rat, ratio, BigRat};

/// u zeta(3) - v with radius below 10^-digits.
pub fn eval_linear_form(form: &LinearForm, digits: u32) -> HighPrec {
    let len = decimal_len(&form.u.numer().abs()).max(decimal_len(&form.v.numer().abs()));
    let z = digits + len + 10;
    let w = z + RESULT_GUARD;
    zeta3(z)
        .mul_rat(&form.u)
        .sub(&HighPrec::from_rat(&form.v, w))
        .with_digits(digits + RESULT_GUARD)
}

/// Coefficients c of c/(t+k)^j in the summand, keyed by (j, k), for
/// j >= 2; and the order-1 coefficients by k.
type SeriesTerms = (BTreeMap<(u32, u64), BigRat>, Vec<BigRat>);

fn series_terms(kind: FormKind, n: u64) -> Result<SeriesTerms> {
    let mut terms = BTreeMap::new();
    match kind {
        FormKind::Apery => {
            // -R'(t) = sum_k 2 a2[k]/(t+k)^3 + a1[k]/(t+k)^2
            let c = apery_coeffs(n)?;
            for k in 0..=n as usize {
                terms.insert((3, k as u64), &c.a2[k] * rat(2));
                terms.insert((2, k as u64), c.a1[k].clone());
            }
            Ok((terms, Vec::new()))
        }
        FormKind::Ball => {
            let c = ball_coeffs(n)?;
            for k in 0..=n as usize {
                for j in 2..=4 {
                    terms.insert((j, k as u64), c.get(k, j));
                }
            }
            Ok((terms, c.column(1)))
        }
    }
}

/// The defining series with a certified tail.
///
/// The head t = 1..T is summed term by term. For j >= 2 the tail
/// sum_{t>T} 1/(t+k)^j is one Euler-Maclaurin tail from T+1+n plus the exact
/// terms between T+1+k and T+n. The order-1 coefficients sum to zero, so
/// their tail is -sum_k b[k,1] H_{T+k} exactly.
pub fn eval_series(kind: FormKind, n: u64, digits: u32) -> Result<HighPrec> {
    let (terms, order1) = series_terms(kind, n)?;
    let total: BigRat = terms.values().chain(&order1).map(|c| c.abs()).sum();
    let extra = decimal_len(&total.ceil().to_integer()) + 1;
    let w = digits + extra + 10;
    let wg = w + RESULT_GUARD;
    let head_end = safe_tail_start(w);

    let summand = match kind {
        FormKind::Apery => build_r(n).derivative().neg(),
        FormKind::Ball => build_ball_r(n),
    };
    let mut sum = HighPrec::zero(wg);
    for t in 1..=head_end as i64 {
        sum = sum.add(&HighPrec::from_rat(&summand.eval(&rat(t))?, wg));
    }

    if !order1.is_empty() {
        let h = harmonic_prefix(1, (head_end + n) as usize);
        let tail1: BigRat = order1
            .iter()
            .enumerate()
            .map(|(k, c)| c * &h[head_end as usize + k])
            .sum();
        sum = sum.sub(&HighPrec::from_rat(&tail1, wg));
    }

    let orders: Vec<u32> = terms
        .keys()
        .map(|&(j, _)| j)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    for j in orders {
        let far = head_end + 1 + n;
        let mut tail = power_tail(j, far, w)
            .ok_or_else(|| Error::Precision(format!("tail of order {j} from {far}")))?
            .with_digits(wg);
        for k in (0..=n).rev() {
            if k < n {
                let a = BigInt::from(head_end + 1 + k);
                tail = tail.add(&HighPrec::from_rat(
                    &BigRat::new(BigInt::one(), a.pow(j)),
                    wg,
                ));
            }
            if let Some(c) = terms.get(&(j, k)).filter(|c| !c.is_zero()) {
                sum = sum.add(&tail.mul_rat(c));
            }
        }
    }
    Ok(sum.with_digits(digits + RESULT_GUARD))
}

#[derive(Clone, Debug)]
pub struct FormEvaluation {
    pub kind: FormKind,
    pub n: u64,
    pub digits: u32,
    pub form: LinearForm,
    pub via_linear_form: HighPrec,
    pub via_series: HighPrec,
}

impl FormEvaluation {
    /// The midpoint difference of the two paths.
    pub fn discrepancy(&self) -> HighPrec {
        self.via_linear_form.sub(&self.via_series)
    }
}

/// F_n or F~_n by both paths; a consistency error if their intervals are
/// disjoint.
pub fn eval_form(kind: FormKind, n: u64, digits: u32) -> Result<FormEvaluation> {
    let form = match kind {
        FormKind::Apery => apery_uv(n)?,
        FormKind::Ball => ball_uv_from(&ball_coeffs(n)?),
    };
    let via_linear_form = eval_linear_form(&form, digits);
    let via_series = eval_series(kind, n, digits)?;
    if !via_linear_form.overlaps(&via_series) {
        return Err(Error::Consistency {
            n,
            detail: format!(
                "{} form: u zeta(3) - v = {via_linear_form} but the series gives {via_series}",
                kind.name()
            ),
        });
    }
    Ok(FormEvaluation {
        kind,
        n,
        digits,
        form,
        via_linear_form,
        via_series,
    })
}

/// Per-n comparison of the two constructions.
#[derive(Clone, Debug)]
pub struct CoincidenceVerdict {
    pub n: u64,
    /// (u_n, v_n) = (u~_n, v~_n) as rationals
    pub exact_equal: bool,
    /// F_n - F~_n, both from their defining series
    pub difference: HighPrec,
    pub numeric_agree: bool,
    /// n <= 1: the two forms start from the same values
    pub seed_ok: Option<bool>,
    /// n >= 1: u~ and v~ satisfy the three-term recurrence at n
    pub recurrence_ok: Option<bool>,
}

impl CoincidenceVerdict {
    pub fn all_ok(&self) -> bool {
        self.exact_equal
            && self.numeric_agree
            && self.seed_ok.unwrap_or(true)
            && self.recurrence_ok.unwrap_or(true)
    }

    /// |F_n - F~_n| < 10^-places.
    pub fn difference_below(&self, places: u32) -> bool {
        self.difference.abs_upper() < ratio(1, 10).pow(places as i32)
    }
}

/// Compares the two forms for n = 0..=n_max: exactly, numerically, and by
/// replaying the argument that equal seeds plus a shared recurrence force
/// equality.
pub fn coincidence_check(n_max: u64, digits: u32) -> Result<Vec<CoincidenceVerdict>> {
    let pairs: Vec<(LinearForm, LinearForm)> = (0..=n_max + 1)
        .into_par_iter()
        .map(|n| Ok((apery_uv(n)?, ball_uv(n)?.form)))
        .collect::<Result<_>>()?;
    let ball_u: Vec<BigRat> = pairs.iter().map(|(_, b)| b.u.clone()).collect();
    let ball_v: Vec<BigRat> = pairs.iter().map(|(_, b)| b.v.clone()).collect();
    let u_windows = recurrence_check(&ball_u, 0).unwrap_or_default();
    let v_windows = recurrence_check(&ball_v, 0).unwrap_or_default();

    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let (a, b) = &pairs[n as usize];
            let fa = eval_series(FormKind::Apery, n, digits)?;
            let fb = eval_series(FormKind::Ball, n, digits)?;
            let difference = fa.sub(&fb);
            let exact_equal = a.u == b.u && a.v == b.v;
            let recurrence_ok = (n >= 1).then(|| {
                let i = n as usize - 1;
                u_windows[i].ok && v_windows[i].ok
            });
            Ok(CoincidenceVerdict {
                n,
                exact_equal,
                numeric_agree: difference.contains_zero(),
                difference,
                seed_ok: (n <= 1).then_some(exact_equal),
                recurrence_ok,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let f0 = eval_form(FormKind::Apery, 0, 15).unwrap();
        assert_eq!(f0.via_linear_form.truncated_to(12), "2.404113806319");
        assert!(f0.via_series.truncated_to(11).starts_with("2.40411380631"));
        let f1 = eval_form(FormKind::Apery, 1, 15).unwrap();
        assert_eq!(f1.via_linear_form.truncated_to(12), "0.020569031595");
        let b1 = eval_form(FormKind::Ball, 1, 15).unwrap();
        assert!(b1.via_series.overlaps(&f1.via_series));
    }

    #[test]
    fn paths_agree() {
        for n in [0, 2, 5, 9] {
            for kind in [FormKind::Apery, FormKind::Ball] {
                let e = eval_form(kind, n, 40).unwrap();
                assert!(e.via_series.radius() < ratio(1, 10).pow(40));
                assert!(e.via_linear_form.is_certainly_positive());
            }
        }
    }

    #[test]
    fn coincidence_small() {
        let v = coincidence_check(4, 30).unwrap();
        assert_eq!(v.len(), 5);
        assert!(v.iter().all(|c| c.all_ok() && c.difference_below(28)));
    }
}
