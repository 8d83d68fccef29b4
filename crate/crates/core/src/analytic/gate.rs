//! The irrationality gate: if zeta(3) = p/q then q D_n^3 F_n is a positive
//! integer, yet
//!
//! 0 < q D_n^3 F_n < 20 q (n+1)^4 3^(3n) (sqrt 2 - 1)^(4n),
//!
//! and the right-hand side tends to 0 because 27 (17 - 12 sqrt 2) < 1.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::forms::eval_linear_form;
use super::highprec::HighPrec;
use crate::apery::{apery_uv, LinearForm};
use crate::ball::decay_rate;
use crate::error::{Error, Result};
use crate::exact::rational::{decimal_len, from_int, rat};
use crate::exact::{lcm_upto, Sqrt2Surd};

/// Upper end of the scan for the first n with bound15 < 1.
pub const BOUND_SCAN_LIMIT: u64 = 20_000;

#[derive(Clone, Debug)]
pub struct GateReport {
    pub n: u64,
    pub q: u64,
    pub d_n: BigInt,
    pub f_n: HighPrec,
    /// q D_n^3 F_n
    pub gate_value: HighPrec,
    /// 20 q (n+1)^4 27^n (17 - 12 sqrt 2)^n
    pub bound15: HighPrec,
    pub positive: bool,
    pub below_bound: bool,
    pub below_one: bool,
    /// D_n < 3^n
    pub d_n_below_3n: bool,
}

impl GateReport {
    pub fn chain_holds(&self) -> bool {
        self.positive && self.below_bound && self.d_n_below_3n
    }
}

#[derive(Clone, Debug)]
pub struct GateScan {
    pub q: u64,
    /// 27 (17 - 12 sqrt 2), exact
    pub constant: Sqrt2Surd,
    pub constant_decimal: HighPrec,
    /// exactly below 1 and rendered as 0.7948...
    pub constant_ok: bool,
    pub reports: Vec<GateReport>,
    /// first n with bound15 < 1, scanning up to `BOUND_SCAN_LIMIT`
    pub first_bound_below_one: Option<u64>,
    /// first reported n with q D_n^3 F_n < 1
    pub first_value_below_one: Option<u64>,
    /// bound15 decreases at every step from this n on
    pub bound_decreasing_from: u64,
    /// reported n where q D_n^3 F_n exceeds its predecessor
    pub value_increases: Vec<u64>,
    /// (n, F_{n+1} / F_n)
    pub ratios: Vec<(u64, HighPrec)>,
    /// (sqrt 2 - 1)^4
    pub rate: HighPrec,
}

impl GateScan {
    pub fn all_chains_hold(&self) -> bool {
        self.reports.iter().all(GateReport::chain_holds)
    }

    /// |F_{n+1}/F_n - rate| / rate at the given n, if reported.
    pub fn ratio_deviation(&self, n: u64) -> Option<f64> {
        let (_, r) = self.ratios.iter().find(|(m, _)| *m == n)?;
        let rate = self.rate.to_f64();
        Some(((r.to_f64() - rate) / rate).abs())
    }

    /// Monotone increase of the ratios toward the rate across the report.
    pub fn ratios_increasing(&self) -> bool {
        self.ratios.windows(2).all(|w| w[0].1.certainly_lt(&w[1].1))
    }
}

/// 27 (17 - 12 sqrt 2) at `digits`.
pub fn gate_constant(digits: u32) -> HighPrec {
    let w = digits + 10;
    let sqrt2 = HighPrec::from_int(2, w).sqrt().expect("2 > 0");
    HighPrec::from_int(17, w)
        .sub(&sqrt2.mul_int(&12.into()))
        .mul_int(&27.into())
        .with_digits(digits)
}

/// 20 q (n+1)^4 (27 (17 - 12 sqrt 2))^n at `digits` places.
pub fn bound15(n: u64, q: u64, digits: u32) -> HighPrec {
    // the power loses about n/10 places
    let w = digits + (n / 5) as u32 + 10;
    let prefactor = rat(20) * rat(q as i64) * rat((n + 1) as i64).pow(4);
    gate_constant(w)
        .pow(n as u32)
        .mul_rat(&prefactor)
        .with_digits(digits)
}

fn places_for(n: u64, d_n: &BigInt) -> u32 {
    // F_n is about 10^(-1.53 n); keep 20 significant digits of q D_n^3 F_n
    (n * 31 / 20) as u32 + 3 * decimal_len(d_n) + 20
}

fn report(n: u64, q: u64, form: &LinearForm) -> GateReport {
    let d_n = lcm_upto(n).value;
    let digits = places_for(n, &d_n);
    let f_n = eval_linear_form(form, digits);
    let scale = from_int(d_n.pow(3) * BigInt::from(q));
    let gate_value = f_n.mul_rat(&scale);
    let bound = bound15(n, q, digits);
    let one = HighPrec::from_int(1, digits);
    GateReport {
        n,
        q,
        positive: gate_value.is_certainly_positive(),
        below_bound: gate_value.certainly_lt(&bound),
        below_one: gate_value.certainly_lt(&one),
        d_n_below_3n: d_n < BigInt::from(3).pow(n as u32),
        d_n,
        f_n,
        gate_value,
        bound15: bound,
    }
}

/// Gate reports for 2 <= n <= n_max plus the scans.
pub fn irrationality_gate(n_max: u64, q: u64) -> Result<GateScan> {
    if n_max < 2 {
        return Err(Error::OutOfDomain {
            what: "irrationality gate n_max",
            n: n_max,
            min: 2,
        });
    }
    if q == 0 {
        return Err(Error::OutOfDomain {
            what: "irrationality gate q",
            n: q,
            min: 1,
        });
    }
    let constant = &decay_rate().scale(&rat(27));
    let constant_decimal = gate_constant(30);
    let constant_ok = (&Sqrt2Surd::one() - constant).signum() > 0
        && constant_decimal.truncated_string().starts_with("0.7948");

    let forms: Vec<LinearForm> = (2..=n_max + 1)
        .into_par_iter()
        .map(apery_uv)
        .collect::<Result<_>>()?;
    let reports: Vec<GateReport> = forms[..forms.len() - 1]
        .par_iter()
        .map(|f| report(f.n, q, f))
        .collect();

    // F_{n+1}/F_n, with both values at the precision of the larger index
    let ratios: Vec<(u64, HighPrec)> = forms
        .par_iter()
        .zip(forms.par_iter().skip(1))
        .map(|(a, b)| {
            let digits = places_for(b.n, &BigInt::one()) + 20;
            let fa = eval_linear_form(a, digits);
            let fb = eval_linear_form(b, digits);
            let r = fb
                .div(&fa)
                .ok_or_else(|| Error::Precision(format!("F_{} not separated from 0", a.n)))?;
            Ok((a.n, r))
        })
        .collect::<Result<_>>()?;

    let mut first_bound_below_one = None;
    for n in 2..=BOUND_SCAN_LIMIT {
        if bound15(n, q, 30).certainly_lt(&HighPrec::from_int(1, 30)) {
            first_bound_below_one = Some(n);
            break;
        }
    }

    let first_value_below_one = reports.iter().find(|r| r.below_one).map(|r| r.n);
    let value_increases = reports
        .windows(2)
        .filter(|w| w[0].gate_value.certainly_lt(&w[1].gate_value))
        .map(|w| w[1].n)
        .collect();

    Ok(GateScan {
        q,
        constant: constant.clone(),
        constant_decimal,
        constant_ok,
        reports,
        first_bound_below_one,
        first_value_below_one,
        bound_decreasing_from: bound_decreasing_from(),
        value_increases,
        ratios,
        rate: HighPrec::from_int(17, 40).sub(
            &HighPrec::from_int(2, 40)
                .sqrt()
                .expect("2 > 0")
                .mul_int(&12.into()),
        ),
    })
}

/// Smallest n with bound15(m+1) < bound15(m) for all m >= n, i.e.
/// ((m+2)/(m+1))^4 c < 1 with c = 27 (17 - 12 sqrt 2). The left side falls
/// with m, so the first m satisfying it is the threshold; decided exactly by
/// (m+2)^4 c < (m+1)^4.
pub fn bound_decreasing_from() -> u64 {
    let c = decay_rate().scale(&rat(27));
    let mut m: u64 = 0;
    loop {
        let lhs = c.scale(&rat((m + 2) as i64).pow(4));
        let rhs = Sqrt2Surd::rational(rat((m + 1) as i64).pow(4));
        if (&rhs - &lhs).signum() > 0 {
            return m;
        }
        m += 1;
    }
}
