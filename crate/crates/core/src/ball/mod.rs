//! Ball's well-poised function
//!
//! R~_n(t) = n!^2 (2t+n) (t-1)...(t-n) (t+n+1)...(t+2n) / (t(t+1)...(t+n))^4,
//!
//! its order-4 partial fractions, the resulting linear form, its telescoping
//! certificate and the growth bound 0 < F~_n < 20 (n+1)^4 (sqrt 2 - 1)^(4n).

mod bound;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::analytic::{eval_form, HighPrec};
use crate::apery::{
    apery_uv, ball_prefactor_denominator, fit_certificate, telescoping_holds, Certificate,
    CertificateShape, FormKind, Integrality, LinearForm,
};
use crate::error::{Error, Result};
use crate::exact::harmonic::harmonic_prefix;
use crate::exact::rational::{factorial, from_int, rat, BigRat};
use crate::exact::{pf_decompose, PoleMap, Poly, RatFunc, Sqrt2Surd};
use crate::memo::Memo;

pub use bound::{bound_analysis, ln_sqrt2_minus_1, BoundAnalysis};

/// R~_n(t).
pub fn build_ball_r(n: u64) -> RatFunc {
    let ni = n as i64;
    let mut shifts: Vec<BigRat> = (1..=ni).map(|j| rat(-j)).collect();
    shifts.extend((ni + 1..=2 * ni).map(rat));
    let f = factorial(n);
    // (2t + n) = 2 (t + n/2)
    let lin = Poly::linear(BigRat::new(ni.into(), 2.into())).scale(&rat(2));
    let num = (&Poly::product_of_linears(&shifts) * &lin).scale(&from_int(&f * &f));
    let poles: PoleMap = (0..=ni).map(|k| (rat(-k), 4)).collect();
    RatFunc::with_poles(num, poles)
}

/// b[(k, j)] is the coefficient of 1/(t+k)^j in R~_n, k = 0..n, j = 1..4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallCoefficients {
    pub n: u64,
    pub b: BTreeMap<(usize, u32), BigRat>,
}

impl BallCoefficients {
    pub fn get(&self, k: usize, j: u32) -> BigRat {
        self.b.get(&(k, j)).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn column(&self, j: u32) -> Vec<BigRat> {
        (0..=self.n as usize).map(|k| self.get(k, j)).collect()
    }

    pub fn column_sum(&self, j: u32) -> BigRat {
        self.column(j).into_iter().sum()
    }

    /// The sums of the order-1, order-2 and order-4 columns.
    pub fn vanishing_sums(&self) -> [(u32, BigRat); 3] {
        [1, 2, 4].map(|j| (j, self.column_sum(j)))
    }
}

pub fn ball_coeffs(n: u64) -> Result<BallCoefficients> {
    static CACHE: Memo<u64, BallCoefficients> = Memo::new();
    CACHE.get_or_try(n, || ball_coeffs_uncached(n))
}

fn ball_coeffs_uncached(n: u64) -> Result<BallCoefficients> {
    let poles: Vec<(usize, u32)> = (0..=n as usize).map(|k| (k, 4)).collect();
    let pf = pf_decompose(&build_ball_r(n), &poles)?;
    let coeffs = BallCoefficients {
        n,
        b: pf.terms().clone(),
    };
    for (j, s) in coeffs.vanishing_sums() {
        if !s.is_zero() {
            return Err(Error::Invariant {
                n,
                detail: format!("sum of order-{j} coefficients is {s}, expected 0"),
            });
        }
    }
    Ok(coeffs)
}

/// u~ = sum_k b[k,3]; v~ = sum_{k,j} b[k,j] H_j(k).
pub fn ball_uv_from(coeffs: &BallCoefficients) -> LinearForm {
    let n = coeffs.n as usize;
    let mut v = BigRat::zero();
    for j in 1..=4u32 {
        let h = harmonic_prefix(j, n);
        for (k, hk) in h.iter().enumerate() {
            v += coeffs.get(k, j) * hk;
        }
    }
    LinearForm {
        n: coeffs.n,
        u: coeffs.column_sum(3),
        v,
        kind: FormKind::Ball,
    }
}

/// Ball's form together with its integrality findings and the comparison
/// with Apéry's form at the same n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallForm {
    pub form: LinearForm,
    /// D_n u~ and D_n^4 v~
    pub integrality: Integrality,
    /// u~ and D_n^3 v~ (the sharper inclusions)
    pub sharp_integrality: Integrality,
    pub equals_apery: bool,
}

pub fn ball_uv(n: u64) -> Result<BallForm> {
    let form = ball_uv_from(&ball_coeffs(n)?);
    let apery = apery_uv(n)?;
    Ok(BallForm {
        integrality: form.integrality(),
        sharp_integrality: form.integrality_with(0, 3),
        equals_apery: form.u == apery.u && form.v == apery.v,
        form,
    })
}

pub fn ball_forms(n_max: u64) -> Result<Vec<BallForm>> {
    (0..=n_max).into_par_iter().map(ball_uv).collect()
}

/// Degree-6 numerator of the certificate prefactor, written out as
/// published.
pub fn ball_certificate_numerator(n: u64) -> Poly {
    let n = rat(n as i64);
    let p = |cs: &[i64]| -> BigRat {
        // cs[i] is the coefficient of n^i
        cs.iter()
            .rev()
            .fold(BigRat::zero(), |acc, &c| acc * &n + rat(c))
    };
    Poly::from_coeffs(vec![
        &n * p(&[-4, -22, -30, 50, 183, 153]),
        p(&[-2, -17, -29, 97, 396, 384]),
        p(&[-3, -7, 76, 339, 358]),
        &n * p(&[30, 142, 134]),
        p(&[5, 27, 4]),
        p(&[1, -8]),
        rat(-1),
    ])
}

/// The published certificate, not yet cross-checked.
pub fn transcribed_ball_certificate(n: u64) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "Ball certificate",
            n,
            min: 1,
        });
    }
    let (lead, roots) = ball_prefactor_denominator(n);
    Ok(Certificate::new(
        n,
        FormKind::Ball,
        ball_certificate_numerator(n),
        lead,
        roots,
    ))
}

/// The published certificate next to the one recovered by an independent
/// linear solve for the same ansatz.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateComparison {
    pub transcribed: Certificate,
    pub fitted: Certificate,
}

impl CertificateComparison {
    pub fn matches(&self) -> bool {
        self.transcribed.same_prefactor(&self.fitted)
    }

    /// A transcription error carrying both numerators, if they differ.
    pub fn mismatch(&self) -> Option<Error> {
        (!self.matches()).then(|| Error::Transcription {
            n: self.transcribed.n,
            transcribed: self.transcribed.prefactor_num.clone(),
            fitted: self.fitted.prefactor_num.clone(),
        })
    }
}

pub fn compare_ball_certificate(n: u64) -> Result<CertificateComparison> {
    Ok(CertificateComparison {
        transcribed: transcribed_ball_certificate(n)?,
        fitted: fit_certificate(n, CertificateShape::BallDeg6)?,
    })
}

/// The certificate for R~_n. The fitted one is authoritative; it coincides
/// with the published one wherever the comparison has been run.
pub fn ball_certificate(n: u64) -> Result<Certificate> {
    Ok(compare_ball_certificate(n)?.fitted)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallTelescoping {
    pub n: u64,
    pub identity_ok: bool,
    pub s_at_1_is_zero: bool,
}

impl BallTelescoping {
    pub fn all_ok(&self) -> bool {
        self.identity_ok && self.s_at_1_is_zero
    }
}

/// Checks the telescoping identity with the published certificate.
pub fn verify_ball_telescoping(n: u64) -> Result<BallTelescoping> {
    let cert = transcribed_ball_certificate(n)?.apply();
    Ok(BallTelescoping {
        n,
        identity_ok: telescoping_holds(build_ball_r, &cert, n),
        s_at_1_is_zero: cert.eval(&BigRat::one())?.is_zero(),
    })
}

/// Result of checking 0 < F~_n < 20 (n+1)^4 (17 - 12 sqrt 2)^n.
#[derive(Clone, Debug)]
pub struct BallBound {
    pub n: u64,
    pub value: HighPrec,
    pub bound_value: HighPrec,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// 20 (n+1)^4 (17 - 12 sqrt 2)^n at `digits`.
pub fn growth_bound(n: u64, digits: u32) -> HighPrec {
    let w = digits + 10;
    let sqrt2 = HighPrec::from_int(2, w).sqrt().expect("2 > 0");
    let rate = HighPrec::from_int(17, w).sub(&sqrt2.mul_int(&12.into()));
    let prefactor = rat(20) * rat((n + 1) as i64).pow(4);
    rate.pow(n as u32).mul_rat(&prefactor).with_digits(digits)
}

/// (sqrt 2 - 1)^4 as the exact surd 17 - 12 sqrt 2.
pub fn decay_rate() -> Sqrt2Surd {
    (&Sqrt2Surd::sqrt2() - &Sqrt2Surd::one()).pow(4)
}

pub fn ball_bound(n: u64, digits: u32) -> Result<BallBound> {
    let value = eval_form(FormKind::Ball, n, digits)?.via_series;
    let bound_value = growth_bound(n, digits);
    let lower_ok = value.is_certainly_positive();
    let upper_ok = value.certainly_lt(&bound_value);
    if !(lower_ok && upper_ok) {
        return Err(Error::Invariant {
            n,
            detail: format!("F~_n = {value} outside (0, {bound_value})"),
        });
    }
    Ok(BallBound {
        n,
        value,
        bound_value,
        lower_ok,
        upper_ok,
    })
}
