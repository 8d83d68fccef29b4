//! Apéry's rational function R_n(t) = ((t-1)...(t-n) / (t(t+1)...(t+n)))^2,
//! its partial-fraction coefficients, the linear forms u_n zeta(3) - v_n,
//! the telescoping certificate s_n(t) R_n(t), and the three-term recurrence
//!
//! (n+1)^3 y_{n+1} - (2n+1)(17n^2+17n+5) y_n + n^3 y_{n-1} = 0.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::analytic::HighPrec;
use crate::ball::build_ball_r;
use crate::error::{Error, Result};
use crate::exact::harmonic::harmonic_prefix;
use crate::exact::linalg::{solve, Solution};
use crate::exact::rational::{binomial, from_int, is_integral_after, rat, BigRat};
use crate::exact::{
    combination_is_zero, lcm_upto, numerator_over, pf_decompose, pole_lcm, PoleMap, Poly, RatFunc,
};
use crate::memo::Memo;

/// Which of the two constructions a form or certificate belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKind {
    Apery,
    Ball,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::Apery => "apery",
            FormKind::Ball => "ball",
        }
    }
}

/// R_n(t).
pub fn build_r(n: u64) -> RatFunc {
    let shifts: Vec<BigRat> = (1..=n as i64).map(|j| rat(-j)).collect();
    let half = Poly::product_of_linears(&shifts);
    let poles: PoleMap = (0..=n as i64).map(|k| (rat(-k), 2)).collect();
    RatFunc::with_poles(&half * &half, poles)
}

/// Coefficients of R_n(t) = sum_k a2[k]/(t+k)^2 + a1[k]/(t+k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyCoefficients {
    pub n: u64,
    pub a2: Vec<BigRat>,
    pub a1: Vec<BigRat>,
}

/// c_k = (-1)^(n-k) C(n+k, n) C(n, k), the residues of the unsquared product.
fn simple_residues(n: u64) -> Vec<BigRat> {
    (0..=n)
        .map(|k| {
            let c = binomial(n + k, n) * binomial(n, k);
            from_int(if (n - k) % 2 == 1 { -c } else { c })
        })
        .collect()
}

/// Closed form: a2[k] = c_k^2, a1[k] = 2 c_k sum_{l != k} c_l / (l - k).
pub fn apery_coeffs_closed_form(n: u64) -> AperyCoefficients {
    let c = simple_residues(n);
    let a2 = c.iter().map(|ck| ck * ck).collect();
    let a1 = (0..c.len())
        .map(|k| {
            let inner: BigRat = (0..c.len())
                .filter(|&l| l != k)
                .map(|l| &c[l] / rat(l as i64 - k as i64))
                .sum();
            &c[k] * inner * rat(2)
        })
        .collect();
    AperyCoefficients { n, a2, a1 }
}

/// Coefficients from the closed form, cross-checked against a direct
/// partial-fraction decomposition of R_n.
pub fn apery_coeffs(n: u64) -> Result<AperyCoefficients> {
    static CACHE: Memo<u64, AperyCoefficients> = Memo::new();
    CACHE.get_or_try(n, || apery_coeffs_uncached(n))
}

fn apery_coeffs_uncached(n: u64) -> Result<AperyCoefficients> {
    let closed = apery_coeffs_closed_form(n);
    let poles: Vec<(usize, u32)> = (0..=n as usize).map(|k| (k, 2)).collect();
    let pf = pf_decompose(&build_r(n), &poles)?;
    let max_k = n as usize;
    if pf.order_column(2, max_k) != closed.a2 || pf.order_column(1, max_k) != closed.a1 {
        return Err(Error::Consistency {
            n,
            detail: "closed-form A_jk disagree with the partial-fraction decomposition".into(),
        });
    }
    Ok(closed)
}

impl AperyCoefficients {
    /// Invariants: a2 integral and equal to C(n+k,n)^2 C(n,k)^2,
    /// sum a1 = 0, D_n a1 integral.
    pub fn check(&self) -> Result<()> {
        let d = lcm_upto(self.n).value;
        for (k, a) in self.a2.iter().enumerate() {
            let k = k as u64;
            let b = binomial(self.n + k, self.n) * binomial(self.n, k);
            if *a != from_int(&b * &b) {
                return Err(self.invariant(format!("a2[{k}] = {a}")));
            }
        }
        if !self.a1.iter().sum::<BigRat>().is_zero() {
            return Err(self.invariant("sum of a1 is nonzero".into()));
        }
        if let Some(k) = self.a1.iter().position(|a| !is_integral_after(a, &d)) {
            return Err(self.invariant(format!("D_n * a1[{k}] is not an integer")));
        }
        Ok(())
    }

    fn invariant(&self, detail: String) -> Error {
        Error::Invariant { n: self.n, detail }
    }
}

/// u zeta(3) - v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub n: u64,
    pub u: BigRat,
    pub v: BigRat,
    pub kind: FormKind,
}

/// Outcome of the denominator checks on a linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrality {
    /// D_n^e_u * u is an integer
    pub u_ok: bool,
    /// D_n^e_v * v is an integer
    pub v_ok: bool,
    pub u_exponent: u32,
    pub v_exponent: u32,
}

impl Integrality {
    pub fn holds(&self) -> bool {
        self.u_ok && self.v_ok
    }
}

impl LinearForm {
    /// Checks D_n^eu u and D_n^ev v for integrality.
    pub fn integrality_with(&self, u_exponent: u32, v_exponent: u32) -> Integrality {
        let d = lcm_upto(self.n).value;
        Integrality {
            u_ok: is_integral_after(&self.u, &d.pow(u_exponent)),
            v_ok: is_integral_after(&self.v, &d.pow(v_exponent)),
            u_exponent,
            v_exponent,
        }
    }

    /// The inclusions claimed for this kind: u and D_n^3 v integral for the
    /// Apéry form, D_n u and D_n^4 v for Ball's.
    pub fn integrality(&self) -> Integrality {
        match self.kind {
            FormKind::Apery => self.integrality_with(0, 3),
            FormKind::Ball => self.integrality_with(1, 4),
        }
    }

    /// v / u as an approximation of zeta(3).
    pub fn approximant(&self) -> Option<BigRat> {
        (!self.u.is_zero()).then(|| &self.v / &self.u)
    }
}

/// u_n = 2 sum a2[k], v_n = 2 sum a2[k] H_3(k) + sum a1[k] H_2(k).
pub fn apery_uv_from(coeffs: &AperyCoefficients) -> LinearForm {
    let n = coeffs.n;
    let h3 = harmonic_prefix(3, n as usize);
    let h2 = harmonic_prefix(2, n as usize);
    let u = coeffs.a2.iter().sum::<BigRat>() * rat(2);
    let v2: BigRat = coeffs.a2.iter().zip(&h3).map(|(a, h)| a * h).sum();
    let v1: BigRat = coeffs.a1.iter().zip(&h2).map(|(a, h)| a * h).sum();
    LinearForm {
        n,
        u,
        v: v2 * rat(2) + v1,
        kind: FormKind::Apery,
    }
}

pub fn apery_uv(n: u64) -> Result<LinearForm> {
    let coeffs = apery_coeffs(n)?;
    coeffs.check()?;
    let form = apery_uv_from(&coeffs);
    if !form.integrality().holds() {
        return Err(Error::Invariant {
            n,
            detail: "u_n or D_n^3 v_n is not an integer".into(),
        });
    }
    Ok(form)
}

/// The recurrence coefficients ((n+1)^3, (2n+1)(17n^2+17n+5), n^3).
pub fn recurrence_coefficients(n: u64) -> (BigRat, BigRat, BigRat) {
    let n = BigInt::from(n);
    let up = (&n + 1u32).pow(3);
    let mid = (&n * 2u32 + 1u32) * (&n * &n * 17u32 + &n * 17u32 + 5u32);
    let down = n.pow(3);
    (from_int(up), from_int(mid), from_int(down))
}

/// A telescoping certificate S(t) = prefactor(t) * R(t) where the prefactor
/// is `prefactor_num / prefactor_den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub n: u64,
    pub kind: FormKind,
    pub prefactor_num: Poly,
    pub prefactor_den: Poly,
    /// prefactor_den = den_lead * prod (t - r)^m
    den_lead: BigRat,
    den_roots: PoleMap,
}

impl Certificate {
    pub fn new(
        n: u64,
        kind: FormKind,
        prefactor_num: Poly,
        den_lead: BigRat,
        den_roots: PoleMap,
    ) -> Self {
        let monic = Poly::product_of_linears(
            den_roots
                .iter()
                .flat_map(|(r, &m)| std::iter::repeat_n(-r, m as usize))
                .collect::<Vec<_>>()
                .iter(),
        );
        Certificate {
            n,
            kind,
            prefactor_num,
            prefactor_den: monic.scale(&den_lead),
            den_lead,
            den_roots,
        }
    }

    /// The prefactor as a rational function.
    pub fn prefactor(&self) -> RatFunc {
        RatFunc::with_scaled_poles(
            self.prefactor_num.clone(),
            &self.den_lead,
            self.den_roots.clone(),
        )
    }

    /// S(t) for this certificate's family.
    pub fn apply(&self) -> RatFunc {
        let base = match self.kind {
            FormKind::Apery => build_r(self.n),
            FormKind::Ball => build_ball_r(self.n),
        };
        self.prefactor().mul(&base)
    }

    /// Same rational prefactor, compared by cross-multiplication.
    pub fn same_prefactor(&self, other: &Certificate) -> bool {
        &self.prefactor_num * &other.prefactor_den == &other.prefactor_num * &self.prefactor_den
    }
}

/// s_n(t) = 4(2n+1)(-2t^2 + t + (2n+1)^2).
pub fn certificate_s(n: u64) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "certificate s_n",
            n,
            min: 1,
        });
    }
    let m = 2 * n as i64 + 1;
    let p = Poly::from_i64s(&[m * m, 1, -2]).scale(&rat(4 * m));
    Ok(Certificate::new(
        n,
        FormKind::Apery,
        p,
        BigRat::one(),
        PoleMap::new(),
    ))
}

/// Exact check of
/// (n+1)^3 F_{n+1} - (2n+1)(17n^2+17n+5) F_n + n^3 F_{n-1} = S(t+1) - S(t).
pub fn telescoping_holds(family: impl Fn(u64) -> RatFunc, cert: &RatFunc, n: u64) -> bool {
    let (up, mid, down) = recurrence_coefficients(n);
    let next = family(n + 1);
    let cur = family(n);
    let prev = family(n - 1);
    let shifted = cert.shift1();
    combination_is_zero(&[
        (up, &next),
        (-mid, &cur),
        (down, &prev),
        (-BigRat::one(), &shifted),
        (BigRat::one(), cert),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTelescoping {
    pub n: u64,
    pub identity_ok: bool,
    pub s_prime_at_1_is_zero: bool,
    /// R_n and S_n both vanish to order >= 2 at t = 1.
    pub double_zero_at_1: bool,
}

impl AperyTelescoping {
    pub fn all_ok(&self) -> bool {
        self.identity_ok && self.s_prime_at_1_is_zero && self.double_zero_at_1
    }
}

pub fn verify_apery_telescoping(n: u64) -> Result<AperyTelescoping> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "Apéry telescoping identity",
            n,
            min: 1,
        });
    }
    let cert = certificate_s(n)?.apply();
    let r = build_r(n);
    let one = BigRat::one();
    let s_prime_at_1 = cert.derivative().eval(&one)?;
    let double = r.zero_order_at(&one).is_some_and(|o| o >= 2)
        && cert.zero_order_at(&one).is_some_and(|o| o >= 2);
    Ok(AperyTelescoping {
        n,
        identity_ok: telescoping_holds(build_r, &cert, n),
        s_prime_at_1_is_zero: s_prime_at_1.is_zero(),
        double_zero_at_1: double,
    })
}

/// Recurrence for u_n read off the order-2 coefficients: multiply the
/// telescoping identity by (t+k)^2, set t = -k and sum over all k. The right
/// side contributes nothing because S(t+1) and S(t) carry the same multiset
/// of order-2 coefficients. Returns the left side, which must vanish.
pub fn u_recurrence_from_residues(n: u64) -> Result<BigRat> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "residue recurrence",
            n,
            min: 1,
        });
    }
    let (up, mid, down) = recurrence_coefficients(n);
    let order2_sum = |m: u64| -> Result<BigRat> {
        let poles: Vec<(usize, u32)> = (0..=m as usize).map(|k| (k, 2)).collect();
        let pf = pf_decompose(&build_r(m), &poles)?;
        Ok(pf.order_column(2, m as usize).into_iter().sum())
    };
    // S itself tends to a nonzero constant, so decompose the difference
    let cert = certificate_s(n)?.apply();
    let diff = cert.shift1().sub(&cert);
    let diff_poles: Vec<(usize, u32)> = (0..=n as usize + 1).map(|k| (k, 2)).collect();
    let rhs_sum: BigRat = pf_decompose(&diff, &diff_poles)?
        .order_column(2, n as usize + 1)
        .into_iter()
        .sum();
    Ok(up * order2_sum(n + 1)? - mid * order2_sum(n)? + down * order2_sum(n - 1)? - rhs_sum)
}

/// Ansatz for the certificate prefactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateShape {
    /// degree-2 polynomial times R_n
    AperyDeg2,
    /// degree-6 polynomial over (2t+n)(t+2n-1)(t+2n), times R~_n
    BallDeg6,
}

impl CertificateShape {
    fn kind(self) -> FormKind {
        match self {
            CertificateShape::AperyDeg2 => FormKind::Apery,
            CertificateShape::BallDeg6 => FormKind::Ball,
        }
    }

    fn unknowns(self) -> usize {
        match self {
            CertificateShape::AperyDeg2 => 3,
            CertificateShape::BallDeg6 => 7,
        }
    }

    /// (lead, roots) of the fixed prefactor denominator.
    fn denominator(self, n: u64) -> (BigRat, PoleMap) {
        match self {
            CertificateShape::AperyDeg2 => (BigRat::one(), PoleMap::new()),
            CertificateShape::BallDeg6 => ball_prefactor_denominator(n),
        }
    }
}

/// (2t+n)(t+2n-1)(t+2n) = 2 (t + n/2)(t + 2n - 1)(t + 2n)
pub fn ball_prefactor_denominator(n: u64) -> (BigRat, PoleMap) {
    let n = n as i64;
    let mut roots = PoleMap::new();
    for r in [
        BigRat::new((-n).into(), 2.into()),
        rat(1 - 2 * n),
        rat(-2 * n),
    ] {
        *roots.entry(r).or_insert(0) += 1;
    }
    (rat(2), roots)
}

/// Solve for the prefactor numerator so that the telescoping identity holds
/// exactly, by matching coefficients after clearing denominators.
pub fn fit_certificate(n: u64, shape: CertificateShape) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "certificate fit",
            n,
            min: 1,
        });
    }
    let kind = shape.kind();
    let family = |m: u64| match kind {
        FormKind::Apery => build_r(m),
        FormKind::Ball => build_ball_r(m),
    };
    let (lead, roots) = shape.denominator(n);
    let base = family(n);
    let unknowns = shape.unknowns();
    // basis S_i = t^i * base / den, contribution S_i(t+1) - S_i(t)
    let mut basis: Vec<(RatFunc, RatFunc)> = Vec::with_capacity(unknowns);
    for i in 0..unknowns {
        let s = RatFunc::with_scaled_poles(Poly::monomial(BigRat::one(), i), &lead, roots.clone())
            .mul(&base);
        basis.push((s.shift1(), s));
    }
    let (up, mid, down) = recurrence_coefficients(n);
    let next = family(n + 1);
    let prev = family(n - 1);
    let known = [(up, &next), (-mid, &base), (down, &prev)];
    let mut all_maps: Vec<&PoleMap> = known.iter().map(|(_, f)| f.poles().unwrap()).collect();
    for (a, b) in &basis {
        all_maps.push(a.poles().unwrap());
        all_maps.push(b.poles().unwrap());
    }
    let lcm = pole_lcm(all_maps);
    let rhs = numerator_over(&known, &lcm).expect("factored inputs");
    let columns: Vec<Poly> = basis
        .iter()
        .map(|(a, b)| {
            numerator_over(&[(BigRat::one(), a), (-BigRat::one(), b)], &lcm)
                .expect("factored inputs")
        })
        .collect();
    let height = columns
        .iter()
        .chain(std::iter::once(&rhs))
        .filter_map(|p| p.degree())
        .max()
        .map_or(0, |d| d + 1);
    let rows: Vec<Vec<BigRat>> = (0..height)
        .map(|row| columns.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let rhs_vec: Vec<BigRat> = (0..height).map(|row| rhs.coeff(row)).collect();
    match solve(rows, rhs_vec, unknowns) {
        Solution::Unique(coeffs) => Ok(Certificate::new(
            n,
            kind,
            Poly::from_coeffs(coeffs),
            lead,
            roots,
        )),
        Solution::Inconsistent => Err(Error::NoSolution { n }),
        Solution::Underdetermined { rank } => Err(Error::Rank { n, rank, unknowns }),
    }
}

/// One window of a recurrence check: the residual at index n (centre term).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceWindow<T> {
    pub n: u64,
    pub residual: T,
    pub ok: bool,
}

/// Checks every window (y_{n-1}, y_n, y_{n+1}) of `seq`, where `seq[i]`
/// holds y_{start_n + i}. Windows centred at n = 0 are skipped since the
/// recurrence starts at n = 1.
pub fn recurrence_check(seq: &[BigRat], start_n: u64) -> Result<Vec<RecurrenceWindow<BigRat>>> {
    if seq.len() < 3 {
        return Err(Error::ShortSequence(seq.len()));
    }
    Ok((1..seq.len() - 1)
        .map(|i| (i, start_n + i as u64))
        .filter(|&(_, n)| n >= 1)
        .map(|(i, n)| {
            let (up, mid, down) = recurrence_coefficients(n);
            let residual = up * &seq[i + 1] - mid * &seq[i] + down * &seq[i - 1];
            RecurrenceWindow {
                n,
                ok: residual.is_zero(),
                residual,
            }
        })
        .collect())
}

/// Numeric variant: a window passes when its residual interval contains 0.
pub fn recurrence_check_numeric(
    seq: &[HighPrec],
    start_n: u64,
) -> Result<Vec<RecurrenceWindow<HighPrec>>> {
    if seq.len() < 3 {
        return Err(Error::ShortSequence(seq.len()));
    }
    Ok((1..seq.len() - 1)
        .map(|i| (i, start_n + i as u64))
        .filter(|&(_, n)| n >= 1)
        .map(|(i, n)| {
            let (up, mid, down) = recurrence_coefficients(n);
            let residual = seq[i + 1]
                .mul_rat(&up)
                .sub(&seq[i].mul_rat(&mid))
                .add(&seq[i - 1].mul_rat(&down));
            RecurrenceWindow {
                n,
                ok: residual.contains_zero(),
                residual,
            }
        })
        .collect())
}

/// Apéry forms for n = 0..=n_max, computed in parallel.
pub fn apery_forms(n_max: u64) -> Result<Vec<LinearForm>> {
    (0..=n_max).into_par_iter().map(apery_uv).collect()
}

/// u_n by the binomial sum alone, no partial fractions.
pub fn apery_u_binomial(n: u64) -> BigInt {
    (0..=n)
        .map(|k| {
            let b = binomial(n + k, n) * binomial(n, k);
            &b * &b
        })
        .sum::<BigInt>()
        * 2u32
}

/// |u_{n+1}/u_n| as f64, for trend checks.
pub fn growth_ratio(a: &LinearForm, b: &LinearForm) -> f64 {
    let q = &b.u / &a.u;
    let digits = 12u32;
    let scaled = (q.abs() * from_int(BigInt::from(10).pow(digits))).to_integer();
    scaled.to_string().parse::<f64>().unwrap_or(f64::NAN) / 10f64.powi(digits as i32)
}
