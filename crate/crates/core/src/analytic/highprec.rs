//! Fixed-point decimals with a certified error radius.
//!
//! A `HighPrec` stands for the closed interval
//! `[(mantissa - err) * 10^-digits, (mantissa + err) * 10^-digits]`.
//! Every operation widens the radius enough to cover both the propagated
//! input uncertainty and its own rounding, so the true value of an
//! expression built from certified inputs always stays inside.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::rational::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighPrec {
    mantissa: BigInt,
    digits: u32,
    err: BigInt,
}

fn pow10(d: u32) -> BigInt {
    BigInt::from(10).pow(d)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// x * 10^d truncated toward zero, and whether the scaling was exact.
fn scaled_trunc(x: &BigRat, d: u32) -> (BigInt, bool) {
    let scaled = x.numer() * pow10(d);
    let (q, r) = scaled.div_rem(x.denom());
    (q, r.is_zero())
}

impl HighPrec {
    pub fn from_parts(mantissa: BigInt, digits: u32, err: BigInt) -> Self {
        debug_assert!(!err.is_negative());
        HighPrec {
            mantissa,
            digits,
            err,
        }
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_parts(BigInt::zero(), digits, BigInt::zero())
    }

    pub fn from_int(n: impl Into<BigInt>, digits: u32) -> Self {
        Self::from_parts(n.into() * pow10(digits), digits, BigInt::zero())
    }

    pub fn from_rat(x: &BigRat, digits: u32) -> Self {
        let (m, exact) = scaled_trunc(x, digits);
        let err = if exact { BigInt::zero() } else { BigInt::one() };
        Self::from_parts(m, digits, err)
    }

    /// `x` known only to within `radius`.
    pub fn from_rat_with_radius(x: &BigRat, radius: &BigRat, digits: u32) -> Self {
        Self::from_rat(x, digits).widen(radius)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// Radius in units of 10^-digits.
    pub fn err_ulps(&self) -> &BigInt {
        &self.err
    }

    pub fn mid(&self) -> BigRat {
        BigRat::new(self.mantissa.clone(), pow10(self.digits))
    }

    pub fn radius(&self) -> BigRat {
        BigRat::new(self.err.clone(), pow10(self.digits))
    }

    pub fn lo(&self) -> BigRat {
        BigRat::new(&self.mantissa - &self.err, pow10(self.digits))
    }

    pub fn hi(&self) -> BigRat {
        BigRat::new(&self.mantissa + &self.err, pow10(self.digits))
    }

    /// Grow the radius by a nonnegative rational amount.
    pub fn widen(mut self, extra: &BigRat) -> Self {
        if extra.is_zero() {
            return self;
        }
        let scaled = extra.abs() * BigRat::from_integer(pow10(self.digits));
        self.err += scaled.ceil().to_integer();
        self
    }

    pub fn with_digits(&self, digits: u32) -> Self {
        match digits.cmp(&self.digits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let f = pow10(digits - self.digits);
                Self::from_parts(&self.mantissa * &f, digits, &self.err * &f)
            }
            Ordering::Less => {
                let f = pow10(self.digits - digits);
                let (q, r) = self.mantissa.div_mod_floor(&f);
                let mut err = ceil_div(&self.err, &f);
                if !r.is_zero() {
                    err += 1;
                }
                Self::from_parts(q, digits, err)
            }
        }
    }

    fn aligned(&self, other: &HighPrec) -> (HighPrec, HighPrec) {
        let d = self.digits.min(other.digits);
        (self.with_digits(d), other.with_digits(d))
    }

    pub fn add(&self, other: &HighPrec) -> HighPrec {
        let (a, b) = self.aligned(other);
        Self::from_parts(a.mantissa + b.mantissa, a.digits, a.err + b.err)
    }

    pub fn sub(&self, other: &HighPrec) -> HighPrec {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HighPrec {
        Self::from_parts(-&self.mantissa, self.digits, self.err.clone())
    }

    pub fn mul(&self, other: &HighPrec) -> HighPrec {
        let (a, b) = self.aligned(other);
        let scale = pow10(a.digits);
        let (m, r) = (&a.mantissa * &b.mantissa).div_mod_floor(&scale);
        let spread = a.mantissa.abs() * &b.err + b.mantissa.abs() * &a.err + &a.err * &b.err;
        let mut err = ceil_div(&spread, &scale);
        if !r.is_zero() {
            err += 1;
        }
        Self::from_parts(m, a.digits, err)
    }

    /// Multiply by an exact rational.
    pub fn mul_rat(&self, q: &BigRat) -> HighPrec {
        let (m, r) = (&self.mantissa * q.numer()).div_mod_floor(q.denom());
        let mut err = ceil_div(&(&self.err * q.numer().abs()), q.denom());
        if !r.is_zero() {
            err += 1;
        }
        Self::from_parts(m, self.digits, err)
    }

    pub fn mul_int(&self, k: &BigInt) -> HighPrec {
        Self::from_parts(&self.mantissa * k, self.digits, &self.err * k.abs())
    }

    /// Division; `None` when the divisor interval contains zero.
    pub fn div(&self, other: &HighPrec) -> Option<HighPrec> {
        let (a, b) = self.aligned(other);
        let mb = b.mantissa.abs();
        if mb <= b.err {
            return None;
        }
        let scale = pow10(a.digits);
        let (m, r) = (&a.mantissa * &scale).div_mod_floor(&b.mantissa);
        // |a/b - ma/mb| <= (ea*|mb| + eb*|ma|) / (|mb| (|mb| - eb)), in value units
        let spread = (&a.err * &mb + &b.err * a.mantissa.abs()) * &scale;
        let mut err = ceil_div(&spread, &(&mb * (&mb - &b.err)));
        if !r.is_zero() {
            err += 1;
        }
        Some(Self::from_parts(m, a.digits, err))
    }

    pub fn pow(&self, e: u32) -> HighPrec {
        let mut acc = HighPrec::from_int(1, self.digits);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Square root; `None` unless the interval is strictly positive.
    pub fn sqrt(&self) -> Option<HighPrec> {
        let lo = &self.mantissa - &self.err;
        if !lo.is_positive() {
            return None;
        }
        let scale = pow10(self.digits);
        let m = (&self.mantissa * &scale).sqrt();
        // |sqrt a - sqrt b| <= |a - b| / sqrt(lo); in ulps: err * 10^d / sqrt(lo * 10^d)
        let denom = (&lo * &scale).sqrt();
        let mut err = ceil_div(&(&self.err * &scale), &denom);
        err += 1;
        Some(Self::from_parts(m, self.digits, err))
    }

    pub fn is_certainly_positive(&self) -> bool {
        self.mantissa > self.err
    }

    pub fn is_certainly_negative(&self) -> bool {
        -&self.mantissa > self.err
    }

    /// Whole interval strictly below the other's.
    pub fn certainly_lt(&self, other: &HighPrec) -> bool {
        self.hi() < other.lo()
    }

    pub fn overlaps(&self, other: &HighPrec) -> bool {
        self.lo() <= other.hi() && other.lo() <= self.hi()
    }

    pub fn contains_rat(&self, x: &BigRat) -> bool {
        &self.lo() <= x && x <= &self.hi()
    }

    /// `other`'s interval lies inside this one.
    pub fn encloses(&self, other: &HighPrec) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    pub fn contains_zero(&self) -> bool {
        self.mantissa.abs() <= self.err
    }

    /// Upper bound on |value|.
    pub fn abs_upper(&self) -> BigRat {
        BigRat::new(self.mantissa.abs() + &self.err, pow10(self.digits))
    }

    pub fn to_f64(&self) -> f64 {
        let s = self.truncated_string();
        s.parse().unwrap_or(f64::NAN)
    }

    /// Decimal expansion of the midpoint, truncated toward zero to the
    /// stored number of digits.
    pub fn truncated_string(&self) -> String {
        self.truncated_to(self.digits)
    }

    /// Midpoint truncated toward zero to `places` decimals.
    pub fn truncated_to(&self, places: u32) -> String {
        let places = places.min(self.digits);
        let drop = pow10(self.digits - places);
        let (sign, mag) = match self.mantissa.sign() {
            Sign::Minus => ("-", -&self.mantissa),
            _ => ("", self.mantissa.clone()),
        };
        let kept = mag / drop;
        let unit = pow10(places);
        let (int_part, frac) = kept.div_rem(&unit);
        if places == 0 {
            return format!("{sign}{int_part}");
        }
        let sign = if int_part.is_zero() && frac.is_zero() {
            ""
        } else {
            sign
        };
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac.to_string(),
            width = places as usize
        )
    }

    /// Midpoint in scientific notation with `sig` significant digits,
    /// truncated toward zero, e.g. `-1.234e-5`.
    pub fn scientific(&self, sig: usize) -> String {
        if self.mantissa.is_zero() {
            return "0".into();
        }
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let s = self.mantissa.abs().to_string();
        let exp = s.len() as i64 - 1 - self.digits as i64;
        let kept = &s[..sig.max(1).min(s.len())];
        let (head, rest) = kept.split_at(1);
        if rest.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{rest}e{exp}")
        }
    }

    /// Error radius as a short scientific string, rounded up.
    pub fn error_string(&self) -> String {
        if self.err.is_zero() {
            return "0".into();
        }
        let s = self.err.to_string();
        let lead: u32 = s[..1].parse().unwrap();
        let exp = s.len() as i64 - 1 - self.digits as i64;
        // round the leading digit up so the rendered bound is still a bound
        let (lead, exp) = if s.len() > 1 && s[1..].chars().any(|c| c != '0') {
            if lead == 9 {
                (1, exp + 1)
            } else {
                (lead + 1, exp)
            }
        } else {
            (lead, exp)
        };
        format!("{lead}e{exp}")
    }

    /// Decimal exponent e with |value| roughly 10^e, from the midpoint.
    pub fn log10_magnitude(&self) -> Option<i64> {
        if self.mantissa.is_zero() {
            return None;
        }
        Some(self.mantissa.abs().to_string().len() as i64 - 1 - self.digits as i64)
    }
}

impl fmt::Display for HighPrec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} +/- {}", self.truncated_string(), self.error_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    #[test]
    fn rational_enclosure() {
        let x = HighPrec::from_rat(&ratio(1, 3), 10);
        assert!(x.contains_rat(&ratio(1, 3)));
        assert_eq!(x.truncated_string(), "0.3333333333");
        let y = HighPrec::from_rat(&ratio(-1, 3), 5);
        assert!(y.contains_rat(&ratio(-1, 3)));
        assert_eq!(y.truncated_string(), "-0.33333");
    }

    #[test]
    fn arithmetic_keeps_enclosure() {
        let third = HighPrec::from_rat(&ratio(1, 3), 20);
        let seventh = HighPrec::from_rat(&ratio(-1, 7), 20);
        assert!(third.mul(&seventh).contains_rat(&ratio(-1, 21)));
        assert!(third.add(&seventh).contains_rat(&ratio(4, 21)));
        assert!(third.div(&seventh).unwrap().contains_rat(&ratio(-7, 3)));
        assert!(third.mul_rat(&ratio(22, 7)).contains_rat(&ratio(22, 21)));
        assert!(third.pow(5).contains_rat(&ratio(1, 243)));
    }

    #[test]
    fn sqrt_two() {
        let two = HighPrec::from_int(2, 40);
        let s = two.sqrt().unwrap();
        assert!(s
            .truncated_string()
            .starts_with("1.4142135623730950488016887242096980785"));
        let sq = s.mul(&s);
        assert!(sq.contains_rat(&rat(2)));
    }

    #[test]
    fn rescaling() {
        let x = HighPrec::from_rat(&ratio(2, 3), 30).with_digits(5);
        assert!(x.contains_rat(&ratio(2, 3)));
        assert!(x.err_ulps() <= &BigInt::from(2));
    }

    #[test]
    fn division_by_interval_around_zero() {
        let z = HighPrec::from_parts(BigInt::from(1), 5, BigInt::from(2));
        assert!(HighPrec::from_int(1, 5).div(&z).is_none());
    }

    #[test]
    fn error_rendering() {
        let x = HighPrec::from_parts(BigInt::from(12345), 4, BigInt::from(23));
        assert_eq!(x.error_string(), "3e-3");
        assert_eq!(x.truncated_string(), "1.2345");
        assert_eq!(x.truncated_to(2), "1.23");
        assert_eq!(x.scientific(3), "1.23e0");
        let y = HighPrec::from_rat(&ratio(-1, 700), 8);
        assert_eq!(y.scientific(4), "-1.428e-3");
    }
}
