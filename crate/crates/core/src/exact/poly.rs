//! Dense univariate polynomials over `BigRat`.
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty vector, so its degree is `None`; every other polynomial has a
//! nonzero last coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rat, BigRat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Poly { coeffs: vec![c] }.normalize()
    }

    /// The indeterminate t.
    pub fn t() -> Self {
        Poly {
            coeffs: vec![BigRat::zero(), BigRat::one()],
        }
    }

    /// t + c
    pub fn linear(c: BigRat) -> Self {
        Poly {
            coeffs: vec![c, BigRat::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Self {
        Poly { coeffs }.normalize()
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn monomial(c: BigRat, deg: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// Product of (t + c) over the given shifts.
    pub fn product_of_linears<'a>(shifts: impl IntoIterator<Item = &'a BigRat>) -> Self {
        shifts
            .into_iter()
            .fold(Poly::one(), |acc, c| acc.mul_linear(c))
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by (t + c).
    pub fn mul_linear(&self, c: &BigRat) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let d = self.coeffs.len();
        let mut out = vec![BigRat::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a * c;
            out[i + 1] += a;
        }
        Poly::from_coeffs(out)
    }

    /// Synthetic division by (t + c): returns quotient and the remainder p(-c).
    pub fn div_linear(&self, c: &BigRat) -> (Self, BigRat) {
        if self.is_zero() {
            return (Poly::zero(), BigRat::zero());
        }
        let root = -c;
        let d = self.coeffs.len();
        let mut quot = vec![BigRat::zero(); d - 1];
        let mut carry = BigRat::zero();
        for i in (0..d).rev() {
            let v = &self.coeffs[i] + &carry * &root;
            if i == 0 {
                return (Poly::from_coeffs(quot), v);
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// p(t + a) by iterated Horner in the shifted variable.
    pub fn shift(&self, a: &BigRat) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_linear(a) + Poly::constant(c.clone());
        }
        acc
    }

    /// First `order` Taylor coefficients of p around t = x0.
    pub fn taylor_at(&self, x0: &BigRat, order: usize) -> Vec<BigRat> {
        let c = -x0;
        let mut out = Vec::with_capacity(order);
        let mut cur = self.clone();
        for _ in 0..order {
            let (q, r) = cur.div_linear(&c);
            out.push(r);
            cur = q;
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRat::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let q = &rem[i + dd] * &lead_inv;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Scale to integer coefficients with content one and positive leading
    /// coefficient. Returns the integer coefficients.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        primitive_part(&ints)
    }

    fn from_ints(ints: &[BigInt]) -> Self {
        Poly::from_coeffs(ints.iter().cloned().map(BigRat::from_integer).collect())
    }

    /// Monic gcd, computed on primitive integer images with the
    /// subresultant remainder sequence.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (self.primitive_integer(), other.primitive_integer());
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = (a.len() - b.len()) as u32;
            let r = pseudo_rem(&a, &b);
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                return Poly::one();
            }
            let divisor = &g * h.pow(delta);
            a = b;
            b = r.iter().map(|c| c / &divisor).collect();
            g = a.last().unwrap().clone();
            // h <- g^delta / h^(delta - 1)
            h = if delta == 0 {
                h
            } else {
                g.pow(delta) / h.pow(delta - 1)
            };
        }
        Poly::from_ints(&primitive_part(&b)).monic()
    }
}

fn primitive_part(ints: &[BigInt]) -> Vec<BigInt> {
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return Vec::new();
    }
    let sign = if ints.last().is_some_and(Signed::is_negative) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.iter().map(|c| c / &content * &sign).collect()
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over the integers,
/// trailing zeros trimmed.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() <= db {
        return r;
    }
    for top in (db..a.len()).rev() {
        let lr = r[top].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = top - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
    }
    r.truncate(db);
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            match (show_coeff, i) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}*t")?,
                (true, _) => write!(f, "{mag}*t^{i}")?,
                (false, 1) => write!(f, "t")?,
                (false, _) => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}
