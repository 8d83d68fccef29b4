//! Rational functions in one variable over `BigRat`.
//!
//! A `RatFunc` is kept in canonical form: numerator and denominator coprime,
//! denominator monic. Every rational function in this crate has a
//! denominator that splits into linear factors over Q, and the constructors
//! that know this record the factorization as a map `root -> multiplicity`.
//! When both operands carry a factorization, arithmetic works on the factor
//! maps directly and never calls a polynomial gcd; otherwise it falls back to
//! the gcd-normalized path.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::BigRat;
use crate::error::Error;

/// Roots of the monic denominator with their multiplicities.
pub type PoleMap = BTreeMap<BigRat, u32>;

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
    poles: Option<PoleMap>,
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for RatFunc {}

fn den_from_poles(poles: &PoleMap) -> Poly {
    let mut den = Poly::one();
    for (root, &m) in poles {
        let shift = -root;
        for _ in 0..m {
            den = den.mul_linear(&shift);
        }
    }
    den
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
            poles: Some(PoleMap::new()),
        }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// General constructor; reduces by the polynomial gcd.
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading();
        Ok(RatFunc {
            num: num.scale(&lc.recip()),
            den: den.monic(),
            poles: None,
        })
    }

    /// `num / prod (t - root)^m`, cancelling any root of `num`.
    pub fn with_poles(mut num: Poly, mut poles: PoleMap) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        for (root, m) in poles.iter_mut() {
            let shift = -root;
            while *m > 0 {
                let (q, r) = num.div_linear(&shift);
                if !r.is_zero() {
                    break;
                }
                num = q;
                *m -= 1;
            }
        }
        poles.retain(|_, m| *m > 0);
        RatFunc {
            den: den_from_poles(&poles),
            num,
            poles: Some(poles),
        }
    }

    /// `num / den` where the caller asserts `den = lead * prod (t - root)^m`.
    pub fn with_scaled_poles(num: Poly, lead: &BigRat, poles: PoleMap) -> Self {
        Self::with_poles(num.scale(&lead.recip()), poles)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn poles(&self) -> Option<&PoleMap> {
        self.poles.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// deg den - deg num; `None` for the zero function.
    pub fn decay_order(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        Some(self.den.degree().unwrap_or(0) as i64 - dn)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
            poles: self.poles.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRat::one())
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        match (&self.poles, &other.poles) {
            (Some(pa), Some(pb)) => {
                let lcm = pole_lcm([pa, pb]);
                let num = &(&self.num * &cofactor(pa, &lcm)) + &(&other.num * &cofactor(pb, &lcm));
                RatFunc::with_poles(num, lcm)
            }
            _ => RatFunc::new(
                &(&self.num * &other.den) + &(&other.num * &self.den),
                &self.den * &other.den,
            )
            .expect("product of nonzero denominators"),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        match (&self.poles, &other.poles) {
            (Some(pa), Some(pb)) => {
                let mut poles = pa.clone();
                for (r, m) in pb {
                    *poles.entry(r.clone()).or_insert(0) += m;
                }
                RatFunc::with_poles(&self.num * &other.num, poles)
            }
            _ => RatFunc::new(&self.num * &other.num, &self.den * &other.den)
                .expect("product of nonzero denominators"),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    /// f(t + a).
    pub fn shift(&self, a: &BigRat) -> RatFunc {
        let num = self.num.shift(a);
        match &self.poles {
            Some(poles) => {
                let moved = poles.iter().map(|(r, m)| (r - a, *m)).collect();
                RatFunc::with_poles(num, moved)
            }
            None => RatFunc {
                num,
                den: self.den.shift(a),
                poles: None,
            },
        }
    }

    /// f(t + 1).
    pub fn shift1(&self) -> RatFunc {
        self.shift(&BigRat::one())
    }

    pub fn derivative(&self) -> RatFunc {
        match &self.poles {
            Some(poles) => {
                // (n/d)' = (n' * rad - n * sum_r m_r * rad/(t - r)) / (d * rad)
                let roots: Vec<BigRat> = poles.keys().map(|r| -r).collect();
                let rad = Poly::product_of_linears(&roots);
                let mut correction = Poly::zero();
                for (r, &m) in poles {
                    let (rest, _) = rad.div_linear(&-r);
                    correction = &correction + &rest.scale(&BigRat::from_integer(m.into()));
                }
                let num = &(&self.num.derivative() * &rad) - &(&self.num * &correction);
                let bumped = poles.iter().map(|(r, m)| (r.clone(), m + 1)).collect();
                RatFunc::with_poles(num, bumped)
            }
            None => RatFunc::new(
                &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative()),
                &self.den * &self.den,
            )
            .expect("square of a nonzero denominator"),
        }
    }

    pub fn eval(&self, x: &BigRat) -> Result<BigRat, Error> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { at: x.clone() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Order of vanishing at `x` (0 if f(x) != 0); `None` for the zero
    /// function. Negative orders are not reported; poles give 0.
    pub fn zero_order_at(&self, x: &BigRat) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let shift = -x;
        let mut p = self.num.clone();
        let mut order = 0;
        loop {
            let (q, r) = p.div_linear(&shift);
            if !r.is_zero() {
                return Some(order);
            }
            order += 1;
            p = q;
        }
    }
}

/// Least common multiple of factored denominators.
pub fn pole_lcm<'a>(maps: impl IntoIterator<Item = &'a PoleMap>) -> PoleMap {
    let mut out = PoleMap::new();
    for map in maps {
        for (r, &m) in map {
            let e = out.entry(r.clone()).or_insert(0);
            *e = (*e).max(m);
        }
    }
    out
}

/// prod (t - r)^(lcm_r - own_r)
fn cofactor(own: &PoleMap, lcm: &PoleMap) -> Poly {
    let mut shifts = Vec::new();
    for (r, &m) in lcm {
        let have = own.get(r).copied().unwrap_or(0);
        for _ in have..m {
            shifts.push(-r);
        }
    }
    Poly::product_of_linears(&shifts)
}

/// Cofactor computed by dividing the full lcm polynomial, cheaper when the
/// term's own denominator is small compared to the lcm.
fn cofactor_by_division(own: &PoleMap, full: &Poly) -> Poly {
    let mut p = full.clone();
    for (r, &m) in own {
        for _ in 0..m {
            let (q, rem) = p.div_linear(&-r);
            debug_assert!(rem.is_zero());
            p = q;
        }
    }
    p
}

/// Numerator of `sum c_i f_i` over the common denominator `prod (t - r)^m`.
/// Returns `None` if any term lacks a recorded factorization.
pub fn cleared_combination(terms: &[(BigRat, &RatFunc)]) -> Option<(Poly, PoleMap)> {
    let maps: Option<Vec<&PoleMap>> = terms.iter().map(|(_, f)| f.poles()).collect();
    let lcm = pole_lcm(maps?);
    let num = numerator_over(terms, &lcm)?;
    Some((num, lcm))
}

/// Numerator of `sum c_i f_i` over a caller-chosen denominator
/// `prod (t - r)^m`, which must be a multiple of every term's denominator.
pub fn numerator_over(terms: &[(BigRat, &RatFunc)], lcm: &PoleMap) -> Option<Poly> {
    let lcm_degree: u32 = lcm.values().sum();
    let mut full: Option<Poly> = None;
    let mut acc = Poly::zero();
    for (c, f) in terms {
        let own = f.poles()?;
        if own
            .iter()
            .any(|(r, m)| lcm.get(r).copied().unwrap_or(0) < *m)
        {
            return None;
        }
        if c.is_zero() || f.is_zero() {
            continue;
        }
        let own_degree: u32 = own.values().sum();
        let cof = if own_degree * 2 > lcm_degree {
            cofactor(own, lcm)
        } else {
            let full = full.get_or_insert_with(|| den_from_poles(lcm));
            cofactor_by_division(own, full)
        };
        acc = &acc + &(&f.num().scale(c) * &cof);
    }
    Some(acc)
}

/// Exact test that `sum c_i f_i` is the zero rational function.
pub fn combination_is_zero(terms: &[(BigRat, &RatFunc)]) -> bool {
    if let Some((num, _)) = cleared_combination(terms) {
        return num.is_zero();
    }
    terms
        .iter()
        .fold(RatFunc::zero(), |acc, (c, f)| acc.add(&f.scale(c)))
        .is_zero()
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
