//! Partial fractions at integer poles t = -k.
//!
//! The coefficient of 1/(t+k)^j is read off the Taylor expansion of
//! (t+k)^m f(t) at t = -k, which is exact and needs no linear solve.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::ratfunc::{combination_is_zero, PoleMap, RatFunc};
use super::rational::{rat, BigRat};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFraction {
    /// (pole k, order j) -> coefficient of 1/(t+k)^j
    terms: BTreeMap<(usize, u32), BigRat>,
    polynomial_part: Poly,
}

impl PartialFraction {
    pub fn from_terms(terms: BTreeMap<(usize, u32), BigRat>) -> Self {
        PartialFraction {
            terms,
            polynomial_part: Poly::zero(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, u32), BigRat> {
        &self.terms
    }

    pub fn polynomial_part(&self) -> &Poly {
        &self.polynomial_part
    }

    pub fn coeff(&self, k: usize, order: u32) -> BigRat {
        self.terms
            .get(&(k, order))
            .cloned()
            .unwrap_or_else(BigRat::zero)
    }

    /// Coefficients of a fixed order, indexed by pole k = 0..=max_k.
    pub fn order_column(&self, order: u32, max_k: usize) -> Vec<BigRat> {
        (0..=max_k).map(|k| self.coeff(k, order)).collect()
    }

    /// Nonzero entries only; two decompositions of the same function compare
    /// equal under this view regardless of how many zero slots they carry.
    pub fn nonzero_terms(&self) -> BTreeMap<(usize, u32), BigRat> {
        self.terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(key, c)| (*key, c.clone()))
            .collect()
    }

    /// Exact test that the terms sum to `f`.
    pub fn reconstructs(&self, f: &RatFunc) -> bool {
        combination_is_zero(&[(BigRat::one(), f), (-BigRat::one(), &self.reconstruct())])
    }

    /// sum coeff / (t+k)^j + polynomial part, as a rational function.
    pub fn reconstruct(&self) -> RatFunc {
        let mut max_order: BTreeMap<usize, u32> = BTreeMap::new();
        for (&(k, j), c) in &self.terms {
            if !c.is_zero() {
                let e = max_order.entry(k).or_insert(0);
                *e = (*e).max(j);
            }
        }
        let poles: PoleMap = max_order
            .iter()
            .map(|(&k, &m)| (-rat(k as i64), m))
            .collect();
        let full = Poly::product_of_linears(
            max_order
                .iter()
                .flat_map(|(&k, &m)| std::iter::repeat_n(rat(k as i64), m as usize))
                .collect::<Vec<_>>()
                .iter(),
        );
        let mut num = &self.polynomial_part * &full;
        for (&k, &m) in &max_order {
            let shift = rat(k as i64);
            // full / (t+k)^m, then local = sum_j c_j (t+k)^(m-j)
            let mut cof = full.clone();
            for _ in 0..m {
                cof = cof.div_linear(&shift).0;
            }
            let mut local = Poly::zero();
            for j in 1..=m {
                local = local.mul_linear(&shift) + Poly::constant(self.coeff(k, j));
            }
            num = &num + &(&cof * &local);
        }
        RatFunc::with_poles(num, poles)
    }
}

/// Multiplicities of the poles of `f`, which must all sit at -k for the
/// listed k with multiplicity at most the listed maximum.
fn integer_pole_orders(
    f: &RatFunc,
    poles: &[(usize, u32)],
) -> Result<Vec<(usize, u32, u32)>, Error> {
    let allowed: BTreeMap<usize, u32> = poles.iter().copied().collect();
    let mut out = Vec::new();
    match f.poles() {
        Some(map) => {
            for (root, &mult) in map {
                let k = (-root)
                    .to_integer()
                    .try_into()
                    .ok()
                    .filter(|_| root.is_integer())
                    .ok_or(Error::PoleMismatch)?;
                match allowed.get(&k) {
                    Some(&max) if mult <= max => out.push((k, mult, max)),
                    _ => return Err(Error::PoleMismatch),
                }
            }
        }
        None => {
            let mut den = f.den().clone();
            for (&k, &max) in &allowed {
                let shift = rat(k as i64);
                let mut mult = 0;
                while mult < max {
                    let (q, r) = den.div_linear(&shift);
                    if !r.is_zero() {
                        break;
                    }
                    den = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((k, mult, max));
                }
            }
            if den.degree() != Some(0) {
                return Err(Error::PoleMismatch);
            }
        }
    }
    Ok(out)
}

/// First `len` coefficients of a / b as power series (b[0] != 0).
fn series_div(a: &[BigRat], b: &[BigRat], len: usize) -> Vec<BigRat> {
    let b0_inv = b[0].recip();
    let mut q: Vec<BigRat> = Vec::with_capacity(len);
    for i in 0..len {
        let mut acc = a.get(i).cloned().unwrap_or_else(BigRat::zero);
        for l in 1..=i.min(b.len() - 1) {
            acc -= &b[l] * &q[i - l];
        }
        q.push(acc * &b0_inv);
    }
    q
}

/// Decompose `f` over poles at t = -k with orders up to the given maximum.
pub fn pf_decompose(f: &RatFunc, poles: &[(usize, u32)]) -> Result<PartialFraction, Error> {
    if f.is_zero() {
        return Ok(PartialFraction::from_terms(BTreeMap::new()));
    }
    let num_degree = f.num().degree().unwrap_or(0);
    let den_degree = f.den().degree().unwrap_or(0);
    if num_degree >= den_degree {
        return Err(Error::PolynomialPart {
            num_degree,
            den_degree,
        });
    }
    let orders = integer_pole_orders(f, poles)?;
    let mut terms = BTreeMap::new();
    for &(k, max) in poles {
        for j in 1..=max {
            terms.insert((k, j), BigRat::zero());
        }
    }
    for &(k, mult, _) in &orders {
        let x0 = -rat(k as i64);
        let m = mult as usize;
        let num_series = f.num().taylor_at(&x0, m);
        let mut den_series = vec![BigRat::one()];
        for &(other, other_mult, _) in &orders {
            if other == k {
                continue;
            }
            let delta = rat(other as i64 - k as i64);
            for _ in 0..other_mult {
                // multiply by (delta + s), truncated to m terms
                let mut next = vec![BigRat::zero(); (den_series.len() + 1).min(m)];
                for (i, c) in den_series.iter().enumerate() {
                    if i < next.len() {
                        next[i] += c * &delta;
                    }
                    if i + 1 < next.len() {
                        next[i + 1] += c;
                    }
                }
                den_series = next;
            }
        }
        let g = series_div(&num_series, &den_series, m);
        for j in 1..=mult {
            terms.insert((k, j), g[(mult - j) as usize].clone());
        }
    }
    Ok(PartialFraction::from_terms(terms))
}

/// `pf_decompose` followed by an exact check that the terms rebuild `f`.
pub fn pf_decompose_checked(f: &RatFunc, poles: &[(usize, u32)]) -> Result<PartialFraction, Error> {
    let pf = pf_decompose(f, poles)?;
    if !pf.reconstructs(f) {
        return Err(Error::Consistency {
            n: 0,
            detail: "partial fractions do not reconstruct the source function".into(),
        });
    }
    Ok(pf)
}
