//! Exact numbers a + b*sqrt(2) with rational a, b.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{rat, BigRat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sqrt2Surd {
    pub a: BigRat,
    pub b: BigRat,
}

impl Sqrt2Surd {
    pub fn new(a: BigRat, b: BigRat) -> Self {
        Sqrt2Surd { a, b }
    }

    pub fn rational(a: BigRat) -> Self {
        Sqrt2Surd {
            a,
            b: BigRat::zero(),
        }
    }

    pub fn sqrt2() -> Self {
        Sqrt2Surd {
            a: BigRat::zero(),
            b: BigRat::one(),
        }
    }

    pub fn one() -> Self {
        Self::rational(BigRat::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Sqrt2Surd {
            a: &self.a * c,
            b: &self.b * c,
        }
    }

    /// Sign of a + b*sqrt(2), decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a^2 with 2 b^2
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * rat(2);
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

fn sign(x: &BigRat) -> i32 {
    if x.is_zero() {
        0
    } else if x > &BigRat::zero() {
        1
    } else {
        -1
    }
}

impl Add for &Sqrt2Surd {
    type Output = Sqrt2Surd;
    fn add(self, rhs: &Sqrt2Surd) -> Sqrt2Surd {
        Sqrt2Surd {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &Sqrt2Surd {
    type Output = Sqrt2Surd;
    fn sub(self, rhs: &Sqrt2Surd) -> Sqrt2Surd {
        Sqrt2Surd {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &Sqrt2Surd {
    type Output = Sqrt2Surd;
    fn neg(self) -> Sqrt2Surd {
        Sqrt2Surd {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul for &Sqrt2Surd {
    type Output = Sqrt2Surd;
    fn mul(self, rhs: &Sqrt2Surd) -> Sqrt2Surd {
        Sqrt2Surd {
            a: &self.a * &rhs.a + &self.b * &rhs.b * rat(2),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourth_power_of_sqrt2_minus_one() {
        let x = &Sqrt2Surd::sqrt2() - &Sqrt2Surd::one();
        assert_eq!(x.pow(4), Sqrt2Surd::new(rat(17), rat(-12)));
        assert_eq!(x.signum(), 1);
        // 27 (17 - 12 sqrt 2) < 1
        let gate = x.pow(4).scale(&rat(27));
        assert_eq!(gate, Sqrt2Surd::new(rat(459), rat(-324)));
        assert_eq!((&gate - &Sqrt2Surd::one()).signum(), -1);
    }
}
