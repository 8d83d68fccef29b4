use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use apery::analytic::elementary::ln;
use apery::analytic::HighPrec;
use apery::exact::lcm::primes_upto;
use apery::exact::rational::{rat, ratio, BigRat};
use apery::exact::{lcm_upto, pf_decompose, PartialFraction, PoleMap, Poly, RatFunc, Sqrt2Surd};

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn pole_map() -> impl Strategy<Value = PoleMap> {
    prop::collection::btree_map(0i64..4, 1u32..=3, 1..4)
        .prop_map(|m| m.into_iter().map(|(k, e)| (rat(-k), e)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_fractions_round_trip(
        coeffs in prop::collection::btree_map((0usize..4, 1u32..=3), small_rat(), 0..10)
    ) {
        let pf = PartialFraction::from_terms(coeffs.clone());
        let f = pf.reconstruct();
        let poles: Vec<(usize, u32)> = (0..4).map(|k| (k, 3)).collect();
        let back = pf_decompose(&f, &poles).unwrap();
        let want: BTreeMap<_, _> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        prop_assert_eq!(back.nonzero_terms(), want);
        prop_assert!(back.reconstructs(&f));
    }

    #[test]
    fn derivative_matches_central_difference(num in poly(3), poles in pole_map(), x in (1i64..40, 1i64..8)) {
        let f = RatFunc::with_poles(num, poles);
        let x = ratio(x.0, x.1);
        let h = ratio(1, 10).pow(15);
        let digits = 60;
        let plus = HighPrec::from_rat(&f.eval(&(&x + &h)).unwrap(), digits);
        let minus = HighPrec::from_rat(&f.eval(&(&x - &h)).unwrap(), digits);
        let quotient = plus.sub(&minus).mul_rat(&(rat(1) / (rat(2) * &h)));
        let exact = f.derivative().eval(&x).unwrap();
        let gap = quotient.sub(&HighPrec::from_rat(&exact, digits));
        prop_assert!(gap.abs_upper() < ratio(1, 10).pow(20), "gap {}", gap);
    }

    #[test]
    fn shift_then_unshift(num in poly(3), poles in pole_map(), a in small_rat()) {
        let f = RatFunc::with_poles(num, poles);
        prop_assert_eq!(f.shift(&a).shift(&-&a), f);
    }

    #[test]
    fn poly_division_and_gcd(a in poly(4), b in poly(3), c in poly(2)) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let ab = &a * &b;
        let (q, r) = ab.div_rem(&b);
        prop_assert!(r.is_zero());
        prop_assert_eq!(q, a.clone());
        let g = (&a * &c).gcd(&(&b * &c));
        prop_assert!((&a * &c).div_rem(&g).1.is_zero());
        prop_assert!((&b * &c).div_rem(&g).1.is_zero());
        prop_assert!(g.div_rem(&c).1.is_zero());
    }

    #[test]
    fn interval_results_contain_finer_recomputation(a in small_rat(), b in small_rat(), digits in 5u32..40) {
        let coarse = |d: u32| {
            let x = HighPrec::from_rat(&a, d);
            let y = HighPrec::from_rat(&b, d);
            let mut out = vec![x.add(&y), x.mul(&y), x.sub(&y).mul(&x)];
            if let Some(q) = x.div(&y) {
                out.push(q);
            }
            let pos = HighPrec::from_rat(&(a.clone() * &a + rat(1)), d);
            out.push(pos.sqrt().unwrap());
            out.push(ln(&pos).unwrap());
            out
        };
        let lo = coarse(digits);
        let hi = coarse(digits + 20);
        prop_assert_eq!(lo.len(), hi.len());
        for (c, f) in lo.iter().zip(&hi) {
            prop_assert!(c.contains_rat(&f.mid()), "{} does not contain {}", c, f);
        }
    }

    #[test]
    fn surd_powers_multiply(a in -5i64..5, b in -5i64..5, e1 in 0u32..6, e2 in 0u32..6) {
        let s = Sqrt2Surd::new(rat(a), rat(b));
        prop_assert_eq!(&s.pow(e1) * &s.pow(e2), s.pow(e1 + e2));
    }
}

#[test]
fn lcm_divisibility() {
    let mut prev = BigInt::one();
    for n in 0..=300u64 {
        let d = lcm_upto(n).value;
        assert!(
            d.is_multiple_of(&prev),
            "D_{} does not divide D_{n}",
            n.saturating_sub(1)
        );
        for m in 1..=n {
            assert!(d.is_multiple_of(&BigInt::from(m)));
        }
        for p in primes_upto(n) {
            let mut pk = BigInt::from(p);
            while pk <= BigInt::from(n) {
                pk *= p;
            }
            assert!(!d.is_multiple_of(&pk), "{pk} divides D_{n}");
        }
        prev = d;
    }
    assert_eq!(lcm_upto(0).value, BigInt::one());
    assert_eq!(lcm_upto(10).value, BigInt::from(2520));
}

#[test]
fn rational_canonical_form() {
    let x = ratio(6, -4);
    assert_eq!(x.numer(), &BigInt::from(-3));
    assert_eq!(x.denom(), &BigInt::from(2));
}

#[test]
fn rf_examples() {
    let inv_sq = RatFunc::with_poles(Poly::one(), [(rat(0), 2)].into());
    let d = inv_sq.derivative();
    assert_eq!(
        d,
        RatFunc::with_poles(Poly::constant(rat(-2)), [(rat(0), 3)].into())
    );
    let inv = RatFunc::with_poles(Poly::one(), [(rat(0), 1)].into());
    assert_eq!(
        inv.shift1(),
        RatFunc::with_poles(Poly::one(), [(rat(-1), 1)].into())
    );
    assert!(matches!(inv.eval(&rat(0)), Err(apery::Error::Pole { .. })));
}
