use apery::analytic::zeta::zeta3_direct_bracket;
use apery::analytic::{
    coincidence_check, eval_form, eval_series, irrationality_gate, zeta3, HighPrec,
};
use apery::apery::{apery_uv, recurrence_check_numeric, FormKind};
use apery::ball::{ball_bound, bound_analysis};
use apery::exact::rational::{rat, ratio};

fn below(h: &HighPrec, places: i32) -> bool {
    h.abs_upper() < ratio(1, 10).pow(places)
}

#[test]
fn zeta3_examples() {
    let z = zeta3(10);
    assert!(below(
        &z.sub(&HighPrec::from_rat(&ratio(12020569032, 10_000_000_000), 13)),
        10
    ));
    assert!(z.radius() < ratio(1, 10).pow(10));
    assert!(zeta3_direct_bracket(2000, 10).overlaps(&z));

    let f1 = apery_uv(1).unwrap();
    assert_eq!(f1.approximant().unwrap(), ratio(6, 5));
    assert!(HighPrec::from_rat(&ratio(6, 5), 13).certainly_lt(&z));
    let f2 = apery_uv(2).unwrap();
    assert_eq!(f2.approximant().unwrap(), ratio(351, 292));
    let gap = zeta3(20).sub(&HighPrec::from_rat(&ratio(351, 292), 23));
    assert!(
        gap.is_certainly_positive()
            && below(&gap, 5)
            && gap.certainly_lt(&HighPrec::from_rat(&ratio(3, 1_000_000), 23))
    );
}

#[test]
fn zeta3_from_series_values() {
    // zeta(3) = (v_n + F_n) / u_n with F_n from the series alone
    let n = 10;
    let form = apery_uv(n).unwrap();
    let f = eval_series(FormKind::Ball, n, 70).unwrap();
    let z = f
        .add(&HighPrec::from_rat(&form.v, 73))
        .mul_rat(&(rat(1) / &form.u));
    assert!(z.overlaps(&zeta3(60)));
    assert!(below(&z.sub(&zeta3(60)), 60));
}

#[test]
fn form_values() {
    let f0 = eval_form(FormKind::Apery, 0, 15).unwrap();
    assert!(f0
        .via_linear_form
        .truncated_to(12)
        .starts_with("2.40411380631"));
    assert!(f0.via_series.overlaps(&zeta3(15).mul_rat(&rat(2))));
    let f1 = eval_form(FormKind::Apery, 1, 15).unwrap();
    assert!(f1.via_series.truncated_to(12).starts_with("0.02056903159"));
    let b1 = eval_form(FormKind::Ball, 1, 15).unwrap();
    assert!(below(&b1.via_series.sub(&f1.via_series), 14));
}

#[test]
fn coincidence_and_numeric_recurrence() {
    let digits = 30;
    let verdicts = coincidence_check(12, digits).unwrap();
    assert!(verdicts.iter().all(|v| v.all_ok()));
    assert!(verdicts[12].difference_below(digits - 2));
    assert_eq!(verdicts[0].seed_ok, Some(true));
    assert_eq!(verdicts[1].seed_ok, Some(true));

    for kind in [FormKind::Apery, FormKind::Ball] {
        let values: Vec<HighPrec> = (0..=12)
            .map(|n| eval_series(kind, n, 40).unwrap())
            .collect();
        assert!(values.iter().all(HighPrec::is_certainly_positive));
        assert!(recurrence_check_numeric(&values, 0)
            .unwrap()
            .iter()
            .all(|w| w.ok));
    }
}

#[test]
fn growth_bound_and_its_constants() {
    for n in 0..=8 {
        let b = ball_bound(n, 40).unwrap();
        assert!(b.lower_ok && b.upper_ok);
    }
    let a = bound_analysis(30).unwrap();
    assert!(a.tau0_agrees() && a.f_prime_vanishes_within(30) && a.sup_matches_within(30));
    assert!(a.majorant_ok && a.factorization_ok);
}

#[test]
fn gate_small() {
    let g = irrationality_gate(20, 1).unwrap();
    assert!(g.constant_ok && g.all_chains_hold());
    assert!(g.constant_decimal.truncated_string().starts_with("0.7948"));
    let first_bound = g.first_bound_below_one.unwrap();
    assert!((85..100).contains(&first_bound));
    assert!(g.first_value_below_one.unwrap() < first_bound);
    // F_{n+1}/F_n climbs toward (sqrt 2 - 1)^4 from below
    assert!(g.ratios_increasing());
    assert!(g.ratios.iter().all(|(_, r)| r.certainly_lt(&g.rate)));
    assert!(
        irrationality_gate(20, 1000)
            .unwrap()
            .first_bound_below_one
            .unwrap()
            > first_bound
    );
}
