use apery::analytic::{
    coincidence_check, eval_form, eval_linear_form, irrationality_gate, HighPrec,
};
use apery::apery::{
    apery_coeffs, apery_forms, certificate_s, fit_certificate, recurrence_check,
    verify_apery_telescoping, CertificateShape, FormKind,
};
use apery::ball::{
    ball_bound, ball_uv, compare_ball_certificate, growth_bound, verify_ball_telescoping,
};
use apery::exact::lcm_upto;
use apery::exact::rational::BigRat;

use crate::report::{Check, Report};

fn dec(h: &HighPrec, places: u32) -> String {
    h.truncated_to(places)
}

pub fn table(n_max: u64, digits: u32) -> apery::Result<Report> {
    let mut r = Report::new("table");
    r.columns = vec![
        "n",
        "u_num",
        "v_num",
        "v_den",
        "D_n",
        "F_decimal",
        "F_error_bound",
        "lemma4_bound",
    ];
    for form in apery_forms(n_max)? {
        let f = eval_linear_form(&form, digits);
        r.rows.push(vec![
            form.n.to_string(),
            form.u.numer().to_string(),
            form.v.numer().to_string(),
            form.v.denom().to_string(),
            lcm_upto(form.n).value.to_string(),
            dec(&f, digits),
            f.error_string(),
            dec(&growth_bound(form.n, digits), digits),
        ]);
    }
    Ok(r)
}

fn push_result<T>(
    r: &mut Report,
    anchor: &'static str,
    name: &'static str,
    n: u64,
    res: apery::Result<T>,
    ok: impl FnOnce(&T) -> (bool, String),
) {
    match res {
        Ok(v) => {
            let (passed, detail) = ok(&v);
            r.check(Check::new(anchor, name, Some(n), passed, detail));
        }
        Err(e) => r.check(Check::new(anchor, name, Some(n), false, e.to_string())),
    }
}

pub fn verify(n_max: u64, digits: u32) -> apery::Result<Report> {
    let mut r = Report::new("verify");
    r.header.push(format!(
        "verification suites for n <= {n_max} at {digits} digits"
    ));

    for n in 0..=n_max {
        push_result(
            &mut r,
            "Lemma1",
            "apery integrality",
            n,
            apery_coeffs(n).and_then(|c| {
                c.check()?;
                apery::apery::apery_uv(n)
            }),
            |f| (f.integrality().holds(), String::new()),
        );
    }
    for n in 1..=n_max {
        push_result(
            &mut r,
            "Eq6",
            "apery telescoping",
            n,
            verify_apery_telescoping(n),
            |t| (t.all_ok(), String::new()),
        );
    }
    match apery_forms(n_max + 1) {
        Ok(forms) => {
            let u: Vec<BigRat> = forms.iter().map(|f| f.u.clone()).collect();
            let v: Vec<BigRat> = forms.iter().map(|f| f.v.clone()).collect();
            let uw = recurrence_check(&u, 0).unwrap_or_default();
            let vw = recurrence_check(&v, 0).unwrap_or_default();
            for (a, b) in uw.iter().zip(&vw) {
                r.check(Check::new(
                    "Eq7",
                    "apery recurrence",
                    Some(a.n),
                    a.ok && b.ok,
                    String::new(),
                ));
            }
        }
        Err(e) => r.check(Check::new(
            "Eq7",
            "apery recurrence",
            None,
            false,
            e.to_string(),
        )),
    }
    for n in 0..=n_max {
        push_result(
            &mut r,
            "Eq10",
            "ball vanishing sums and integrality",
            n,
            ball_uv(n),
            |b| (b.integrality.holds(), String::new()),
        );
    }
    for n in 1..=n_max {
        push_result(
            &mut r,
            "Eq14",
            "ball telescoping",
            n,
            verify_ball_telescoping(n),
            |t| (t.all_ok(), String::new()),
        );
    }
    for n in 0..=n_max {
        push_result(
            &mut r,
            "Lemma4",
            "ball growth bound",
            n,
            ball_bound(n, digits),
            |b| (b.lower_ok && b.upper_ok, String::new()),
        );
    }
    match coincidence_check(n_max, digits) {
        Ok(verdicts) => {
            for v in verdicts {
                let detail = format!("|F - F~| <= {}", v.difference.error_string());
                r.check(Check::new(
                    "Lemma7",
                    "coincidence",
                    Some(v.n),
                    v.all_ok(),
                    detail,
                ));
            }
        }
        Err(e) => r.check(Check::new(
            "Lemma7",
            "coincidence",
            None,
            false,
            e.to_string(),
        )),
    }
    Ok(r)
}

pub fn eval(n: u64, digits: u32) -> apery::Result<Report> {
    let mut r = Report::new("eval");
    r.columns = vec![
        "kind",
        "n",
        "u",
        "v",
        "linear_form",
        "linear_form_error",
        "series",
        "series_error",
    ];
    for kind in [FormKind::Apery, FormKind::Ball] {
        let e = eval_form(kind, n, digits)?;
        r.rows.push(vec![
            kind.name().to_string(),
            n.to_string(),
            e.form.u.to_string(),
            e.form.v.to_string(),
            dec(&e.via_linear_form, digits),
            e.via_linear_form.error_string(),
            dec(&e.via_series, digits),
            e.via_series.error_string(),
        ]);
    }
    Ok(r)
}

pub fn gate(n_max: u64, q: u64) -> apery::Result<Report> {
    let g = irrationality_gate(n_max, q)?;
    let mut r = Report::new("gate");
    let relation = if g.constant_ok { "<" } else { "NOT <" };
    r.header.push(format!(
        "27*(17-12*sqrt(2)) = {}... {relation} 1",
        g.constant_decimal.truncated_to(12)
    ));
    r.columns = vec![
        "n",
        "D_n",
        "q_Dn3_Fn",
        "error",
        "bound",
        "positive",
        "below_bound",
        "below_one",
    ];
    for rep in &g.reports {
        r.rows.push(vec![
            rep.n.to_string(),
            rep.d_n.to_string(),
            rep.gate_value.scientific(12),
            rep.gate_value.error_string(),
            rep.bound15.scientific(12),
            rep.positive.to_string(),
            rep.below_bound.to_string(),
            rep.below_one.to_string(),
        ]);
        r.check(Check::new(
            "Eq15",
            "gate chain",
            Some(rep.n),
            rep.chain_holds(),
            String::new(),
        ));
    }
    r.check(Check::new(
        "Eq15",
        "gate constant below one",
        None,
        g.constant_ok,
        String::new(),
    ));
    let opt = |x: Option<u64>| x.map(|n| n.to_string()).unwrap_or_else(|| "none".into());
    r.summary("q", q);
    r.summary("first_n_bound_below_one", opt(g.first_bound_below_one));
    r.summary("first_n_value_below_one", opt(g.first_value_below_one));
    r.summary("bound_decreasing_from", g.bound_decreasing_from);
    r.summary(
        "value_increases_at",
        g.value_increases
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    if let Some((n, ratio)) = g.ratios.last() {
        r.summary(
            &format!("ratio_F{}_over_F{n}", n + 1),
            ratio.truncated_to(12),
        );
    }
    r.summary("rate_sqrt2_minus_1_pow4", g.rate.truncated_to(12));
    Ok(r)
}

pub fn fit(n_max: u64) -> apery::Result<Report> {
    let mut r = Report::new("fit");
    r.columns = vec![
        "n",
        "kind",
        "fitted_numerator",
        "fitted_denominator",
        "matches_closed_form",
    ];
    for n in 1..=n_max {
        let fitted = fit_certificate(n, CertificateShape::AperyDeg2)?;
        let known = certificate_s(n)?;
        let same = fitted.same_prefactor(&known);
        r.rows.push(vec![
            n.to_string(),
            "apery".into(),
            fitted.prefactor_num.to_string(),
            fitted.prefactor_den.to_string(),
            same.to_string(),
        ]);
        let detail = if same {
            String::new()
        } else {
            format!("expected {}", known.prefactor_num)
        };
        r.check(Check::new(
            "Eq5",
            "apery certificate fit",
            Some(n),
            same,
            detail,
        ));

        let cmp = compare_ball_certificate(n)?;
        let (fitted, known, same) = (&cmp.fitted, &cmp.transcribed, cmp.matches());
        r.rows.push(vec![
            n.to_string(),
            "ball".into(),
            fitted.prefactor_num.to_string(),
            fitted.prefactor_den.to_string(),
            same.to_string(),
        ]);
        let detail = if same {
            String::new()
        } else {
            format!(
                "fitted {} but transcribed {}",
                fitted.prefactor_num, known.prefactor_num
            )
        };
        r.check(Check::new(
            "Eq13",
            "ball certificate fit",
            Some(n),
            same,
            detail,
        ));
    }
    Ok(r)
}
