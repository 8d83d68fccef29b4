//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode, Output};
use std::time::Instant;

use apery::analytic::{coincidence_check, eval_series, irrationality_gate, zeta3, HighPrec};
use apery::apery::{
    apery_coeffs, apery_forms, apery_u_binomial, apery_uv, certificate_s, fit_certificate,
    recurrence_check, recurrence_check_numeric, recurrence_coefficients, verify_apery_telescoping,
    CertificateShape, FormKind,
};
use apery::ball::{
    ball_bound, ball_coeffs, ball_uv, bound_analysis, compare_ball_certificate,
    verify_ball_telescoping,
};
use apery::exact::rational::{from_int, rat, ratio, BigRat};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: apery::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn exactness() -> Outcome {
    for n in 0..=50 {
        lib(apery_coeffs(n).and_then(|c| c.check()))?;
        let form = lib(apery_uv(n))?;
        ensure(form.integrality().holds(), || {
            format!("u_{n} or D^3 v_{n} not integral")
        })?;
        for (j, s) in lib(ball_coeffs(n))?.vanishing_sums() {
            ensure(s == rat(0), || {
                format!("n = {n}: ball column {j} sums to {s}")
            })?;
        }
        let ball = lib(ball_uv(n))?;
        ensure(ball.integrality.holds(), || {
            format!("D u~_{n} or D^4 v~_{n} not integral")
        })?;
    }
    Ok("n = 0..=50".into())
}

fn certificates() -> Outcome {
    for n in 1..=30 {
        let a = lib(verify_apery_telescoping(n))?;
        ensure(a.all_ok(), || {
            format!("Apery telescoping fails at n = {n}: {a:?}")
        })?;
        let b = lib(verify_ball_telescoping(n))?;
        ensure(b.all_ok(), || {
            format!("Ball telescoping fails at n = {n}: {b:?}")
        })?;
        let fitted = lib(fit_certificate(n, CertificateShape::AperyDeg2))?;
        ensure(fitted.same_prefactor(&lib(certificate_s(n))?), || {
            format!("fitted s_{n} = {}", fitted.prefactor_num)
        })?;
        let cmp = lib(compare_ball_certificate(n))?;
        if let Some(e) = cmp.mismatch() {
            return Err(format!(
                "n = {n}: {e}; fitted {} / {}, transcribed {} / {}",
                cmp.fitted.prefactor_num,
                cmp.fitted.prefactor_den,
                cmp.transcribed.prefactor_num,
                cmp.transcribed.prefactor_den
            ));
        }
    }
    Ok("identities, S'(1), S~(1) and both fits for n = 1..=30".into())
}

fn sequence_values() -> Outcome {
    let forms = lib(apery_forms(3))?;
    let u: Vec<BigRat> = forms.iter().map(|f| f.u.clone()).collect();
    let want_u = [2, 10, 146, 2890].map(rat);
    ensure(u == want_u, || format!("u = {u:?}"))?;
    for n in [2, 3] {
        ensure(from_int(apery_u_binomial(n)) == u[n as usize], || {
            format!("binomial oracle disagrees at {n}")
        })?;
    }
    let v: Vec<BigRat> = forms.iter().map(|f| f.v.clone()).collect();
    ensure(v[..3] == [rat(0), rat(12), ratio(351, 2)], || {
        format!("v = {:?}", &v[..3])
    })?;
    let (up, mid, down) = recurrence_coefficients(1);
    let v2 = (mid * &v[1] - down * &v[0]) / up;
    ensure(v2 == v[2], || format!("recurrence oracle gives v_2 = {v2}"))?;
    Ok("u_0..u_3 = 2 10 146 2890, v_0..v_2 = 0 12 351/2".into())
}

fn recurrences() -> Outcome {
    let apery = lib(apery_forms(50))?;
    let ball: Vec<_> = (0..=50)
        .map(|n| lib(ball_uv(n)).map(|b| b.form))
        .collect::<Result<_, _>>()?;
    for (name, forms) in [("Apery", &apery), ("Ball", &ball)] {
        let u: Vec<BigRat> = forms.iter().map(|f| f.u.clone()).collect();
        let v: Vec<BigRat> = forms.iter().map(|f| f.v.clone()).collect();
        for seq in [&u, &v] {
            let windows = lib(recurrence_check(seq, 0))?;
            ensure(windows.len() == 49 && windows.iter().all(|w| w.ok), || {
                format!("{name} exact recurrence fails")
            })?;
        }
    }
    let mut worst = String::new();
    for kind in [FormKind::Apery, FormKind::Ball] {
        let values: Vec<HighPrec> = (0..=50)
            .map(|n| lib(eval_series(kind, n, 60)))
            .collect::<Result<_, _>>()?;
        let windows = lib(recurrence_check_numeric(&values, 0))?;
        if let Some(w) = windows.iter().find(|w| !w.ok) {
            return Err(format!(
                "{} numeric residual at n = {}: {}",
                kind.name(),
                w.n,
                w.residual
            ));
        }
        worst = windows
            .iter()
            .map(|w| w.residual.error_string())
            .max_by_key(|s| s.len())
            .unwrap_or_default();
    }
    Ok(format!(
        "exact for 1..=49, numeric at 60 digits (last radius {worst})"
    ))
}

fn growth_bound() -> Outcome {
    for n in 0..=20 {
        lib(ball_bound(n, 60))?;
    }
    let a = lib(bound_analysis(30))?;
    ensure(a.tau0_agrees(), || {
        "tau0 outside the bisection bracket".into()
    })?;
    ensure(a.f_prime_vanishes_within(30), || {
        format!("f'(tau0) = {}", a.f_prime_at_tau0)
    })?;
    ensure(a.sup_matches_within(30), || {
        format!("f(tau0) = {}", a.sup_f)
    })?;
    Ok(format!(
        "n = 0..=20 at 60 digits, tau0 = {}",
        a.tau0.truncated_to(12)
    ))
}

fn coincidence() -> Outcome {
    for n in 0..=30 {
        ensure(lib(ball_uv(n))?.equals_apery, || {
            format!("forms differ at n = {n}")
        })?;
    }
    let verdicts = lib(coincidence_check(20, 40))?;
    if let Some(v) = verdicts.iter().find(|v| !v.all_ok()) {
        return Err(format!("n = {}: {v:?}", v.n));
    }
    Ok("exact for n <= 30, numeric for n <= 20 at 40 digits".into())
}

fn gate() -> Outcome {
    let g = lib(irrationality_gate(40, 1))?;
    let shown = g.constant_decimal.truncated_to(12);
    ensure(g.constant_ok && shown.starts_with("0.7948"), || {
        format!("constant {shown}")
    })?;
    ensure(g.reports.len() == 39 && g.all_chains_hold(), || {
        "chain fails".into()
    })?;
    let (value, bound) = (g.first_value_below_one, g.first_bound_below_one);
    ensure(
        matches!((value, bound), (Some(v), Some(b)) if v < b),
        || format!("{value:?} vs {bound:?}"),
    )?;
    Ok(format!(
        "constant {shown}..., first value < 1 at n = {}, first bound < 1 at n = {}",
        value.unwrap(),
        bound.unwrap()
    ))
}

fn convergence() -> Outcome {
    let g = lib(irrationality_gate(31, 1))?;
    let dev = g.ratio_deviation(30).ok_or("no ratio at n = 30")?;
    ensure(dev < 0.05, || format!("F31/F30 deviates by {dev}"))?;

    let z = zeta3(200);
    let per_n = 1.5 * (1.0f64 / 0.0295).log10();
    let mut last: Option<HighPrec> = None;
    for form in lib(apery_forms(30))?.iter().skip(1) {
        let approx = HighPrec::from_rat(&(&form.v / &form.u), 210);
        let err = z.sub(&approx);
        ensure(err.is_certainly_positive(), || {
            format!("v/u not below zeta(3) at n = {}", form.n)
        })?;
        let digits = -(err.to_f64().log10());
        ensure(digits >= per_n * form.n as f64, || {
            format!("only {digits:.1} digits at n = {}", form.n)
        })?;
        if let Some(prev) = &last {
            ensure(err.certainly_lt(prev), || {
                format!("error grows at n = {}", form.n)
            })?;
        }
        last = Some(err);
    }
    Ok(format!(
        "deviation {:.2}% at n = 30, error decreasing for n = 1..=30",
        100.0 * dev
    ))
}

fn apery_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cli() -> Outcome {
    let args = ["verify", "--n-max", "20", "--format", "json"];
    let (a, b) = (apery_bin(&args), apery_bin(&args));
    ensure(a.status.code() == Some(0), || {
        format!("verify exited {:?}", a.status.code())
    })?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || {
        "outputs differ".into()
    })?;
    let codes = [
        (vec!["verify", "--n-max", "2"], 0),
        (vec!["gate", "--n-max", "1"], 2),
        (vec!["table", "--digits", "0"], 2),
        (vec!["table", "--bogus"], 2),
        (
            vec![
                "table",
                "--n-max",
                "1",
                "--out",
                "/nonexistent/dir/report.txt",
            ],
            1,
        ),
    ];
    for (args, want) in codes {
        let got = apery_bin(&args).status.code();
        ensure(got == Some(want), || {
            format!("{args:?} exited {got:?}, expected {want}")
        })?;
    }
    Ok(format!(
        "{} identical bytes, exit codes 0/1/2 as specified",
        a.stdout.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, exactness),
        (2, certificates),
        (3, sequence_values),
        (4, recurrences),
        (5, growth_bound),
        (6, coincidence),
        (7, gate),
        (8, convergence),
        (9, cli),
    ];
    let mut failed = 0;
    for (number, check) in criteria {
        let start = Instant::now();
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {number}: PASS ({detail}) [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {number}: FAIL ({detail}) [{secs:.1}s]");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
