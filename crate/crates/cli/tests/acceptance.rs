//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;
use weaving_core::braid::burau_of_word_in;
use weaving_core::combinat::{
    chebyshev_coeffs, chebyshev_series_coeff, chebyshev_series_row, factorial, lucas,
    lucas_general, whitney_c_chebyshev_row, whitney_c_explicit_row, whitney_c_recurrence_rows,
};
use weaving_core::weaving::{
    alexander_weaving_division, alexander_weaving_explicit, alexander_weaving_recurrence_rows,
    alexander_weight, det_weaving, jones_weaving, jones_weaving_coeffs, weaving_trace,
};
use weaving_core::zeros::{closed_form_residuals, cross_validate_zeros_report, zeros_closed_form};
use weaving_core::{
    alexander, determinant, jones, trapezoid_check, BigInt, BraidWord3, LaurentPoly, Variable,
    WeavingSpec,
};

const GOLDEN: &str = include_str!("golden/alexander_table.csv");
const ZERO_TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec(n: u32, m: u32) -> WeavingSpec {
    WeavingSpec::new(n, m).unwrap()
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    if took < limit {
        Ok(took)
    } else {
        Err(format!("took {took:.2?}, limit {limit:?}"))
    }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn weave(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_weave")).args(args).output().map_err(|e| e.to_string())?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), text))
}

fn figure_table() -> Outcome {
    let start = Instant::now();
    let (code, csv) = weave(&["table", "--family", "alexander", "--max-n", "10", "--format", "csv"])?;
    let took = within(start, Duration::from_secs(1))?;
    ensure(code == 0, || format!("exit code {code}"))?;
    if csv != GOLDEN {
        let line = csv.lines().zip(GOLDEN.lines()).position(|(a, b)| a != b);
        return Err(format!("output differs from golden file at line {line:?}"));
    }
    Ok(format!("10 rows byte-identical in {took:.2?}"))
}

fn alexander_routes() -> Outcome {
    let start = Instant::now();
    let rec = alexander_weaving_recurrence_rows(60);
    for n in 1..=60u32 {
        let e = alexander_weaving_explicit(n).map_err(|e| e.to_string())?;
        let d = alexander_weaving_division(n).map_err(|e| e.to_string())?;
        let r = &rec[n as usize - 1];
        ensure(e.values == d.values, || format!("n={n}: explicit != division"))?;
        ensure(e.values == r.values, || format!("n={n}: explicit != recurrence"))?;
        if n <= 12 {
            let oracle = alexander(&BraidWord3::weaving(n, 1))
                .and_then(|v| v.to_s())
                .map_err(|e| e.to_string())?;
            ensure(oracle.poly.offset() == 0 && oracle.poly.coeffs() == e.values.as_slice(), || {
                format!("n={n}: closed form != Burau oracle")
            })?;
        }
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!("n<=60 three routes, n<=12 oracle, {took:.2?}"))
}

fn trace_identity() -> Outcome {
    for m in 1..=5u32 {
        let period = burau_of_word_in(&BraidWord3::weaving(1, m), Variable::S);
        for n in 1..=12u32 {
            ensure(weaving_trace(spec(n, m)) == period.pow(n as u64).trace(), || {
                format!("n={n} m={m}: trace mismatch")
            })?;
        }
    }
    Ok("n<=12, m<=5".into())
}

fn jones_identities() -> Outcome {
    for m in 1..=4u32 {
        for n in 1..=10u32 {
            let oracle = jones(&spec(n, m).braid_word()).to_s().map_err(|e| e.to_string())?;
            ensure(jones_weaving(spec(n, m)) == oracle.poly, || format!("n={n} m={m}: Jones != Birman oracle"))?;
        }
    }
    for n in 1..=60u32 {
        let row = jones_weaving_coeffs(n).map_err(|e| e.to_string())?;
        let c = whitney_c_explicit_row(n).map_err(|e| e.to_string())?;
        let poly = jones_weaving(spec(n, 1));
        for k in 0..=2 * n {
            let bump = i32::from(k.abs_diff(n) == 1);
            let want = &c.values[k as usize] - bump;
            ensure(row.values[k as usize] == want, || format!("n={n} k={k}: row != c - [|k-n|=1]"))?;
            ensure(poly.coeff(k as i64 - n as i64) == want, || format!("n={n} k={k}: row != polynomial"))?;
        }
    }
    Ok("oracle n<=10 m<=4, coefficients n<=60".into())
}

fn whitney_routes() -> Outcome {
    let rec = whitney_c_recurrence_rows(60);
    for n in 0..=60u32 {
        let e = whitney_c_explicit_row(n).map_err(|e| e.to_string())?;
        let c = whitney_c_chebyshev_row(n);
        ensure(e.values == c.values, || format!("n={n}: explicit != Chebyshev"))?;
        ensure(e.values == rec[n as usize].values, || format!("n={n}: explicit != recurrence"))?;
    }
    Ok("0<=n<=60".into())
}

fn determinants() -> Outcome {
    for m in 1..=4u32 {
        for n in 1..=8u32 {
            let d = det_weaving(spec(n, m));
            let closed = lucas_general(m, 2 * n).map_err(|e| e.to_string())? - 2;
            let oracle = determinant(&spec(n, m).braid_word()).map_err(|e| e.to_string())?;
            ensure(d == closed && d == oracle, || format!("n={n} m={m}: {d} vs {closed} vs {oracle}"))?;
        }
    }
    for n in 1..=60u32 {
        let sum = alexander_weaving_division(n).map_err(|e| e.to_string())?.sum();
        ensure(sum == lucas(2 * n) - 2, || format!("n={n}: row sum {sum}"))?;
    }
    Ok("oracle n<=8 m<=4, row sums n<=60".into())
}

fn trapezoids() -> Outcome {
    let start = Instant::now();
    let rows = alexander_weaving_recurrence_rows(100);
    for row in rows.iter().skip(1) {
        let r = trapezoid_check(row);
        ensure(r.is_trapezoidal && r.r == Some(0) && r.is_log_concave, || {
            format!("n={}: {r:?}", row.n)
        })?;
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!("2<=n<=100 trapezoidal r=0 and log-concave, {took:.2?}"))
}

fn zeros() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=100u32 {
        let zs = zeros_closed_form(n).map_err(|e| e.to_string())?;
        let (res, scale) = closed_form_residuals(&zs).map_err(|e| e.to_string())?;
        for (e, r) in zs.entries.iter().zip(&res) {
            worst = worst.max(r / scale);
            ensure(*r < ZERO_TOL * scale, || format!("n={n} k={}: residual {r:e}, bound {:e}", e.k, ZERO_TOL * scale))?;
            ensure(e.value.re > -1.0, || format!("n={n} k={}: Re z = {}", e.k, e.value.re))?;
            if !e.is_real {
                let dev = (e.value.norm() - 1.0).abs();
                ensure(dev < ZERO_TOL, || format!("n={n} k={}: ||z|-1| = {dev:e}", e.k))?;
            }
        }
    }
    for n in 2..=40u32 {
        let v = cross_validate_zeros_report(n, ZERO_TOL).map_err(|e| e.to_string())?;
        ensure(v.passed && v.total_multiplicity == 2 * n as usize - 2, || {
            format!("n={n}: cross-validation failed (multiplicity {})", v.total_multiplicity)
        })?;
    }
    Ok(format!("closed forms n<=100 (worst residual/scale {worst:.1e}), numeric n<=40"))
}

fn chebyshev_series() -> Outcome {
    let one_minus_x = LaurentPoly::from_i64s(0, &[1, -1]);
    for n in 1..=60u32 {
        let series = chebyshev_series_row(n).map_err(|e| e.to_string())?;
        let mut total = LaurentPoly::zero();
        for (k, a) in series.values.iter().enumerate() {
            total = &total + &one_minus_x.pow(k as u32).scale(a);
        }
        let t = chebyshev_coeffs(n);
        ensure(total == LaurentPoly::new(0, t.values.clone()), || format!("n={n}: series != T_n"))?;
        for k in 0..=n {
            let (nn, kk) = (n as u64, k as u64);
            let num = BigInt::from(nn) * factorial(nn + kk - 1) * BigInt::from(2).pow(k);
            let den = factorial(nn - kk) * factorial(2 * kk);
            ensure(&num % &den == BigInt::from(0), || format!("n={n} k={k}: series coefficient not integral"))?;
            chebyshev_series_coeff(n, k).map_err(|e| format!("n={n} k={k}: {e}"))?;
        }
        for i in 0..n {
            let (nn, ii) = (n as u64, i as u64);
            let num = BigInt::from(2 * nn) * factorial(nn + ii);
            let den = factorial(nn - ii - 1) * factorial(2 * ii + 2);
            ensure(&num % &den == BigInt::from(0), || format!("n={n} i={i}: weight not integral"))?;
            ensure(alexander_weight(n, i).ok() == Some(&num / &den), || format!("n={n} i={i}: weight mismatch"))?;
        }
    }
    Ok("reassembly and integrality n<=60".into())
}

fn verify_notes() -> Outcome {
    let (code, text) = weave(&["verify", "--max-n", "12", "--max-m", "3", "--format", "json"])?;
    ensure(code == 0, || format!("verify exit code {code}"))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let notes: Vec<&str> = v["extras"]["notes"]
        .as_array()
        .ok_or("no notes in report")?
        .iter()
        .filter_map(Value::as_str)
        .collect();
    for topic in ["sign convention", "generalized Lucas seed"] {
        ensure(notes.iter().any(|n| n.starts_with(topic)), || format!("missing note: {topic}"))?;
    }
    Ok(format!("verify passes with {} notes", notes.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("figure table", figure_table),
        ("alexander routes", alexander_routes),
        ("trace identity", trace_identity),
        ("jones identities", jones_identities),
        ("whitney routes", whitney_routes),
        ("determinants", determinants),
        ("trapezoidality", trapezoids),
        ("zeros", zeros),
        ("chebyshev series", chebyshev_series),
        ("verify notes", verify_notes),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} {name:<18} PASS  {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name:<18} FAIL  {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
