//! The identity battery behind `weave verify`.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use weaving_core::braid::burau_of_word_in;
use weaving_core::combinat::{
    chebyshev_coeffs, chebyshev_series_row, lucas, lucas_general, whitney_c_chebyshev_row, whitney_c_explicit_row,
    whitney_c_recurrence_rows, whitney_c_recurrence_rows_seeded, CoeffRow,
};
use weaving_core::weaving::{
    alexander_weaving_division, alexander_weaving_explicit, alexander_weaving_oracle,
    alexander_weaving_recurrence_rows, det_weaving, jones_weaving, jones_weaving_coeffs, weaving_trace,
};
use weaving_core::zeros::{closed_form_residuals, cross_validate_zeros_report, hoste_check, zeros_closed_form};
use weaving_core::{determinant, jones, trapezoid_check, BigInt, BraidWord3, LaurentPoly, Variable, WeavingSpec};

use crate::record::{Kind, OutputRecord};

/// Largest `n` for which the zeros suite also runs the numeric root cross-check.
pub const NUMERIC_ZEROS_MAX_N: u32 = 40;
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    Trace,
    Jones,
    Alexander,
    Whitney,
    Determinant,
    Zeros,
    Shape,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Trace,
        Suite::Jones,
        Suite::Alexander,
        Suite::Whitney,
        Suite::Determinant,
        Suite::Zeros,
        Suite::Shape,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Trace => "trace",
            Suite::Jones => "jones",
            Suite::Alexander => "alexander",
            Suite::Whitney => "whitney",
            Suite::Determinant => "determinant",
            Suite::Zeros => "zeros",
            Suite::Shape => "shape",
            Suite::Series => "series",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: u32,
    pub max_m: u32,
    pub suites: Vec<Suite>,
    /// Replacement seed rows `c_0`, `c_1` for the Whitney recurrence route.
    pub whitney_seeds: Option<(Vec<BigInt>, Vec<BigInt>)>,
    /// Worker threads; `None` or `Some(0)` uses the rayon default.
    pub threads: Option<usize>,
}

impl VerifyConfig {
    pub fn new(max_n: u32, max_m: u32, suites: Vec<Suite>) -> Self {
        VerifyConfig { max_n, max_m, suites, whitney_seeds: None, threads: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: bool,
    pub items: usize,
    pub seconds: f64,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
    pub notes: Vec<String>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn to_record(&self, config: &VerifyConfig) -> OutputRecord {
        let suites: Vec<Value> = self
            .suites
            .iter()
            .map(|s| {
                json!({
                    "suite": s.suite.name(),
                    "passed": s.passed,
                    "items": s.items,
                    "seconds": s.seconds,
                    "first_failure": s.first_failure,
                })
            })
            .collect();
        OutputRecord::new(Kind::Verify, Variable::S, 0, &[])
            .with("max_n", config.max_n)
            .with("max_m", config.max_m)
            .with("suites", suites)
            .with("notes", self.notes.clone())
            .with("passed", self.passed)
    }
}

/// Informational notes on conventions the battery depends on.
pub fn convention_notes() -> Vec<String> {
    vec![
        "sign convention: the trinomial-sum formula for alpha_{n,k} is evaluated with sign (-1)^(k-n+i+1), \
         which gives alpha_{n,0} = +1 directly; the variant (-1)^(k-n+i) gives the negated row. Rows are \
         normalized to alpha_{n,0} = +1 and checked against exact division and the Burau matrix"
            .into(),
        "generalized Lucas seed: L_{m,0} = 2, L_{m,1} = m, L_{m,k+1} = m L_{m,k} + L_{m,k-1}; \
         det W(3,n,m) = L_{m,2n} - 2 (L_{2n} - 2 for m = 1)"
            .into(),
        "triangle labeling: row n has 2n-1 coefficients, so the 17-entry row centred on 900 is n = 9 \
         and row n = 10 is 1,11,55,...,2207,...,11,1"
            .into(),
        "unrolled recurrence: alpha_{n,k} = alpha_{n-1,k} + sum_{i=1}^{floor((k+1)/2)} alpha_{n-i,k-2i+1} \
         (+2 at k = n-1); stopping at floor((k-1)/2) drops terms"
            .into(),
        "Jones row n = 1 is 0,1,0 (both decremented slots are the row ends)".into(),
    ]
}

type Check = Box<dyn Fn(u32, u32) -> Result<(), String> + Sync>;

fn first_diff(a: &[BigInt], b: &[BigInt]) -> Option<(usize, String, String)> {
    let len = a.len().max(b.len());
    (0..len).find_map(|k| {
        let x = a.get(k);
        let y = b.get(k);
        (x != y).then(|| {
            let show = |v: Option<&BigInt>| v.map_or("<none>".to_string(), |v| v.to_string());
            (k, show(x), show(y))
        })
    })
}

fn compare_rows(n: u32, m: u32, what: &str, a: &[BigInt], b: &[BigInt]) -> Result<(), String> {
    match first_diff(a, b) {
        None => Ok(()),
        Some((k, x, y)) => Err(format!("n={n} m={m} k={k}: {what}: {x} != {y}")),
    }
}

fn compare_poly(n: u32, m: u32, what: &str, a: &LaurentPoly, b: &LaurentPoly) -> Result<(), String> {
    if a == b {
        return Ok(());
    }
    let lo = a.offset().min(b.offset());
    let hi = a.max_exponent().unwrap_or(lo).max(b.max_exponent().unwrap_or(lo));
    let k = (lo..=hi).find(|&e| a.coeff(e) != b.coeff(e)).unwrap_or(lo);
    Err(format!("n={n} m={m} k={k}: {what}: {} != {}", a.coeff(k), b.coeff(k)))
}

fn spec(n: u32, m: u32) -> Result<WeavingSpec, String> {
    WeavingSpec::new(n, m).map_err(|e| e.to_string())
}

fn grid(ns: impl Iterator<Item = u32> + Clone, ms: impl Iterator<Item = u32>) -> Vec<(u32, u32)> {
    ms.flat_map(|m| ns.clone().map(move |n| (n, m))).collect()
}

fn sorted(mut v: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    v.sort();
    v
}

fn suite_plan(suite: Suite, config: &VerifyConfig) -> (Vec<(u32, u32)>, Check) {
    let max_n = config.max_n;
    let max_m = config.max_m;
    match suite {
        Suite::Trace => (
            sorted(grid(1..=max_n, 1..=max_m)),
            Box::new(|n, m| {
                let period = burau_of_word_in(&BraidWord3::weaving(1, m), Variable::S);
                compare_poly(n, m, "trace vs matrix power", &weaving_trace(spec(n, m)?), &period.pow(n as u64).trace())
            }),
        ),
        Suite::Jones => (
            sorted(grid(1..=max_n, 1..=max_m)),
            Box::new(|n, m| {
                let s = spec(n, m)?;
                let oracle = jones(&s.braid_word()).to_s().map_err(|e| e.to_string())?;
                compare_poly(n, m, "jones closed form vs oracle", &jones_weaving(s), &oracle.poly)?;
                if m == 1 {
                    let a = jones_weaving_coeffs(n).map_err(|e| e.to_string())?;
                    let mut c = whitney_c_chebyshev_row(n).values;
                    c[n as usize - 1] -= 1;
                    c[n as usize + 1] -= 1;
                    compare_rows(n, m, "jones row vs decremented whitney row", &a.values, &c)?;
                }
                Ok(())
            }),
        ),
        Suite::Alexander => {
            let rec = alexander_weaving_recurrence_rows(max_n);
            (
                (1..=max_n).map(|n| (n, 1)).collect(),
                Box::new(move |n, m| {
                    let err = |e: weaving_core::Error| e.to_string();
                    let explicit = alexander_weaving_explicit(n).map_err(err)?;
                    let division = alexander_weaving_division(n).map_err(err)?;
                    let oracle = alexander_weaving_oracle(spec(n, m)?).map_err(err)?;
                    compare_rows(n, m, "explicit vs division", &explicit.values, &division.values)?;
                    compare_rows(n, m, "recurrence vs division", &rec[n as usize - 1].values, &division.values)?;
                    compare_rows(n, m, "oracle vs division", &oracle.values, &division.values)?;
                    if division.sum() != lucas(2 * n) - 2 {
                        return Err(format!("n={n} m={m}: row sum {} != L_2n - 2", division.sum()));
                    }
                    Ok(())
                }),
            )
        }
        Suite::Whitney => {
            let rec: Vec<CoeffRow> = match &config.whitney_seeds {
                Some((s0, s1)) => whitney_c_recurrence_rows_seeded(s0.clone(), s1.clone(), max_n),
                None => whitney_c_recurrence_rows(max_n),
            };
            (
                (0..=max_n).map(|n| (n, 1)).collect(),
                Box::new(move |n, m| {
                    let cheb = whitney_c_chebyshev_row(n);
                    let explicit = whitney_c_explicit_row(n).map_err(|e| e.to_string())?;
                    compare_rows(n, m, "explicit vs chebyshev", &explicit.values, &cheb.values)?;
                    compare_rows(n, m, "recurrence vs chebyshev", &rec[n as usize].values, &cheb.values)
                }),
            )
        }
        Suite::Determinant => (
            sorted(grid(1..=max_n, 1..=max_m)),
            Box::new(|n, m| {
                let s = spec(n, m)?;
                let closed = det_weaving(s);
                let lucas_form = lucas_general(m, 2 * n).map_err(|e| e.to_string())? - 2;
                let oracle = determinant(&s.braid_word()).map_err(|e| e.to_string())?;
                if closed != lucas_form || closed != oracle {
                    return Err(format!("n={n} m={m}: det closed={closed} lucas={lucas_form} oracle={oracle}"));
                }
                Ok(())
            }),
        ),
        Suite::Zeros => (
            (2..=max_n.max(1)).filter(|&n| n >= 2).map(|n| (n, 1)).collect(),
            Box::new(|n, _| {
                let zs = zeros_closed_form(n).map_err(|e| e.to_string())?;
                if !hoste_check(&zs, DEFAULT_TOL).map_err(|e| e.to_string())? {
                    return Err(format!("n={n}: a zero violates Re(z) > -1 or |z| = 1"));
                }
                if n <= NUMERIC_ZEROS_MAX_N {
                    let rep = cross_validate_zeros_report(n, DEFAULT_TOL).map_err(|e| e.to_string())?;
                    if !rep.passed {
                        return Err(format!(
                            "n={n}: residuals_ok={} clusters_ok={} multiplicity {}/{}",
                            rep.residuals_ok, rep.clusters_ok, rep.total_multiplicity, rep.degree
                        ));
                    }
                } else {
                    let (res, scale) = closed_form_residuals(&zs).map_err(|e| e.to_string())?;
                    if let Some((k, r)) = res.iter().enumerate().find(|(_, r)| **r >= DEFAULT_TOL * scale) {
                        return Err(format!("n={n} k={k}: residual {r:e} exceeds {:e}", DEFAULT_TOL * scale));
                    }
                }
                Ok(())
            }),
        ),
        Suite::Shape => {
            let rec = alexander_weaving_recurrence_rows(max_n);
            (
                (2..=max_n.max(1)).filter(|&n| n >= 2).map(|n| (n, 1)).collect(),
                Box::new(move |n, _| {
                    let rep = trapezoid_check(&rec[n as usize - 1]);
                    if rep.is_positive && rep.is_trapezoidal && rep.r == Some(0) && rep.is_log_concave {
                        Ok(())
                    } else {
                        Err(format!("n={n}: {rep:?}"))
                    }
                }),
            )
        }
        Suite::Series => (
            (1..=max_n).map(|n| (n, 1)).collect(),
            Box::new(|n, m| {
                let series = chebyshev_series_row(n).map_err(|e| e.to_string())?;
                let one_minus_x = LaurentPoly::from_i64s(0, &[1, -1]);
                let mut sum = LaurentPoly::zero();
                for (k, a) in series.values.iter().enumerate() {
                    sum = &sum + &one_minus_x.pow(k as u32).scale(a);
                }
                compare_poly(n, m, "series reassembly vs T_n", &sum, &chebyshev_coeffs(n).to_poly(0))
            }),
        ),
    }
}

fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteResult {
    let start = Instant::now();
    let (items, check) = suite_plan(suite, config);
    let failures: Vec<Option<String>> = items.par_iter().map(|&(n, m)| check(n, m).err()).collect();
    let first_failure = failures.into_iter().flatten().next();
    SuiteResult {
        suite,
        passed: first_failure.is_none(),
        items: items.len(),
        seconds: start.elapsed().as_secs_f64(),
        first_failure,
    }
}

/// Run the selected suites. Work inside a suite is spread over the thread
/// pool; results are reported in suite order, and the first failure of a
/// suite is the smallest `(n, m)` that failed.
pub fn run_verify(config: &VerifyConfig) -> VerifyReport {
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    let run = || suites.iter().map(|&s| run_suite(s, config)).collect::<Vec<_>>();
    let results = match config.threads.filter(|&t| t > 0) {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    };
    let passed = results.iter().all(|r| r.passed);
    VerifyReport { suites: results, notes: convention_notes(), passed }
}
