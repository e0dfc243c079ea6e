//! Closed forms for weaving links `W(3,n)` and generalized weaving links
//! `W(3,n,m)`, the closures of `(sigma_1^m sigma_2^-m)^n`.
//!
//! All polynomials here are in the variable `s = -t`.
//!
//! The trace of `psi_s(b_{n,m})` is `s^{-nm} (mu_1^n + mu_2^n)` where
//! `mu_1, mu_2` are the eigenvalues of the integer matrix
//! `[[s^{2m} + s[m]^2, s[m]], [[m], 1]]`. We never take the square root:
//! the power sums `w_j = mu_1^j + mu_2^j` satisfy the Newton recurrence
//! `w_{j+1} = P w_j - s^{2m} w_{j-1}` with `P = 1 + [m]^2 s + s^{2m}`,
//! so every step stays in integer Laurent polynomials.
//!
//! Three independent routes produce the Alexander row of `W(3,n)`:
//! the trinomial-sum formula ([`alexander_weaving_explicit`]), exact division
//! of `2 - s^{-n} C_n(s)` by `1 - s + s^2` ([`alexander_weaving_division`]),
//! and a two-row recurrence ([`alexander_weaving_recurrence`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braid::{q_bracket, BraidWord3};
use crate::combinat::{
    chebyshev_series_coeff, exact_quotient, lucas_general, lucas_rank_poly, trinomial_row, CoeffRow,
    RowFamily,
};
use crate::error::{Error, Result};
use crate::invariants;
use crate::poly::LaurentPoly;

/// Parameters of `W(3,n,m)`; both are at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeavingSpec {
    n: u32,
    m: u32,
}

impl WeavingSpec {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidArgument(format!("weaving link needs n, m >= 1 (got n={n}, m={m})")));
        }
        Ok(WeavingSpec { n, m })
    }

    /// The classical weaving link `W(3,n)`.
    pub fn classic(n: u32) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `(sigma_1^m sigma_2^-m)^n`.
    pub fn braid_word(&self) -> BraidWord3 {
        BraidWord3::weaving(self.n, self.m)
    }
}

impl fmt::Display for WeavingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "W(3,{})", self.n)
        } else {
            write!(f, "W(3,{},{})", self.n, self.m)
        }
    }
}

/// Power sums of the eigenvalues of `s^m psi_s(sigma_1^m sigma_2^-m)`,
/// carried through their sum and product only.
#[derive(Debug, Clone)]
pub struct TraceRecurrenceState {
    /// `lambda_1 + lambda_2 = 2 (1 + [m]^2 s + s^{2m})`
    pub sum: LaurentPoly,
    /// `lambda_1 lambda_2 = 4 s^{2m}`
    pub prod: LaurentPoly,
    pub w_prev: LaurentPoly,
    pub w_curr: LaurentPoly,
    /// Index of `w_curr`.
    pub index: u32,
    half_sum: LaurentPoly,
    quarter_prod: LaurentPoly,
}

impl TraceRecurrenceState {
    /// State at `index = 1`: `w_0 = 2`, `w_1 = 1 + [m]^2 s + s^{2m}`.
    pub fn new(m: u32) -> Self {
        let bracket = q_bracket(m);
        let half_sum = &(&LaurentPoly::one() + &(&bracket * &bracket).shift(1))
            + &LaurentPoly::power_of_var(2 * m as i64);
        let quarter_prod = LaurentPoly::power_of_var(2 * m as i64);
        TraceRecurrenceState {
            sum: half_sum.scale(&BigInt::from(2)),
            prod: quarter_prod.scale(&BigInt::from(4)),
            w_prev: LaurentPoly::from_i64s(0, &[2]),
            w_curr: half_sum.clone(),
            index: 1,
            half_sum,
            quarter_prod,
        }
    }

    /// `w_{j+1} = (sum/2) w_j - (prod/4) w_{j-1}`.
    pub fn step(&mut self) {
        let next = &(&self.half_sum * &self.w_curr) - &(&self.quarter_prod * &self.w_prev);
        self.w_prev = std::mem::replace(&mut self.w_curr, next);
        self.index += 1;
    }

    /// `w_n` for any `n >= 0`.
    pub fn power_sum(m: u32, n: u32) -> LaurentPoly {
        let mut st = Self::new(m);
        if n == 0 {
            return st.w_prev;
        }
        while st.index < n {
            st.step();
        }
        st.w_curr
    }
}

/// `tr psi_s(b_{n,m}) = s^{-nm} w_n`.
pub fn weaving_trace(spec: WeavingSpec) -> LaurentPoly {
    TraceRecurrenceState::power_sum(spec.m, spec.n).shift(-(spec.n as i64 * spec.m as i64))
}

/// `V_{W(3,n,m)}(s) = -s - s^{-1} + 2 T_n((1 + [m]^2 s + s^{2m}) / (2 s^m))`.
pub fn jones_weaving(spec: WeavingSpec) -> LaurentPoly {
    &weaving_trace(spec) - &LaurentPoly::from_i64s(-1, &[1, 0, 1])
}

/// Jones coefficients `a_0..a_{2n}` of `W(3,n)` (exponent `k - n`):
/// the Whitney row with `a_{n-1}` and `a_{n+1}` decremented.
pub fn jones_weaving_coeffs(n: u32) -> Result<CoeffRow> {
    if n == 0 {
        return Err(Error::InvalidArgument("weaving Jones row needs n >= 1".into()));
    }
    let c = crate::combinat::whitney_c_chebyshev_row(n);
    let mut values = c.values;
    for k in [n - 1, n + 1] {
        values[k as usize] -= 1;
    }
    Ok(CoeffRow::new(RowFamily::Jones, n, values))
}

/// `2n (n+i)! / ((n-i-1)! (2i+2)!)`, the weight of the `i`-th trinomial row.
pub fn alexander_weight(n: u32, i: u32) -> Result<BigInt> {
    // |coefficient of (1-x)^{i+1} in T_n| = n 2^{i+1} (n+i)! / ((n-i-1)! (2i+2)!)
    let series = chebyshev_series_coeff(n, i + 1)?.abs();
    exact_quotient(series, BigInt::from(2).pow(i))
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("weaving Alexander row needs n >= 1".into()));
    }
    Ok(())
}

/// `alpha_{n,k} = sum_i (-1)^{k-n+i+1} w_i trinomial(i, k+i-n+1)` for `k = 0..=2n-2`,
/// with the global sign fixed so that `alpha_{n,0} = 1`.
pub fn alexander_weaving_explicit(n: u32) -> Result<CoeffRow> {
    check_n(n)?;
    let weights: Vec<BigInt> = (0..n).map(|i| alexander_weight(n, i)).collect::<Result<_>>()?;
    let tri: Vec<CoeffRow> = (0..n).map(trinomial_row).collect();
    let len = 2 * n as i64 - 1;
    let mut values = Vec::with_capacity(len as usize);
    for k in 0..len {
        let mut acc = BigInt::zero();
        for i in 0..n as i64 {
            let t = tri[i as usize].get(k + i - n as i64 + 1);
            if t.is_zero() {
                continue;
            }
            let term = &weights[i as usize] * t;
            if (k - n as i64 + i + 1).rem_euclid(2) == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        values.push(acc);
    }
    if values[0].is_negative() {
        values.iter_mut().for_each(|v| *v = -&*v);
    }
    Ok(CoeffRow::new(RowFamily::Alexander, n, values))
}

/// `(2 - s^{-n} C_n(s)) / (1 - s + s^2)`, in canonical unit form.
pub fn alexander_weaving_division(n: u32) -> Result<CoeffRow> {
    check_n(n)?;
    let numer = &LaurentPoly::from_i64s(0, &[2]) - &lucas_rank_poly(n).shift(-(n as i64));
    let q = numer.exact_div(&LaurentPoly::from_i64s(0, &[1, -1, 1]))?;
    let q = q.canonical_unit_normalize()?;
    Ok(CoeffRow::new(RowFamily::Alexander, n, q.into_coeffs()))
}

/// Alexander rows `1..=max_n` from the two-row recurrence
/// (index 0 of the result is row 1).
///
/// For `k <= n-1`:
/// `alpha_{n,0} = 1`,
/// `alpha_{n,k} = alpha_{n-1,k} + alpha_{n-1,k-1} + alpha_{n-1,k-2} - alpha_{n-2,k-2}`,
/// plus 2 at `k = n-1`. The upper half is the mirror image.
pub fn alexander_weaving_recurrence_rows(max_n: u32) -> Vec<CoeffRow> {
    let mut rows: Vec<CoeffRow> = Vec::with_capacity(max_n as usize);
    for n in 1..=max_n {
        let values = match n {
            1 => vec![BigInt::one()],
            2 => vec![BigInt::one(), BigInt::from(3), BigInt::one()],
            _ => {
                let p1 = &rows[n as usize - 2];
                let p2 = &rows[n as usize - 3];
                let center = n as i64 - 1;
                let mut half = Vec::with_capacity(n as usize);
                half.push(BigInt::one());
                for k in 1..=center {
                    let mut v = p1.get(k) + p1.get(k - 1) + p1.get(k - 2) - p2.get(k - 2);
                    if k == center {
                        v += 2;
                    }
                    half.push(v);
                }
                let mut full = half.clone();
                full.extend(half.iter().rev().skip(1).cloned());
                full
            }
        };
        rows.push(CoeffRow::new(RowFamily::Alexander, n, values));
    }
    rows
}

pub fn alexander_weaving_recurrence(n: u32) -> Result<CoeffRow> {
    check_n(n)?;
    Ok(alexander_weaving_recurrence_rows(n).swap_remove(n as usize - 1))
}

/// Unrolled form of the recurrence for `2 < k <= n - 1`:
/// `alpha_{n,k} = alpha_{n-1,k} + sum_{i=1}^{floor((k+1)/2)} alpha_{n-i,k-2i+1}`,
/// plus 2 when `k = n - 1`. `rows[j]` must be row `j + 1`.
pub fn alexander_expanded_sum(rows: &[CoeffRow], n: u32, k: u32) -> Result<BigInt> {
    if n < 4 || k <= 2 || k > n - 1 || rows.len() < n as usize - 1 {
        return Err(Error::InvalidArgument(format!("expanded sum needs 2 < k <= n-1 and rows below n (n={n}, k={k})")));
    }
    let row = |m: u32| &rows[m as usize - 1];
    let mut acc = row(n - 1).get(k as i64);
    for i in 1..=k.div_ceil(2) {
        if i < n {
            acc += row(n - i).get(k as i64 - 2 * i as i64 + 1);
        }
    }
    if k == n - 1 {
        acc += 2;
    }
    Ok(acc)
}

/// The `c*` row of length `2n + 2`:
/// `c*_0 = 1`, `c*_k = c_k + c_{k-1}` for `0 < k < n`, `c*_n = c_n + c_{n-1} - 2`,
/// and `c*_k = c*_{2n+1-k}` above `n`.
pub fn cstar_row(n: u32) -> Result<CoeffRow> {
    check_n(n)?;
    let c = crate::combinat::whitney_c_chebyshev_row(n);
    let n_us = n as usize;
    let mut values = vec![BigInt::zero(); 2 * n_us + 2];
    values[0] = c.values[0].clone();
    for (k, w) in c.values.windows(2).take(n_us - 1).enumerate() {
        values[k + 1] = &w[0] + &w[1];
    }
    values[n_us] = &c.values[n_us] + &c.values[n_us - 1] - 2;
    for k in n_us + 1..=2 * n_us + 1 {
        values[k] = values[2 * n_us + 1 - k].clone();
    }
    Ok(CoeffRow::new(RowFamily::CStar, n, values))
}

/// `alpha_{n,k} = c*_k - c*_{k-3} + c*_{k-6} - ...` for `k = 0..=2n-2`.
pub fn alexander_from_cstar(cstar: &CoeffRow) -> CoeffRow {
    let n = cstar.n;
    let values = (0..2 * n as i64 - 1)
        .map(|k| {
            let mut acc = BigInt::zero();
            let mut j = k;
            let mut plus = true;
            while j >= 0 {
                if plus {
                    acc += cstar.get(j);
                } else {
                    acc -= cstar.get(j);
                }
                plus = !plus;
                j -= 3;
            }
            acc
        })
        .collect();
    CoeffRow::new(RowFamily::Alexander, n, values)
}

/// `det W(3,n,m) = L_{m,2n} - 2`.
pub fn det_weaving(spec: WeavingSpec) -> BigInt {
    lucas_general(spec.m, 2 * spec.n).expect("m >= 1 by construction") - 2
}

/// Which computation produces an Alexander row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlexanderRoute {
    Explicit,
    Division,
    Recurrence,
    /// Burau matrix of the braid word, any `m`.
    Oracle,
}

impl AlexanderRoute {
    pub const ALL: [AlexanderRoute; 4] = [
        AlexanderRoute::Explicit,
        AlexanderRoute::Division,
        AlexanderRoute::Recurrence,
        AlexanderRoute::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlexanderRoute::Explicit => "explicit",
            AlexanderRoute::Division => "division",
            AlexanderRoute::Recurrence => "recurrence",
            AlexanderRoute::Oracle => "oracle",
        }
    }

    /// Whether the route is defined for generator power `m`.
    pub fn supports(self, m: u32) -> bool {
        m == 1 || self == AlexanderRoute::Oracle
    }
}

impl fmt::Display for AlexanderRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlexanderRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlexanderRoute::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown route {s:?}")))
    }
}

/// Canonical `s`-variable Alexander row of `W(3,n,m)` via the Burau matrix.
pub fn alexander_weaving_oracle(spec: WeavingSpec) -> Result<CoeffRow> {
    let v = invariants::alexander(&spec.braid_word())?.to_s()?;
    Ok(CoeffRow::new(RowFamily::Alexander, spec.n, v.poly.into_coeffs()).with_m(spec.m))
}

/// Alexander row of `W(3,n,m)` in `s` by the chosen route.
pub fn alexander_weaving(spec: WeavingSpec, route: AlexanderRoute) -> Result<CoeffRow> {
    if !route.supports(spec.m) {
        return Err(Error::InvalidArgument(format!(
            "route {route} is only defined for m = 1; use the oracle route"
        )));
    }
    match route {
        AlexanderRoute::Explicit => alexander_weaving_explicit(spec.n),
        AlexanderRoute::Division => alexander_weaving_division(spec.n),
        AlexanderRoute::Recurrence => alexander_weaving_recurrence(spec.n),
        AlexanderRoute::Oracle => alexander_weaving_oracle(spec),
    }
}
