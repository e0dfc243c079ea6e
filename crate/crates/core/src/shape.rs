//! Shape verdicts for coefficient rows: positivity, trapezoidality and
//! log-concavity.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::combinat::CoeffRow;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrapezoidReport {
    pub is_positive: bool,
    pub is_trapezoidal: bool,
    /// Inclusive plateau `(lo, hi)`, present when trapezoidal.
    pub plateau: Option<(usize, usize)>,
    /// `(hi - lo) / 2`, present for trapezoidal palindromic rows.
    pub r: Option<usize>,
    /// `a_k^2 >= a_{k-1} a_{k+1}` on every interior index of a positive row.
    pub is_log_concave: bool,
}

/// Scan for strict increase, then a constant run, then strict decrease.
fn scan_plateau(v: &[BigInt]) -> Option<(usize, usize)> {
    let mut i = 0;
    while i + 1 < v.len() && v[i] < v[i + 1] {
        i += 1;
    }
    let lo = i;
    while i + 1 < v.len() && v[i] == v[i + 1] {
        i += 1;
    }
    let hi = i;
    while i + 1 < v.len() && v[i] > v[i + 1] {
        i += 1;
    }
    (i + 1 == v.len()).then_some((lo, hi))
}

pub fn trapezoid_check(row: &CoeffRow) -> TrapezoidReport {
    trapezoid_check_values(&row.values)
}

pub fn trapezoid_check_values(v: &[BigInt]) -> TrapezoidReport {
    let is_positive = !v.is_empty() && v.iter().all(|c| c.is_positive());
    if !is_positive {
        return TrapezoidReport {
            is_positive,
            is_trapezoidal: false,
            plateau: None,
            r: None,
            is_log_concave: false,
        };
    }
    let plateau = scan_plateau(v);
    let palindromic = v.iter().eq(v.iter().rev());
    let r = match plateau {
        Some((lo, hi)) if palindromic && (hi - lo) % 2 == 0 => Some((hi - lo) / 2),
        _ => None,
    };
    let is_log_concave = v.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]);
    TrapezoidReport { is_positive, is_trapezoidal: plateau.is_some(), plateau, r, is_log_concave }
}
