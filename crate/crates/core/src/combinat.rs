//! Chebyshev polynomials, trinomial coefficients, Whitney numbers of the
//! Lucas lattice and (generalized) Lucas numbers.
//!
//! Whitney rows `c_{n,k}` (the coefficients of the Lucas-lattice rank
//! polynomial `C_n(q)`) are available by three independent routes:
//! a binomial-sum formula, the Chebyshev recurrence
//! `C_{n+1} = (1 + q + q^2) C_n - q^2 C_{n-1}`, and a two-row recurrence on
//! the coefficients themselves. Nothing here goes through rational functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// What a [`CoeffRow`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowFamily {
    /// Monomial coefficients of `T_n(x)`.
    Chebyshev,
    /// Coefficients of `T_n` in powers of `(1 - x)`.
    ChebyshevSeries,
    /// `(1 + q + q^2)^n`.
    Trinomial,
    /// Whitney numbers `c_{n,k}` of the Lucas lattice.
    Whitney,
    /// Caller-seeded Fibonacci-lattice rows `f_{n,k}`.
    Fibonacci,
    /// Jones coefficients `a_k` of a weaving link.
    Jones,
    /// Alexander coefficients `alpha_{n,k}` of a weaving link.
    Alexander,
    /// The auxiliary `c*` row used to build Alexander rows.
    CStar,
}

/// A finite integer sequence indexed from 0, tagged with what it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffRow {
    pub values: Vec<BigInt>,
    pub family: RowFamily,
    pub n: u32,
    pub m: Option<u32>,
}

impl CoeffRow {
    pub fn new(family: RowFamily, n: u32, values: Vec<BigInt>) -> Self {
        CoeffRow { values, family, n, m: None }
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.values.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn sum(&self) -> BigInt {
        self.values.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    /// The row as a polynomial `sum_k values[k] v^(k + offset)`.
    pub fn to_poly(&self, offset: i64) -> LaurentPoly {
        LaurentPoly::new(offset, self.values.clone())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.values.iter().map(|v| v.to_i64()).collect()
    }
}

fn row_from_poly(p: &LaurentPoly, len: usize) -> Vec<BigInt> {
    (0..len as i64).map(|k| p.coeff(k)).collect()
}

/// `C(a, b)` with the conventions the Whitney formula needs: zero for
/// `b < 0` or `b > a >= 0`, and `C(a, 0) = 1` for every `a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if b == 0 {
        return BigInt::one();
    }
    if a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Monomial coefficients of `T_n(x)` via `T_{n+1} = 2x T_n - T_{n-1}`.
pub fn chebyshev_coeffs(n: u32) -> CoeffRow {
    let mut prev = vec![BigInt::one()];
    let mut cur = vec![BigInt::zero(), BigInt::one()];
    let values = if n == 0 {
        prev
    } else {
        for _ in 1..n {
            let mut next = vec![BigInt::zero(); cur.len() + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] += c * 2;
            }
            for (i, c) in prev.iter().enumerate() {
                next[i] -= c;
            }
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    };
    CoeffRow::new(RowFamily::Chebyshev, n, values)
}

/// Coefficient of `(1 - x)^k` in `T_n(x)`: `n (-2)^k (n+k-1)! / ((n-k)! (2k)!)`.
pub fn chebyshev_series_coeff(n: u32, k: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("series expansion needs n >= 1".into()));
    }
    if k > n {
        return Ok(BigInt::zero());
    }
    let (n, k) = (n as u64, k as u64);
    let num = BigInt::from(n) * factorial(n + k - 1) * BigInt::from(-2).pow(k as u32);
    let den = factorial(n - k) * factorial(2 * k);
    exact_quotient(num, den)
}

/// Row of [`chebyshev_series_coeff`] for `k = 0..=n`.
pub fn chebyshev_series_row(n: u32) -> Result<CoeffRow> {
    let values = (0..=n).map(|k| chebyshev_series_coeff(n, k)).collect::<Result<_>>()?;
    Ok(CoeffRow::new(RowFamily::ChebyshevSeries, n, values))
}

pub(crate) fn exact_quotient(num: BigInt, den: BigInt) -> Result<BigInt> {
    use num_integer::Integer;
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InternalMismatch(format!("{num} / {den} is not integral")));
    }
    Ok(q)
}

/// Full row of `(1 + q + q^2)^n`, length `2n + 1`.
pub fn trinomial_row(n: u32) -> CoeffRow {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 2];
        for (i, c) in row.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
            next[i + 2] += c;
        }
        row = next;
    }
    CoeffRow::new(RowFamily::Trinomial, n, row)
}

/// Coefficient of `q^k` in `(1 + q + q^2)^n`; zero outside `0..=2n`.
pub fn trinomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > 2 * n as i64 {
        return BigInt::zero();
    }
    trinomial_row(n).values.swap_remove(k as usize)
}

/// `c_{n,k}` from the binomial sum, for `n >= 1` and `0 <= k <= 2n`.
///
/// The `n/(n-j)` factor is carried as an exact rational; the total is integral.
pub fn whitney_c_explicit(n: u32, k: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("explicit Whitney formula needs n >= 1".into()));
    }
    if k > 2 * n {
        return Ok(BigInt::zero());
    }
    if k == 2 * n {
        return Ok(BigInt::one());
    }
    let (n, k) = (n as i64, k as i64);
    let mut total = BigRational::zero();
    for j in 0..=k / 2 {
        let b = binomial(n - j, n - k + j) * binomial(k - j - 1, j);
        if b.is_zero() {
            continue;
        }
        total += BigRational::new(BigInt::from(n) * b, BigInt::from(n - j));
    }
    if !total.is_integer() {
        return Err(Error::InternalMismatch(format!("c_{{{n},{k}}} = {total} is not an integer")));
    }
    Ok(total.to_integer())
}

/// Whitney row from the explicit formula; `n = 0` gives `[2]` (`C_0 = 2 T_0`).
pub fn whitney_c_explicit_row(n: u32) -> Result<CoeffRow> {
    let values = if n == 0 {
        vec![BigInt::from(2)]
    } else {
        (0..=2 * n).map(|k| whitney_c_explicit(n, k)).collect::<Result<_>>()?
    };
    Ok(CoeffRow::new(RowFamily::Whitney, n, values))
}

/// `C_n(q) = 2 q^n T_n((1 + q + q^2) / (2q))`, cleared of denominators.
pub fn lucas_rank_poly(n: u32) -> LaurentPoly {
    let step = LaurentPoly::from_i64s(0, &[1, 1, 1]);
    let q2 = LaurentPoly::power_of_var(2);
    let mut prev = LaurentPoly::from_i64s(0, &[2]);
    if n == 0 {
        return prev;
    }
    let mut cur = step.clone();
    for _ in 1..n {
        let next = &(&step * &cur) - &(&q2 * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Whitney row via the Chebyshev recurrence.
pub fn whitney_c_chebyshev_row(n: u32) -> CoeffRow {
    let p = lucas_rank_poly(n);
    let len = if n == 0 { 1 } else { 2 * n as usize + 1 };
    CoeffRow::new(RowFamily::Whitney, n, row_from_poly(&p, len))
}

/// Rows `0..=max_n` of `c_{n,k} = c_{n-1,k} + c_{n-1,k-1} + c_{n-1,k-2} - c_{n-2,k-2}`
/// from the standard seeds `[2]` and `[1, 1, 1]`.
pub fn whitney_c_recurrence_rows(max_n: u32) -> Vec<CoeffRow> {
    whitney_c_recurrence_rows_seeded(
        vec![BigInt::from(2)],
        vec![BigInt::one(); 3],
        max_n,
    )
}

/// As [`whitney_c_recurrence_rows`] but from caller-supplied rows 0 and 1.
///
/// Endpoints are fixed by `c_{n,0} = c_{n,2n} = 1` and `c_{n,1} = c_{n,2n-1} = n`;
/// the recurrence fills `2 <= k <= 2n - 2`.
pub fn whitney_c_recurrence_rows_seeded(seed0: Vec<BigInt>, seed1: Vec<BigInt>, max_n: u32) -> Vec<CoeffRow> {
    let mut rows = vec![CoeffRow::new(RowFamily::Whitney, 0, seed0)];
    if max_n >= 1 {
        rows.push(CoeffRow::new(RowFamily::Whitney, 1, seed1));
    }
    for n in 2..=max_n {
        let len = 2 * n as usize + 1;
        let (p1, p2) = (&rows[n as usize - 1], &rows[n as usize - 2]);
        let mut values = vec![BigInt::zero(); len];
        let nn = BigInt::from(n);
        values[0] = BigInt::one();
        values[1] = nn.clone();
        values[len - 1] = BigInt::one();
        values[len - 2] = nn;
        for k in 2..=(len as i64 - 3) {
            values[k as usize] = p1.get(k) + p1.get(k - 1) + p1.get(k - 2) - p2.get(k - 2);
        }
        rows.push(CoeffRow::new(RowFamily::Whitney, n, values));
    }
    rows
}

pub fn whitney_c_recurrence_row(n: u32) -> CoeffRow {
    whitney_c_recurrence_rows(n).swap_remove(n as usize)
}

/// Lucas numbers: `L_0 = 2`, `L_1 = 1`, `L_k = L_{k-1} + L_{k-2}`.
pub fn lucas(k: u32) -> BigInt {
    linear_two_term(&BigInt::one(), BigInt::from(2), BigInt::one(), k)
}

/// Generalized Lucas numbers `L_{m,k} = m L_{m,k-1} + L_{m,k-2}` with
/// `L_{m,0} = 2` and `L_{m,1} = m`, so that
/// `L_{m,k} = ((m + sqrt(m^2+4))/2)^k + ((m - sqrt(m^2+4))/2)^k`.
pub fn lucas_general(m: u32, k: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::InvalidArgument("generalized Lucas numbers need m >= 1".into()));
    }
    let mm = BigInt::from(m);
    Ok(linear_two_term(&mm, BigInt::from(2), mm.clone(), k))
}

fn linear_two_term(mult: &BigInt, x0: BigInt, x1: BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x0;
    }
    let (mut a, mut b) = (x0, x1);
    for _ in 1..k {
        let next = mult * &b + &a;
        a = std::mem::replace(&mut b, next);
    }
    b
}

/// Extend Fibonacci-lattice rows two indices at a time with
/// `f_{n+4,k+2} = f_{n+2,k+2} + f_{n+2,k+1} + f_{n+2,k} - f_{n,k}`.
///
/// `lower` and `upper` are rows `f_{n0}` and `f_{n0+2}`; the recurrence is
/// applied at every index with out-of-range terms read as zero (equivalently
/// `F_{n+4}(q) = (1 + q + q^2) F_{n+2}(q) - q^2 F_n(q)`). Returns the two base
/// rows followed by `steps` new rows.
pub fn fibonacci_f_extend(lower: &[BigInt], upper: &[BigInt], n0: u32, steps: u32) -> Vec<CoeffRow> {
    let mut rows = vec![
        CoeffRow::new(RowFamily::Fibonacci, n0, lower.to_vec()),
        CoeffRow::new(RowFamily::Fibonacci, n0 + 2, upper.to_vec()),
    ];
    for step in 0..steps as usize {
        let (lo, hi) = (&rows[step], &rows[step + 1]);
        let len = hi.len().max(lo.len() + 2) + 2;
        let values: Vec<BigInt> = (0..len as i64)
            .map(|j| hi.get(j) + hi.get(j - 1) + hi.get(j - 2) - lo.get(j - 2))
            .collect();
        let mut values = values;
        while values.last().is_some_and(|v| v.is_zero()) {
            values.pop();
        }
        let n = hi.n + 2;
        rows.push(CoeffRow::new(RowFamily::Fibonacci, n, values));
    }
    rows
}

/// Signed integer row helper for tests and callers building rows by hand.
pub fn row_of(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// `true` when every entry is strictly positive.
pub fn all_positive(values: &[BigInt]) -> bool {
    values.iter().all(|v| v.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(row: &CoeffRow) -> Vec<i64> {
        row.to_i64s().unwrap()
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(ints(&chebyshev_coeffs(0)), vec![1]);
        assert_eq!(ints(&chebyshev_coeffs(1)), vec![0, 1]);
        assert_eq!(ints(&chebyshev_coeffs(2)), vec![-1, 0, 2]);
        assert_eq!(ints(&chebyshev_coeffs(3)), vec![0, -3, 0, 4]);
        for n in 0..30 {
            assert_eq!(chebyshev_coeffs(n).len(), n as usize + 1);
        }
    }

    #[test]
    fn chebyshev_series_examples() {
        assert_eq!(ints(&chebyshev_series_row(2).unwrap()), vec![1, -4, 2]);
        assert_eq!(ints(&chebyshev_series_row(1).unwrap()), vec![1, -1]);
        assert!(chebyshev_series_row(0).is_err());
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(ints(&trinomial_row(2)), vec![1, 2, 3, 2, 1]);
        assert_eq!(trinomial(0, 0), BigInt::one());
        assert_eq!(trinomial(0, 1), BigInt::zero());
        assert_eq!(trinomial(3, 3), BigInt::from(7));
        assert_eq!(trinomial(3, -1), BigInt::zero());
    }

    #[test]
    fn trinomial_rows_palindromic_and_sum_to_power_of_three() {
        for n in 0..40 {
            let r = trinomial_row(n);
            assert!(r.is_palindromic());
            assert_eq!(r.sum(), BigInt::from(3).pow(n));
        }
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(-1, 1), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(10, 3), BigInt::from(120));
    }

    #[test]
    fn whitney_examples() {
        assert_eq!(ints(&whitney_c_explicit_row(2).unwrap()), vec![1, 2, 1, 2, 1]);
        assert_eq!(ints(&whitney_c_explicit_row(3).unwrap()), vec![1, 3, 3, 4, 3, 3, 1]);
        assert_eq!(ints(&whitney_c_chebyshev_row(0)), vec![2]);
        assert_eq!(ints(&whitney_c_chebyshev_row(1)), vec![1, 1, 1]);
        assert_eq!(ints(&whitney_c_chebyshev_row(2)), vec![1, 2, 1, 2, 1]);
        assert_eq!(whitney_c_recurrence_row(2).values[2], BigInt::one());
        for n in 1..=50 {
            assert_eq!(whitney_c_explicit(n, 1).unwrap(), BigInt::from(n));
        }
        assert!(whitney_c_explicit(0, 0).is_err());
    }

    #[test]
    fn whitney_three_routes_agree() {
        let rec = whitney_c_recurrence_rows(60);
        for n in 0..=60u32 {
            let cheb = whitney_c_chebyshev_row(n);
            assert_eq!(whitney_c_explicit_row(n).unwrap(), cheb, "explicit n={n}");
            assert_eq!(rec[n as usize], cheb, "recurrence n={n}");
            assert!(cheb.is_palindromic());
        }
    }

    #[test]
    fn whitney_row_sums_are_even_lucas() {
        for n in 0..=60u32 {
            assert_eq!(whitney_c_chebyshev_row(n).sum(), lucas(2 * n));
        }
    }

    #[test]
    fn lucas_examples() {
        let l: Vec<BigInt> = (0..=6).map(lucas).collect();
        assert_eq!(l, row_of(&[2, 1, 3, 4, 7, 11, 18]));
        for k in 0..=40 {
            assert_eq!(lucas_general(1, k).unwrap(), lucas(k));
        }
        let l2: Vec<BigInt> = (0..=5).map(|k| lucas_general(2, k).unwrap()).collect();
        assert_eq!(l2, row_of(&[2, 2, 6, 14, 34, 82]));
        assert!(lucas_general(0, 3).is_err());
    }

    #[test]
    fn lucas_general_matches_power_sum() {
        // roots r1, r2 of x^2 - m x - 1: r1 + r2 = m, r1 r2 = -1; L_{m,k} = r1^k + r2^k
        for m in 1..=6u32 {
            let mf = m as f64;
            let d = (mf * mf + 4.0).sqrt();
            for k in 0..=20 {
                let expect = ((mf + d) / 2.0).powi(k as i32) + ((mf - d) / 2.0).powi(k as i32);
                let got: f64 = num_traits::ToPrimitive::to_f64(&lucas_general(m, k).unwrap()).unwrap();
                assert!((got - expect).abs() <= 1e-9 * expect.abs().max(1.0), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn fibonacci_extend_zero_base() {
        let z = row_of(&[0, 0]);
        let rows = fibonacci_f_extend(&z, &z, 0, 5);
        assert_eq!(rows.len(), 7);
        assert!(rows.iter().all(|r| r.values.iter().all(|v| v.is_zero())));
    }

    #[test]
    fn fibonacci_extend_impulse_step() {
        // lo = [1], hi = [0, 1], next_j = hi_j + hi_{j-1} + hi_{j-2} - lo_{j-2}:
        // j=0: 0, j=1: 1, j=2: 0 + 1 + 0 - 1 = 0, j=3: 0 + 0 + 1 - 0 = 1
        let rows = fibonacci_f_extend(&row_of(&[1]), &row_of(&[0, 1]), 0, 1);
        assert_eq!(rows[2].values, row_of(&[0, 1, 0, 1]));
        assert_eq!(rows[2].n, 4);
    }

    #[test]
    fn fibonacci_chain_implies_whitney_recurrence() {
        // Define c_{j+2}(q) = F_{2j+4}(q) + q^2 F_{2j}(q) from arbitrary base rows and
        // check c_{n} = (1 + q + q^2) c_{n-1} - q^2 c_{n-2} coefficientwise for n <= 20.
        let lower = row_of(&[3, -1, 4, 1]);
        let upper = row_of(&[5, 9, -2, 6, 5]);
        let f = fibonacci_f_extend(&lower, &upper, 0, 22);
        let fp = |idx: usize| f[idx / 2].to_poly(0);
        let q2 = LaurentPoly::power_of_var(2);
        let c = |j: usize| &fp(2 * j + 4) + &(&q2 * &fp(2 * j));
        for j in 2..=18 {
            let lhs = c(j);
            let rhs = &(&LaurentPoly::from_i64s(0, &[1, 1, 1]) * &c(j - 1)) - &(&q2 * &c(j - 2));
            assert_eq!(lhs, rhs, "j={j}");
        }
    }

    proptest! {
        #[test]
        fn fibonacci_extend_is_linear(a in proptest::collection::vec(-9i64..9, 1..5),
                                      b in proptest::collection::vec(-9i64..9, 1..5)) {
            let ra = fibonacci_f_extend(&row_of(&a), &row_of(&b), 0, 4);
            let neg_a: Vec<i64> = a.iter().map(|x| -x).collect();
            let neg_b: Vec<i64> = b.iter().map(|x| -x).collect();
            let rb = fibonacci_f_extend(&row_of(&neg_a), &row_of(&neg_b), 0, 4);
            for (x, y) in ra.iter().zip(&rb) {
                prop_assert!((&x.to_poly(0) + &y.to_poly(0)).is_zero());
            }
        }
    }
}
