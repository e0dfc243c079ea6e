//! Structural properties of weaving-link rows over wide ranges.

use proptest::prelude::*;
use weaving_core::combinat::{lucas, whitney_c_chebyshev_row};
use weaving_core::weaving::{
    alexander_weaving_division, alexander_weaving_explicit, alexander_weaving_recurrence_rows,
    jones_weaving_coeffs,
};
use weaving_core::zeros::{hoste_check, zeros_closed_form};
use weaving_core::{alexander, trapezoid_check, BigInt, BraidWord3};

#[test]
fn rows_are_trapezoidal_and_log_concave_to_100() {
    let rows = alexander_weaving_recurrence_rows(100);
    for (i, row) in rows.iter().enumerate().skip(1) {
        let rep = trapezoid_check(row);
        assert!(rep.is_positive && rep.is_trapezoidal && rep.is_log_concave, "n={}", i + 1);
        assert_eq!(rep.r, Some(0), "n={}", i + 1);
        assert_eq!(rep.plateau, Some((i, i)));
    }
}

#[test]
fn t_variable_rows_alternate_in_sign() {
    for n in 1..=20 {
        let t = alexander(&BraidWord3::weaving(n, 1)).unwrap().poly;
        for (k, c) in t.coeffs().iter().enumerate() {
            let expected_positive = k % 2 == 0;
            assert_eq!(c > &BigInt::from(0), expected_positive, "n={n} k={k}");
        }
    }
}

#[test]
fn hoste_condition_to_100() {
    for n in 1..=100 {
        assert!(hoste_check(&zeros_closed_form(n).unwrap(), 1e-9).unwrap(), "n={n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree(n in 1u32..80) {
        let d = alexander_weaving_division(n).unwrap();
        prop_assert_eq!(&alexander_weaving_explicit(n).unwrap(), &d);
        prop_assert!(d.is_palindromic());
        prop_assert_eq!(d.len(), 2 * n as usize - 1);
        prop_assert_eq!(d.sum(), lucas(2 * n) - 2);
    }

    #[test]
    fn jones_row_is_whitney_row_with_two_decrements(n in 1u32..80) {
        let a = jones_weaving_coeffs(n).unwrap();
        let c = whitney_c_chebyshev_row(n);
        let diff: BigInt = c.sum() - a.sum();
        prop_assert_eq!(diff, BigInt::from(2));
        prop_assert!(a.is_palindromic());
    }
}
