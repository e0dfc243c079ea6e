//! Alexander polynomial, Jones polynomial and determinant of the closure of
//! an arbitrary 3-braid word, computed from the reduced Burau matrix.
//!
//! These are the brute-force references that every closed form in
//! [`crate::weaving`] is checked against.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::braid::{burau_of_word, BraidWord3};
use crate::error::{Error, Result};
use crate::poly::{GaussianInt, LaurentPoly, Variable};

/// A link polynomial together with the variable it is written in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    pub poly: LaurentPoly,
    pub variable: Variable,
    /// Whether the canonical unit form (offset 0, positive constant term) was applied.
    pub normalized: bool,
}

impl InvariantValue {
    /// Re-express an `x` value in `t = x^2`; fails on odd `x`-exponents.
    pub fn to_t(&self) -> Result<InvariantValue> {
        match self.variable {
            Variable::T => Ok(self.clone()),
            Variable::X => Ok(InvariantValue {
                poly: self.poly.halve_exponents()?,
                variable: Variable::T,
                normalized: self.normalized,
            }),
            Variable::S => Ok(InvariantValue {
                poly: self.poly.substitute_negate(),
                variable: Variable::T,
                normalized: self.normalized,
            }),
        }
    }

    /// Re-express in `s = -t`.
    pub fn to_s(&self) -> Result<InvariantValue> {
        let t = self.to_t()?;
        let mut poly = t.poly.substitute_negate();
        if self.normalized && !poly.is_zero() {
            poly = poly.canonical_unit_normalize()?;
        }
        Ok(InvariantValue { poly, variable: Variable::S, normalized: self.normalized })
    }
}

/// `1 + t + t^2`, the polynomial part of `(1 - t^3) / (1 - t)`.
fn burau_denominator() -> LaurentPoly {
    LaurentPoly::from_i64s(0, &[1, 1, 1])
}

/// Alexander polynomial of the closure of `w`, in `t`, in canonical unit form.
///
/// The unit prefactor `(-1/sqrt t)^(e - 2)` is dropped. Split closures give
/// the zero polynomial, which is returned unnormalized.
pub fn alexander(w: &BraidWord3) -> Result<InvariantValue> {
    let m = burau_of_word(w);
    // det(I - M) = 1 - tr M + det M for 2x2 matrices
    let char_at_one = &(&LaurentPoly::one() - &m.trace()) + &m.det();
    let quotient = char_at_one.exact_div(&burau_denominator())?;
    if quotient.is_zero() {
        return Ok(InvariantValue { poly: quotient, variable: Variable::T, normalized: false });
    }
    Ok(InvariantValue {
        poly: quotient.canonical_unit_normalize()?,
        variable: Variable::T,
        normalized: true,
    })
}

/// Jones polynomial of the closure of `w` in `x` (`x^2 = t`):
/// `(-x)^e (x^2 + x^-2 + tr psi_{x^2}(w))`.
pub fn jones(w: &BraidWord3) -> InvariantValue {
    let e = w.exponent_sum();
    let trace_t = burau_of_word(w).trace();
    let inner = &(&trace_t + &LaurentPoly::from_i64s(-1, &[1, 0, 1])).spread_exponents(2);
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    let prefactor = LaurentPoly::monomial(BigInt::from(sign), e);
    InvariantValue { poly: &prefactor * inner, variable: Variable::X, normalized: false }
}

/// Jones polynomial in `t` when the exponent sum is even, otherwise in `x`.
pub fn jones_preferred(w: &BraidWord3) -> InvariantValue {
    let v = jones(w);
    v.to_t().unwrap_or(v)
}

/// `|V(-1)|`, evaluated exactly at `x = i`, cross-checked against `|Delta(-1)|`.
pub fn determinant(w: &BraidWord3) -> Result<BigInt> {
    let v = jones(w).poly.eval_gauss(&GaussianInt::i())?;
    if !v.re.is_zero() && !v.im.is_zero() {
        return Err(Error::InternalMismatch(format!(
            "Jones value at x = i is not a real multiple of a unit: {v}"
        )));
    }
    let from_jones = v.re.abs() + v.im.abs();

    let alex = alexander(w)?;
    let at_minus_one = alex.poly.eval_int(&BigInt::from(-1))?;
    let from_alexander = at_minus_one.to_integer().abs();
    if from_jones != from_alexander {
        return Err(Error::InternalMismatch(format!(
            "determinant routes disagree for word [{w}]: |V(-1)| = {from_jones}, |Delta(-1)| = {from_alexander}"
        )));
    }
    Ok(from_jones)
}
