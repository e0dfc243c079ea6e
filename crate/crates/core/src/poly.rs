//! Exact integer Laurent polynomials in one formal variable.
//!
//! A [`LaurentPoly`] stores a dense run of big-integer coefficients starting
//! at `offset`, the lowest exponent with a nonzero coefficient. Which formal
//! variable a value denotes (`t`, `s = -t`, or `x` with `x^2 = t`) is part of
//! each producing function's contract; see [`Variable`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The formal variable a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    /// The Burau / Alexander variable.
    T,
    /// `s = -t`.
    S,
    /// `x` with `x^2 = t`, used for Jones values of odd exponent sum.
    X,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::T => "t",
            Variable::S => "s",
            Variable::X => "x",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer Laurent polynomial `sum_i coeffs[i] * v^(offset + i)`.
///
/// Invariant: `coeffs` is empty for zero, otherwise its first and last
/// entries are nonzero. Offset is 0 for the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(0, vec![c])
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// `v^exp` with coefficient 1.
    pub fn power_of_var(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.offset = 0;
            }
            Some(first) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                if first > 0 {
                    self.coeffs.drain(..first);
                    self.offset += first as i64;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for zero).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Number of stored coefficients (degree span + 1).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    /// Highest minus lowest exponent.
    pub fn span(&self) -> Option<usize> {
        self.max_exponent().map(|_| self.coeffs.len() - 1)
    }

    /// Coefficient of `v^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.offset;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// If this is a unit `±v^k`, returns `(sign, k)`.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = &self.coeffs[0];
        if c.is_one() {
            Some((1, self.offset))
        } else if *c == -BigInt::one() {
            Some((-1, self.offset))
        } else {
            None
        }
    }

    /// Exact quotient `self / d`, by long division from the lowest exponent.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return Err(Error::NonExactDivision);
        }
        let qlen = self.coeffs.len() - d.coeffs.len() + 1;
        let mut rem = self.coeffs.clone();
        let d0 = &d.coeffs[0];
        let mut q = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let (qi, r) = rem[i].div_rem(d0);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            if !qi.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &qi * dj;
                }
            }
            q.push(qi);
        }
        if rem[qlen..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(LaurentPoly::new(self.offset - d.offset, q))
    }

    /// Exact value at an integer point. Negative offsets give a rational
    /// with denominator dividing `v^(-offset)`.
    pub fn eval_int(&self, v: &BigInt) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if v.is_zero() && self.offset < 0 {
            return Err(Error::ZeroDenominator);
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        let shift = self.offset.unsigned_abs() as u32;
        let vk = num_traits::pow(v.clone(), shift as usize);
        Ok(match self.offset.cmp(&0) {
            Ordering::Less => BigRational::new(acc, vk),
            _ => BigRational::from_integer(acc * vk),
        })
    }

    /// Exact value at a unit `v` of `Z[i]`.
    pub fn eval_gauss(&self, v: &GaussianInt) -> Result<GaussianInt> {
        let quarter = v.unit_exponent().ok_or(Error::NonUnitPoint)?;
        // v^k = i^(quarter * k mod 4): bucket coefficients by that residue.
        let mut buckets = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.offset + i as i64;
            let r = (quarter as i64 * k).rem_euclid(4) as usize;
            buckets[r] += c;
        }
        let [b0, b1, b2, b3] = buckets;
        Ok(GaussianInt::new(b0 - b2, b1 - b3))
    }

    /// Horner evaluation in double precision.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        if self.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if z == Complex64::new(0.0, 0.0) && self.offset < 0 {
            return Err(Error::ZeroDenominator);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + big_to_f64(c);
        }
        Ok(acc * z.powi(self.offset as i32))
    }

    /// `v -> -v`: coefficient of `v^k` picks up `(-1)^k`.
    pub fn substitute_negate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.offset + i as i64).rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        LaurentPoly {
            offset: self.offset,
            coeffs,
        }
    }

    /// `v -> v^factor` for a positive factor (e.g. `t = x^2`).
    pub fn spread_exponents(&self, factor: u32) -> Self {
        assert!(factor > 0);
        if self.is_zero() {
            return Self::zero();
        }
        let f = factor as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * f + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * f] = c.clone();
        }
        LaurentPoly::new(self.offset * factor as i64, coeffs)
    }

    /// Inverse of `spread_exponents(2)`; fails if any odd exponent is present.
    pub fn halve_exponents(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.offset.rem_euclid(2) != 0 {
            return Err(Error::OddExponent);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() / 2 + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                coeffs.push(c.clone());
            } else if !c.is_zero() {
                return Err(Error::OddExponent);
            }
        }
        Ok(LaurentPoly::new(self.offset / 2, coeffs))
    }

    /// The unique `±v^k * self` with offset 0 and positive constant term.
    pub fn canonical_unit_normalize(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let coeffs = if self.coeffs[0].is_negative() {
            self.coeffs.iter().map(|c| -c).collect()
        } else {
            self.coeffs.clone()
        };
        Ok(LaurentPoly { offset: 0, coeffs })
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `|c|_max` over all coefficients.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Render as a sum of monomials in the given variable.
    pub fn display_in(&self, var: Variable) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.offset + i as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.name().to_string(),
                _ => format!("{}^{}", var.name(), e),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in(Variable::T))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.max_exponent().unwrap().max(rhs.max_exponent().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.offset - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.offset - lo) as usize + i] += c;
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.offset + rhs.offset, coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Gaussian integer `re + i*im`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn i() -> Self {
        Self::from_i64(0, 1)
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// `Some(q)` with `self = i^q` when self is a unit.
    pub fn unit_exponent(&self) -> Option<u8> {
        let one = BigInt::one();
        let m1 = -BigInt::one();
        match (&self.re, &self.im) {
            (r, i) if *r == one && i.is_zero() => Some(0),
            (r, i) if r.is_zero() && *i == one => Some(1),
            (r, i) if *r == m1 && i.is_zero() => Some(2),
            (r, i) if r.is_zero() && *i == m1 => Some(3),
            _ => None,
        }
    }
}

impl Add<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -&self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}
