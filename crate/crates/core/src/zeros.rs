//! Zeros of the Alexander polynomial of `W(3,n)` in the variable `t`.
//!
//! The closed form comes from the peaks of `T_n` on `[-1, 1]`: for
//! `k = 1..=n/2` put `b = 2 cos(2 pi k / n) - 1`; then
//! `z = -(b +- sqrt(b^2 - 4)) / 2`. Whether the discriminant is negative, zero
//! or positive is decided on integers (`3k < n`, `3k = n`, `3k > n`), never on
//! the rounded cosine.
//!
//! Residuals at the closed-form zeros are evaluated in multiprecision: at
//! `|z| ~ 2.6` and degree near 200 the individual Horner terms exceed `1e120`,
//! far beyond what a double can cancel.
//!
//! [`numeric_roots`] is an independent Aberth iteration in double precision,
//! used only to cross-check the closed form and to count multiplicities.

use std::f64::consts::PI;
use std::fmt;

use astro_float_num::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{big_to_f64, LaurentPoly};
use crate::weaving::alexander_weaving_division;

/// Aberth sweeps before giving up.
pub const ROOT_SWEEP_BUDGET: usize = 200;
/// Relative residual bound for [`numeric_roots`].
pub const ROOT_RESIDUAL_FACTOR: f64 = 1e-10;
/// Working precision and sweep count of the multiprecision polishing stage.
pub const POLISH_BITS: usize = 128;
pub const POLISH_SWEEPS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
    /// Zero discriminant; both signs give the same value.
    Double,
}

impl Branch {
    fn sign(self) -> i32 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
            Branch::Double => 0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
            Branch::Double => "0",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroEntry {
    pub k: u32,
    pub branch: Branch,
    pub value: Complex64,
    pub is_real: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    pub n: u32,
    pub entries: Vec<ZeroEntry>,
}

impl ZeroSet {
    pub fn values(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.entries.iter().map(|e| e.value)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Discriminant {
    Negative,
    Zero,
    Positive,
}

fn discriminant_kind(n: u32, k: u32) -> Discriminant {
    match (3 * k).cmp(&n) {
        std::cmp::Ordering::Less => Discriminant::Negative,
        std::cmp::Ordering::Equal => Discriminant::Zero,
        std::cmp::Ordering::Greater => Discriminant::Positive,
    }
}

fn branches(n: u32, k: u32) -> &'static [Branch] {
    match discriminant_kind(n, k) {
        Discriminant::Zero => &[Branch::Double],
        _ => &[Branch::Plus, Branch::Minus],
    }
}

/// Closed-form zeros of the Alexander polynomial of `W(3,n)` in `t`.
/// `n = 1` has a constant polynomial and no zeros.
pub fn zeros_closed_form(n: u32) -> Result<ZeroSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("zeros need n >= 1".into()));
    }
    let mut entries = Vec::new();
    for k in 1..=n / 2 {
        let b = 2.0 * (2.0 * PI * k as f64 / n as f64).cos() - 1.0;
        let kind = discriminant_kind(n, k);
        for &branch in branches(n, k) {
            let sign = branch.sign() as f64;
            let value = match kind {
                Discriminant::Negative => {
                    let root = (4.0 - b * b).sqrt();
                    Complex64::new(-0.5 * b, -0.5 * sign * root)
                }
                Discriminant::Zero => Complex64::new(1.0, 0.0),
                Discriminant::Positive => {
                    let root = (b * b - 4.0).sqrt();
                    Complex64::new(-0.5 * (b + sign * root), 0.0)
                }
            };
            entries.push(ZeroEntry { k, branch, value, is_real: kind != Discriminant::Negative });
        }
    }
    Ok(ZeroSet { n, entries })
}

/// Every zero has real part above `-1`, and every non-real zero lies within
/// `tol` of the unit circle.
pub fn hoste_check(zs: &ZeroSet, tol: f64) -> Result<bool> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive (got {tol})")));
    }
    Ok(zs.entries.iter().all(|e| {
        e.value.re > -1.0 && (e.is_real || (e.value.norm() - 1.0).abs() < tol)
    }))
}

struct Mp {
    p: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl Mp {
    fn new(p: usize) -> Result<Self> {
        let cc = Consts::new().map_err(|e| Error::InternalMismatch(format!("multiprecision init: {e:?}")))?;
        Ok(Mp { p, rm: RoundingMode::ToEven, cc })
    }

    fn int(&mut self, c: &BigInt) -> BigFloat {
        BigFloat::parse(&c.to_string(), Radix::Dec, self.p, self.rm, &mut self.cc)
    }

    fn to_f64(x: &BigFloat) -> f64 {
        if x.is_zero() {
            return 0.0;
        }
        x.to_string().parse().unwrap_or(f64::NAN)
    }

    /// The closed-form zero `(re, im)` at full precision.
    fn zero(&mut self, n: u32, k: u32, branch: Branch) -> (BigFloat, BigFloat) {
        let (p, rm) = (self.p, self.rm);
        let zero = BigFloat::from_i32(0, p);
        if discriminant_kind(n, k) == Discriminant::Zero {
            return (BigFloat::from_i32(1, p), zero);
        }
        let angle = self
            .cc
            .pi(p, rm)
            .mul(&BigFloat::from_u64(2 * k as u64, p), p, rm)
            .div(&BigFloat::from_u32(n, p), p, rm);
        let cos = angle.cos(p, rm, &mut self.cc);
        let b = cos.mul(&BigFloat::from_i32(2, p), p, rm).sub(&BigFloat::from_i32(1, p), p, rm);
        let disc = b.mul(&b, p, rm).sub(&BigFloat::from_i32(4, p), p, rm);
        let half = BigFloat::from_f64(0.5, p);
        let sign = BigFloat::from_i32(branch.sign(), p);
        let neg_half_b = b.mul(&half, p, rm).neg();
        if disc.is_negative() {
            let root = disc.neg().sqrt(p, rm);
            (neg_half_b, root.mul(&half, p, rm).mul(&sign, p, rm).neg())
        } else {
            let root = disc.sqrt(p, rm);
            (neg_half_b.sub(&root.mul(&half, p, rm).mul(&sign, p, rm), p, rm), zero)
        }
    }

    /// `p(v)` and `p'(v)` for real multiprecision coefficients.
    fn horner_with_derivative(
        &self,
        c: &[BigFloat],
        v: &(BigFloat, BigFloat),
    ) -> ((BigFloat, BigFloat), (BigFloat, BigFloat)) {
        let (p, rm) = (self.p, self.rm);
        let mul = |a: &(BigFloat, BigFloat), b: &(BigFloat, BigFloat)| {
            (
                a.0.mul(&b.0, p, rm).sub(&a.1.mul(&b.1, p, rm), p, rm),
                a.0.mul(&b.1, p, rm).add(&a.1.mul(&b.0, p, rm), p, rm),
            )
        };
        let zero = || BigFloat::from_i32(0, p);
        let mut pv = (zero(), zero());
        let mut dv = (zero(), zero());
        for a in c.iter().rev() {
            let d = mul(&dv, v);
            dv = (d.0.add(&pv.0, p, rm), d.1.add(&pv.1, p, rm));
            let q = mul(&pv, v);
            pv = (q.0.add(a, p, rm), q.1);
        }
        (pv, dv)
    }

    /// `a / b` rounded to a double, `None` when `b = 0`.
    fn cdiv_f64(&self, a: &(BigFloat, BigFloat), b: &(BigFloat, BigFloat)) -> Option<Complex64> {
        let (p, rm) = (self.p, self.rm);
        let den = b.0.mul(&b.0, p, rm).add(&b.1.mul(&b.1, p, rm), p, rm);
        if den.is_zero() {
            return None;
        }
        let re = a.0.mul(&b.0, p, rm).add(&a.1.mul(&b.1, p, rm), p, rm).div(&den, p, rm);
        let im = a.1.mul(&b.0, p, rm).sub(&a.0.mul(&b.1, p, rm), p, rm).div(&den, p, rm);
        Some(Complex64::new(Self::to_f64(&re), Self::to_f64(&im)))
    }

    /// `|sum_k coeffs[k] v^k|` for complex `v`.
    fn abs_eval(&mut self, coeffs: &[BigInt], v: &(BigFloat, BigFloat)) -> f64 {
        let (p, rm) = (self.p, self.rm);
        let mut re = BigFloat::from_i32(0, p);
        let mut im = BigFloat::from_i32(0, p);
        for c in coeffs.iter().rev() {
            let nre = re.mul(&v.0, p, rm).sub(&im.mul(&v.1, p, rm), p, rm);
            let nim = re.mul(&v.1, p, rm).add(&im.mul(&v.0, p, rm), p, rm);
            re = nre.add(&self.int(c), p, rm);
            im = nim;
        }
        let norm2 = re.mul(&re, p, rm).add(&im.mul(&im, p, rm), p, rm);
        Self::to_f64(&norm2.sqrt(p, rm))
    }
}

/// Working precision in bits for evaluating a degree-`deg` polynomial with
/// coefficients of `coeff_bits` bits at a point of modulus `modulus`.
fn residual_precision(coeff_bits: u64, deg: usize, modulus: f64) -> usize {
    let growth = deg as f64 * modulus.max(1.0).log2();
    (128 + coeff_bits as usize + growth.ceil() as usize + 64).next_multiple_of(64)
}

/// `|Delta_{W(3,n)}(s = -z)|` at every closed-form zero, in entry order,
/// together with the scale `1 + max |alpha_k|`.
pub fn closed_form_residuals(zs: &ZeroSet) -> Result<(Vec<f64>, f64)> {
    let alpha = alexander_weaving_division(zs.n)?;
    let max = alpha.values.iter().map(|c| c.abs()).max().unwrap_or_default();
    let scale = 1.0 + big_to_f64(&max);
    let deg = alpha.len().saturating_sub(1);
    let bits = max.bits();
    let mut out = Vec::with_capacity(zs.len());
    for e in &zs.entries {
        let mut mp = Mp::new(residual_precision(bits, deg, e.value.norm() + 0.01))?;
        let (re, im) = mp.zero(zs.n, e.k, e.branch);
        out.push(mp.abs_eval(&alpha.values, &(re.neg(), im.neg())));
    }
    Ok((out, scale))
}

fn horner_with_derivative(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All roots of `p`, with multiplicity, by Aberth iteration.
///
/// `p` is brought to canonical unit form first, so zero roots never occur.
/// Coefficients are scaled to `max |c| = 1`; each returned root satisfies
/// `|p(z)| <= 1e-10 sum_k |c_k| |z|^k` on the scaled polynomial.
/// A root is frozen once that bound holds and either its correction drops
/// below `tol max(1, |z|)` or its residual has stopped halving for eight
/// sweeps (the rounding floor, reached slowly at multiple roots). The
/// converged roots are then polished in multiprecision, see [`POLISH_BITS`].
pub fn numeric_roots(p: &LaurentPoly, tol: f64) -> Result<Vec<Complex64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive (got {tol})")));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.canonical_unit_normalize()?;
    let deg = q.len() - 1;
    if deg == 0 {
        return Err(Error::InvalidArgument("constant polynomial has no roots".into()));
    }
    let max = big_to_f64(&q.max_abs_coeff());
    let c: Vec<f64> = q.coeffs().iter().map(|x| big_to_f64(x) / max).collect();
    if deg == 1 {
        return Ok(vec![Complex64::new(-c[0] / c[1], 0.0)]);
    }
    let abs_c: Vec<f64> = c.iter().map(|x| x.abs()).collect();
    let bound = |z: Complex64| ROOT_RESIDUAL_FACTOR * abs_c.iter().rev().fold(0.0, |acc, a| acc * z.norm() + a);

    let radius = (c[0].abs() / c[deg].abs()).powf(1.0 / deg as f64);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|j| Complex64::from_polar(radius, 2.0 * PI * j as f64 / deg as f64 + 0.4))
        .collect();
    let mut frozen = vec![false; deg];
    let mut stalled = vec![0usize; deg];
    let mut last = vec![f64::INFINITY; deg];

    for _ in 0..ROOT_SWEEP_BUDGET {
        if frozen.iter().all(|&f| f) {
            break;
        }
        for i in 0..deg {
            if frozen[i] {
                continue;
            }
            let (pv, dv) = horner_with_derivative(&c, z[i]);
            let residual = pv.norm();
            if residual == 0.0 {
                frozen[i] = true;
                continue;
            }
            let residual_ok = residual <= bound(z[i]);
            if residual_ok && residual > 0.5 * last[i] {
                stalled[i] += 1;
            } else {
                stalled[i] = 0;
            }
            last[i] = last[i].min(residual);
            let repulsion: Complex64 = (0..deg).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let ratio = if dv.norm() == 0.0 { Complex64::new(1e-3, 1e-3) } else { pv / dv };
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if residual_ok && (w.norm() <= tol * z[i].norm().max(1.0) || stalled[i] >= 8) {
                frozen[i] = true;
            }
            if w.is_finite() {
                z[i] -= w;
            }
        }
    }

    for &zi in &z {
        let (pv, _) = horner_with_derivative(&c, zi);
        if pv.norm().is_nan() || pv.norm() > bound(zi) {
            return Err(Error::NoConvergence { iterations: ROOT_SWEEP_BUDGET });
        }
    }
    polish_roots(q.coeffs(), &mut z)?;
    Ok(z)
}

/// Further Aberth sweeps with `p / p'` evaluated in multiprecision.
///
/// Near an `m`-fold root a double can only resolve each copy to about
/// `eps^(1/m)` times the conditioning; this pushes that floor down by the
/// extra precision. The repulsion sum stays in double precision: it only
/// affects the rate, not the fixed point.
fn polish_roots(coeffs: &[BigInt], z: &mut [Complex64]) -> Result<()> {
    let deg = z.len();
    let mut mp = Mp::new(POLISH_BITS)?;
    let (p, rm) = (mp.p, mp.rm);
    let c: Vec<BigFloat> = coeffs.iter().map(|x| mp.int(x)).collect();
    let mut zb: Vec<(BigFloat, BigFloat)> =
        z.iter().map(|v| (BigFloat::from_f64(v.re, p), BigFloat::from_f64(v.im, p))).collect();
    let mut frozen = vec![false; deg];
    let done = 2f64.powi(-(POLISH_BITS as i32 - 16));

    for _ in 0..POLISH_SWEEPS {
        if frozen.iter().all(|&f| f) {
            break;
        }
        for i in 0..deg {
            if frozen[i] {
                continue;
            }
            let (pv, dv) = mp.horner_with_derivative(&c, &zb[i]);
            let ratio = match mp.cdiv_f64(&pv, &dv) {
                Some(r) => r,
                None => {
                    frozen[i] = true;
                    continue;
                }
            };
            let repulsion: Complex64 = (0..deg).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !w.is_finite() {
                frozen[i] = true;
                continue;
            }
            zb[i].0 = zb[i].0.sub(&BigFloat::from_f64(w.re, p), p, rm);
            zb[i].1 = zb[i].1.sub(&BigFloat::from_f64(w.im, p), p, rm);
            z[i] = Complex64::new(Mp::to_f64(&zb[i].0), Mp::to_f64(&zb[i].1));
            if w.norm() <= done * z[i].norm().max(1.0) {
                frozen[i] = true;
            }
        }
    }
    Ok(())
}

/// One distinct closed-form zero and the numeric roots attached to it.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCluster {
    pub value: Complex64,
    pub multiplicity: usize,
    /// Largest distance from `value` to an attached numeric root.
    pub max_deviation: f64,
    /// `max(1e-6, tol^(1/multiplicity))`.
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroValidation {
    pub n: u32,
    pub tol: f64,
    pub residuals: Vec<f64>,
    pub residual_scale: f64,
    pub residuals_ok: bool,
    pub clusters: Vec<ZeroCluster>,
    pub clusters_ok: bool,
    pub total_multiplicity: usize,
    pub degree: usize,
    pub passed: bool,
}

/// Check the closed-form zeros of `W(3,n)` against the polynomial itself
/// (multiprecision residuals) and against [`numeric_roots`] (clustering).
pub fn cross_validate_zeros_report(n: u32, tol: f64) -> Result<ZeroValidation> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive (got {tol})")));
    }
    let zs = zeros_closed_form(n)?;
    let (residuals, residual_scale) = closed_form_residuals(&zs)?;
    let residuals_ok = residuals.iter().all(|r| *r < tol * residual_scale);

    let alpha = alexander_weaving_division(n)?;
    let degree = alpha.len() - 1;
    let mut clusters: Vec<ZeroCluster> = zs
        .values()
        .map(|value| ZeroCluster { value, multiplicity: 0, max_deviation: 0.0, radius: 0.0 })
        .collect();

    if degree > 0 {
        let t_poly = alpha.to_poly(0).substitute_negate();
        for root in numeric_roots(&t_poly, tol)? {
            let (idx, dist) = clusters
                .iter()
                .enumerate()
                .map(|(i, c)| (i, (c.value - root).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .ok_or_else(|| Error::InternalMismatch(format!("n={n}: numeric root {root} but no closed-form zeros")))?;
            let c = &mut clusters[idx];
            c.multiplicity += 1;
            c.max_deviation = c.max_deviation.max(dist);
        }
    }
    for c in &mut clusters {
        c.radius = if c.multiplicity == 0 { 1e-6 } else { 1e-6f64.max(tol.powf(1.0 / c.multiplicity as f64)) };
    }
    let total_multiplicity = clusters.iter().map(|c| c.multiplicity).sum();
    let clusters_ok = total_multiplicity == degree
        && clusters.iter().all(|c| c.multiplicity > 0 && c.max_deviation <= c.radius);

    Ok(ZeroValidation {
        n,
        tol,
        residuals,
        residual_scale,
        residuals_ok,
        clusters,
        clusters_ok,
        total_multiplicity,
        degree,
        passed: residuals_ok && clusters_ok,
    })
}

pub fn cross_validate_zeros(n: u32, tol: f64) -> Result<bool> {
    Ok(cross_validate_zeros_report(n, tol)?.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, eps: f64) -> bool {
        (a - b).norm() < eps
    }

    fn sorted_re(zs: &ZeroSet) -> Vec<f64> {
        let mut v: Vec<f64> = zs.values().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn n2_real_pair() {
        let zs = zeros_closed_form(2).unwrap();
        assert_eq!(zs.len(), 2);
        let s5 = 5f64.sqrt();
        let v = sorted_re(&zs);
        assert!((v[0] - (3.0 - s5) / 2.0).abs() < 1e-14);
        assert!((v[1] - (3.0 + s5) / 2.0).abs() < 1e-14);
        assert!(zs.entries.iter().all(|e| e.is_real && e.k == 1));
    }

    #[test]
    fn n3_single_value() {
        let zs = zeros_closed_form(3).unwrap();
        assert_eq!(zs.len(), 1);
        assert_eq!(zs.entries[0].branch, Branch::Double);
        assert_eq!(zs.entries[0].value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn n4_unit_pair_and_real_pair() {
        let zs = zeros_closed_form(4).unwrap();
        let k1: Vec<_> = zs.entries.iter().filter(|e| e.k == 1).collect();
        assert_eq!(k1.len(), 2);
        let h = 3f64.sqrt() / 2.0;
        assert!(k1.iter().any(|e| close(e.value, Complex64::new(0.5, h), 1e-14)));
        assert!(k1.iter().any(|e| close(e.value, Complex64::new(0.5, -h), 1e-14)));
        assert!(k1.iter().all(|e| !e.is_real && (e.value.norm() - 1.0).abs() < 1e-14));
        assert!(zs.entries.iter().filter(|e| e.k == 2).all(|e| e.is_real));
    }

    #[test]
    fn n1_is_empty() {
        assert!(zeros_closed_form(1).unwrap().is_empty());
        assert!(zeros_closed_form(0).is_err());
        assert!(cross_validate_zeros(1, 1e-9).unwrap());
    }

    #[test]
    fn hoste_examples() {
        assert!(hoste_check(&zeros_closed_form(2).unwrap(), 1e-9).unwrap());
        assert!(hoste_check(&zeros_closed_form(12).unwrap(), 1e-9).unwrap());
        let bad = ZeroSet {
            n: 0,
            entries: vec![ZeroEntry { k: 1, branch: Branch::Plus, value: Complex64::new(-1.5, 0.0), is_real: true }],
        };
        assert!(!hoste_check(&bad, 1e-9).unwrap());
        assert!(hoste_check(&bad, 0.0).is_err());
    }

    #[test]
    fn numeric_roots_examples() {
        let r = numeric_roots(&LaurentPoly::from_i64s(0, &[1, -3, 1]), 1e-12).unwrap();
        let s5 = 5f64.sqrt();
        for target in [(3.0 - s5) / 2.0, (3.0 + s5) / 2.0] {
            assert!(r.iter().any(|z| close(*z, Complex64::new(target, 0.0), 1e-10)));
        }
        // (1+s)^4 in s
        let quad = numeric_roots(&LaurentPoly::from_i64s(0, &[1, 4, 6, 4, 1]), 1e-9).unwrap();
        assert_eq!(quad.len(), 4);
        assert!(quad.iter().all(|z| close(*z, Complex64::new(-1.0, 0.0), 1e-3)));
        let lin = numeric_roots(&LaurentPoly::from_i64s(0, &[-1, 1]), 1e-9).unwrap();
        assert_eq!(lin, vec![Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn numeric_roots_rejects_degenerate_input() {
        assert_eq!(numeric_roots(&LaurentPoly::zero(), 1e-9), Err(Error::ZeroPolynomial));
        assert!(numeric_roots(&LaurentPoly::from_i64s(3, &[5]), 1e-9).is_err());
        assert!(numeric_roots(&LaurentPoly::from_i64s(0, &[1, 1]), -1.0).is_err());
    }

    #[test]
    fn numeric_roots_ignore_offset() {
        let r = numeric_roots(&LaurentPoly::from_i64s(-5, &[2, -3, 1]), 1e-12).unwrap();
        let mut re: Vec<f64> = r.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] - 1.0).abs() < 1e-10 && (re[1] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn cross_validation_small() {
        for n in [2, 3, 7] {
            let rep = cross_validate_zeros_report(n, 1e-9).unwrap();
            assert!(rep.passed, "{rep:?}");
        }
        let rep3 = cross_validate_zeros_report(3, 1e-9).unwrap();
        assert_eq!(rep3.clusters.len(), 1);
        assert_eq!(rep3.clusters[0].multiplicity, 4);
    }

    /// Peaks strictly inside `(0, pi)` give double zeros, `k = n/2` simple ones.
    fn expected_multiplicity(n: u32, e: &ZeroEntry) -> usize {
        match e.branch {
            Branch::Double => 4,
            _ if 2 * e.k == n => 1,
            _ => 2,
        }
    }

    #[test]
    fn clustered_multiplicities_match_peak_structure() {
        for n in 2..=24 {
            let rep = cross_validate_zeros_report(n, 1e-9).unwrap();
            let zs = zeros_closed_form(n).unwrap();
            for (c, e) in rep.clusters.iter().zip(&zs.entries) {
                assert_eq!(c.multiplicity, expected_multiplicity(n, e), "n={n} k={}", e.k);
            }
            assert_eq!(rep.total_multiplicity, 2 * n as usize - 2);
        }
    }

    #[test]
    fn residual_precision_grows_with_modulus() {
        assert!(residual_precision(10, 198, 2.62) > residual_precision(10, 198, 1.0));
        assert_eq!(residual_precision(0, 10, 0.5) % 64, 0);
    }

    #[test]
    fn multiprecision_residuals_are_tiny_at_n100() {
        let zs = zeros_closed_form(100).unwrap();
        let (res, scale) = closed_form_residuals(&zs).unwrap();
        assert!(res.iter().all(|r| *r < 1e-9 * scale));
    }

    #[test]
    fn multiprecision_detects_a_wrong_zero() {
        // the same residual routine on a point that is not a zero
        let alpha = alexander_weaving_division(4).unwrap();
        let mut mp = Mp::new(256).unwrap();
        let v = (BigFloat::from_f64(0.3, 256), BigFloat::from_i32(0, 256));
        let r = mp.abs_eval(&alpha.values, &v);
        let direct = alpha.to_poly(0).eval_complex(Complex64::new(0.3, 0.0)).unwrap().norm();
        assert!((r - direct).abs() < 1e-12 * direct);
        assert!(r > 1.0);
    }
}
