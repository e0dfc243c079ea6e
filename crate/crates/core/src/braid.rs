//! Three-strand braid words and their reduced Burau images.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Variable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Sigma1,
    Sigma2,
}

impl Generator {
    pub fn from_index(i: i64) -> Result<Self> {
        match i {
            1 => Ok(Generator::Sigma1),
            2 => Ok(Generator::Sigma2),
            other => Err(Error::InvalidGenerator(other)),
        }
    }

    pub fn index(self) -> i64 {
        match self {
            Generator::Sigma1 => 1,
            Generator::Sigma2 => 2,
        }
    }
}

/// One syllable `sigma_g^exponent` of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i64,
}

/// A word in the generators of B3. Exponents are nonzero; adjacent letters
/// on the same generator are kept as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord3 {
    letters: Vec<Letter>,
}

impl BraidWord3 {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.iter().any(|l| l.exponent == 0) {
            return Err(Error::ZeroExponent);
        }
        Ok(BraidWord3 { letters })
    }

    pub fn empty() -> Self {
        BraidWord3::default()
    }

    /// Signed generator list: `g > 0` is `sigma_g`, `-g` is its inverse.
    pub fn from_signed(gens: &[i64]) -> Result<Self> {
        let letters = gens
            .iter()
            .map(|&g| {
                if g == 0 {
                    return Err(Error::InvalidGenerator(0));
                }
                Ok(Letter {
                    generator: Generator::from_index(g.abs())?,
                    exponent: g.signum(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord3 { letters })
    }

    /// `(sigma_1^m sigma_2^-m)^n`.
    pub fn weaving(n: u32, m: u32) -> Self {
        let m = m as i64;
        let mut letters = Vec::with_capacity(2 * n as usize);
        for _ in 0..n {
            letters.push(Letter { generator: Generator::Sigma1, exponent: m });
            letters.push(Letter { generator: Generator::Sigma2, exponent: -m });
        }
        BraidWord3 { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent).sum()
    }

    pub fn inverse(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter { generator: l.generator, exponent: -l.exponent })
            .collect();
        BraidWord3 { letters }
    }

    pub fn concat(&self, other: &BraidWord3) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord3 { letters }
    }

    /// Cyclic rotation by `k` letters (a conjugate of the same braid).
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord3 { letters }
    }
}

impl FromStr for BraidWord3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord3::from_signed(&gens)
    }
}

impl fmt::Display for BraidWord3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            let sign = l.exponent.signum();
            for _ in 0..l.exponent.unsigned_abs() {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}", sign * l.generator.index())?;
            }
        }
        Ok(())
    }
}

/// A 2x2 matrix over Laurent polynomials in a recorded variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
    pub variable: Variable,
}

impl BurauMatrix {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly, variable: Variable) -> Self {
        BurauMatrix { a, b, c, d, variable }
    }

    pub fn identity(variable: Variable) -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one(), variable)
    }

    /// Image of a single generator. Only `T` and `S` are meaningful.
    pub fn generator(g: Generator, variable: Variable) -> Self {
        let v = match variable {
            Variable::T => LaurentPoly::from_i64s(1, &[-1]), // -t
            Variable::S => LaurentPoly::from_i64s(1, &[1]),  // s = -t
            Variable::X => panic!("Burau matrices are defined over t or s"),
        };
        let one = LaurentPoly::one();
        let zero = LaurentPoly::zero();
        match g {
            Generator::Sigma1 => Self::new(v, one.clone(), zero, one, variable),
            // [[1, 0], [t, -t]]; the lower-left entry is -(-t).
            Generator::Sigma2 => Self::new(one, zero, -&v, v, variable),
        }
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.a + &self.d
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn mul(&self, rhs: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.variable, rhs.variable, "mixed Burau variables");
        BurauMatrix {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
            variable: self.variable,
        }
    }

    /// Exact inverse via the adjugate; the determinant must be `±v^k`.
    pub fn inverse(&self) -> Result<BurauMatrix> {
        let det = self.det();
        let (sign, k) = det.as_unit().ok_or(Error::NotInvertible)?;
        let inv = LaurentPoly::monomial(BigInt::from(sign), -k);
        Ok(BurauMatrix {
            a: &self.d * &inv,
            b: -(&self.b * &inv),
            c: -(&self.c * &inv),
            d: &self.a * &inv,
            variable: self.variable,
        })
    }

    /// `M^n` by binary exponentiation.
    pub fn pow(&self, mut n: u64) -> BurauMatrix {
        let mut base = self.clone();
        let mut acc = BurauMatrix::identity(self.variable);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Apply `v -> -v` entrywise, swapping the `t` and `s` conventions.
    pub fn substitute_negate(&self) -> BurauMatrix {
        let variable = match self.variable {
            Variable::T => Variable::S,
            Variable::S => Variable::T,
            Variable::X => Variable::X,
        };
        BurauMatrix {
            a: self.a.substitute_negate(),
            b: self.b.substitute_negate(),
            c: self.c.substitute_negate(),
            d: self.d.substitute_negate(),
            variable,
        }
    }
}

/// `[m] = 1 + s + ... + s^(m-1)`.
pub fn q_bracket(m: u32) -> LaurentPoly {
    LaurentPoly::new(0, vec![BigInt::one(); m as usize])
}

/// Closed-form `psi_s(sigma_g^m)` in the variable `s`.
pub fn burau_generator_power(g: Generator, m: i64) -> Result<BurauMatrix> {
    if m == 0 {
        return Err(Error::ZeroExponent);
    }
    let k = m.unsigned_abs() as u32;
    let bracket = q_bracket(k);
    let sk = LaurentPoly::power_of_var(k as i64);
    let s_inv_k = LaurentPoly::power_of_var(-(k as i64));
    let one = LaurentPoly::one();
    let zero = LaurentPoly::zero();
    let mat = match (g, m > 0) {
        // [[s^m, [m]], [0, 1]]
        (Generator::Sigma1, true) => BurauMatrix::new(sk, bracket, zero, one, Variable::S),
        // [[s^-k, -s^-k [k]], [0, 1]]
        (Generator::Sigma1, false) => {
            BurauMatrix::new(s_inv_k.clone(), -(&s_inv_k * &bracket), zero, one, Variable::S)
        }
        // [[1, 0], [-s [m], s^m]]
        (Generator::Sigma2, true) => {
            BurauMatrix::new(one, zero, -(bracket.shift(1)), sk, Variable::S)
        }
        // s^-k [[s^k, 0], [s [k], 1]]
        (Generator::Sigma2, false) => {
            BurauMatrix::new(one, zero, &bracket.shift(1) * &s_inv_k, s_inv_k, Variable::S)
        }
    };
    Ok(mat)
}

fn letter_matrix(l: &Letter, variable: Variable) -> BurauMatrix {
    let g = BurauMatrix::generator(l.generator, variable);
    let base = if l.exponent > 0 {
        g
    } else {
        g.inverse().expect("Burau generators are invertible")
    };
    base.pow(l.exponent.unsigned_abs())
}

/// `psi_t(w)`: ordered product of generator images (identity for the empty word).
pub fn burau_of_word(w: &BraidWord3) -> BurauMatrix {
    burau_of_word_in(w, Variable::T)
}

/// `psi(w)` in either `t` or `s`, multiplied letter by letter.
pub fn burau_of_word_in(w: &BraidWord3, variable: Variable) -> BurauMatrix {
    w.letters()
        .iter()
        .fold(BurauMatrix::identity(variable), |acc, l| acc.mul(&letter_matrix(l, variable)))
}
