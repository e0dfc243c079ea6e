//! Exact knot invariants of closed 3-braids and closed forms for weaving links.
//!
//! Everything is computed over the integers: Laurent polynomials carry
//! arbitrary-precision coefficients, and rational functions never appear.
//! Floating point is confined to [`zeros`].

pub mod braid;
pub mod combinat;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod shape;
pub mod weaving;
pub mod zeros;

pub use braid::{burau_of_word, burau_of_word_in, BraidWord3, BurauMatrix, Generator, Letter};
pub use combinat::{CoeffRow, RowFamily};
pub use error::{Error, Result};
pub use invariants::{alexander, determinant, jones, jones_preferred, InvariantValue};
pub use poly::{GaussianInt, LaurentPoly, Variable};
pub use shape::{trapezoid_check, TrapezoidReport};
pub use weaving::{AlexanderRoute, WeavingSpec};
pub use zeros::{ZeroEntry, ZeroSet};

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
