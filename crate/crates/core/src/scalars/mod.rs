//! The coefficient ring used by every other module.
//!
//! A [`QField`] value is a reduced fraction of integer polynomials in the
//! single variable `s`, where `s` stands for `q^(1/2)`. A [`Scalar`] is a
//! finitely supported sum of Laurent monomials in the variables `a`, `a1`,
//! `a2`, `xi` with `QField` coefficients. Both are kept in a unique
//! canonical form, so structural equality is semantic equality.
//!
//! Exponents of `a`, `a1`, `a2` are stored doubled, so the half-integer
//! powers arising from framing factors are exact.

mod parse;
mod poly;
mod qfield;
mod scalar;

pub use parse::parse_scalar;
pub use poly::ZPoly;
pub use qfield::QField;
pub use scalar::{Mono, Scalar, Var};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScalarError {
    #[error("division by zero: denominator {0} vanishes")]
    DivisionByZero(String),
    #[error("substitution for {var} requires an exact square root of {value}")]
    NoSquareRoot { var: Var, value: String },
    #[error("cannot divide by a scalar with more than one term: {0}")]
    NonMonomialDivisor(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The quantum integer `[n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))`.
///
/// `[0] = 0` and `[-n] = -[n]`.
pub fn quantum_integer(n: i64) -> Scalar {
    Scalar::from_qfield(QField::quantum_integer(n))
}

/// The quantum bracket `{n} = s^n - s^(-n)`, so `{0} = 0` and `{-n} = -{n}`.
pub fn quantum_bracket(n: i64) -> Scalar {
    Scalar::from_qfield(QField::brace(n))
}
