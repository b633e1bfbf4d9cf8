//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! [`CycloNumber`] stores an element over the power basis of Q(ζ_N) reduced
//! modulo the N-th cyclotomic polynomial, with arbitrary-precision rational
//! coefficients. Operations between different conductors embed into the lcm.

mod approx;
mod field;
mod literal;
mod number;
mod sqrt;

pub use approx::{Approx, MAX_DIGITS};
pub use field::{common_conductor, totient};
pub use number::CycloNumber;
pub use sqrt::quadratic_conductor;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot embed conductor {from} into {to}: not a multiple")]
    NotAMultiple { from: u32, to: u32 },
    #[error("bad cyclotomic literal: {0}")]
    BadLiteral(String),
}

/// ζ_N^k.
pub fn root_of_unity(n: u32, k: i64) -> CycloNumber {
    CycloNumber::root_of_unity(n, k)
}

/// √n as an exact cyclotomic number (positive for n > 0).
pub fn sqrt_int(n: i64) -> CycloNumber {
    CycloNumber::sqrt_int(n)
}

/// Rational shorthand p/q.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}
