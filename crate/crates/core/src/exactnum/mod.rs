//! Exact scalars: rationals, cyclotomic fields, Laurent polynomials in `q`
//! and the rational functions they generate.

pub mod cyclotomic;
mod densepoly;
pub(crate) use densepoly::FieldCoeff;
pub mod laurent;
pub mod rational;
pub mod ratfunc;

pub use cyclotomic::{cyclotomic_mul, root_of_unity, totient, CyclotomicElement};
pub use laurent::{integrality_check, LaurentPolynomial};
pub use ratfunc::RationalFunction;
pub use rational::{rat, rat_from_str, rat_int, rat_to_string, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic orders {0} and {1} are incompatible")]
    OrderMismatch(u32, u32),
    #[error("expected {expected} coordinates for order {order}, got {got}")]
    CoordinateLength {
        order: u32,
        expected: usize,
        got: usize,
    },
    #[error("exponent {0}/2 is not an integer")]
    NonIntegralExponent(i64),
    #[error("denominator vanishes at the requested value")]
    PoleAtValue,
    #[error("cannot evaluate a half-step polynomial")]
    HalfStepEvaluation,
}
