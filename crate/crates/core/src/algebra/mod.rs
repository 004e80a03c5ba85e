//! Exact arithmetic in multivariate polynomial rings and their fraction
//! fields over Q and F_p, optionally extended by the parameter `a` and the
//! quadratic element `alpha` with `alpha^2 = a`.

pub mod expr;
pub mod field;
pub mod gcd;
pub mod gf2e;
pub mod poly;
pub mod ratfunc;
pub mod vars;

pub use expr::{parse_expr, Expr};
pub use field::{Coef, CoeffField, DEFAULT_SPECIALIZE_PRIME};
pub use gf2e::Gf2e;
pub use poly::MultiPoly;
pub use ratfunc::{Point, RatFunc};
pub use vars::VarTable;

use std::fmt;

/// Errors from the algebra layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlgebraError {
    /// Operands come from different fields or variable tables.
    ContextMismatch,
    DivisionByZero,
    /// A substitution image makes a denominator vanish identically.
    SubstitutionUndefined(String),
    /// A homomorphism lacks an image for a variable that occurs.
    MissingImage(String),
    /// A specialization point hits a pole; the caller should resample.
    BadPoint(String),
    UnknownVariable(String),
    InvalidField(String),
    InvalidArgument(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::ContextMismatch => write!(f, "operands share no common field/variable table"),
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
            AlgebraError::SubstitutionUndefined(d) => write!(f, "substitution undefined: {d}"),
            AlgebraError::MissingImage(v) => write!(f, "no image supplied for variable {v}"),
            AlgebraError::BadPoint(d) => write!(f, "bad specialization point: {d}"),
            AlgebraError::UnknownVariable(v) => write!(f, "unknown variable {v}"),
            AlgebraError::InvalidField(d) => write!(f, "invalid field: {d}"),
            AlgebraError::InvalidArgument(d) => write!(f, "invalid argument: {d}"),
        }
    }
}

impl std::error::Error for AlgebraError {}
