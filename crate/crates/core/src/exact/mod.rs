//! Exact arithmetic: rationals, the truncated ring Q[pi]/(pi^N), and
//! dense/sparse linear algebra over Q.

mod matrix;
mod rational;
mod sparse;
mod truncated;

pub use matrix::{normalize_first_nonzero, RatMatrix, Rref, Solution};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use sparse::{dense_to_sparse, solve_sparse, unit, Echelon, SparseVec};
pub use truncated::TruncatedScalar;

/// Coefficient rings usable inside polynomials.
pub trait Coeff:
    Clone
    + PartialEq
    + std::fmt::Debug
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn vanishes(&self) -> bool;
    fn scale_int(&self, k: i64) -> Self;
    fn scale_rat(&self, r: &Rational) -> Self;
}

impl Coeff for Rational {
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn scale_int(&self, k: i64) -> Self {
        self * Rational::from_integer(k.into())
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        self * r
    }
}
