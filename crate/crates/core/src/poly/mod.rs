//! Binary forms in (x0, x1), weighted polynomials in (u, v), the Veronese
//! pullback and monomial bookkeeping.

mod binary;
mod monomial;
mod mpoly;
mod order;
mod wpoly;

pub use binary::{greedy_lift, pullback_in_degree, quartic_lift, veronese_pullback, BinaryForm};
pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use order::{enumerate_monomials, Grading, MonomialBasis, MonomialOrder, TieBreak};
pub use wpoly::{Var, WPoly};
