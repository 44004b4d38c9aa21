use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Coeff, Rational};
use crate::error::{Error, Result};

/// Element of Q[pi]/(pi^N): `coeffs[k]` is the coefficient of pi^k.
///
/// Binary operations on scalars with different bounds work modulo the
/// smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedScalar {
    coeffs: Vec<Rational>,
}

impl TruncatedScalar {
    pub fn zero(order_bound: usize) -> Self {
        assert!(order_bound > 0, "order bound must be positive");
        Self { coeffs: vec![Rational::zero(); order_bound] }
    }

    pub fn constant(c: Rational, order_bound: usize) -> Self {
        let mut s = Self::zero(order_bound);
        s.coeffs[0] = c;
        s
    }

    /// `c * pi^k`, which is zero when `k >= order_bound`.
    pub fn monomial(c: Rational, k: usize, order_bound: usize) -> Self {
        let mut s = Self::zero(order_bound);
        if k < order_bound {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "order bound must be positive");
        Self { coeffs }
    }

    pub fn order_bound(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest k with pi^k dividing the scalar; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, m: usize) -> Self {
        assert!(m > 0 && m <= self.order_bound());
        Self { coeffs: self.coeffs[..m].to_vec() }
    }

    /// Multiply by pi^k, dropping the top k coefficients.
    pub fn mul_pi_pow(&self, k: usize) -> Self {
        let n = self.order_bound();
        let mut out = Self::zero(n);
        for i in 0..n.saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Exact division by pi^k. The result is known modulo pi^(N-k).
    pub fn div_pi_pow(&self, k: usize) -> Result<Self> {
        let n = self.order_bound();
        if k >= n {
            return Err(Error::InexactDivision(format!(
                "dividing by pi^{k} leaves no precision at order bound {n}"
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!(
                "valuation {:?} is below {k}",
                self.valuation()
            )));
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Substitute pi -> pi^2 (ramified double cover of the base).
    pub fn ramify(&self) -> Self {
        let n = 2 * self.order_bound() - 1;
        let mut out = Self::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[2 * k] = c.clone();
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let n = self.order_bound().min(other.order_bound());
        Self { coeffs: (0..n).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect() }
    }
}

impl Add for TruncatedScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl Sub for TruncatedScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Mul for TruncatedScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let n = self.order_bound().min(rhs.order_bound());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for TruncatedScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Coeff for TruncatedScalar {
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn scale_int(&self, k: i64) -> Self {
        self.scale_rat(&Rational::from_integer(k.into()))
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn scalar(v: &[i64]) -> TruncatedScalar {
        TruncatedScalar::from_coeffs(v.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn product_truncates() {
        // (1 + pi)^2 = 1 + 2pi + pi^2, truncated at pi^2
        let a = scalar(&[1, 1]);
        assert_eq!(a.clone() * a, scalar(&[1, 2]));
    }

    #[test]
    fn pi_shift_drops_top() {
        let a = scalar(&[1, 2, 3]);
        assert_eq!(a.mul_pi_pow(1), scalar(&[0, 1, 2]));
        assert_eq!(a.mul_pi_pow(5), scalar(&[0, 0, 0]));
    }

    #[test]
    fn exact_division() {
        let a = scalar(&[0, 0, 5, 7]);
        assert_eq!(a.div_pi_pow(2).unwrap(), scalar(&[5, 7]));
        assert!(a.div_pi_pow(3).is_err());
        assert_eq!(a.valuation(), Some(2));
    }

    #[test]
    fn ramify_doubles_exponents() {
        assert_eq!(scalar(&[1, 2]).ramify(), scalar(&[1, 0, 2]));
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(
            a in prop::collection::vec(-9i64..9, 4),
            b in prop::collection::vec(-9i64..9, 4),
            c in prop::collection::vec(-9i64..9, 4),
        ) {
            let (a, b, c) = (scalar(&a), scalar(&b), scalar(&c));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
        }

        #[test]
        fn pi_multiplication_matches_shift(a in prop::collection::vec(-9i64..9, 5)) {
            let a = scalar(&a);
            let pi = TruncatedScalar::monomial(rat(1), 1, 5);
            prop_assert_eq!(pi * a.clone(), a.mul_pi_pow(1));
        }
    }
}
