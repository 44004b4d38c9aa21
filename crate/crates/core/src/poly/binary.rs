use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Monomial, WPoly};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Homogeneous form of degree `m` in x0, x1; `coeffs[a]` multiplies `x0^a x1^(m-a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryForm {
    degree: usize,
    #[serde(with = "crate::json::rational_vec")]
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: vec![Rational::zero(); degree + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        Self { degree: coeffs.len() - 1, coeffs }
    }

    /// `c * x0^a * x1^(degree - a)`.
    pub fn monomial(a: usize, degree: usize, c: Rational) -> Self {
        assert!(a <= degree);
        let mut f = Self::zero(degree);
        f.coeffs[a] = c;
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize) -> &Rational {
        &self.coeffs[a]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Self { degree: self.degree, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Self { degree: self.degree, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { degree: self.degree, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// `self * x0^a * x1^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.degree + a + b);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i + a] = c.clone();
        }
        out
    }

    /// Exact quotient by `x0^a * x1^b`.
    pub fn div_monomial(&self, a: usize, b: usize) -> Result<Self> {
        if a + b > self.degree {
            return Err(Error::DegreeMismatch { expected: a + b, found: self.degree });
        }
        let m = self.degree - a - b;
        // x0-exponent i must satisfy a <= i <= a + m
        let inexact = self.coeffs.iter().enumerate().any(|(i, c)| !c.is_zero() && (i < a || i > a + m));
        if inexact {
            return Err(Error::Internal(format!("form is not divisible by x0^{a} x1^{b}")));
        }
        Ok(Self { degree: m, coeffs: self.coeffs[a..=a + m].to_vec() })
    }

    /// Partial derivative with respect to x0.
    pub fn d_x0(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.degree).map(|a| &self.coeffs[a] * Rational::from_integer(a.into())).collect();
        Self { degree: self.degree - 1, coeffs }
    }

    /// Partial derivative with respect to x1.
    pub fn d_x1(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let m = self.degree;
        let coeffs = (0..m).map(|a| &self.coeffs[a] * Rational::from_integer((m - a).into())).collect();
        Self { degree: m - 1, coeffs }
    }

    pub fn eval(&self, x0: &Rational, x1: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * pow(x0, a) * pow(x1, self.degree - a);
        }
        acc
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

/// Substitute `u_i -> x0^i x1^(g-1-i)` into a u-polynomial that is
/// homogeneous of degree `d`, giving a form of degree `d(g-1)`.
/// The zero polynomial is accepted in any degree.
pub fn pullback_in_degree(p: &WPoly, d: usize) -> Result<BinaryForm> {
    let g = p.g();
    let n = g - 1;
    let mut out = BinaryForm::zero(d * n);
    for (m, c) in p.terms() {
        if WPoly::<Rational>::v_degree_of(g, m) > 0 {
            return Err(Error::InvolvesV);
        }
        if m.degree() != d {
            return Err(Error::NotHomogeneous);
        }
        let a: usize = m.exps()[..g].iter().enumerate().map(|(i, &e)| i * e as usize).sum();
        out.coeffs[a] += c;
    }
    Ok(out)
}

/// Veronese pullback of a nonzero homogeneous u-polynomial; the zero
/// polynomial pulls back to the zero form of degree 0.
pub fn veronese_pullback(p: &WPoly) -> Result<BinaryForm> {
    if !p.is_u_only() {
        return Err(Error::InvolvesV);
    }
    if p.is_zero() {
        return Ok(BinaryForm::zero(0));
    }
    let d = p.terms().next().map(|(m, _)| m.degree()).unwrap_or(0);
    pullback_in_degree(p, d)
}

/// Degree-`d` u-polynomial pulling back to `f`, built monomial by
/// monomial: `x0^k x1^(d(g-1)-k)` lifts to `u_{a_1} ... u_{a_d}` with
/// `a_t = min(g-1, k - a_1 - ... - a_{t-1})`.
pub fn greedy_lift(f: &BinaryForm, g: usize, d: usize) -> Result<WPoly> {
    let n = g - 1;
    if f.degree() != d * n {
        return Err(Error::DegreeMismatch { expected: d * n, found: f.degree() });
    }
    let mut out = WPoly::zero(g);
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = vec![0u16; 2 * g - 2];
        let mut left = k;
        for _ in 0..d {
            let a = left.min(n);
            e[a] += 1;
            left -= a;
        }
        out.add_term(Monomial(e), c.clone());
    }
    Ok(out)
}

pub fn quartic_lift(f: &BinaryForm, g: usize) -> Result<WPoly> {
    greedy_lift(f, g, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn u(g: usize, i: usize) -> WPoly {
        WPoly::u(g, i)
    }

    #[test]
    fn pullback_examples() {
        let f = veronese_pullback(&u(3, 1)).unwrap();
        assert_eq!(f, BinaryForm::monomial(1, 2, rat(1)));

        let conic = u(3, 0).mul(&u(3, 2)).sub(&u(3, 1).mul(&u(3, 1)));
        let f = veronese_pullback(&conic).unwrap();
        assert_eq!(f, BinaryForm::zero(4));

        // x1^3 * x0^3 - x0 x1^2 * x0^2 x1 = 0
        let q = u(4, 0).mul(&u(4, 3)).sub(&u(4, 1).mul(&u(4, 2)));
        assert_eq!(veronese_pullback(&q).unwrap(), BinaryForm::zero(6));
    }

    #[test]
    fn pullback_errors() {
        assert_eq!(veronese_pullback(&WPoly::v(3, 0)), Err(Error::InvolvesV));
        let p = u(3, 0).add(&u(3, 1).mul(&u(3, 1)));
        assert_eq!(veronese_pullback(&p), Err(Error::NotHomogeneous));
    }

    #[test]
    fn quartic_lift_examples() {
        let g = 3;
        let lift = |k: usize| quartic_lift(&BinaryForm::monomial(k, 8, rat(1)), g).unwrap();
        let pow4 = |i| {
            let x = u(g, i);
            x.mul(&x).mul(&x).mul(&x)
        };
        assert_eq!(lift(8), pow4(2));
        assert_eq!(lift(0), pow4(0));
        let expected = u(g, 2).mul(&u(g, 2)).mul(&u(g, 1)).mul(&u(g, 0));
        assert_eq!(lift(5), expected);
        assert_eq!(veronese_pullback(&expected).unwrap(), BinaryForm::monomial(5, 8, rat(1)));
        assert!(quartic_lift(&BinaryForm::zero(7), g).is_err());
    }

    #[test]
    fn exact_monomial_division() {
        let f = BinaryForm::from_coeffs(vec![rat(0), rat(2), rat(3), rat(0)]);
        assert_eq!(f.div_monomial(1, 1).unwrap(), BinaryForm::from_coeffs(vec![rat(2), rat(3)]));
        assert!(f.div_monomial(2, 0).is_err());
    }

    fn u_poly(g: usize, d: usize) -> impl Strategy<Value = WPoly> {
        prop::collection::vec((prop::collection::vec(0usize..g, d), -4i64..5), 0..5).prop_map(move |ts| {
            let mut p = WPoly::zero(g);
            for (idx, c) in ts {
                let mut e = vec![0u16; 2 * g - 2];
                for i in idx {
                    e[i] += 1;
                }
                p.add_term(Monomial(e), rat(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn pullback_is_ring_homomorphism(p in u_poly(4, 2), q in u_poly(4, 2), r in u_poly(4, 1)) {
            let pb = |x: &WPoly, d| pullback_in_degree(x, d).unwrap();
            prop_assert_eq!(pb(&p.add(&q), 2), pb(&p, 2).add(&pb(&q, 2)).unwrap());
            prop_assert_eq!(pb(&p.mul(&r), 3), pb(&p, 2).mul(&pb(&r, 1)));
        }

        #[test]
        fn quartic_lift_is_right_inverse(g in 3usize..7, seed in prop::collection::vec(-5i64..6, 25)) {
            let m = 4 * (g - 1);
            let f = BinaryForm::from_coeffs((0..=m).map(|i| rat(seed[i % seed.len()])).collect());
            let p = quartic_lift(&f, g).unwrap();
            prop_assert_eq!(pullback_in_degree(&p, 4).unwrap(), f);
        }
    }
}
