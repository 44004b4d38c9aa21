use std::fmt;

use super::{Grading, MPoly, Monomial, MonomialOrder};
use crate::exact::{format_rational, Coeff, Rational};

/// A variable of the weighted projective space: `u_i` (weight 1) or `v_j` (weight 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U(usize),
    V(usize),
}

/// Polynomial in `u_0..u_{g-1}` and `v_0..v_{g-3}`.
///
/// Variables are stored in one exponent vector, u's first; the degree of
/// a monomial depends on the [`Grading`] it is viewed in.
#[derive(Clone, Debug, PartialEq)]
pub struct WPoly<C = Rational> {
    g: usize,
    poly: MPoly<C>,
}

impl<C: Coeff> WPoly<C> {
    pub fn zero(g: usize) -> Self {
        assert!(g >= 3, "genus must be at least 3");
        Self { g, poly: MPoly::zero(2 * g - 2) }
    }

    pub fn from_terms(g: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        assert!(g >= 3, "genus must be at least 3");
        Self { g, poly: MPoly::from_terms(2 * g - 2, terms) }
    }

    pub fn from_mpoly(g: usize, poly: MPoly<C>) -> Self {
        assert_eq!(poly.nvars(), 2 * g - 2);
        Self { g, poly }
    }

    pub fn term(g: usize, m: Monomial, c: C) -> Self {
        Self::from_terms(g, [(m, c)])
    }

    pub fn var_index(g: usize, var: Var) -> usize {
        match var {
            Var::U(i) => {
                assert!(i < g, "u_{i} out of range for g={g}");
                i
            }
            Var::V(j) => {
                assert!(j + 2 < g, "v_{j} out of range for g={g}");
                g + j
            }
        }
    }

    pub fn var_monomial(g: usize, var: Var) -> Monomial {
        Monomial::var(2 * g - 2, Self::var_index(g, var))
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn mpoly(&self) -> &MPoly<C> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.poly.terms()
    }

    pub fn num_terms(&self) -> usize {
        self.poly.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.poly.coeff(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        self.poly.add_term(m, c);
    }

    /// Number of v-factors of a monomial.
    pub fn v_degree_of(g: usize, m: &Monomial) -> usize {
        m.exps()[g..].iter().map(|&e| e as usize).sum()
    }

    pub fn u_degree_of(g: usize, m: &Monomial) -> usize {
        m.exps()[..g].iter().map(|&e| e as usize).sum()
    }

    /// The common degree of all terms, `None` for zero or inhomogeneous polynomials.
    pub fn degree(&self, grading: Grading) -> Option<usize> {
        let mut it = self.terms().map(|(m, _)| grading.degree(self.g, m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, grading: Grading) -> bool {
        self.is_zero() || self.degree(grading).is_some()
    }

    pub fn is_u_only(&self) -> bool {
        self.terms().all(|(m, _)| Self::v_degree_of(self.g, m) == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { g: self.g, poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { g: self.g, poly: self.poly.sub(&other.poly) }
    }

    pub fn neg(&self) -> Self {
        Self { g: self.g, poly: self.poly.neg() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { g: self.g, poly: self.poly.mul(&other.poly) }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { g: self.g, poly: self.poly.mul_monomial(m) }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        Self { g: self.g, poly: self.poly.mul_term(m, c) }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { g: self.g, poly: self.poly.map_coeffs(|c| c.scale_rat(r)) }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> WPoly<D> {
        WPoly {
            g: self.g,
            poly: MPoly::from_terms(self.poly.nvars(), self.terms().map(|(m, c)| (m.clone(), f(c)))),
        }
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial, &C) -> bool) -> Self {
        Self { g: self.g, poly: self.poly.filter_terms(keep) }
    }

    /// Terms with exactly `k` v-factors.
    pub fn v_part(&self, k: usize) -> Self {
        let g = self.g;
        self.filter_terms(|m, _| Self::v_degree_of(g, m) == k)
    }

    pub fn partial(&self, var: Var) -> Self {
        Self { g: self.g, poly: self.poly.partial(Self::var_index(self.g, var)) }
    }

    /// Negate the v-variables.
    pub fn negate_v(&self) -> Self {
        let g = self.g;
        let mut out = Self::zero(g);
        for (m, c) in self.terms() {
            let c = if Self::v_degree_of(g, m) % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms().max_by(|a, b| order.cmp(self.g, a.0, b.0))
    }
}

impl WPoly<Rational> {
    pub fn u(g: usize, i: usize) -> Self {
        Self::term(g, Self::var_monomial(g, Var::U(i)), Rational::from_integer(1.into()))
    }

    pub fn v(g: usize, j: usize) -> Self {
        Self::term(g, Self::var_monomial(g, Var::V(j)), Rational::from_integer(1.into()))
    }

    pub fn constant(g: usize, c: Rational) -> Self {
        Self::term(g, Monomial::one(2 * g - 2), c)
    }

    /// Monomial from explicit u- and v-exponents.
    pub fn monomial(g: usize, u: &[u16], v: &[u16]) -> Monomial {
        assert!(u.len() <= g && v.len() + 2 <= g);
        let mut e = vec![0u16; 2 * g - 2];
        e[..u.len()].copy_from_slice(u);
        e[g..g + v.len()].copy_from_slice(v);
        Monomial(e)
    }
}

fn fmt_monomial(g: usize, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = if i < g { format!("u{i}") } else { format!("v{}", i - g) };
        parts.push(if e == 1 { name } else { format!("{name}^{e}") });
    }
    parts.join("*")
}

impl fmt::Display for WPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let mono = fmt_monomial(self.g, m);
            let (neg, abs) = if *c < Rational::from_integer(0.into()) { (true, -c.clone()) } else { (false, c.clone()) };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let one = abs == Rational::from_integer(1.into());
            let body = match (mono.is_empty(), one) {
                (true, _) => format_rational(&abs),
                (false, true) => mono,
                (false, false) => format!("{}*{}", format_rational(&abs), mono),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn partial_examples() {
        let g = 3;
        let u = |i| WPoly::u(g, i);
        let v0 = WPoly::v(g, 0);
        assert_eq!(u(0).mul(&u(2)).partial(Var::U(0)), u(2));
        assert_eq!(u(1).mul(&u(1)).partial(Var::U(1)), u(1).scale(&rat(2)));
        assert_eq!(v0.mul(&v0).partial(Var::V(0)), v0.scale(&rat(2)));
    }

    #[test]
    fn degrees_by_grading() {
        let g = 4;
        let p = WPoly::u(g, 0).mul(&WPoly::v(g, 1));
        assert_eq!(p.degree(Grading::Weighted), Some(3));
        assert_eq!(p.degree(Grading::Koszul), Some(2));
        let q = p.add(&WPoly::u(g, 1).mul(&WPoly::u(g, 2)));
        assert_eq!(q.degree(Grading::Weighted), None);
        assert_eq!(q.degree(Grading::Koszul), Some(2));
    }

    #[test]
    fn display() {
        let g = 3;
        let p = WPoly::u(g, 0).mul(&WPoly::u(g, 2)).sub(&WPoly::u(g, 1).mul(&WPoly::u(g, 1)));
        assert_eq!(p.to_string(), "-u1^2 + u0*u2");
    }

    fn small_poly(g: usize) -> impl Strategy<Value = WPoly> {
        prop::collection::vec((prop::collection::vec(0u16..3, 2 * g - 2), -4i64..5), 0..5).prop_map(move |ts| {
            WPoly::from_terms(g, ts.into_iter().map(|(e, c)| (Monomial(e), rat(c))))
        })
    }

    proptest! {
        #[test]
        fn leibniz_rule(p in small_poly(4), q in small_poly(4), i in 0usize..6) {
            let var = if i < 4 { Var::U(i) } else { Var::V(i - 4) };
            let lhs = p.mul(&q).partial(var);
            let rhs = p.partial(var).mul(&q).add(&p.mul(&q.partial(var)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
