use std::collections::BTreeMap;

use super::Monomial;
use crate::exact::Coeff;

/// Sparse multivariate polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.vanishes() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.vanishes() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            out.add_term(a.mul(m), ca.clone() * c.clone());
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial, &C) -> bool) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, c)| keep(m, c)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c.scale_int(e as i64));
        }
        out
    }
}
