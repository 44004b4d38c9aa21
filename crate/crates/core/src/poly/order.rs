use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Monomial, WPoly};
use crate::error::{Error, Result};
use crate::exact::{Rational, SparseVec};

/// Which degree the v-variables carry. u-variables always have degree one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// deg v = 2: the grading of the weighted projective space.
    Weighted,
    /// deg v = 1.
    Koszul,
}

impl Grading {
    pub fn weights(self, g: usize) -> Vec<usize> {
        let vw = match self {
            Grading::Weighted => 2,
            Grading::Koszul => 1,
        };
        let mut w = vec![1; g];
        w.extend(std::iter::repeat_n(vw, g - 2));
        w
    }

    pub fn degree(self, g: usize, m: &Monomial) -> usize {
        let (u, v) = m.exps().split_at(g);
        let du: usize = u.iter().map(|&e| e as usize).sum();
        let dv: usize = v.iter().map(|&e| e as usize).sum();
        match self {
            Grading::Weighted => du + 2 * dv,
            Grading::Koszul => du + dv,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieBreak {
    Lex,
    RevLex,
}

/// Graded monomial order with variables ordered by index:
/// `u_0 < ... < u_{g-1} < v_0 < ... < v_{g-3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub grading: Grading,
    pub tie: TieBreak,
}

impl MonomialOrder {
    pub const fn new(grading: Grading, tie: TieBreak) -> Self {
        Self { grading, tie }
    }

    pub fn name(&self) -> &'static str {
        match (self.grading, self.tie) {
            (Grading::Koszul, TieBreak::Lex) => "grlex(koszul)",
            (Grading::Koszul, TieBreak::RevLex) => "grevlex(koszul)",
            (Grading::Weighted, TieBreak::Lex) => "grlex(weighted)",
            (Grading::Weighted, TieBreak::RevLex) => "grevlex(weighted)",
        }
    }

    pub fn cmp(&self, g: usize, a: &Monomial, b: &Monomial) -> Ordering {
        let da = self.grading.degree(g, a);
        let db = self.grading.degree(g, b);
        da.cmp(&db).then_with(|| match self.tie {
            // largest variable decides; larger exponent wins
            TieBreak::Lex => {
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            // smallest variable decides; smaller exponent wins
            TieBreak::RevLex => {
                for (x, y) in a.exps().iter().zip(b.exps()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        })
    }
}

/// All monomials of the given weighted degree in the variables where
/// `allowed[i]` holds.
pub fn enumerate_monomials(weights: &[usize], allowed: &[bool], degree: usize) -> Vec<Monomial> {
    fn rec(i: usize, left: usize, w: &[usize], ok: &[bool], cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        if !ok[i] {
            cur[i] = 0;
            rec(i + 1, left, w, ok, cur, out);
            return;
        }
        for e in 0..=left / w[i] {
            cur[i] = e as u16;
            rec(i + 1, left - e * w[i], w, ok, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u16; weights.len()];
    rec(0, degree, weights, allowed, &mut cur, &mut out);
    out
}

/// Ordered list of the monomials of one degree, largest first under the
/// graded lexicographic order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub g: usize,
    pub grading: Grading,
    pub degree: usize,
    pub u_only: bool,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(g: usize, grading: Grading, degree: usize, u_only: bool) -> Self {
        let weights = grading.weights(g);
        let allowed: Vec<bool> = (0..2 * g - 2).map(|i| !u_only || i < g).collect();
        let mut monomials = enumerate_monomials(&weights, &allowed, degree);
        let order = MonomialOrder::new(grading, TieBreak::Lex);
        monomials.sort_by(|a, b| order.cmp(g, b, a));
        Self::from_sorted(g, grading, degree, u_only, monomials)
    }

    /// Basis with a caller-chosen column order.
    pub fn from_sorted(g: usize, grading: Grading, degree: usize, u_only: bool, monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { g, grading, degree, u_only, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `p` in this basis.
    pub fn coords(&self, p: &WPoly) -> Result<SparseVec> {
        let mut v: SparseVec = p
            .terms()
            .map(|(m, c)| self.index_of(m).map(|i| (i, c.clone())).ok_or(Error::NotHomogeneous))
            .collect::<Result<_>>()?;
        v.sort_by_key(|(i, _)| *i);
        Ok(v)
    }

    pub fn poly(&self, coords: &SparseVec) -> WPoly {
        WPoly::from_terms(
            self.g,
            coords.iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.monomials[*i].clone(), c.clone())),
        )
    }

    pub fn dense_coords(&self, p: &WPoly) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        for (i, c) in self.coords(p)? {
            v[i] = c;
        }
        Ok(v)
    }
}
