use num_traits::One;
use serde::Serialize;

use super::XgIdeal;
use crate::exact::Rational;
use crate::poly::{enumerate_monomials, Grading, Monomial, MonomialOrder, TieBreak, WPoly};

#[derive(Clone, Debug)]
pub struct GroebnerResult {
    pub order: MonomialOrder,
    /// Monic, in insertion order: the input first, then new elements.
    pub basis: Vec<WPoly>,
    /// Every S-polynomial of the input reduces to zero modulo the input.
    pub input_is_groebner: bool,
    /// No pair was skipped by the degree cap.
    pub complete: bool,
}

impl GroebnerResult {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        let g = self.basis.first().map(WPoly::g).unwrap_or(3);
        self.basis.iter().map(|p| lead(p, &self.order, g).0).collect()
    }
}

fn lead(p: &WPoly, order: &MonomialOrder, _g: usize) -> (Monomial, Rational) {
    let (m, c) = p.leading(order).expect("nonzero polynomial");
    (m.clone(), c.clone())
}

fn monic(p: &WPoly, order: &MonomialOrder) -> WPoly {
    let (_, c) = lead(p, order, p.g());
    if c.is_one() {
        p.clone()
    } else {
        p.scale(&c.recip())
    }
}

/// Full reduction of `p` modulo `basis` (leading monomials `lms`).
fn reduce_with(p: &WPoly, basis: &[WPoly], lms: &[Monomial], order: &MonomialOrder) -> WPoly {
    let g = p.g();
    let mut rem = WPoly::zero(g);
    let mut p = p.clone();
    while let Some((m, c)) = p.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match lms.iter().position(|l| l.divides(&m)) {
            Some(k) => {
                let q = lms[k].quotient_of(&m);
                let lc = basis[k].leading(order).expect("nonzero").1.clone();
                p = p.sub(&basis[k].mul_term(&q, &(c / lc)));
            }
            None => {
                rem.add_term(m.clone(), c);
                p = p.filter_terms(|t, _| *t != m);
            }
        }
    }
    rem
}

pub fn reduce(p: &WPoly, basis: &[WPoly], order: &MonomialOrder) -> WPoly {
    let g = p.g();
    let lms: Vec<Monomial> = basis.iter().map(|b| lead(b, order, g).0).collect();
    reduce_with(p, basis, &lms, order)
}

fn s_poly(a: &WPoly, b: &WPoly, order: &MonomialOrder) -> WPoly {
    let g = a.g();
    let (la, ca) = lead(a, order, g);
    let (lb, cb) = lead(b, order, g);
    let l = la.lcm(&lb);
    a.mul_term(&la.quotient_of(&l), &cb).sub(&b.mul_term(&lb.quotient_of(&l), &ca))
}

/// Buchberger completion with the coprime-leading-term criterion. Pairs
/// whose lcm has weighted degree above `cap` are skipped. The certificate
/// is computed on the input pairs regardless of the cap.
pub fn buchberger(ideal: &XgIdeal, order: MonomialOrder, cap: usize) -> GroebnerResult {
    let g = ideal.g();
    let weights = Grading::Weighted.weights(g);
    let mut basis: Vec<WPoly> =
        ideal.generators().into_iter().filter(|(_, p)| !p.is_zero()).map(|(_, p)| monic(p, &order)).collect();
    let mut lms: Vec<Monomial> = basis.iter().map(|p| lead(p, &order, g).0).collect();

    let n0 = basis.len();
    let mut input_is_groebner = true;
    'outer: for i in 0..n0 {
        for j in i + 1..n0 {
            if lms[i].is_coprime(&lms[j]) {
                continue;
            }
            if !reduce_with(&s_poly(&basis[i], &basis[j], &order), &basis[..n0], &lms[..n0], &order).is_zero() {
                input_is_groebner = false;
                break 'outer;
            }
        }
    }

    let mut complete = true;
    if !input_is_groebner {
        let mut pairs: Vec<(usize, usize)> = (0..n0).flat_map(|i| (i + 1..n0).map(move |j| (i, j))).collect();
        while let Some((i, j)) = pairs.pop() {
            if lms[i].is_coprime(&lms[j]) {
                continue;
            }
            if lms[i].lcm(&lms[j]).weighted_degree(&weights) > cap {
                complete = false;
                continue;
            }
            let r = reduce_with(&s_poly(&basis[i], &basis[j], &order), &basis, &lms, &order);
            if !r.is_zero() {
                let r = monic(&r, &order);
                let k = basis.len();
                lms.push(lead(&r, &order, g).0);
                basis.push(r);
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
    }
    GroebnerResult { order, basis, input_is_groebner, complete }
}

/// Monomials of degree `d` not divisible by any of `lms`.
pub fn normal_monomial_count(g: usize, lms: &[Monomial], grading: Grading, d: usize) -> usize {
    let all = vec![true; 2 * g - 2];
    enumerate_monomials(&grading.weights(g), &all, d).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count()
}

#[derive(Clone, Debug, Serialize)]
pub struct GroebnerCertificate {
    /// Orders tried, with whether the input certified under each.
    pub tried: Vec<(String, bool)>,
    /// The first order under which the input is a Groebner basis.
    pub order: Option<String>,
    /// Normal quadratic monomials (Koszul degree 2) under that order.
    pub normal_quadrics: Vec<String>,
    /// Per weighted degree: (degree, normal monomials, Hilbert function).
    pub counts: Vec<(usize, usize, usize)>,
    pub counts_match: bool,
}

/// Try graded lex, then graded reverse lex (Koszul grading); for the first
/// order that certifies, compare normal-monomial counts with `hilbert`
/// (weighted degrees `0..=maxdeg`).
pub fn certify_quadratic_groebner(ideal: &XgIdeal, maxdeg: usize, hilbert: &[usize]) -> GroebnerCertificate {
    let g = ideal.g();
    let mut tried = Vec::new();
    let mut found = None;
    for tie in [TieBreak::Lex, TieBreak::RevLex] {
        let order = MonomialOrder::new(Grading::Koszul, tie);
        let res = buchberger(ideal, order, 0);
        tried.push((order.name().to_string(), res.input_is_groebner));
        if res.input_is_groebner {
            found = Some(res);
            break;
        }
    }
    let Some(res) = found else {
        return GroebnerCertificate { tried, order: None, normal_quadrics: vec![], counts: vec![], counts_match: false };
    };
    let lms = res.leading_monomials();
    let all = vec![true; 2 * g - 2];
    let normal_quadrics = enumerate_monomials(&Grading::Koszul.weights(g), &all, 2)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .map(|m| WPoly::term(g, m, Rational::one()).to_string())
        .collect();
    let counts: Vec<(usize, usize, usize)> = (0..=maxdeg)
        .zip(hilbert)
        .map(|(d, &h)| (d, normal_monomial_count(g, &lms, Grading::Weighted, d), h))
        .collect();
    let counts_match = counts.len() == maxdeg + 1 && counts.iter().all(|(_, a, b)| a == b);
    GroebnerCertificate { tried, order: Some(res.order.name().to_string()), normal_quadrics, counts, counts_match }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xg::{hilbert_function, split_ribbon_ideal};

    #[test]
    fn principal_ideal_is_groebner() {
        let g = 3;
        let f = WPoly::u(g, 0).mul(&WPoly::u(g, 2)).sub(&WPoly::u(g, 1).mul(&WPoly::u(g, 1)));
        let i = XgIdeal::new(g, vec![f], vec![], vec![]).unwrap();
        let r = buchberger(&i, MonomialOrder::new(Grading::Koszul, TieBreak::Lex), 6);
        assert!(r.input_is_groebner);
        assert_eq!(r.basis.len(), 1);
    }

    #[test]
    fn completion_of_a_non_basis() {
        // two of the three twisted cubic quadrics
        let g = 4;
        let u = |i| WPoly::u(g, i);
        let q1 = u(0).mul(&u(2)).sub(&u(1).mul(&u(1)));
        let q2 = u(1).mul(&u(3)).sub(&u(2).mul(&u(2)));
        let q3 = u(0).mul(&u(3)).sub(&u(1).mul(&u(2)));
        let i = XgIdeal::new(g, vec![q1, q3], vec![], vec![]).unwrap();
        let order = MonomialOrder::new(Grading::Koszul, TieBreak::RevLex);
        let r = buchberger(&i, order, 8);
        assert!(!r.input_is_groebner);
        assert!(r.complete);
        assert!(!reduce(&q2, &r.basis, &order).is_zero());
        assert!(reduce(&u(0).mul(&q2), &r.basis, &order).is_zero());
    }

    #[test]
    fn split_ribbon_certifies() {
        for g in 3..6 {
            let i = split_ribbon_ideal(g).unwrap();
            let hf = hilbert_function(&i, Grading::Weighted, &(0..6).collect::<Vec<_>>()).unwrap();
            let c = certify_quadratic_groebner(&i, 5, &hf);
            assert!(c.order.is_some(), "g={g}: {:?}", c.tried);
            assert!(c.counts_match, "g={g}: {:?}", c.counts);
        }
    }
}
