//! The rational normal curve in P^{g-1}: its ideal degree by degree and
//! the quadratic map from symmetric tensors to quadrics through it.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Echelon, RatMatrix, Rational};
use crate::poly::{enumerate_monomials, pullback_in_degree, Grading, Monomial, MonomialBasis, WPoly};

/// Symmetric (g-2)x(g-2) matrix indexed by the basis `x0^i x1^(g-3-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadForm {
    g: usize,
    matrix: RatMatrix,
}

impl QuadForm {
    pub fn new(g: usize, matrix: RatMatrix) -> Result<Self> {
        check_genus(g)?;
        if matrix.rows() != g - 2 || matrix.cols() != g - 2 {
            return Err(Error::DimensionMismatch { expected: g - 2, found: matrix.rows().max(matrix.cols()) });
        }
        if !matrix.is_symmetric() {
            return Err(Error::Precondition("quadratic form matrix must be symmetric".into()));
        }
        Ok(Self { g, matrix })
    }

    /// The symmetric unit `e_i (.) e_j`: one at (i,j) and (j,i).
    pub fn symmetric_unit(g: usize, i: usize, j: usize) -> Self {
        let mut m = RatMatrix::zeros(g - 2, g - 2);
        m[(i, j)] = Rational::one();
        m[(j, i)] = Rational::one();
        Self { g, matrix: m }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }
}

/// A subspace of degree-d u-polynomials vanishing on the curve, held by
/// its reduced row echelon basis so that equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSlice {
    g: usize,
    degree: usize,
    basis: Vec<WPoly>,
}

impl IdealSlice {
    pub fn empty(g: usize, degree: usize) -> Self {
        Self { g, degree, basis: Vec::new() }
    }

    /// Canonical basis of the span of `polys` (u-only, degree `degree`).
    pub fn span<'a>(g: usize, degree: usize, polys: impl IntoIterator<Item = &'a WPoly>) -> Result<Self> {
        let mb = MonomialBasis::new(g, Grading::Weighted, degree, true);
        let mut ech = Echelon::new();
        for p in polys {
            if !p.is_u_only() {
                return Err(Error::InvolvesV);
            }
            ech.insert(mb.coords(p)?);
        }
        let basis = ech.reduced_basis().iter().map(|r| mb.poly(r)).collect();
        Ok(Self { g, degree, basis })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[WPoly] {
        &self.basis
    }

    pub fn contains(&self, p: &WPoly) -> bool {
        let mb = MonomialBasis::new(self.g, Grading::Weighted, self.degree, true);
        let Ok(v) = mb.coords(p) else { return false };
        let mut ech = Echelon::new();
        for b in &self.basis {
            ech.insert(mb.coords(b).expect("basis element in degree"));
        }
        ech.contains(&v)
    }

    pub fn is_subspace_of(&self, other: &IdealSlice) -> bool {
        self.degree == other.degree && self.basis.iter().all(|b| other.contains(b))
    }
}

pub(crate) fn check_genus(g: usize) -> Result<()> {
    if g < 3 {
        return Err(Error::InvalidGenus(g));
    }
    Ok(())
}

fn quad(g: usize, a: usize, b: usize) -> WPoly {
    WPoly::u(g, a).mul(&WPoly::u(g, b))
}

/// `x_q = sum_ij q_ij B(e_i, e_j)` where `B` polarizes
/// `f -> (x0^2 f)(x1^2 f) - (x0 x1 f)^2`; `e_i (x) e_i` maps to `u_i u_{i+2} - u_{i+1}^2`.
pub fn q_to_quadric(q: &QuadForm) -> WPoly {
    let g = q.g;
    let half = Rational::new(1.into(), 2.into());
    let mut out = WPoly::zero(g);
    for i in 0..g - 2 {
        for j in 0..g - 2 {
            let c = &q.matrix[(i, j)];
            if c.is_zero() {
                continue;
            }
            let b = quad(g, i + 2, j).add(&quad(g, j + 2, i)).scale(&half).sub(&quad(g, i + 1, j + 1));
            out = out.add(&b.scale(c));
        }
    }
    out
}

/// Images of the symmetric units `e_i (.) e_j`, `i <= j`; they span the quadrics through the curve.
pub fn hankel_generators(g: usize) -> Result<Vec<WPoly>> {
    check_genus(g)?;
    let mut out = Vec::new();
    for i in 0..g - 2 {
        for j in i..g - 2 {
            let q = if i == j {
                let mut m = RatMatrix::zeros(g - 2, g - 2);
                m[(i, i)] = Rational::one();
                QuadForm { g, matrix: m }
            } else {
                QuadForm::symmetric_unit(g, i, j)
            };
            out.push(q_to_quadric(&q));
        }
    }
    Ok(out)
}

/// Kernel of the Veronese pullback on degree-d u-polynomials.
pub fn ideal_slice(g: usize, d: usize) -> Result<IdealSlice> {
    check_genus(g)?;
    if d == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    let mb = MonomialBasis::new(g, Grading::Weighted, d, true);
    let n = d * (g - 1) + 1;
    let mut eval = RatMatrix::zeros(n, mb.len());
    for (col, m) in mb.monomials().iter().enumerate() {
        let p = WPoly::term(g, m.clone(), Rational::one());
        let f = pullback_in_degree(&p, d)?;
        for (a, c) in f.coeffs().iter().enumerate() {
            if !c.is_zero() {
                eval[(a, col)] = c.clone();
            }
        }
    }
    let kernel: Vec<WPoly> = eval
        .kernel_basis()
        .into_iter()
        .map(|v| mb.poly(&crate::exact::dense_to_sparse(&v)))
        .collect();
    IdealSlice::span(g, d, &kernel)
}

/// Degree-d part of the square of the ideal; zero below degree 4.
pub fn ideal_square_span(g: usize, d: usize) -> Result<IdealSlice> {
    check_genus(g)?;
    if d < 4 {
        return Ok(IdealSlice::empty(g, d));
    }
    let gens = hankel_generators(g)?;
    let weights = Grading::Weighted.weights(g);
    let allowed: Vec<bool> = (0..2 * g - 2).map(|i| i < g).collect();
    let mults: Vec<Monomial> = enumerate_monomials(&weights, &allowed, d - 4);
    let mut products = Vec::new();
    for a in 0..gens.len() {
        for b in a..gens.len() {
            let qq = gens[a].mul(&gens[b]);
            for m in &mults {
                products.push(qq.mul_monomial(m));
            }
        }
    }
    IdealSlice::span(g, d, &products)
}

/// `H^0(I^2(d))` for `d >= 4`.
pub fn ideal_square_slice(g: usize, d: usize) -> Result<IdealSlice> {
    if d < 4 {
        return Err(Error::Precondition(format!("ideal square slice needs degree >= 4, got {d}")));
    }
    ideal_square_span(g, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::poly::veronese_pullback;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn u(g: usize, i: usize) -> WPoly {
        WPoly::u(g, i)
    }

    #[test]
    fn hankel_g3_is_the_conic() {
        let gens = hankel_generators(3).unwrap();
        assert_eq!(gens, vec![quad(3, 0, 2).sub(&quad(3, 1, 1))]);
        assert_eq!(hankel_generators(2), Err(Error::InvalidGenus(2)));
    }

    #[test]
    fn hankel_g4_spans_the_2x2_minors() {
        let gens = hankel_generators(4).unwrap();
        assert_eq!(gens.len(), 3);
        let minors = [
            quad(4, 0, 2).sub(&quad(4, 1, 1)),
            quad(4, 0, 3).sub(&quad(4, 1, 2)),
            quad(4, 1, 3).sub(&quad(4, 2, 2)),
        ];
        assert_eq!(IdealSlice::span(4, 2, &gens).unwrap(), IdealSlice::span(4, 2, &minors).unwrap());
        assert_eq!(hankel_generators(6).unwrap().len(), 10);
    }

    #[test]
    fn q_to_quadric_examples() {
        let mut e00 = RatMatrix::zeros(2, 2);
        e00[(0, 0)] = rat(1);
        let q = QuadForm::new(4, e00).unwrap();
        assert_eq!(q_to_quadric(&q), quad(4, 0, 2).sub(&quad(4, 1, 1)));
        assert!(q_to_quadric(&QuadForm::new(4, RatMatrix::zeros(2, 2)).unwrap()).is_zero());
        assert_eq!(q_to_quadric(&QuadForm::symmetric_unit(4, 0, 1)), quad(4, 0, 3).sub(&quad(4, 1, 2)));
    }

    #[test]
    fn quad_form_validation() {
        assert!(QuadForm::new(4, RatMatrix::from_i64(&[&[1, 2], &[3, 4]])).is_err());
        assert!(QuadForm::new(5, RatMatrix::identity(2)).is_err());
    }

    #[test]
    fn slice_dimensions() {
        assert_eq!(ideal_slice(3, 1).unwrap().dim(), 0);
        assert_eq!(ideal_slice(3, 2).unwrap().dim(), 1);
        assert_eq!(ideal_slice(5, 2).unwrap().dim(), 6);
        for g in 3..7 {
            for d in 1..5 {
                assert_eq!(ideal_slice(g, d).unwrap().dim(), binom(g - 1 + d, d) - (d * (g - 1) + 1));
            }
        }
    }

    #[test]
    fn slices_pull_back_to_zero() {
        for (g, d) in [(4, 3), (5, 2), (3, 4)] {
            for b in ideal_slice(g, d).unwrap().basis() {
                assert!(veronese_pullback(b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn square_slice_examples() {
        let conic = quad(3, 0, 2).sub(&quad(3, 1, 1));
        let s = ideal_square_slice(3, 4).unwrap();
        assert_eq!(s, IdealSlice::span(3, 4, &[conic.mul(&conic)]).unwrap());
        let s5 = ideal_square_slice(3, 5).unwrap();
        assert_eq!(s5.dim(), 3);
        for i in 0..3 {
            assert!(s5.contains(&conic.mul(&conic).mul(&u(3, i))));
        }
        // six products of three generators, independent in degree 4
        assert_eq!(ideal_square_slice(4, 4).unwrap().dim(), 6);
        assert!(ideal_square_slice(4, 3).is_err());
    }

    #[test]
    fn square_slice_inside_slice() {
        for g in 3..6 {
            for d in 4..6 {
                assert!(ideal_square_span(g, d).unwrap().is_subspace_of(&ideal_slice(g, d).unwrap()));
            }
        }
    }

    #[test]
    fn conormal_dimension_count() {
        for g in 3..7 {
            for d in 3..6 {
                let diff = ideal_slice(g, d).unwrap().dim() - ideal_square_span(g, d).unwrap().dim();
                let expected = (g - 2) * ((d - 1) * (g - 1) - 1);
                if d == 3 && g >= 5 {
                    // products of quadrics start in degree 4, but the 3x3 Hankel
                    // minors (the secant variety) already vanish doubly on the curve
                    let minors = (g - 2) * (g - 3) * (g - 4) / 6;
                    assert_eq!(diff, expected + minors, "g={g} d={d}");
                } else {
                    assert_eq!(diff, expected, "g={g} d={d}");
                }
            }
        }
    }
}
