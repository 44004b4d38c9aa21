//! The conormal matrix phi_d of a relation on the rational normal curve,
//! its dual pairing psi_d, and the limit criteria built on them.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{normalize_first_nonzero, RatMatrix, Rational};
use crate::poly::{pullback_in_degree, BinaryForm, Var, WPoly};
use crate::rnc::{check_genus, ideal_slice, IdealSlice, QuadForm};

/// phi_d(x): row i is the coefficient vector of `c_i`, the multiplier of
/// the conormal generator `beta_i`; column a is the coefficient of
/// `x0^a x1^((d-1)(g-1)-2-a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConormalMatrix {
    pub g: usize,
    pub d: usize,
    pub matrix: RatMatrix,
}

impl ConormalMatrix {
    pub fn row_form(&self, i: usize) -> BinaryForm {
        BinaryForm::from_coeffs(self.matrix.row(i).to_vec())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.matrix.to_rows().into_iter().flatten().collect()
    }
}

/// Nonzero functional on `H^0(P^1, O(g-3))`, meaningful up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaFunctional {
    g: usize,
    #[serde(with = "crate::json::rational_vec")]
    coords: Vec<Rational>,
}

impl LambdaFunctional {
    pub fn new(g: usize, coords: Vec<Rational>) -> Result<Self> {
        check_genus(g)?;
        if coords.len() != g - 2 {
            return Err(Error::DimensionMismatch { expected: g - 2, found: coords.len() });
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroFunctional);
        }
        Ok(Self { g, coords })
    }

    pub fn unit(g: usize, i: usize) -> Self {
        let mut c = vec![Rational::zero(); g - 2];
        c[i] = Rational::from_integer(1.into());
        Self { g, coords: c }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Scaled so the first nonzero coordinate is one.
    pub fn normalized(&self) -> Self {
        let mut c = self.coords.clone();
        normalize_first_nonzero(&mut c);
        Self { g: self.g, coords: c }
    }
}

fn check_degree(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::Precondition(format!("conormal matrices need degree >= 2, got {d}")));
    }
    Ok(())
}

/// Number of columns of phi_d: `(d-1)(g-1)-1`.
pub fn conormal_cols(g: usize, d: usize) -> usize {
    (d - 1) * (g - 1) - 1
}

/// Conormal matrix of a degree-d relation `x` (a u-polynomial vanishing on the curve).
///
/// Pulls back the Jacobian, `w_j = i^*(dx/du_j)`, and solves
/// `w_j = x0^2 c_j - 2 x0 x1 c_{j-1} + x1^2 c_{j-2}` for the `c_i`
/// by exact division by x0^2; the two leftover equations are checked.
pub fn phi_d(x: &WPoly, d: usize) -> Result<ConormalMatrix> {
    let g = x.g();
    check_genus(g)?;
    check_degree(d)?;
    if !pullback_in_degree(x, d)?.is_zero() {
        return Err(Error::NotInIdeal);
    }
    let w: Vec<BinaryForm> =
        (0..g).map(|j| pullback_in_degree(&x.partial(Var::U(j)), d - 1)).collect::<Result<_>>()?;
    let cdeg = (d - 1) * (g - 1) - 2;
    let zero = BinaryForm::zero(cdeg);
    let mut c: Vec<BinaryForm> = Vec::with_capacity(g - 2);
    let combo = |c: &[BinaryForm], j: usize| -> Result<BinaryForm> {
        // 2 x0 x1 c_{j-1} - x1^2 c_{j-2}
        let prev1 = if j >= 1 && j - 1 < c.len() { &c[j - 1] } else { &zero };
        let prev2 = if j >= 2 && j - 2 < c.len() { &c[j - 2] } else { &zero };
        prev1.shift(1, 1).scale(&Rational::from_integer(2.into())).sub(&prev2.shift(0, 2))
    };
    for j in 0..g - 2 {
        let t = w[j].add(&combo(&c, j)?)?;
        let cj = t
            .div_monomial(2, 0)
            .map_err(|_| Error::Internal(format!("phi_d: w_{j} is inconsistent with the conormal basis")))?;
        c.push(cj);
    }
    for j in g - 2..g {
        // w_j = -(2 x0 x1 c_{j-1} - x1^2 c_{j-2}) when c_j is out of range
        let rhs = zero.shift(2, 0).sub(&combo(&c, j)?)?;
        if rhs != w[j] {
            return Err(Error::Internal(format!("phi_d: equation for du_{j} is inconsistent")));
        }
    }
    let rows = c.into_iter().map(|f| f.coeffs().to_vec()).collect();
    Ok(ConormalMatrix { g, d, matrix: RatMatrix::from_rows_with_cols(cdeg + 1, rows)? })
}

/// `lambda . phi_d(x)`, a form of degree `(d-1)(g-1)-2`.
pub fn psi_d(lambda: &LambdaFunctional, x: &WPoly, d: usize) -> Result<BinaryForm> {
    if lambda.g != x.g() {
        return Err(Error::DimensionMismatch { expected: lambda.g, found: x.g() });
    }
    let phi = phi_d(x, d)?;
    let coeffs = phi.matrix.vec_mul(&lambda.coords)?;
    Ok(BinaryForm::from_coeffs(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricVerdict {
    pub degenerate: bool,
    pub det: Rational,
    /// Normalized kernel vector, present when degenerate.
    pub witness: Option<Vec<Rational>>,
}

/// A quadric through the hyperelliptic canonical image is a limit of
/// canonical quadrics iff its symmetric matrix is degenerate. The zero
/// form counts as degenerate.
pub fn is_limit_quadric(q: &QuadForm) -> QuadricVerdict {
    let det = q.matrix().det().expect("quadratic forms are square");
    let witness = if det.is_zero() {
        let mut k = q.matrix().kernel_basis().into_iter().next().expect("singular matrix has a kernel");
        normalize_first_nonzero(&mut k);
        Some(k)
    } else {
        None
    };
    QuadricVerdict { degenerate: det.is_zero(), det, witness }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationVerdict {
    pub limit: bool,
    pub rank: usize,
    pub matrix: ConormalMatrix,
    /// Normalized basis of the left kernel of the conormal matrix.
    pub left_kernel: Vec<Vec<Rational>>,
    pub witness: Option<Vec<Rational>>,
}

/// A degree-d relation is a limit of canonical relations iff its conormal
/// matrix has rank below g-2.
pub fn is_limit_relation(x: &WPoly, d: usize) -> Result<RelationVerdict> {
    let phi = phi_d(x, d)?;
    let rank = phi.rank();
    let left_kernel: Vec<Vec<Rational>> = phi
        .matrix
        .left_kernel_basis()
        .into_iter()
        .map(|mut v| {
            normalize_first_nonzero(&mut v);
            v
        })
        .collect();
    let limit = rank < phi.g - 2;
    let witness = if limit { left_kernel.first().cloned() } else { None };
    Ok(RelationVerdict { limit, rank, matrix: phi, left_kernel, witness })
}

/// Columns are the flattened conormal matrices of the slice basis.
pub fn phi_on_slice(slice: &IdealSlice) -> Result<RatMatrix> {
    let g = slice.g();
    let d = slice.degree();
    let n = (g - 2) * conormal_cols(g, d);
    let mut m = RatMatrix::zeros(n, slice.dim());
    for (k, b) in slice.basis().iter().enumerate() {
        for (r, c) in phi_d(b, d)?.flatten().into_iter().enumerate() {
            m[(r, k)] = c;
        }
    }
    Ok(m)
}

/// Rank of phi_d on all of `H^0(I(d))`.
pub fn phi_rank(g: usize, d: usize) -> Result<usize> {
    check_degree(d)?;
    Ok(phi_on_slice(&ideal_slice(g, d)?)?.rank())
}

/// Kernel of phi_d inside `H^0(I(d))`.
pub fn phi_kernel(g: usize, d: usize) -> Result<IdealSlice> {
    check_degree(d)?;
    let slice = ideal_slice(g, d)?;
    let m = phi_on_slice(&slice)?;
    combos(&slice, m.kernel_basis())
}

fn combos(slice: &IdealSlice, vectors: Vec<Vec<Rational>>) -> Result<IdealSlice> {
    let polys: Vec<WPoly> = vectors
        .iter()
        .map(|v| {
            v.iter().zip(slice.basis()).fold(WPoly::zero(slice.g()), |acc, (c, b)| {
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&b.scale(c))
                }
            })
        })
        .collect();
    IdealSlice::span(slice.g(), slice.degree(), &polys)
}

/// Degree-d relations vanishing on the ribbon `R_lambda`: the kernel of
/// `x -> psi_d(lambda, x)` on `H^0(I(d))`.
pub fn ribbon_slice(lambda: &LambdaFunctional, g: usize, d: usize) -> Result<IdealSlice> {
    check_degree(d)?;
    if lambda.g != g {
        return Err(Error::DimensionMismatch { expected: g, found: lambda.g });
    }
    let slice = ideal_slice(g, d)?;
    let cols = conormal_cols(g, d);
    let mut m = RatMatrix::zeros(cols, slice.dim());
    for (k, b) in slice.basis().iter().enumerate() {
        let f = psi_d(lambda, b, d)?;
        for (a, c) in f.coeffs().iter().enumerate() {
            m[(a, k)] = c.clone();
        }
    }
    combos(&slice, m.kernel_basis())
}

/// The pairing of a quadric with `lambda` read as a v-linear form,
/// `v_a <-> x0^a x1^(g-3-a)`.
pub fn psi2_as_v_form(lambda: &LambdaFunctional, x: &WPoly) -> Result<WPoly> {
    let g = x.g();
    let f = psi_d(lambda, x, 2)?;
    let mut out = WPoly::zero(g);
    for (a, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&WPoly::v(g, a).scale(c));
        }
    }
    Ok(out)
}
