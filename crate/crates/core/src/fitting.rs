//! Matrices of linear forms modelling phi_d near the hyperelliptic locus,
//! and the check that their maximal minors generate `(z_1..z_m)^r`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::{MPoly, Monomial};

/// Matrix whose entries are linear forms in `z_1..z_m`; entry vectors hold
/// the coefficients of `z_1..z_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinFormMatrix {
    m: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Vec<Rational>>>,
}

impl LinFormMatrix {
    pub fn zeros(m: usize, rows: usize, cols: usize) -> Self {
        Self { m, rows, cols, entries: vec![vec![vec![Rational::zero(); m]; cols]; rows] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &[Rational] {
        &self.entries[r][c]
    }

    fn add_var(&mut self, r: usize, c: usize, var: usize) {
        self.entries[r][c][var] += Rational::one();
    }

    fn entry_poly(&self, r: usize, c: usize) -> MPoly<Rational> {
        MPoly::from_terms(
            self.m,
            self.entries[r][c].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(a, x)| (Monomial::var(self.m, a), x.clone())),
        )
    }

    /// Exact determinant of the square submatrix on `columns`, by Laplace
    /// expansion memoized on column subsets.
    pub fn minor(&self, columns: &[usize]) -> Result<MPoly<Rational>> {
        if columns.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: columns.len() });
        }
        if let Some(&c) = columns.iter().find(|&&c| c >= self.cols) {
            return Err(Error::Precondition(format!("column {c} out of range")));
        }
        let mut memo = HashMap::new();
        Ok(self.expand(0, columns, (1u64 << columns.len()) - 1, &mut memo))
    }

    fn expand(&self, row: usize, columns: &[usize], mask: u64, memo: &mut HashMap<u64, MPoly<Rational>>) -> MPoly<Rational> {
        if row == self.rows {
            return MPoly::from_terms(self.m, [(Monomial::one(self.m), Rational::one())]);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut out = MPoly::zero(self.m);
        let mut sign = 1;
        for k in 0..columns.len() {
            if mask & (1 << k) == 0 {
                continue;
            }
            let e = self.entry_poly(row, columns[k]);
            if !e.is_zero() {
                let rest = self.expand(row + 1, columns, mask & !(1 << k), memo);
                let term = e.mul(&rest);
                out = if sign > 0 { out.add(&term) } else { out.sub(&term) };
            }
            sign = -sign;
        }
        memo.insert(mask, out.clone());
        out
    }
}

/// Quadratic monomials `(a, b)`, `a <= b`, in lexicographic order.
pub fn quadratic_columns(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect()
}

/// Column for `z_a^2` is `z_a e_a`; for `z_a z_b` it is `z_b e_a + z_a e_b`.
pub fn phi2_symbolic(m: usize) -> Result<LinFormMatrix> {
    if m == 0 {
        return Err(Error::Precondition("need at least one variable".into()));
    }
    let cols = quadratic_columns(m);
    let mut mat = LinFormMatrix::zeros(m, m, cols.len());
    for (c, &(a, b)) in cols.iter().enumerate() {
        if a == b {
            mat.add_var(a, c, a);
        } else {
            mat.add_var(a, c, b);
            mat.add_var(b, c, a);
        }
    }
    Ok(mat)
}

/// The `r x rm` matrix `(z_1 1_r | ... | z_m 1_r)`.
pub fn phid_symbolic_blocks(m: usize, r: usize) -> Result<LinFormMatrix> {
    if m == 0 || r == 0 {
        return Err(Error::Precondition("need m, r >= 1".into()));
    }
    let mut mat = LinFormMatrix::zeros(m, r, r * m);
    for a in 0..m {
        for t in 0..r {
            mat.add_var(t, a * r + t, a);
        }
    }
    Ok(mat)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FittingMode {
    Phi2,
    Blocks,
}

impl std::str::FromStr for FittingMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi2" => Ok(Self::Phi2),
            "blocks" => Ok(Self::Blocks),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub monomial: Vec<u16>,
    pub columns: Vec<usize>,
    /// `minor = sign * monomial`; `None` when the minor is anything else.
    pub sign: Option<i64>,
}

/// Column choice for `phi2_symbolic(m)`: for each variable
/// `z_i` of the support (exponent `a`), the column of `z_i^2` and the
/// columns `z_i z_j` for `j` in a block `S` of size `a-1`; the blocks
/// take the smallest free indices, first block first.
fn phi2_columns(m: usize, exps: &[u16]) -> Vec<usize> {
    let cols = quadratic_columns(m);
    let col_of = |a: usize, b: usize| cols.iter().position(|&c| c == (a.min(b), a.max(b))).expect("quadratic column");
    let support: Vec<usize> = (0..m).filter(|&i| exps[i] > 0).collect();
    let mut free = (0..m).filter(|i| exps[*i] == 0);
    let mut out = Vec::new();
    for &i in &support {
        out.push(col_of(i, i));
        for _ in 1..exps[i] {
            let j = free.next().expect("complement has the right size");
            out.push(col_of(i, j));
        }
    }
    out
}

/// Block-diagonal choice: row t takes the block of the t-th variable.
fn block_columns(r: usize, exps: &[u16]) -> Vec<usize> {
    let vars = exps.iter().enumerate().flat_map(|(a, &e)| std::iter::repeat_n(a, e as usize));
    vars.enumerate().map(|(t, a)| a * r + t).collect()
}

/// Column set and exact minor realizing `monomial` (degree = number of rows).
pub fn minor_for_monomial(matrix: &LinFormMatrix, mode: FittingMode, monomial: &[u16]) -> Result<(MinorWitness, MPoly<Rational>)> {
    let m = matrix.m();
    let r = matrix.rows();
    if monomial.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: monomial.len() });
    }
    let deg: usize = monomial.iter().map(|&e| e as usize).sum();
    if deg != r {
        return Err(Error::DegreeMismatch { expected: r, found: deg });
    }
    let columns = match mode {
        FittingMode::Phi2 => {
            if r != m {
                return Err(Error::Precondition(format!("phi2 mode needs r = m, got r={r}, m={m}")));
            }
            phi2_columns(m, monomial)
        }
        FittingMode::Blocks => block_columns(r, monomial),
    };
    let minor = matrix.minor(&columns)?;
    let target = Monomial(monomial.to_vec());
    let sign = if minor.len() == 1 {
        match minor.coeff(&target) {
            Some(c) if c.is_one() => Some(1),
            Some(c) if (-c).is_one() => Some(-1),
            _ => None,
        }
    } else {
        None
    };
    Ok((MinorWitness { monomial: monomial.to_vec(), columns, sign }, minor))
}

/// Exponent vectors of degree `r` in `m` variables, lexicographically descending.
pub fn monomials_of_degree(m: usize, r: usize) -> Vec<Vec<u16>> {
    fn rec(i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, r, &mut vec![0; m], &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerIdealReport {
    pub m: usize,
    pub r: usize,
    pub mode: FittingMode,
    pub monomials_checked: usize,
    pub all_realized: bool,
    /// Every computed minor is homogeneous of degree r.
    pub minors_homogeneous: bool,
    pub witnesses: Vec<MinorWitness>,
}

/// Realize every degree-r monomial as plus or minus one maximal minor.
pub fn verify_power_ideal(m: usize, r: usize, mode: FittingMode) -> Result<PowerIdealReport> {
    let matrix = match mode {
        FittingMode::Phi2 => {
            if r != m {
                return Err(Error::Precondition(format!("phi2 mode needs r = m, got r={r}, m={m}")));
            }
            phi2_symbolic(m)?
        }
        FittingMode::Blocks => phid_symbolic_blocks(m, r)?,
    };
    let mut witnesses = Vec::new();
    let mut homogeneous = true;
    for mono in monomials_of_degree(m, r) {
        let (w, minor) = minor_for_monomial(&matrix, mode, &mono)?;
        homogeneous &= minor.terms().all(|(t, _)| t.degree() == r);
        witnesses.push(w);
    }
    Ok(PowerIdealReport {
        m,
        r,
        mode,
        monomials_checked: witnesses.len(),
        all_realized: witnesses.iter().all(|w| w.sign.is_some()),
        minors_homogeneous: homogeneous,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn lin(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn phi2_columns_match_the_formulas() {
        let p = phi2_symbolic(2).unwrap();
        assert_eq!((p.rows(), p.cols()), (2, 3));
        assert_eq!(p.entry(0, 0), lin(&[1, 0]));
        assert_eq!(p.entry(1, 0), lin(&[0, 0]));
        assert_eq!(p.entry(0, 1), lin(&[0, 1]));
        assert_eq!(p.entry(1, 1), lin(&[1, 0]));
        assert_eq!(p.entry(1, 2), lin(&[0, 1]));
        let p1 = phi2_symbolic(1).unwrap();
        assert_eq!((p1.rows(), p1.cols()), (1, 1));
        let p3 = phi2_symbolic(3).unwrap();
        assert_eq!((p3.rows(), p3.cols()), (3, 6));
    }

    #[test]
    fn block_matrix() {
        let b = phid_symbolic_blocks(2, 2).unwrap();
        assert_eq!(b.cols(), 4);
        assert_eq!(b.entry(1, 3), lin(&[0, 1]));
        assert_eq!(b.entry(1, 2), lin(&[0, 0]));
        let row = phid_symbolic_blocks(3, 1).unwrap();
        for a in 0..3 {
            assert_eq!(row.entry(0, a)[a], rat(1));
        }
    }

    #[test]
    fn minor_examples() {
        let p = phi2_symbolic(2).unwrap();
        let (w, minor) = minor_for_monomial(&p, FittingMode::Phi2, &[1, 1]).unwrap();
        assert_eq!(w.columns, vec![0, 2]);
        assert_eq!(w.sign, Some(1));
        assert_eq!(minor.len(), 1);
        let (w, _) = minor_for_monomial(&p, FittingMode::Phi2, &[2, 0]).unwrap();
        assert_eq!(w.columns, vec![0, 1]);
        assert!(w.sign.is_some());
        let b = phid_symbolic_blocks(2, 2).unwrap();
        let (w, _) = minor_for_monomial(&b, FittingMode::Blocks, &[1, 1]).unwrap();
        assert_eq!(w.columns, vec![0, 3]);
        assert_eq!(w.sign, Some(1));
        assert!(minor_for_monomial(&p, FittingMode::Phi2, &[1, 0]).is_err());
    }

    #[test]
    fn power_ideals() {
        for m in 1..=4 {
            let r = verify_power_ideal(m, m, FittingMode::Phi2).unwrap();
            assert!(r.all_realized && r.minors_homogeneous, "m={m}");
            assert_eq!(r.monomials_checked, binom(2 * m - 1, m));
        }
        assert_eq!(verify_power_ideal(2, 2, FittingMode::Phi2).unwrap().monomials_checked, 3);
        assert_eq!(verify_power_ideal(4, 4, FittingMode::Phi2).unwrap().monomials_checked, 35);
        let r = verify_power_ideal(2, 5, FittingMode::Blocks).unwrap();
        assert!(r.all_realized);
        assert_eq!(r.monomials_checked, 6);
        assert!(verify_power_ideal(2, 3, FittingMode::Phi2).is_err());
    }

    #[test]
    fn all_maximal_minors_have_degree_m() {
        let m = 3;
        let p = phi2_symbolic(m).unwrap();
        let n = p.cols();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let minor = p.minor(&[a, b, c]).unwrap();
                    assert!(minor.terms().all(|(t, _)| t.degree() == m));
                }
            }
        }
    }

    #[test]
    fn laplace_matches_a_numeric_determinant() {
        // entries z1 + 2 z2 etc; evaluate at z = (1, 1) against rational det
        let mut mat = LinFormMatrix::zeros(2, 2, 2);
        mat.entries[0][0] = lin(&[1, 2]);
        mat.entries[0][1] = lin(&[0, 1]);
        mat.entries[1][0] = lin(&[3, 0]);
        mat.entries[1][1] = lin(&[1, 1]);
        let minor = mat.minor(&[0, 1]).unwrap();
        let at_one: Rational = minor.terms().map(|(_, c)| c.clone()).sum();
        let numeric = crate::exact::RatMatrix::from_i64(&[&[3, 1], &[3, 2]]).det().unwrap();
        assert_eq!(at_one, numeric);
    }
}
