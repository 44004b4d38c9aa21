use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// One particular solution; the solution set has the given dimension.
    NonUnique { particular: Vec<Rational>, free_dims: usize },
    Inconsistent,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Matrix with an explicit column count, so zero-row matrices keep their width.
    pub fn from_rows_with_cols(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect(),
        )
        .expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    /// `v^T * self`.
    pub fn vec_mul(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.transpose().mul_vec(v)
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// in column order, scanning rows top to bottom.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: pivots.len(), matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Basis of `{y : y^T * self = 0}`.
    pub fn left_kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.transpose().kernel_basis()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination on the
    /// row-wise integer clearing of the matrix.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let l = self.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            a.push(self.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scale *= l;
        }
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(Rational::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let mut d = a[n - 1][n - 1].clone();
        if sign < 0 {
            d = -d;
        }
        Ok(Rational::new(d, scale))
    }

    pub fn solve(&self, b: &[Rational]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Rref { matrix, pivots, rank } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = matrix[(i, self.cols)].clone();
        }
        if rank == self.cols {
            Ok(Solution::Unique(x))
        } else {
            Ok(Solution::NonUnique { particular: x, free_dims: self.cols - rank })
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Scale a nonzero vector so its first nonzero coordinate is one.
pub fn normalize_first_nonzero(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = &*x / &lead;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64(rows)
    }

    #[test]
    fn rref_examples() {
        let id = RatMatrix::identity(2);
        let r = id.rref();
        assert_eq!((r.matrix, r.pivots, r.rank), (id.clone(), vec![0, 1], 2));

        let r = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);

        let r = m(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::zeros(2, 3).kernel_basis().len(), 3);
        assert!(RatMatrix::identity(4).kernel_basis().is_empty());
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn det_examples() {
        assert_eq!(RatMatrix::identity(5).det().unwrap(), rat(1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), rat(-1));
        assert_eq!(m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).det().unwrap(), rat(30));
        assert!(RatMatrix::zeros(2, 3).det().is_err());
        let half = RatMatrix::from_rows(vec![vec![ratio(1, 2), rat(1)], vec![rat(1), ratio(1, 3)]]).unwrap();
        assert_eq!(half.det().unwrap(), ratio(1, 6) - rat(1));
    }

    #[test]
    fn solve_examples() {
        let b = vec![rat(3), rat(-1)];
        assert_eq!(RatMatrix::identity(2).solve(&b).unwrap(), Solution::Unique(b));
        match m(&[&[1, 1]]).solve(&[rat(2)]).unwrap() {
            Solution::NonUnique { particular, free_dims } => {
                assert_eq!(free_dims, 1);
                assert_eq!(&particular[0] + &particular[1], rat(2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(m(&[&[1], &[1]]).solve(&[rat(1), rat(2)]).unwrap(), Solution::Inconsistent);
        assert!(m(&[&[1], &[1]]).solve(&[rat(1)]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                RatMatrix::from_rows(v.chunks(c).map(|row| row.iter().map(|&x| rat(x)).collect()).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            let k = a.kernel_basis();
            prop_assert_eq!(a.rank() + k.len(), a.cols());
            for v in &k {
                prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn det_vanishes_iff_kernel(v in prop::collection::vec(-3i64..4, 9)) {
            let a = RatMatrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap();
            prop_assert_eq!(a.det().unwrap().is_zero(), !a.kernel_basis().is_empty());
        }

        #[test]
        fn det_matches_cofactor_expansion(v in prop::collection::vec(-5i64..6, 9)) {
            let a = RatMatrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap();
            let e = |i: usize, j: usize| v[3 * i + j];
            let expected = e(0,0) * (e(1,1) * e(2,2) - e(1,2) * e(2,1))
                - e(0,1) * (e(1,0) * e(2,2) - e(1,2) * e(2,0))
                + e(0,2) * (e(1,0) * e(2,1) - e(1,1) * e(2,0));
            prop_assert_eq!(a.det().unwrap(), rat(expected));
        }
    }
}
