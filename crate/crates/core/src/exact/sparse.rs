use num_traits::{One, Zero};

use super::Rational;

/// Sparse vector: `(index, value)` pairs, strictly increasing in index, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// `a + c * b`.
fn axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale(v: &mut SparseVec, c: &Rational) {
    for (_, x) in v.iter_mut() {
        *x = &*x * c;
    }
}

/// Incremental row echelon basis of a subspace of Q^n.
///
/// Each stored row is monic at its leading (smallest) index and leading
/// indices are distinct. Rows can carry a tag vector that undergoes the
/// same operations; a row that reduces to zero then yields its tag as a
/// linear relation among the inserted rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(SparseVec, SparseVec)>,
    pivot_row: std::collections::HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(r, _)| r[0].0)
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|(r, _)| r)
    }

    /// Reduce by leading entries until the leading index is not a pivot.
    fn reduce_pair(&self, mut v: SparseVec, mut tag: SparseVec) -> (SparseVec, SparseVec) {
        while let Some((lead, c)) = v.first().cloned() {
            let Some(&r) = self.pivot_row.get(&lead) else { break };
            let (row, rtag) = &self.rows[r];
            let neg = -c;
            v = axpy(&v, &neg, row);
            if !rtag.is_empty() || !tag.is_empty() {
                tag = axpy(&tag, &neg, rtag);
            }
        }
        (v, tag)
    }

    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_pair(v, Vec::new()).0
    }

    /// Fully reduced representative of `v` modulo the span: zero at every
    /// pivot index. Depends only on the span, not on the insertion order.
    pub fn normal_form(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            let (idx, c) = v[k].clone();
            match self.pivot_row.get(&idx) {
                Some(&r) => v = axpy(&v, &-c, &self.rows[r].0),
                None => k += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_tagged(v, Vec::new()).is_none()
    }

    /// Insert a tagged row. When the row is dependent, returns the reduced
    /// tag, i.e. a relation among tags.
    pub fn insert_tagged(&mut self, v: SparseVec, tag: SparseVec) -> Option<SparseVec> {
        let (mut v, mut tag) = self.reduce_pair(v, tag);
        if v.is_empty() {
            return Some(tag);
        }
        let inv = v[0].1.recip();
        if !inv.is_one() {
            scale(&mut v, &inv);
            scale(&mut tag, &inv);
        }
        self.pivot_row.insert(v[0].0, self.rows.len());
        self.rows.push((v, tag));
        None
    }

    /// The unique reduced row echelon basis of the span, ordered by pivot.
    pub fn reduced_basis(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = self.rows.iter().map(|(r, _)| r.clone()).collect();
        rows.sort_by_key(|r| r[0].0);
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        for i in (0..rows.len()).rev() {
            let p = pivots[i];
            for k in 0..i {
                if let Some(c) = rows[k].iter().find(|(j, _)| *j == p).map(|(_, c)| c.clone()) {
                    let neg = -c;
                    rows[k] = axpy(&rows[k], &neg, &rows[i]);
                }
            }
        }
        rows
    }
}

/// A solution of the sparse system `rows . x = rhs` in `n` unknowns with
/// every free variable set to zero, or `None` when inconsistent.
pub fn solve_sparse(n: usize, rows: impl IntoIterator<Item = (SparseVec, Rational)>) -> Option<Vec<Rational>> {
    let mut ech = Echelon::new();
    // sparse rows first keeps fill-in and coefficient growth down
    let mut rows: Vec<(SparseVec, Rational)> = rows.into_iter().collect();
    rows.sort_by_key(|(r, _)| r.len());
    for (mut row, b) in rows {
        debug_assert!(row.iter().all(|(i, _)| *i < n));
        if !b.is_zero() {
            row.push((n, b));
        }
        if !row.is_empty() {
            ech.insert(row);
        }
    }
    let mut x = vec![Rational::zero(); n];
    for row in ech.reduced_basis() {
        let p = row[0].0;
        if p == n {
            return None;
        }
        if let Some((_, b)) = row.last().filter(|(i, _)| *i == n) {
            x[p] = b.clone();
        }
    }
    Some(x)
}

pub fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn unit(i: usize) -> SparseVec {
    vec![(i, Rational::one())]
}
