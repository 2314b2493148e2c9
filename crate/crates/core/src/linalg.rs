//! Exact linear algebra over the rationals.
//!
//! Two flavours: an incremental sparse row echelon form for rank and
//! nullspace-dimension questions on large, mostly-zero integer systems, and
//! plain dense elimination for the small square systems (determinants,
//! linear solves) used elsewhere.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Q;

/// Sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseRow = Vec<(usize, Q)>;

pub fn sparse_from_map(map: BTreeMap<usize, Q>) -> SparseRow {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a - factor * b`, merged by column.
fn axpy(a: &[(usize, Q)], factor: &Q, b: &[(usize, Q)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(factor * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - factor * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row echelon form. Each stored row is normalised so
/// that its leading entry is 1.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current basis.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((lead, coeff)) = row.first().cloned() else {
                return row;
            };
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &coeff, p),
                None => return row,
            }
        }
    }

    /// Adds `row`; returns true if it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((lead, coeff)) = row.first().cloned() else {
            return false;
        };
        let inv = coeff.recip();
        let row = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

pub fn sparse_rank<I: IntoIterator<Item = SparseRow>>(rows: I) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Dense matrix, row-major.
pub type Dense = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> Dense {
    vec![vec![Q::zero(); cols]; rows]
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Dense) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn dense_rank(m: &Dense) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

pub fn determinant(m: &Dense) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// All solutions of `a x = b`: a particular solution plus the nullspace
/// dimension, or `None` when the system is inconsistent.
pub fn solve(a: &Dense, b: &[Q]) -> Option<(Vec<Q>, usize)> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Dense = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some((x, cols - pivots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn row(v: &[i64]) -> SparseRow {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(i, x)| (i, q(*x)))
            .collect()
    }

    #[test]
    fn echelon_rank() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1]), row(&[1, 3, 4])];
        assert_eq!(sparse_rank(rows), 2);
        assert_eq!(sparse_rank(Vec::<SparseRow>::new()), 0);
    }

    #[test]
    fn dense_and_sparse_agree() {
        let m: Dense = vec![
            vec![q(1), q(2), q(0), q(1)],
            vec![q(0), q(1), q(1), q(0)],
            vec![q(1), q(3), q(1), q(1)],
        ];
        let sparse: Vec<SparseRow> = m
            .iter()
            .map(|r| r.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        assert_eq!(dense_rank(&m), 2);
        assert_eq!(sparse_rank(sparse), 2);
    }

    #[test]
    fn determinant_small() {
        let m: Dense = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(determinant(&m), q(5));
        let s: Dense = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(determinant(&s), q(0));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a: Dense = vec![vec![q(2), q(0)], vec![q(0), q(4)]];
        let (x, null) = solve(&a, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![frac(3, 2), frac(1, 4)]);
        assert_eq!(null, 0);
        let a: Dense = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&a, &[q(1), q(3)]).is_none());
        assert_eq!(solve(&a, &[q(1), q(2)]).unwrap().1, 1);
    }
}
