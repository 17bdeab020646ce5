//! Exact scalars over ℚ(i) and sparse linear algebra on top of them.
//!
//! Every linear map in the crate is a [`SparseMatrix`] whose column `j` is
//! the image of basis vector `j`. Tensor products use the row-major
//! convention of [`tensor_index`] throughout.

mod scalar;
mod sparse;

use std::collections::BTreeMap;

use thiserror::Error;

pub use scalar::{Rational, Scalar};
pub use sparse::{apply_tensor, flip, tensor_index, tensor_split, SparseMatrix, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("cannot parse scalar: {0}")]
    Parse(String),
    #[error("tensor index ({i}, {j}) out of range for {dim_first}x{dim_second}")]
    IndexOutOfRange { i: usize, j: usize, dim_first: usize, dim_second: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
}

/// Row echelon form built one vector at a time.
///
/// Stored rows have leading coefficient 1 and are keyed by pivot column.
/// Rows are only reduced at their leading entry, which is enough for rank
/// and membership; [`Echelon::into_rref`] finishes the job when needed.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` until its leading index is not a pivot (or it vanishes).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        while let Some((lead, c)) = v.leading() {
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = -c;
                    v = v.add_scaled(row, &c);
                }
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        assert_eq!(v.dim(), self.dim, "echelon dimension mismatch");
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some((lead, c)) => {
                let inv = c.inv().expect("leading entry is nonzero");
                let r = r.scale(&inv);
                self.rows.insert(lead, r);
                true
            }
        }
    }

    /// Reduced row echelon form as `(pivot, row)` pairs in pivot order.
    pub fn into_rref(self) -> Vec<(usize, SparseVec)> {
        let mut rows: Vec<(usize, SparseVec)> = self.rows.into_iter().collect();
        // back substitution, last pivot first
        for k in (0..rows.len()).rev() {
            let (p, pivot_row) = rows[k].clone();
            for (_, row) in rows.iter_mut().take(k) {
                let c = row.get(p);
                if !c.is_zero() {
                    *row = row.add_scaled(&pivot_row, &-c);
                }
            }
        }
        rows
    }
}

/// Exact rank over ℚ(i).
pub fn rank(m: &SparseMatrix) -> usize {
    // column rank; columns are what the matrix stores
    let mut e = Echelon::new(m.rows());
    for c in m.columns() {
        e.insert(c);
    }
    e.rank()
}

/// Rank of the span of a family of vectors of equal dimension.
pub fn span_rank(vectors: &[SparseVec]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut e = Echelon::new(first.dim());
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Whether two families span the same subspace.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let r = span_rank(a);
    if r != span_rank(b) {
        return false;
    }
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    span_rank(&all) == r
}

fn row_echelon_of(m: &SparseMatrix) -> Echelon {
    let t = m.transpose();
    let mut e = Echelon::new(m.cols());
    for row in t.columns() {
        e.insert(row);
    }
    e
}

/// Basis of the right null space, one vector per free column in increasing
/// order, read off the reduced row echelon form.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let n = m.cols();
    let rref = row_echelon_of(m).into_rref();
    let pivots: BTreeMap<usize, &SparseVec> = rref.iter().map(|(p, r)| (*p, r)).collect();
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains_key(c)) {
        let mut pairs = vec![(free, Scalar::ONE)];
        for (p, row) in &pivots {
            let c = row.get(free);
            if !c.is_zero() {
                pairs.push((*p, -c));
            }
        }
        out.push(SparseVec::from_pairs(n, pairs));
    }
    out
}

/// Some `x` with `m x = b`, choosing zero for every free variable.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Result<SparseVec, LinError> {
    if b.dim() != m.rows() {
        return Err(LinError::DimensionMismatch { expected: m.rows(), got: b.dim() });
    }
    let n = m.cols();
    // rows of [m | b]
    let t = m.transpose();
    let mut rows: Vec<Vec<(usize, Scalar)>> = t
        .columns()
        .iter()
        .map(|c| c.iter().map(|(i, x)| (i, x.clone())).collect())
        .collect();
    for (i, x) in b.iter() {
        rows[i].push((n, x.clone()));
    }
    let mut e = Echelon::new(n + 1);
    for r in rows {
        e.insert(&SparseVec::from_pairs(n + 1, r));
    }
    let rref = e.into_rref();
    let mut x = Vec::new();
    for (p, row) in &rref {
        if *p == n {
            return Err(LinError::Inconsistent);
        }
        let c = row.get(n);
        if !c.is_zero() {
            x.push((*p, c));
        }
    }
    Ok(SparseVec::from_pairs(n, x))
}

/// Inverse of a square matrix.
pub fn inverse(m: &SparseMatrix) -> Result<SparseMatrix, LinError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(LinError::DimensionMismatch { expected: n, got: m.cols() });
    }
    // Gauss-Jordan on [m | I] by rows
    let t = m.transpose();
    let mut e = Echelon::new(2 * n);
    for (i, row) in t.columns().iter().enumerate() {
        let mut pairs: Vec<(usize, Scalar)> = row.iter().map(|(j, x)| (j, x.clone())).collect();
        pairs.push((n + i, Scalar::ONE));
        e.insert(&SparseVec::from_pairs(2 * n, pairs));
    }
    let rref = e.into_rref();
    if rref.len() < n || rref[n - 1].0 >= n {
        return Err(LinError::Singular);
    }
    // row p of the inverse is the right half of pivot row p
    let triples = rref.iter().flat_map(|(p, row)| {
        row.iter().filter(|(j, _)| *j >= n).map(move |(j, x)| (*p, j - n, x.clone()))
    });
    Ok(SparseMatrix::from_triples(n, n, triples.collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::zero(3, 3)), 0);
        assert_eq!(rank(&SparseMatrix::identity(12)), 12);
        let m = SparseMatrix::from_dense_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
        let m = SparseMatrix::from_dense_rows(&[vec![1, -1]]);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![SparseVec::from_ints(&[1, 1])]);
    }

    #[test]
    fn solve_and_inverse() {
        let m = SparseMatrix::from_dense_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.compose(&inv), SparseMatrix::identity(2));
        let x = solve(&m, &SparseVec::from_ints(&[3, 2])).unwrap();
        assert_eq!(x, SparseVec::from_ints(&[1, 1]));
        let sing = SparseMatrix::from_dense_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(inverse(&sing), Err(LinError::Singular));
        assert_eq!(solve(&sing, &SparseVec::from_ints(&[1, 0])), Err(LinError::Inconsistent));
    }

    #[test]
    fn gaussian_entries() {
        // [[1, i], [i, -1]] has rank one
        let i = Scalar::i();
        let m = SparseMatrix::from_triples(
            2,
            2,
            vec![(0, 0, Scalar::ONE), (0, 1, i.clone()), (1, 0, i), (1, 1, Scalar::from_int(-1))],
        );
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_zero());
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-2i64..=2, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in small_matrix()) {
            let m = SparseMatrix::from_dense_rows(&rows);
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.apply(v).is_zero());
            }
            prop_assert_eq!(span_rank(&k), k.len());
        }

        #[test]
        fn row_rank_equals_column_rank(rows in small_matrix()) {
            let m = SparseMatrix::from_dense_rows(&rows);
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }
    }
}
