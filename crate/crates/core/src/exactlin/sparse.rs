use std::fmt;

use super::{LinError, Scalar};

/// Sparse vector with sorted indices and no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: Vec::new() }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        SparseVec { dim, entries: vec![(i, Scalar::ONE)] }
    }

    pub fn single(dim: usize, i: usize, c: Scalar) -> Self {
        assert!(i < dim, "index {i} out of range for dimension {dim}");
        if c.is_zero() {
            return Self::zero(dim);
        }
        SparseVec { dim, entries: vec![(i, c)] }
    }

    /// Builds a vector from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I>(dim: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut raw: Vec<(usize, Scalar)> = pairs.into_iter().collect();
        for (i, _) in &raw {
            assert!(*i < dim, "index {i} out of range for dimension {dim}");
        }
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { dim, entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        SparseVec { dim: values.len(), entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let v: Vec<Scalar> = values.iter().map(|&x| Scalar::from_int(x)).collect();
        Self::from_dense(&v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn conj(&self) -> SparseVec {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, x.conj())).collect(),
        }
    }

    /// `self + c * other`, merging sorted supports.
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        assert_eq!(self.dim, other.dim, "dimension mismatch in vector sum");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        entries.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        entries.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            entries.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    entries.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    entries.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { dim: self.dim, entries }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Scalar::ONE)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Scalar::from_int(-1))
    }

    pub fn neg(&self) -> SparseVec {
        self.scale(&Scalar::from_int(-1))
    }

    /// Bilinear pairing Σ aᵢ bᵢ (no conjugation).
    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::ZERO;
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, x) = &self.entries[a];
            let (j, y) = &other.entries[b];
            if i < j {
                a += 1;
            } else if j < i {
                b += 1;
            } else {
                acc += &(x * y);
                a += 1;
                b += 1;
            }
        }
        acc
    }

    /// Reinterprets the vector in a space of the same or larger dimension.
    pub fn with_dim(&self, dim: usize) -> SparseVec {
        assert!(self.entries.last().map_or(true, |(i, _)| *i < dim));
        SparseVec { dim, entries: self.entries.clone() }
    }

    /// Coordinates shifted by `offset` inside a space of dimension `dim`.
    pub fn embed(&self, dim: usize, offset: usize) -> SparseVec {
        assert!(offset + self.dim <= dim);
        SparseVec {
            dim,
            entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect(),
        }
    }

    /// Restriction to the coordinate window `[offset, offset + len)`.
    pub fn window(&self, offset: usize, len: usize) -> SparseVec {
        SparseVec {
            dim: len,
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= offset && *i < offset + len)
                .map(|(i, c)| (i - offset, c.clone()))
                .collect(),
        }
    }

    /// Elementary tensor `self ⊗ other` in the row-major convention.
    pub fn tensor(&self, other: &SparseVec) -> SparseVec {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other.dim + j, x * y));
            }
        }
        SparseVec { dim: self.dim * other.dim, entries }
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, c)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}:{c}")?;
        }
        write!(f, "]/{}", self.dim)
    }
}

/// Sparse matrix stored column by column: column `j` is the image of the
/// `j`-th basis vector, which is how every linear map in the crate is read.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, columns: vec![SparseVec::zero(rows); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, columns: (0..n).map(|i| SparseVec::basis(n, i)).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        for c in &columns {
            assert_eq!(c.dim(), rows, "column dimension mismatch");
        }
        SparseMatrix { rows, columns }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triples<I>(rows: usize, cols: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, x) in triples {
            assert!(c < cols, "column {c} out of range");
            per_col[c].push((r, x));
        }
        let columns = per_col.into_iter().map(|p| SparseVec::from_pairs(rows, p)).collect();
        SparseMatrix { rows, columns }
    }

    pub fn from_dense_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_triples(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(move |(c, x)| (r, c, Scalar::from_int(*x)))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    /// All stored entries as `(row, col, value)`, column-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (r, c, x)))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.cols(), "matrix/vector dimension mismatch");
        let mut pairs = Vec::new();
        for (j, c) in v.iter() {
            for (i, x) in self.columns[j].iter() {
                pairs.push((i, x * c));
            }
        }
        SparseVec::from_pairs(self.rows, pairs)
    }

    /// Row functional `f` (length `rows`) composed with this map.
    pub fn pull_back(&self, f: &SparseVec) -> SparseVec {
        assert_eq!(f.dim(), self.rows);
        SparseVec::from_pairs(
            self.cols(),
            self.columns.iter().enumerate().map(|(j, col)| (j, f.dot(col))),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows, "composition dimension mismatch");
        SparseMatrix {
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        Self::from_triples(
            self.cols(),
            self.rows,
            self.triples().map(|(r, c, x)| (c, r, x.clone())),
        )
    }

    pub fn conj(&self) -> SparseMatrix {
        SparseMatrix { rows: self.rows, columns: self.columns.iter().map(SparseVec::conj).collect() }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        SparseMatrix {
            rows: self.rows,
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        SparseMatrix {
            rows: self.rows,
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix { rows: self.rows, columns: self.columns.iter().map(|v| v.scale(c)).collect() }
    }

    /// Kronecker product `self ⊗ other` (row-major in both factors).
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.columns {
            for b in &other.columns {
                columns.push(a.tensor(b));
            }
        }
        SparseMatrix { rows: self.rows * other.rows, columns }
    }

    pub fn is_diagonal(&self) -> bool {
        self.columns.iter().enumerate().all(|(j, c)| c.iter().all(|(i, _)| i == j))
    }

    /// First entry where `self` and `other` differ, as `(row, col, self, other)`.
    pub fn first_difference(&self, other: &SparseMatrix) -> Option<(usize, usize, Scalar, Scalar)> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Some((self.rows, self.cols(), Scalar::ZERO, Scalar::ZERO));
        }
        for (j, (a, b)) in self.columns.iter().zip(&other.columns).enumerate() {
            if a != b {
                let d = a.sub(b);
                let (i, _) = d.leading().expect("unequal vectors differ somewhere");
                return Some((i, j, a.get(i), b.get(i)));
            }
        }
        None
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{}", self.rows, self.cols())?;
        for (j, c) in self.columns.iter().enumerate() {
            if !c.is_zero() {
                writeln!(f, "  col {j}: {c:?}")?;
            }
        }
        Ok(())
    }
}

/// Index of `e_i ⊗ e_j` in `A ⊗ B` when `dim B = dim_second`.
pub fn tensor_index(i: usize, j: usize, dim_first: usize, dim_second: usize) -> Result<usize, LinError> {
    if i >= dim_first || j >= dim_second {
        return Err(LinError::IndexOutOfRange { i, j, dim_first, dim_second });
    }
    Ok(i * dim_second + j)
}

/// Inverse of [`tensor_index`].
pub fn tensor_split(k: usize, dim_second: usize) -> (usize, usize) {
    (k / dim_second, k % dim_second)
}

/// Applies `f ⊗ g` to `v ∈ V ⊗ W` where `dim V = left_dim`, `dim W = right_dim`;
/// `None` stands for the identity on that factor.
pub fn apply_tensor(
    f: Option<&SparseMatrix>,
    g: Option<&SparseMatrix>,
    v: &SparseVec,
    left_dim: usize,
    right_dim: usize,
) -> SparseVec {
    assert_eq!(v.dim(), left_dim * right_dim, "tensor dimension mismatch");
    let out_left = f.map_or(left_dim, SparseMatrix::rows);
    let out_right = g.map_or(right_dim, SparseMatrix::rows);
    if let Some(f) = f {
        assert_eq!(f.cols(), left_dim);
    }
    if let Some(g) = g {
        assert_eq!(g.cols(), right_dim);
    }
    let mut pairs = Vec::new();
    for (k, c) in v.iter() {
        let (i, j) = tensor_split(k, right_dim);
        let left = match f {
            Some(f) => f.column(i).clone(),
            None => SparseVec::basis(left_dim, i),
        };
        let right = match g {
            Some(g) => g.column(j).clone(),
            None => SparseVec::basis(right_dim, j),
        };
        for (a, x) in left.iter() {
            for (b, y) in right.iter() {
                pairs.push((a * out_right + b, &(x * y) * c));
            }
        }
    }
    SparseVec::from_pairs(out_left * out_right, pairs)
}

/// Swaps the tensor factors of `v ∈ V ⊗ W`, giving an element of `W ⊗ V`.
pub fn flip(v: &SparseVec, left_dim: usize, right_dim: usize) -> SparseVec {
    assert_eq!(v.dim(), left_dim * right_dim);
    SparseVec::from_pairs(
        v.dim(),
        v.iter().map(|(k, c)| {
            let (i, j) = tensor_split(k, right_dim);
            (j * left_dim + i, c.clone())
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_index_examples() {
        assert_eq!(tensor_index(0, 0, 1, 5).unwrap(), 0);
        assert_eq!(tensor_index(2, 3, 3, 4).unwrap(), 11);
        assert!(tensor_index(3, 0, 3, 4).is_err());
        assert!(tensor_index(0, 4, 3, 4).is_err());
        for d in [1, 2, 7] {
            for i in 0..3 {
                for j in 0..d {
                    let k = tensor_index(i, j, 3, d).unwrap();
                    assert_eq!(tensor_split(k, d), (i, j));
                }
            }
        }
    }

    #[test]
    fn from_pairs_merges_and_drops_zeros() {
        let v = SparseVec::from_pairs(
            4,
            vec![(2, Scalar::ONE), (0, Scalar::from_int(3)), (2, Scalar::from_int(-1))],
        );
        assert_eq!(v.nnz(), 1);
        assert_eq!(v.get(0), Scalar::from_int(3));
    }

    #[test]
    fn kron_matches_apply_tensor() {
        let f = SparseMatrix::from_dense_rows(&[vec![1, 2], vec![0, 1]]);
        let g = SparseMatrix::from_dense_rows(&[vec![0, 1, 0], vec![1, 0, 1]]);
        let k = f.kron(&g);
        let v = SparseVec::from_ints(&[1, 0, -1, 2, 3, 0]);
        assert_eq!(k.apply(&v), apply_tensor(Some(&f), Some(&g), &v, 2, 3));
    }

    #[test]
    fn flip_is_involutive() {
        let v = SparseVec::from_ints(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(flip(&flip(&v, 2, 3), 3, 2), v);
        assert_eq!(flip(&v, 2, 3).get(1 * 2 + 0), Scalar::from_int(2));
    }
}
