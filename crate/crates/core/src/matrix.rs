//! Dense exact matrices over the integers and the rationals, and rational
//! subspaces kept in reduced row echelon form.
//!
//! Subspaces store their basis as RREF rows, so two subspaces are equal iff
//! their stored data is equal. Intersections use the Zassenhaus double-block
//! trick; everything else is plain Gaussian elimination over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("ragged rows: row {row} has {got} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::RaggedRows {
                    row: i,
                    got: row.len(),
                    expected: c,
                });
            }
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| BigInt::from(v)))
            .collect();
        Ok(IntMatrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// `self^k` for a square matrix.
    pub fn pow(&self, k: usize) -> Result<Self, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Smallest `e` with `self^e = 0`, or `None` if the matrix is not
    /// nilpotent. A 0x0 matrix has index 0, the zero matrix index 1.
    pub fn nilpotency_index(&self) -> Option<usize> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut acc = Self::identity(n);
        for e in 0..=n {
            if acc.is_zero() {
                return Some(e);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    pub fn block_diag(blocks: &[&IntMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }

    /// Row-major `i64` image of the matrix, for JSON output. `None` if an
    /// entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(i64::try_from(self.get(i, j)).ok()?);
            }
            out.push(row);
        }
        Some(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::RaggedRows {
                    row: i,
                    got: row.len(),
                    expected: c,
                });
            }
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c) / &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &f * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the null space `{x : Mx = 0}` as a subspace of Q^cols.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![BigRational::zero(); self.cols];
            vec[free] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                vec[p] = -m.get(r, free).clone();
            }
            basis.push(vec);
        }
        Subspace::from_vectors(self.cols, basis)
    }

    /// Column space as a subspace of Q^rows.
    pub fn column_space(&self) -> Subspace {
        let cols: Vec<Vec<BigRational>> = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .collect();
        Subspace::from_vectors(self.rows, cols)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of Q^n, stored as an RREF row basis.
///
/// The RREF basis is canonical, so `PartialEq` on the stored data decides
/// subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<BigRational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![BigRational::zero(); ambient];
                v[i] = BigRational::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Span of the given vectors, canonicalized via RREF.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<BigRational>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let mut m = RatMatrix::from_rows(vectors).expect("uniform vector lengths");
        let pivots = m.rref();
        let basis = (0..pivots.len())
            .map(|r| (0..ambient).map(|c| m.get(r, c).clone()).collect())
            .collect();
        Subspace { ambient, basis }
    }

    /// Span of coordinate axes `indices` inside Q^ambient.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&i| {
                let mut v = vec![BigRational::zero(); ambient];
                v[i] = BigRational::one();
                v
            })
            .collect();
        Self::from_vectors(ambient, vectors)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    /// Reduce `v` against the basis; membership iff the residue is zero.
    pub fn contains_vector(&self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut w = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if !w[pivot].is_zero() {
                let f = w[pivot].clone();
                for (wi, ri) in w.iter_mut().zip(row.iter()) {
                    *wi -= &f * ri;
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.clone());
        Self::from_vectors(self.ambient, vectors)
    }

    /// Zassenhaus intersection: rref the block matrix [[u u], [w 0]]; rows
    /// whose left half vanishes carry a basis of the intersection in the
    /// right half.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Self::zero(n);
        }
        let mut rows = Vec::new();
        for u in &self.basis {
            let mut row = u.clone();
            row.extend(u.iter().cloned());
            rows.push(row);
        }
        for w in &other.basis {
            let mut row = w.clone();
            row.extend(std::iter::repeat_n(BigRational::zero(), n));
            rows.push(row);
        }
        let mut m = RatMatrix::from_rows(rows).expect("uniform row lengths");
        m.rref();
        let mut inter = Vec::new();
        for r in 0..m.rows() {
            let left_zero = (0..n).all(|c| m.get(r, c).is_zero());
            let right_nonzero = (n..2 * n).any(|c| !m.get(r, c).is_zero());
            if left_zero && right_nonzero {
                inter.push((n..2 * n).map(|c| m.get(r, c).clone()).collect());
            }
        }
        Self::from_vectors(n, inter)
    }

    /// Image of this subspace under the column action `x -> Mx`.
    pub fn apply_int(&self, m: &IntMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "matrix/ambient mismatch");
        let rm = m.to_rational();
        let images = self
            .basis
            .iter()
            .map(|v| rm.mul_vec(v).expect("checked dimensions"))
            .collect();
        Self::from_vectors(m.rows(), images)
    }

    /// Embed into Q^bigger by padding with zeros, coordinates shifted by
    /// `offset`.
    pub fn embed(&self, bigger: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient <= bigger, "embedding out of range");
        let vectors = self
            .basis
            .iter()
            .map(|v| {
                let mut w = vec![BigRational::zero(); bigger];
                w[offset..offset + self.ambient].clone_from_slice(v);
                w
            })
            .collect();
        Self::from_vectors(bigger, vectors)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of Q^{})", self.dim(), self.ambient)
    }
}
