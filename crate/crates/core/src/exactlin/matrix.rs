use std::fmt;

use super::field::Modulus;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
///
/// Vectors are rows and matrices act on the right: the image of `v` under `m`
/// is `v * m`. Composition "first `a`, then `b`" is therefore the product `a * b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: Modulus,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(p: Modulus, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Modulus, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p.get();
        }
        m
    }

    /// Builds a matrix from row-major residues; entries are reduced mod `p`.
    pub fn from_vec(p: Modulus, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        let data = data.into_iter().map(|x| p.reduce(x)).collect();
        Matrix {
            p,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from signed integer rows, reducing into `[0, p)`.
    /// All rows must have length `cols`.
    pub fn from_rows<R: AsRef<[i64]>>(p: Modulus, cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| p.reduce_signed(x)));
        }
        Matrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn row_vector(p: Modulus, v: &[u64]) -> Self {
        Self::from_vec(p, 1, v.len(), v.to_vec())
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(p: Modulus, diag: &[u64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(p, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = p.reduce(d);
        }
        m
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.cols + j] = self.p.reduce(value);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u64> {
        self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.p, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p, "mixed moduli");
        assert_eq!(self.cols, other.rows, "incompatible shapes for product");
        let p = self.p.get();
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot = (*slot + a * b) % p;
                }
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        out
    }

    /// `v * self` for a row vector `v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "vector length does not match rows");
        let p = self.p.get();
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in out.iter_mut().zip(self.row(k)) {
                *slot = (*slot + a * b) % p;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| self.p.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| self.p.sub(a, b))
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(u64, u64) -> u64) -> Matrix {
        assert_eq!(self.p, other.p, "mixed moduli");
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Matrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let c = self.p.reduce(c);
        Matrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| self.p.mul(a, c)).collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: u64, other: &Matrix) -> Matrix {
        let c = self.p.reduce(c);
        self.zip_with(other, |a, b| self.p.mul_add(a, c, b))
    }

    pub fn pow(&self, mut exp: u64) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.p, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> u64 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |t, i| self.p.add(t, self.get(i, i)))
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(p: Modulus, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix {
            p,
            rows,
            cols,
            data,
        }
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(p: Modulus, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(p, rows, cols);
        let mut offset = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                out.row_mut(i)[offset..offset + m.cols].copy_from_slice(m.row(i));
            }
            offset += m.cols;
        }
        out
    }

    pub fn block_diagonal(p: Modulus, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|m| m.rows).sum();
        let cols = blocks.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in blocks {
            for i in 0..m.rows {
                out.row_mut(r0 + i)[c0..c0 + m.cols].copy_from_slice(m.row(i));
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_slice(&self, start: usize, end: usize) -> Matrix {
        Matrix {
            p: self.p,
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Columns at the given indices, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Self::zeros(self.p, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + jj] = self.get(i, j);
            }
        }
        out
    }

    /// The 0/1 matrix of shape `n x cols.len()` picking the given coordinates of a row vector.
    pub fn column_selector(p: Modulus, n: usize, cols: &[usize]) -> Matrix {
        let mut out = Self::zeros(p, n, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            out.data[j * cols.len() + jj] = 1 % p.get();
        }
        out
    }

    /// Reshapes the matrix into a single row (row-major order).
    pub fn flatten(&self) -> Vec<u64> {
        self.data.clone()
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    /// Row-reduces in place, choosing pivots only among the first `pivot_cols`
    /// columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = p.inv(self.data[r * cols + c]).expect("pivot is nonzero");
            for x in &mut self.data[r * cols + c..(r + 1) * cols] {
                *x = p.mul(*x, inv);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before
                .chunks_exact_mut(cols)
                .chain(after.chunks_exact_mut(cols))
            {
                let f = other[c];
                if f == 0 {
                    continue;
                }
                let f = p.neg(f);
                for j in c..cols {
                    if pivot_row[j] != 0 {
                        other[j] = p.mul_add(other[j], f, pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (as rows) of the right null space `{v : self * v^T = 0}`.
    ///
    /// One basis vector per free column, in increasing column order, with a 1
    /// in its free column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.p, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.data[k * self.cols + f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                out.data[k * self.cols + pc] = self.p.neg(r.get(i, f));
            }
        }
        out
    }

    /// Basis (as rows) of `{v : v * self = 0}`.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis()
    }

    /// Basis (as rows) of the column space of `self`, i.e. the nonzero rows of `rref(self^T)`.
    pub fn image_basis(&self) -> Matrix {
        let r = self.transpose().rref();
        r.matrix.row_slice(0, r.rank)
    }

    /// Canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let r = self.rref();
        r.matrix.row_slice(0, r.rank)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let id = Self::identity(self.p, n);
        let mut aug = Self::hstack(self.p, n, &[self, &id]);
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.select_columns(&(n..2 * n).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Solves `a * x = b`. Returns the solution whose free variables are all zero,
/// or `None` if the system is inconsistent.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve_linear: a has {} rows but b has {}",
            a.rows, b.rows
        )));
    }
    let n = a.cols;
    let k = b.cols;
    let mut aug = Matrix::hstack(a.p, a.rows, &[a, b]);
    let pivots = aug.rref_in_place(n);
    // A nonzero entry in the b-part of a zero row means inconsistency.
    for i in pivots.len()..aug.rows {
        if aug.row(i)[n..].iter().any(|&x| x != 0) {
            return Ok(None);
        }
    }
    let mut x = Matrix::zeros(a.p, n, k);
    for (i, &pc) in pivots.iter().enumerate() {
        x.row_mut(pc).copy_from_slice(&aug.row(i)[n..]);
    }
    Ok(Some(x))
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
