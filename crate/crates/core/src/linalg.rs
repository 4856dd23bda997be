//! Dense vectors and matrices over GF(4).
//!
//! Matrices are immutable values stored row-major; every operation returns a
//! fresh matrix. Gaussian elimination always pivots on the first nonzero
//! entry of the leftmost remaining column, scanning rows top to bottom.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::{Error, F4};

/// Hermitian inner product `(u, v)_h = Σ u_i · conj(v_i)`.
pub fn hermitian_inner(u: &[F4], v: &[F4]) -> Result<F4, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    Ok(hermitian_inner_unchecked(u, v))
}

pub(crate) fn hermitian_inner_unchecked(u: &[F4], v: &[F4]) -> F4 {
    u.iter().zip(v).map(|(&x, &y)| x * y.conj()).sum()
}

/// Hamming weight of a vector.
pub fn weight(v: &[F4]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// A `rows × cols` matrix over GF(4).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F4>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<F4>) -> Result<Matrix, Error> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from its rows. An empty slice yields a `0 × 0` matrix;
    /// use [`Matrix::zeros`] for `0 × n`.
    pub fn from_rows<R: AsRef<[F4]>>(rows: &[R]) -> Result<Matrix, Error> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::ShapeMismatch);
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F4) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![F4::ZERO; rows * cols] }
    }

    pub fn identity(size: usize) -> Matrix {
        Matrix::from_fn(size, size, |i, j| if i == j { F4::ONE } else { F4::ZERO })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F4 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F4]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<F4> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.conj()).collect(),
        }
    }

    /// `conj(G)ᵀ`.
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch);
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|t| self.get(i, t) * rhs.get(t, j)).sum()
        }))
    }

    /// The Gram matrix `G · conj(G)ᵀ`; entry `(i, j)` is `(row_i, row_j)_h`.
    pub fn gram(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.rows, |i, j| {
            hermitian_inner_unchecked(self.row(i), self.row(j))
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true).1;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false).1.len()
    }

    /// Determinant by elimination. Row swaps carry no sign in characteristic 2.
    pub fn det(&self) -> Result<F4, Error> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut m = self.clone();
        let (product, pivots) = m.eliminate(false);
        Ok(if pivots.len() == self.rows { product } else { F4::ZERO })
    }

    /// Basis of the right Hermitian null space: every row `h` of the result
    /// satisfies `(g, h)_h = 0` for every row `g` of `self`. Solved as the
    /// ordinary kernel of `conj(self)`; rows are returned in reduced echelon
    /// form, `(cols - rank) × cols`.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.conj().rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(n - pivots.len());
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut h = vec![F4::ZERO; n];
            h[free] = F4::ONE;
            for (row, &p) in pivots.iter().enumerate() {
                // x_p + r[row][free] * x_free = 0
                h[p] = r.get(row, free);
            }
            basis.push(h);
        }
        if basis.is_empty() {
            return Matrix::zeros(0, n);
        }
        let basis = Matrix::from_rows(&basis).expect("rows share length n");
        basis.rref().0
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.cols, "permutation length must equal column count");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, perm[j]))
    }

    /// Multiplies column `j` by `scales[j]`.
    pub fn scale_columns(&self, scales: &[F4]) -> Matrix {
        assert_eq!(scales.len(), self.cols, "one scale per column");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * scales[j])
    }

    /// Appends an all-zero column.
    pub fn with_zero_column(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                F4::ZERO
            }
        })
    }

    /// Deletes column `j`.
    pub fn without_column(&self, j: usize) -> Matrix {
        assert!(j < self.cols, "column index out of range");
        Matrix::from_fn(self.rows, self.cols - 1, |i, c| self.get(i, if c < j { c } else { c + 1 }))
    }

    /// `v · self` for a row vector `v` of length `rows`.
    pub fn combine_rows(&self, coeffs: &[F4]) -> Vec<F4> {
        debug_assert_eq!(coeffs.len(), self.rows);
        let mut out = vec![F4::ZERO; self.cols];
        for (i, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(i)) {
                *o += c * x;
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// In-place elimination. Returns the product of the pivot values (before
    /// normalization) and the pivot columns. With `reduce` the result is in
    /// reduced row echelon form, otherwise only rows below pivots are cleared.
    fn eliminate(&mut self, reduce: bool) -> (F4, Vec<usize>) {
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut product = F4::ONE;
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let pivot = self.get(r, c);
            product *= pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for j in c..cols {
                self.data[r * cols + j] *= inv;
            }
            let start = if reduce { 0 } else { r + 1 };
            for i in start..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    self.data[i * cols + j] += factor * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (product, pivots)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = F4;
    fn index(&self, (i, j): (usize, usize)) -> &F4 {
        &self.data[i * self.cols + j]
    }
}
