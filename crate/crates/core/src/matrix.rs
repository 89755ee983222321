//! Dense row-major matrices over an exact field, with a pivot-free
//! Doolittle LU and a Gauss–Jordan inverse used as independent oracles.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::ExactRational;

/// The field operations the matrix code needs. Equality must be mathematical
/// equality, which both implementors guarantee by keeping values canonical.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Callers guarantee `rhs` is nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Lossless text form, used in reports and rendering.
    fn render(&self) -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn render(&self) -> String {
        crate::scalar::render_rational(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left_rows}x{left_cols} * {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero pivot at index {index}: leading principal minor of order {} vanishes", index + 1)]
    ZeroPivot { index: usize },
    #[error("matrix is singular (no pivot in column {column})")]
    Singular { column: usize },
    #[error("entry count {len} does not match {rows}x{cols}")]
    BadShape {
        rows: usize,
        cols: usize,
        len: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Unit lower triangular `l` and upper triangular `u` with `l * u` equal to
/// the factored matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LuPair<T> {
    pub l: DenseMatrix<T>,
    pub u: DenseMatrix<T>,
}

/// First entry where two matrices differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch<T> {
    pub row: usize,
    pub col: usize,
    pub expected: T,
    pub actual: T,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let entries: Vec<T> = rows.into_iter().flatten().collect();
        Self::from_vec(nrows, ncols, entries)
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Leading `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k.min(self.rows), k.min(self.cols), |i, j| {
            self.get(i, j).clone()
        })
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                // triangular factors are mostly zeros
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            acc
        }))
    }

    /// Pivot-free Doolittle elimination.
    pub fn lu_doolittle(&self) -> Result<LuPair<T>, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        let mut l = Self::identity(n);
        let mut u = Self::zeros(n, n);
        for k in 0..n {
            for j in k..n {
                let mut s = self.get(k, j).clone();
                for p in 0..k {
                    s = s.sub(&l.get(k, p).mul(u.get(p, j)));
                }
                u.set(k, j, s);
            }
            if u.get(k, k).is_zero() {
                return Err(MatrixError::ZeroPivot { index: k });
            }
            for i in (k + 1)..n {
                let mut s = self.get(i, k).clone();
                for p in 0..k {
                    s = s.sub(&l.get(i, p).mul(u.get(p, k)));
                }
                l.set(i, k, s.div(u.get(k, k)));
            }
        }
        Ok(LuPair { l, u })
    }

    /// Gauss–Jordan inverse on the augmented matrix `[self | I]`. Row swaps
    /// pick the first nonzero pivot; no magnitude ordering exists over the
    /// rational-function field and none is needed for exactness.
    pub fn invert_gauss_jordan(&self) -> Result<Self, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        let mut a: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<T>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(MatrixError::Singular { column: col })?;
            a.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            let pivot = a[col][col].clone();
            if !pivot.is_one() {
                for v in a[col].iter_mut().chain(inv[col].iter_mut()) {
                    if !v.is_zero() {
                        *v = v.div(&pivot);
                    }
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    if !a[col][c].is_zero() {
                        let d = factor.mul(&a[col][c]);
                        a[r][c] = a[r][c].sub(&d);
                    }
                    if !inv[col][c].is_zero() {
                        let d = factor.mul(&inv[col][c]);
                        inv[r][c] = inv[r][c].sub(&d);
                    }
                }
            }
        }
        Ok(Self {
            rows: n,
            cols: n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Greater => self.get(i, j).is_zero(),
                    std::cmp::Ordering::Equal => self.get(i, j).is_one(),
                    std::cmp::Ordering::Less => true,
                })
            })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn equals(&self, other: &Self) -> bool {
        self == other
    }

    /// First differing entry in row-major order, treating `self` as the
    /// expected value. Shape mismatches report at the first out-of-range cell.
    pub fn first_mismatch(&self, actual: &Self) -> Option<Mismatch<T>> {
        let rows = self.rows.max(actual.rows);
        let cols = self.cols.max(actual.cols);
        let fetch =
            |m: &Self, i: usize, j: usize| (i < m.rows && j < m.cols).then(|| m.get(i, j).clone());
        for i in 0..rows {
            for j in 0..cols {
                let e = fetch(self, i, j);
                let a = fetch(actual, i, j);
                if e != a {
                    return Some(Mismatch {
                        row: i,
                        col: j,
                        expected: e.unwrap_or_else(T::zero),
                        actual: a.unwrap_or_else(T::zero),
                    });
                }
            }
        }
        None
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}
