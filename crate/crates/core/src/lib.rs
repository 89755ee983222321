//! Exact LU factorizations of the reciprocal Pascal matrix `M[i][j] = 1 / C(i+j, j)`,
//! of its inverse, the super Catalan decomposition `S = G M G`, and the
//! q-analogues of all of them, together with an exact identity checker.
//!
//! All arithmetic is exact: big rationals for the classical matrices, reduced
//! rational functions in `q` for the q-analogues. Comparisons are structural
//! equality of canonical forms; there are no tolerances anywhere.

pub mod closed_forms;
pub mod matrix;
pub mod q_closed_forms;
pub mod qfield;
pub mod render;
pub mod scalar;
pub mod verify;

pub use closed_forms::{Family, FormulaSet};
pub use matrix::{DenseMatrix, LuPair, MatrixError, Scalar};
pub use qfield::{QPolynomial, QRationalFunction};
pub use scalar::{ExactInteger, ExactRational};
