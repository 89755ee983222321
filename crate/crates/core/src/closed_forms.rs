//! Entrywise generators for the reciprocal Pascal matrix `M`, the super
//! Catalan matrix `S`, the central-binomial diagonal `G`, the factors of
//! `M = L U` and their inverses, and the dimension-dependent factors of
//! `M^{-1} = A B` and their inverses.
//!
//! Indices are 0-based. Formulas are only evaluated inside their triangle;
//! entries outside it are structural zeros, so no factorial of a negative
//! number is ever formed.
//!
//! Two formula catalogs exist. [`FormulaSet::Printed`] transcribes every
//! formula exactly as published. [`FormulaSet::Corrected`] differs only where
//! the published formula fails its defining identity: `U^{-1}`, whose
//! numerator carries `(j+i-1)!` rather than `(j+i)!`, and the integer sum
//! form of `M^{-1}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::DenseMatrix;
use crate::scalar::{binomial, factorial, parity_sign, ExactInteger, ExactRational};

/// The eleven closed-form families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    M,
    S,
    G,
    L,
    U,
    Linv,
    Uinv,
    A,
    B,
    Ainv,
    Binv,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::M,
        Family::S,
        Family::G,
        Family::L,
        Family::U,
        Family::Linv,
        Family::Uinv,
        Family::A,
        Family::B,
        Family::Ainv,
        Family::Binv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::M => "M",
            Family::S => "S",
            Family::G => "G",
            Family::L => "L",
            Family::U => "U",
            Family::Linv => "Linv",
            Family::Uinv => "Uinv",
            Family::A => "A",
            Family::B => "B",
            Family::Ainv => "Ainv",
            Family::Binv => "Binv",
        }
    }

    /// `A`, `B` and their inverses only exist at their own dimension; the
    /// rest are truncations of infinite matrices.
    pub fn depends_on_dimension(self) -> bool {
        matches!(self, Family::A | Family::B | Family::Ainv | Family::Binv)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// Which transcription of the formulas to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaSet {
    #[default]
    Corrected,
    Printed,
}

impl FormulaSet {
    pub fn name(self) -> &'static str {
        match self {
            FormulaSet::Corrected => "corrected",
            FormulaSet::Printed => "printed",
        }
    }
}

/// `sign * ∏ num! / ∏ den!`.
fn factorial_quotient(sign: i32, num: &[usize], den: &[usize]) -> ExactRational {
    let top: BigInt = num.iter().map(|&n| factorial(n)).product();
    let bottom: BigInt = den.iter().map(|&n| factorial(n)).product();
    let r = BigRational::new(top, bottom);
    if sign < 0 {
        -r
    } else {
        r
    }
}

fn from_int(v: ExactInteger) -> ExactRational {
    BigRational::from_integer(v)
}

/// Entry `(i, j)` of `family` at dimension `n` (only `A`, `B`, `Ainv`,
/// `Binv` read `n`).
pub fn entry(family: Family, n: usize, i: usize, j: usize, formulas: FormulaSet) -> ExactRational {
    let zero = BigRational::zero;
    let sgn = |e: usize| parity_sign(e as i64);
    match family {
        Family::M => from_int(binomial(i + j, j as i64)).recip(),
        Family::S => factorial_quotient(1, &[2 * i, 2 * j], &[i, j, i + j]),
        Family::G => {
            if i == j {
                from_int(binomial(2 * i, i as i64))
            } else {
                zero()
            }
        }
        Family::L => {
            if j > i {
                return zero();
            }
            factorial_quotient(1, &[i, i, 2 * j], &[i + j, i - j, j, j])
        }
        Family::U => {
            if j < i {
                return zero();
            }
            if i == 0 {
                return BigRational::one();
            }
            factorial_quotient(sgn(i), &[j, j, i, i - 1], &[j + i, j - i, 2 * i - 1])
        }
        Family::Linv => {
            if j > i {
                return zero();
            }
            if i == 0 {
                // limit value at (0, 0)
                return BigRational::one();
            }
            factorial_quotient(sgn(i - j), &[i, i, i + j - 1], &[2 * i - 1, i - j, j, j])
        }
        Family::Uinv => {
            if j < i {
                return zero();
            }
            if i == 0 {
                return from_int(binomial(2 * j, j as i64));
            }
            match formulas {
                FormulaSet::Printed => {
                    factorial_quotient(sgn(i), &[j + i, 2 * j], &[j - i, j, j + i, j - 1, i, i])
                }
                FormulaSet::Corrected => {
                    factorial_quotient(sgn(i), &[j + i - 1, 2 * j], &[j - i, j, j - 1, i, i])
                }
            }
        }
        Family::A => {
            if j > i {
                return zero();
            }
            factorial_quotient(
                sgn(i - j),
                &[n - j - 1, j, n + i - 1],
                &[i, n - i - 1, n + j - 1, i - j],
            )
        }
        Family::B => {
            if j < i {
                return zero();
            }
            factorial_quotient(sgn(j + n - 1), &[n + j - 1], &[j, j - i, n - j - 1, i])
        }
        Family::Ainv => {
            if j > i {
                return zero();
            }
            factorial_quotient(
                1,
                &[n - j - 1, j, n + i - 1],
                &[i, n - i - 1, n + j - 1, i - j],
            )
        }
        Family::Binv => {
            if j < i {
                return zero();
            }
            factorial_quotient(sgn(j + n - 1), &[n - 1 - i, j, i], &[j - i, n + i - 1])
        }
    }
}

/// `n x n` matrix of `family`.
pub fn generate(family: Family, n: usize, formulas: FormulaSet) -> DenseMatrix<ExactRational> {
    assert!(n >= 1, "dimension must be at least 1");
    DenseMatrix::from_fn(n, n, |i, j| entry(family, n, i, j, formulas))
}

pub fn gen_m(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::M, n, FormulaSet::Corrected)
}

pub fn gen_s(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::S, n, FormulaSet::Corrected)
}

pub fn gen_g(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::G, n, FormulaSet::Corrected)
}

pub fn gen_l(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::L, n, FormulaSet::Corrected)
}

pub fn gen_u(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::U, n, FormulaSet::Corrected)
}

pub fn gen_linv(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::Linv, n, FormulaSet::Corrected)
}

pub fn gen_uinv(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::Uinv, n, FormulaSet::Corrected)
}

pub fn gen_a(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::A, n, FormulaSet::Corrected)
}

pub fn gen_b(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::B, n, FormulaSet::Corrected)
}

pub fn gen_ainv(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::Ainv, n, FormulaSet::Corrected)
}

pub fn gen_binv(n: usize) -> DenseMatrix<ExactRational> {
    generate(Family::Binv, n, FormulaSet::Corrected)
}

/// Entry `(i, j)` of `M^{-1}` at dimension `n` through the integral
/// triple-binomial sum
/// `C(n-1, i) C(n+j-1, j) Σ_k (-1)^{i-k+j+n-1} C(n+i-1, i-k) C(n-k-1, j-k)`.
///
/// The published sum drops the `(-1)^{i-k}` carried by `A`; that reading is
/// kept under [`FormulaSet::Printed`].
pub fn minv_entry_integer_form(n: usize, i: usize, j: usize, formulas: FormulaSet) -> ExactInteger {
    assert!(i < n && j < n, "index out of range");
    let sum: BigInt = (0..=i.min(j))
        .map(|k| {
            let t = binomial(n + i - 1, (i - k) as i64) * binomial(n - k - 1, (j - k) as i64);
            let e = match formulas {
                FormulaSet::Corrected => i - k + j + n - 1,
                FormulaSet::Printed => j + n - 1,
            };
            if parity_sign(e as i64) < 0 {
                -t
            } else {
                t
            }
        })
        .sum();
    binomial(n - 1, i as i64) * binomial(n + j - 1, j as i64) * sum
}

/// `Σ_k (-1)^k C(2i, i+k) C(2j, j+k)`; only `|k| <= min(i, j)` contributes.
pub fn von_szily_sum(i: usize, j: usize) -> ExactInteger {
    let m = i.min(j) as i64;
    (-m..=m)
        .map(|k| {
            let t = binomial(2 * i, i as i64 + k) * binomial(2 * j, j as i64 + k);
            if k.rem_euclid(2) == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// True when `n >= 1` and `family` can be rendered at `rows x rows` from a
/// generation at dimension `n`.
pub fn truncation_allowed(family: Family, n: usize, rows: usize) -> bool {
    rows == n || (!family.depends_on_dimension() && rows <= n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn mat(rows: &[&[ExactRational]]) -> DenseMatrix<ExactRational> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn m_examples() {
        assert_eq!(gen_m(1), mat(&[&[int(1)]]));
        assert_eq!(gen_m(2), mat(&[&[int(1), int(1)], &[int(1), frac(1, 2)]]));
        assert_eq!(*gen_m(3).get(2, 2), frac(1, 6));
    }

    #[test]
    fn s_and_g_examples() {
        assert_eq!(gen_s(2), mat(&[&[int(1), int(2)], &[int(2), int(2)]]));
        assert_eq!(*gen_s(3).get(1, 1), int(2));
        let g = gen_g(3);
        assert_eq!(
            g,
            mat(&[
                &[int(1), int(0), int(0)],
                &[int(0), int(2), int(0)],
                &[int(0), int(0), int(6)]
            ])
        );
    }

    #[test]
    fn l_examples() {
        let l = gen_l(6);
        assert!(l.is_unit_lower_triangular());
        assert_eq!(*l.get(2, 1), frac(4, 3));
        assert!((0..6).all(|i| *l.get(i, 0) == int(1)));
    }

    #[test]
    fn u_examples() {
        let u = gen_u(3);
        assert_eq!(*u.get(1, 1), frac(-1, 2));
        assert_eq!(*u.get(1, 2), frac(-2, 3));
        assert_eq!(*u.get(2, 2), frac(1, 18));
        assert!(u.is_upper_triangular());
        assert!((0..3).all(|j| *u.get(0, j) == int(1)));
    }

    #[test]
    fn linv_examples() {
        assert_eq!(*gen_linv(1).get(0, 0), int(1));
        assert_eq!(*gen_linv(3).get(1, 0), int(-1));
        assert_eq!(gen_linv(2), mat(&[&[int(1), int(0)], &[int(-1), int(1)]]));
        assert!(gen_l(2).multiply(&gen_linv(2)).unwrap().is_identity());
    }

    #[test]
    fn uinv_examples() {
        let ui = gen_uinv(3);
        assert_eq!(*ui.get(0, 1), int(2));
        assert_eq!(*ui.get(1, 1), int(-2));
        assert!(gen_u(3).multiply(&ui).unwrap().is_identity());
    }

    #[test]
    fn printed_uinv_fails_from_dimension_three() {
        for n in 1..=2 {
            let ui = generate(Family::Uinv, n, FormulaSet::Printed);
            assert!(gen_u(n).multiply(&ui).unwrap().is_identity());
        }
        let ui = generate(Family::Uinv, 3, FormulaSet::Printed);
        // printed (1,2) entry is -12, the true inverse has -24
        assert_eq!(*ui.get(1, 2), int(-12));
        assert_eq!(*gen_uinv(3).get(1, 2), int(-24));
        assert!(!gen_u(3).multiply(&ui).unwrap().is_identity());
    }

    #[test]
    fn ab_examples() {
        assert_eq!(gen_a(1), mat(&[&[int(1)]]));
        assert_eq!(gen_b(1), mat(&[&[int(1)]]));
        assert_eq!(gen_a(2), mat(&[&[int(1), int(0)], &[int(-2), int(1)]]));
        assert_eq!(gen_b(2), mat(&[&[int(-1), int(2)], &[int(0), int(2)]]));
        let minv = mat(&[&[int(-1), int(2)], &[int(2), int(-2)]]);
        assert_eq!(gen_a(2).multiply(&gen_b(2)).unwrap(), minv);
        assert_eq!(gen_m(2).invert_gauss_jordan().unwrap(), minv);
        assert_eq!(
            gen_binv(2),
            mat(&[&[int(-1), int(1)], &[int(0), frac(1, 2)]])
        );
        assert_eq!(gen_ainv(2), mat(&[&[int(1), int(0)], &[int(2), int(1)]]));
        assert_eq!(gen_binv(2).multiply(&gen_ainv(2)).unwrap(), gen_m(2));
    }

    #[test]
    fn integer_form_examples() {
        let c = FormulaSet::Corrected;
        assert_eq!(minv_entry_integer_form(2, 0, 0, c), BigInt::from(-1));
        assert_eq!(minv_entry_integer_form(1, 0, 0, c), BigInt::from(1));
        assert_eq!(minv_entry_integer_form(2, 0, 1, c), BigInt::from(2));
        assert_eq!(minv_entry_integer_form(2, 1, 0, c), BigInt::from(2));
        assert_eq!(minv_entry_integer_form(2, 1, 1, c), BigInt::from(-2));
        // the published sign gives -2 and 6 for the second row
        let p = FormulaSet::Printed;
        assert_eq!(minv_entry_integer_form(2, 1, 0, p), BigInt::from(-2));
        assert_eq!(minv_entry_integer_form(2, 1, 1, p), BigInt::from(6));
    }

    #[test]
    fn von_szily_examples() {
        assert_eq!(von_szily_sum(0, 0), BigInt::from(1));
        assert_eq!(von_szily_sum(1, 1), BigInt::from(2));
        assert_eq!(von_szily_sum(2, 1), BigInt::from(4));
        assert_eq!(from_int(von_szily_sum(2, 1)), *gen_s(3).get(2, 1));
    }

    #[test]
    fn structure() {
        for n in 1..=8 {
            assert!(gen_m(n).is_symmetric());
            assert!(gen_s(n).is_symmetric());
            assert!(gen_l(n).is_unit_lower_triangular());
            assert!(gen_a(n).is_unit_lower_triangular());
            assert!(gen_ainv(n).is_unit_lower_triangular());
            assert!(gen_linv(n).is_unit_lower_triangular());
            assert!(gen_u(n).is_upper_triangular());
            assert!(gen_b(n).is_upper_triangular());
            assert!(gen_binv(n).is_upper_triangular());
            assert!(gen_uinv(n).is_upper_triangular());
            assert_eq!(*gen_u(n).get(0, 0), int(1));
        }
        // B has a nonunit diagonal from N = 2 on
        assert_ne!(*gen_b(2).get(1, 1), int(1));
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("linv".parse::<Family>().unwrap(), Family::Linv);
        assert!("X".parse::<Family>().is_err());
    }

    #[test]
    fn truncation_rules() {
        assert!(truncation_allowed(Family::M, 5, 3));
        assert!(!truncation_allowed(Family::M, 3, 5));
        assert!(!truncation_allowed(Family::A, 5, 3));
        assert!(truncation_allowed(Family::Binv, 4, 4));
    }
}
