//! q-analogues of every closed-form family.
//!
//! Each entry is a signed product `± q^e ∏ (1 - q^m)^{k_m}`, held as a
//! [`QProduct`]. The same product is either realized symbolically as a
//! reduced [`QRationalFunction`] or evaluated at a rational point `q0`; the
//! second route is the evaluation homomorphism applied to the first, so
//! numeric checks test exactly the symbolic formulas.
//!
//! `q-M`, `q-G` and `q-S` are the classical definitions with every binomial
//! replaced by its Gaussian counterpart; `q-S` uses the q-factorial quotient
//! `(q)_{2i} (q)_{2j} / ((q)_i (q)_j (q)_{i+j})`.
//!
//! Under [`FormulaSet::Corrected`] three families differ from the published
//! transcription:
//! - `q-L^{-1}` (`j < i`): `(q)_j^2` joins the denominator and the prefactor
//!   is `q^{(i-j)(i-j-1)/2}`.
//! - `q-U^{-1}`: the diagonal prefactor is `q^{-i(3i-1)/2}`, and off the
//!   diagonal `(q)_i^2` sits in the denominator.
//! - `q-B^{-1}`: the published entries are the reciprocals of the true ones;
//!   the corrected entry is
//!   `(-1)^{j+N-1} q^{N(N-1)/2 - j(j+1)/2 + (N-j-1) i} (q)_{N-i-1} (q)_j (q)_i
//!   / ((q)_{j-i} (q)_{N+i-1})`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::closed_forms::{Family, FormulaSet};
use crate::matrix::{DenseMatrix, Scalar};
use crate::qfield::{cyclotomic_fraction, QPolynomial, QRationalFunction};
use crate::scalar::ExactRational;

/// `± q^e ∏_m (1 - q^m)^{k_m}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QProduct {
    negative: bool,
    q_exponent: i64,
    factors: BTreeMap<usize, i64>,
}

impl QProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// Multiplies by `(-1)^e`.
    pub fn sign(mut self, e: i64) -> Self {
        if e.rem_euclid(2) == 1 {
            self.negative = !self.negative;
        }
        self
    }

    /// Multiplies by `q^e`.
    pub fn qpow(mut self, e: i64) -> Self {
        self.q_exponent += e;
        self
    }

    /// Multiplies by `(1 - q^m)^k`.
    pub fn factor(mut self, m: usize, k: i64) -> Self {
        assert!(m >= 1, "(1 - q^0) would vanish");
        let slot = self.factors.entry(m).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.factors.remove(&m);
        }
        self
    }

    /// Multiplies by `(q)_n^k`.
    pub fn poch(self, n: usize, k: i64) -> Self {
        (1..=n).fold(self, |acc, m| acc.factor(m, k))
    }

    /// Multiplies by `(1 + q^i)^k`, using `1 + q^i = (1 - q^{2i}) / (1 - q^i)`.
    pub fn one_plus_qpow(self, i: usize, k: i64) -> Self {
        self.factor(2 * i, k).factor(i, -k)
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn q_exponent(&self) -> i64 {
        self.q_exponent
    }

    /// Reduced fraction via cyclotomic bookkeeping:
    /// `1 - q^m = -∏_{d | m} Φ_d`.
    pub fn to_rational_function(&self) -> QRationalFunction {
        let mut negative = self.negative;
        let mut cyclo: BTreeMap<usize, i64> = BTreeMap::new();
        for (&m, &k) in &self.factors {
            if k.rem_euclid(2) == 1 {
                negative = !negative;
            }
            for d in (1..=m).filter(|&d| m.is_multiple_of(d)) {
                *cyclo.entry(d).or_insert(0) += k;
            }
        }
        cyclotomic_fraction(negative, self.q_exponent, cyclo)
    }

    /// Multiplies the Pochhammer-style factors out as polynomials and
    /// reduces with a gcd. Independent of the cyclotomic route.
    pub fn to_rational_function_naive(&self) -> QRationalFunction {
        let mut num = QPolynomial::one();
        let mut den = QPolynomial::one();
        for (&m, &k) in &self.factors {
            let f = crate::qfield::one_minus_qpow(m).pow(k.unsigned_abs() as u32);
            if k > 0 {
                num = num.mul(&f);
            } else {
                den = den.mul(&f);
            }
        }
        if self.q_exponent >= 0 {
            num = num.shift_up(self.q_exponent as usize);
        } else {
            den = den.shift_up(self.q_exponent.unsigned_abs() as usize);
        }
        if self.negative {
            num = num.neg();
        }
        QRationalFunction::new(num, den).expect("nonzero denominator")
    }

    /// Exact value at `q0`. `q0` must not be zero or a root of unity (for
    /// rationals: `0`, `1`, `-1`).
    ///
    /// With `q0 = a/b`, each `1 - q0^m` is `(b^m - a^m) / b^m`; the integer
    /// parts are multiplied separately and reduced once at the end.
    pub fn evaluate(&self, q0: &ExactRational) -> ExactRational {
        let (a, b) = (q0.numer(), q0.denom());
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut b_exp = -self.q_exponent;
        for (&m, &k) in &self.factors {
            let t = num_traits::pow(b.clone(), m) - num_traits::pow(a.clone(), m);
            let t = num_traits::pow(t, k.unsigned_abs() as usize);
            if k > 0 {
                num *= t;
            } else {
                den *= t;
            }
            b_exp -= m as i64 * k;
        }
        for (base, e) in [(a, self.q_exponent), (b, b_exp)] {
            let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
            if e >= 0 {
                num *= p;
            } else {
                den *= p;
            }
        }
        if self.negative {
            num = -num;
        }
        BigRational::new(num, den)
    }
}

/// `x / 2` for exponent expressions that must be even.
fn half(x: i64) -> i64 {
    assert!(x % 2 == 0, "exponent numerator {x} is odd");
    x / 2
}

/// The product for entry `(i, j)` of the q-analogue of `family` at dimension
/// `n`, or `None` for a structural zero.
pub fn q_entry(
    family: Family,
    n: usize,
    i: usize,
    j: usize,
    formulas: FormulaSet,
) -> Option<QProduct> {
    let p = QProduct::one;
    let (ii, jj, nn) = (i as i64, j as i64, n as i64);
    let printed = formulas == FormulaSet::Printed;
    let entry = match family {
        Family::M => p().poch(i, 1).poch(j, 1).poch(i + j, -1),
        Family::G => {
            if i != j {
                return None;
            }
            p().poch(2 * i, 1).poch(i, -2)
        }
        Family::S => p()
            .poch(2 * i, 1)
            .poch(2 * j, 1)
            .poch(i, -1)
            .poch(j, -1)
            .poch(i + j, -1),
        Family::L => {
            if j > i {
                return None;
            }
            p().poch(i, 2)
                .poch(2 * j, 1)
                .poch(i + j, -1)
                .poch(i - j, -1)
                .poch(j, -2)
        }
        Family::U => {
            if j < i {
                return None;
            }
            if i == 0 {
                return Some(p());
            }
            p().sign(ii)
                .qpow(half(ii * (3 * ii - 1)))
                .one_plus_qpow(i, 1)
                .poch(j, 2)
                .poch(i, 2)
                .poch(i + j, -1)
                .poch(j - i, -1)
                .poch(2 * i, -1)
        }
        Family::Linv => {
            if j > i {
                return None;
            }
            if i == j {
                return Some(p());
            }
            let base = p()
                .sign(ii - jj)
                .poch(i, 2)
                .poch(i + j - 1, 1)
                .poch(2 * i - 1, -1)
                .poch(i - j, -1);
            if printed {
                base.qpow(half(ii * (ii - 1)))
            } else {
                base.qpow(half((ii - jj) * (ii - jj - 1))).poch(j, -2)
            }
        }
        Family::Uinv => {
            if j < i {
                return None;
            }
            if i == j {
                if i == 0 {
                    return Some(p());
                }
                let e = if printed {
                    half(ii * (3 * ii + 1))
                } else {
                    -half(ii * (3 * ii - 1))
                };
                p().sign(ii)
                    .qpow(e)
                    .poch(2 * i, 2)
                    .poch(i, -4)
                    .one_plus_qpow(i, -1)
            } else {
                let base = p()
                    .sign(ii)
                    .qpow(-jj * jj - jj * ii + half(ii * (ii + 1)))
                    .poch(j + i - 1, 1)
                    .poch(2 * j, 1)
                    .poch(j - i, -1)
                    .poch(j, -1)
                    .poch(j - 1, -1);
                base.poch(i, if printed { 2 } else { -2 })
            }
        }
        Family::A => {
            if j > i {
                return None;
            }
            p().sign(ii - jj)
                .qpow(half((ii + jj + 3) * (ii - jj)) + nn * (jj - ii))
                .poch(n - j - 1, 1)
                .poch(j, 1)
                .poch(n + i - 1, 1)
                .poch(n - i - 1, -1)
                .poch(i, -1)
                .poch(n + j - 1, -1)
                .poch(i - j, -1)
        }
        Family::B => {
            if j < i {
                return None;
            }
            p().sign(jj + nn - 1)
                .qpow(ii * ii + half(jj * (jj + 3)) - nn * jj - half(nn * (nn - 1)))
                .poch(n + j - 1, 1)
                .poch(j, -1)
                .poch(j - i, -1)
                .poch(n - j - 1, -1)
                .poch(i, -1)
        }
        Family::Ainv => {
            if j > i {
                return None;
            }
            p().qpow((ii - jj) * (ii - nn + 1))
                .poch(n - j - 1, 1)
                .poch(n + i - 1, 1)
                .poch(j, 1)
                .poch(n - i - 1, -1)
                .poch(n + j - 1, -1)
                .poch(i, -1)
                .poch(i - j, -1)
        }
        Family::Binv => {
            if j < i {
                return None;
            }
            let e = half(jj * (jj + 1)) - (nn - jj - 1) * ii - half(nn * (nn - 1));
            let base = p().sign(jj + nn - 1);
            if printed {
                base.qpow(e)
                    .poch(j - i, 1)
                    .poch(n + i - 1, 1)
                    .poch(n - i - 1, -1)
                    .poch(j, -1)
                    .poch(i, -1)
            } else {
                base.qpow(-e)
                    .poch(n - i - 1, 1)
                    .poch(j, 1)
                    .poch(i, 1)
                    .poch(j - i, -1)
                    .poch(n + i - 1, -1)
            }
        }
    };
    Some(entry)
}

/// Symbolic `n x n` q-matrix of `family`.
pub fn qgenerate(family: Family, n: usize, formulas: FormulaSet) -> DenseMatrix<QRationalFunction> {
    assert!(n >= 1, "dimension must be at least 1");
    DenseMatrix::from_fn(n, n, |i, j| {
        q_entry(family, n, i, j, formulas).map_or_else(<QRationalFunction as Scalar>::zero, |p| {
            p.to_rational_function()
        })
    })
}

/// The q-matrix of `family` evaluated entrywise at `q0`.
pub fn qgenerate_at(
    family: Family,
    n: usize,
    formulas: FormulaSet,
    q0: &ExactRational,
) -> DenseMatrix<ExactRational> {
    assert!(n >= 1, "dimension must be at least 1");
    assert!(
        !Zero::is_zero(q0) && *q0.numer() != *q0.denom() && *q0.numer() != -q0.denom(),
        "q0 must avoid 0 and the roots of unity"
    );
    DenseMatrix::from_fn(n, n, |i, j| {
        q_entry(family, n, i, j, formulas)
            .map_or_else(<BigRational as Zero>::zero, |p| p.evaluate(q0))
    })
}

pub fn qgen_m(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::M, n, FormulaSet::Corrected)
}

pub fn qgen_g(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::G, n, FormulaSet::Corrected)
}

pub fn qgen_s(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::S, n, FormulaSet::Corrected)
}

pub fn qgen_l(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::L, n, FormulaSet::Corrected)
}

pub fn qgen_u(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::U, n, FormulaSet::Corrected)
}

pub fn qgen_linv(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::Linv, n, FormulaSet::Corrected)
}

pub fn qgen_uinv(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::Uinv, n, FormulaSet::Corrected)
}

pub fn qgen_a(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::A, n, FormulaSet::Corrected)
}

pub fn qgen_b(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::B, n, FormulaSet::Corrected)
}

pub fn qgen_ainv(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::Ainv, n, FormulaSet::Corrected)
}

pub fn qgen_binv(n: usize) -> DenseMatrix<QRationalFunction> {
    qgenerate(Family::Binv, n, FormulaSet::Corrected)
}

/// Is every entry a polynomial with integer coefficients?
pub fn is_integer_polynomial_matrix(m: &DenseMatrix<QRationalFunction>) -> bool {
    m.entries()
        .iter()
        .all(|e| e.is_polynomial() && e.numerator().has_integer_coefficients())
}

/// `(q)_n` at a point, without building the polynomial.
pub fn qpochhammer_at(n: usize, q0: &ExactRational) -> ExactRational {
    QProduct::one().poch(n, 1).evaluate(q0)
}
