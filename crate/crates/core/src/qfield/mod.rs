//! Polynomials and rational functions in `q` over the rationals, with the
//! q-combinatorial building blocks: `(q)_n`, Gaussian binomials and the
//! cyclotomic polynomials that `(1 - q^m)` factors split into.

mod poly;
mod ratfunc;

use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

pub use poly::QPolynomial;
pub use ratfunc::{qpower, QRationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QFieldError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("evaluation at a pole (q = {0})")]
    Pole(String),
    #[error("cannot parse q-expression {0:?}")]
    Parse(String),
}

/// `1 - q^m`.
pub fn one_minus_qpow(m: usize) -> QPolynomial {
    QPolynomial::one().sub(&QPolynomial::monomial(BigRational::one(), m))
}

fn pochhammer_table() -> &'static RwLock<Vec<QPolynomial>> {
    static TABLE: OnceLock<RwLock<Vec<QPolynomial>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![QPolynomial::one()]))
}

/// `(q)_n = (1 - q)(1 - q^2)...(1 - q^n)`, memoized.
pub fn qpochhammer(n: usize) -> QPolynomial {
    {
        let table = pochhammer_table()
            .read()
            .expect("pochhammer table poisoned");
        if let Some(p) = table.get(n) {
            return p.clone();
        }
    }
    let mut table = pochhammer_table()
        .write()
        .expect("pochhammer table poisoned");
    while table.len() <= n {
        let m = table.len();
        let next = table[m - 1].mul(&one_minus_qpow(m));
        table.push(next);
    }
    table[n].clone()
}

/// Gaussian binomial `[n, k]_q`; zero outside `0..=n`.
pub fn gaussian_binomial(n: usize, k: i64) -> Result<QPolynomial, QFieldError> {
    if k < 0 || k as u64 > n as u64 {
        return Ok(QPolynomial::zero());
    }
    let k = k as usize;
    qpochhammer(n).exact_div(&qpochhammer(k).mul(&qpochhammer(n - k)))
}

fn cyclotomic_table() -> &'static RwLock<Vec<QPolynomial>> {
    // index 0 is a placeholder so that table[d] = Φ_d
    static TABLE: OnceLock<RwLock<Vec<QPolynomial>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![QPolynomial::one()]))
}

/// The cyclotomic polynomial `Φ_d` for `d >= 1`, from
/// `q^d - 1 = ∏_{e | d} Φ_e`.
pub fn cyclotomic(d: usize) -> QPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    {
        let table = cyclotomic_table()
            .read()
            .expect("cyclotomic table poisoned");
        if let Some(p) = table.get(d) {
            return p.clone();
        }
    }
    let mut table = cyclotomic_table()
        .write()
        .expect("cyclotomic table poisoned");
    while table.len() <= d {
        let n = table.len();
        let mut phi = one_minus_qpow(n).neg();
        for e in (1..n).filter(|&e| n.is_multiple_of(e)) {
            phi = phi
                .exact_div(&table[e])
                .expect("cyclotomic divisor chain is exact");
        }
        table.push(phi);
    }
    table[d].clone()
}

/// Signed power product `± q^e ∏ Φ_d^{k_d}`, assembled into a reduced
/// fraction. Distinct cyclotomic polynomials and `q` are pairwise coprime,
/// so splitting positive and negative exponents already gives lowest terms.
pub fn cyclotomic_fraction(
    negative: bool,
    q_exponent: i64,
    exponents: impl IntoIterator<Item = (usize, i64)>,
) -> QRationalFunction {
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for (d, k) in exponents {
        if k == 0 {
            continue;
        }
        let phi = cyclotomic(d).pow(k.unsigned_abs() as u32);
        if k > 0 {
            num = num.mul(&phi);
        } else {
            den = den.mul(&phi);
        }
    }
    if q_exponent >= 0 {
        num = num.shift_up(q_exponent as usize);
    } else {
        den = den.shift_up(q_exponent.unsigned_abs() as usize);
    }
    if negative {
        num = num.neg();
    }
    QRationalFunction::from_coprime(num, den)
}
