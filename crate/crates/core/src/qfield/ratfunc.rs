use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use super::{QFieldError, QPolynomial};
use crate::matrix::Scalar;
use crate::scalar::ExactRational;

/// Reduced fraction of polynomials in `q`. The denominator is monic and
/// coprime to the numerator; the zero function is `0/1`. Negative powers of
/// `q` live in the denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRationalFunction {
    num: QPolynomial,
    den: QPolynomial,
}

impl QRationalFunction {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self, QFieldError> {
        if den.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// Trusts the caller that `num` and `den` are already coprime; only the
    /// monic normalization is applied.
    pub fn from_coprime(num: QPolynomial, den: QPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        Self::normalize(num, den)
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        Self {
            num: p,
            den: QPolynomial::one(),
        }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_poly(QPolynomial::constant(c))
    }

    fn reduce(num: QPolynomial, den: QPolynomial) -> Self {
        if num.is_zero() {
            return Self::from_poly(QPolynomial::zero());
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self::normalize(num, den)
        } else {
            let n = num.exact_div(&g).expect("gcd divides numerator");
            let d = den.exact_div(&g).expect("gcd divides denominator");
            Self::normalize(n, d)
        }
    }

    fn normalize(num: QPolynomial, den: QPolynomial) -> Self {
        if num.is_zero() {
            return Self::from_poly(QPolynomial::zero());
        }
        let lead = den.leading().expect("nonzero denominator").clone();
        if One::is_one(&lead) {
            Self { num, den }
        } else {
            let inv = lead.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the new
        // numerator.
        let g = self.den.gcd(&rhs.den);
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        if num.is_zero() {
            return Self::from_poly(QPolynomial::zero());
        }
        let h = num.gcd(&g);
        let num = num.exact_div(&h).expect("gcd divides");
        let g1 = g.exact_div(&h).expect("gcd divides");
        Self::normalize(num, b1.mul(&d1).mul(&g1))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::from_poly(QPolynomial::zero());
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = rhs.den.exact_div(&g1).expect("gcd divides");
        let c = rhs.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        Self::normalize(a.mul(&c), b.mul(&d))
    }

    pub fn recip(&self) -> Result<Self, QFieldError> {
        if self.num.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, QFieldError> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Exact value at `q0`; fails when `q0` is a pole.
    pub fn evaluate(&self, q0: &ExactRational) -> Result<ExactRational, QFieldError> {
        let d = self.den.evaluate(q0);
        if d.is_zero() {
            return Err(QFieldError::Pole(crate::scalar::render_rational(q0)));
        }
        Ok(self.num.evaluate(q0) / d)
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    pub fn render_latex(&self) -> String {
        if self.den.is_one() {
            self.num.render_latex()
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.render_latex(),
                self.den.render_latex()
            )
        }
    }

    pub fn parse(text: &str) -> Result<Self, QFieldError> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('(') {
            if let Some((num, den)) = inner.split_once(")/(") {
                let den = den
                    .strip_suffix(')')
                    .ok_or_else(|| QFieldError::Parse(text.to_string()))?;
                return Self::new(QPolynomial::parse(num)?, QPolynomial::parse(den)?);
            }
            let body = inner
                .strip_suffix(')')
                .ok_or_else(|| QFieldError::Parse(text.to_string()))?;
            return Ok(Self::from_poly(QPolynomial::parse(body)?));
        }
        Ok(Self::from_poly(QPolynomial::parse(t)?))
    }
}

/// `q^e` for any integer `e`.
pub fn qpower(e: i64) -> QRationalFunction {
    let mono = QPolynomial::monomial(<BigRational as One>::one(), e.unsigned_abs() as usize);
    if e >= 0 {
        QRationalFunction::from_poly(mono)
    } else {
        QRationalFunction {
            num: QPolynomial::one(),
            den: mono,
        }
    }
}

impl Scalar for QRationalFunction {
    fn zero() -> Self {
        Self::from_poly(QPolynomial::zero())
    }
    fn one() -> Self {
        Self::from_poly(QPolynomial::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        QRationalFunction::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        QRationalFunction::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        QRationalFunction::mul(self, rhs)
    }
    fn div(&self, rhs: &Self) -> Self {
        QRationalFunction::div(self, rhs).expect("division by zero rational function")
    }
    fn neg(&self) -> Self {
        QRationalFunction::neg(self)
    }
    fn render(&self) -> String {
        QRationalFunction::render(self)
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}

impl FromStr for QRationalFunction {
    type Err = QFieldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Debug for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRationalFunction({})", self.render())
    }
}

impl fmt::Display for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
