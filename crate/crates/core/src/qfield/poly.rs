use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QFieldError;
use crate::scalar::{render_rational, ExactRational};

/// Polynomial in `q` with rational coefficients; `coeffs[k]` multiplies
/// `q^k`. Trailing zeros are always trimmed, so the zero polynomial has an
/// empty coefficient vector and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<ExactRational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    fn from_big_ints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: ExactRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    /// Exponent of the largest power of `q` dividing `self` (0 for zero).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Is this a single term `c * q^k`?
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.valuation() + 1 == self.coeffs.len()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `q^k`; caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.is_zero() || k <= self.valuation());
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    /// Schoolbook product, carried out on integer numerators after clearing
    /// denominators.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (a, da) = self.cleared();
        let (b, db) = rhs.cleared();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        if den.is_one() {
            Self::from_big_ints(out)
        } else {
            Self::new(
                out.into_iter()
                    .map(|c| BigRational::new(c, den.clone()))
                    .collect(),
            )
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer coefficient vector and the positive common denominator `d`
    /// such that `self = ints / d`.
    fn cleared(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    /// Long division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), QFieldError> {
        let dd = divisor.degree().ok_or(QFieldError::DivisionByZero)?;
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        let monic = lead.is_one();
        for k in (0..=(sd - dd)).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = if monic { top.clone() } else { top / &lead };
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, QFieldError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(QFieldError::InexactDivision)
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Works on primitive integer images (primitive PRS): each pseudo
    /// remainder is divided by its content, which keeps coefficients small.
    /// Common powers of `q` are split off first since they are frequent here.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let va = self.valuation();
        let vb = other.valuation();
        let common_shift = va.min(vb);
        let a = self.shift_down(va);
        let b = other.shift_down(vb);
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Self::monomial(BigRational::one(), common_shift);
        }
        let mut a = primitive(a.cleared().0);
        let mut b = primitive(b.cleared().0);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                a = vec![BigInt::one()];
                break;
            }
            let r = primitive(pseudo_remainder(a, &b));
            a = b;
            b = r;
        }
        Self::from_big_ints(a).monic().shift_up(common_shift)
    }

    pub fn evaluate(&self, at: &ExactRational) -> ExactRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// `c0 + c1*q + c2*q^2` style rendering with folded signs, ascending
    /// powers, unit coefficients omitted.
    pub fn render(&self) -> String {
        self.render_with(|c, k| match (c.is_one(), k) {
            (_, 0) => render_rational(c),
            (true, 1) => "q".to_string(),
            (true, _) => format!("q^{k}"),
            (false, 1) => format!("{}*q", render_rational(c)),
            (false, _) => format!("{}*q^{k}", render_rational(c)),
        })
    }

    pub fn render_latex(&self) -> String {
        let latex_coeff = |c: &ExactRational| {
            if c.is_integer() {
                c.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
            }
        };
        self.render_with(|c, k| match (c.is_one(), k) {
            (_, 0) => latex_coeff(c),
            (true, 1) => "q".to_string(),
            (true, _) => format!("q^{{{k}}}"),
            (false, 1) => format!("{}q", latex_coeff(c)),
            (false, _) => format!("{}q^{{{k}}}", latex_coeff(c)),
        })
    }

    /// `term` receives the absolute value of each nonzero coefficient.
    fn render_with(&self, term: impl Fn(&ExactRational, usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let body = term(&c.abs(), k);
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }

    /// Inverse of [`render`](Self::render); also accepts explicit unit
    /// coefficients (`1*q`), `+ -c` sign spellings and arbitrary spacing.
    pub fn parse(text: &str) -> Result<Self, QFieldError> {
        let err = || QFieldError::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        for ch in compact.chars() {
            match ch {
                '+' | '-' if !current.is_empty() => {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = ch == '-';
                }
                '+' => {}
                '-' => negative = !negative,
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(err());
        }
        terms.push((negative, current));

        let mut acc = Self::zero();
        for (negative, body) in terms {
            let (coeff_text, power) = match body.find('q') {
                None => (body.as_str(), 0usize),
                Some(pos) => {
                    let coeff = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(err)?
                            .trim_start_matches('{')
                            .trim_end_matches('}')
                            .parse()
                            .map_err(|_| err())?
                    };
                    (coeff, power)
                }
            };
            let mut c: ExactRational = if coeff_text.is_empty() {
                BigRational::one()
            } else {
                coeff_text.parse().map_err(|_| err())?
            };
            if negative {
                c = -c;
            }
            acc = acc.add(&Self::monomial(c, power));
        }
        Ok(acc)
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Trimmed primitive part with positive leading coefficient.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let Some(lead) = v.last() else {
        return v;
    };
    let mut g = content(&v);
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in &mut v {
            *c = &*c / &g;
        }
    }
    v
}

/// Remainder of `lc(b)^k * a` by `b`, with the content of the running
/// remainder divided out after each elimination step. Result is associate
/// to the true pseudo-remainder, which is all the gcd needs.
fn pseudo_remainder(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let top = a.last().expect("nonempty").clone();
        let shift = a.len() - 1 - db;
        if !top.is_zero() {
            let g = top.gcd(lb);
            let fa = lb / &g;
            let fb = &top / &g;
            for c in a.iter_mut() {
                *c *= &fa;
            }
            for (i, c) in b.iter().enumerate() {
                a[shift + i] -= &fb * c;
            }
        }
        a.pop();
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        a = primitive(a);
    }
    a
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({})", self.render())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_ints(c)
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[0]).is_zero());
    }

    #[test]
    fn product_of_linear_factors() {
        // (1 - q)(1 - q^2)
        assert_eq!(p(&[1, -1]).mul(&p(&[1, 0, -1])), p(&[1, -1, -1, 1]));
        let half = QPolynomial::new(vec![frac(1, 2), frac(1, 3)]);
        assert_eq!(
            half.mul(&half),
            QPolynomial::new(vec![frac(1, 4), frac(1, 3), frac(1, 9)])
        );
    }

    #[test]
    fn division() {
        let (quo, rem) = p(&[1, 0, -1]).div_rem(&p(&[1, -1])).unwrap();
        assert_eq!(quo, p(&[1, 1]));
        assert!(rem.is_zero());
        let (quo, rem) = p(&[1, 2, 3]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(quo, QPolynomial::new(vec![int(1), frac(3, 2)]));
        assert_eq!(rem, p(&[1]));
        assert_eq!(
            p(&[1, 1]).exact_div(&p(&[0, 1])),
            Err(QFieldError::InexactDivision)
        );
        assert_eq!(
            p(&[1]).div_rem(&QPolynomial::zero()),
            Err(QFieldError::DivisionByZero)
        );
    }

    #[test]
    fn gcd_cases() {
        // (1+q)(1-q) and (1+q)^2
        let g = p(&[1, 0, -1]).gcd(&p(&[1, 2, 1]));
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(p(&[0, 0, 3, 3]).gcd(&p(&[0, 2])), p(&[0, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, -1])), p(&[1]));
        assert_eq!(QPolynomial::zero().gcd(&p(&[2, 4])), p(&[1, 2]).monic());
        let a = QPolynomial::new(vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(a.gcd(&p(&[3, 3])), p(&[1, 1]));
    }

    #[test]
    fn rendering_round_trip_examples() {
        assert_eq!(p(&[1, -1, -1, 1]).render(), "1 - q - q^2 + q^3");
        assert_eq!(p(&[0, -2]).render(), "-2*q");
        assert_eq!(QPolynomial::zero().render(), "0");
        let r = QPolynomial::new(vec![frac(-1, 2), int(0), frac(3, 4)]);
        assert_eq!(r.render(), "-1/2 + 3/4*q^2");
        assert_eq!(QPolynomial::parse(&r.render()).unwrap(), r);
        assert_eq!(
            QPolynomial::parse("1 + -1*q + 1*q^2").unwrap(),
            p(&[1, -1, 1])
        );
        assert_eq!(p(&[1, -1, 0, 2]).render_latex(), "1 - q + 2q^{3}");
        assert!(QPolynomial::parse("1 + ").is_err());
        assert!(QPolynomial::parse("q^x").is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 1]).evaluate(&int(2)), int(3));
        assert_eq!(p(&[1, -1, -1, 1]).evaluate(&frac(1, 2)), frac(3, 8));
    }

    fn poly() -> impl Strategy<Value = QPolynomial> {
        prop::collection::vec((-5i64..=5, 1i64..=3), 0..6)
            .prop_map(|v| QPolynomial::new(v.into_iter().map(|(a, b)| frac(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(a in poly()) {
            prop_assert_eq!(QPolynomial::parse(&a.render()).unwrap(), a);
        }

        #[test]
        fn gcd_divides_both(a in poly(), b in poly(), c in poly()) {
            let x = a.mul(&c);
            let y = b.mul(&c);
            let g = x.gcd(&y);
            if !g.is_zero() {
                prop_assert!(x.div_rem(&g).unwrap().1.is_zero());
                prop_assert!(y.div_rem(&g).unwrap().1.is_zero());
                if !c.is_zero() {
                    // common factor survives
                    prop_assert!(g.div_rem(&c.monic()).unwrap().1.is_zero());
                }
            }
        }

        #[test]
        fn division_identity(a in poly(), b in poly()) {
            if let Ok((quo, rem)) = a.div_rem(&b) {
                prop_assert_eq!(quo.mul(&b).add(&rem), a);
                prop_assert!(rem.degree() < b.degree());
            }
        }
    }
}
