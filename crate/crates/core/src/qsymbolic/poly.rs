//! Univariate polynomials and rational functions over `Q` in the
//! indeterminate `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `q`; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, BigRational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·q^k`.
    pub fn monomial(c: BigRational, k: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    pub fn int_monomial(c: i64, k: u32) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), k)
    }

    pub fn q() -> Self {
        Self::int_monomial(1, 1)
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, BigRational)>) -> Self {
        let mut coeffs: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (k, c) in terms {
            *coeffs.entry(k).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, k: u32) -> BigRational {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.terms().map(|(k, v)| (k, v * c)))
    }

    pub fn evaluate(&self, q: &BigRational) -> BigRational {
        // Horner from the top degree down
        let Some(top) = self.degree() else {
            return BigRational::zero();
        };
        let mut acc = BigRational::zero();
        for k in (0..=top).rev() {
            acc = acc * q + self.coefficient(k);
        }
        acc
    }

    pub fn evaluate_int(&self, q: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(BigInt::from(q)))
    }

    /// Euclidean division: `self = quotient·divisor + remainder`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lead = divisor.leading_coefficient().unwrap().clone();
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coefficient().unwrap() / &lead;
            let step = Self::monomial(factor, rd - dd);
            rem = &rem - &(&step * divisor);
            quotient = &quotient + &step;
        }
        Ok((quotient, rem))
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Parses sums of terms such as `3q^4 - q + 1/2` or `q^6*2`.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Syntax {
            pos,
            msg: msg.to_string(),
        };
        let compact: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        if compact.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut i = 0;
        while i < compact.len() {
            let mut sign = BigRational::one();
            if i > 0 || matches!(compact[i].1, '+' | '-') {
                match compact[i].1 {
                    '+' => {}
                    '-' => sign = -sign,
                    _ => return Err(err(compact[i].0, "expected `+` or `-`")),
                }
                i += 1;
            }
            let start = i;
            while i < compact.len() && !matches!(compact[i].1, '+' | '-') {
                i += 1;
            }
            if start == i {
                return Err(err(
                    compact.get(start).map_or(text.len(), |c| c.0),
                    "missing term",
                ));
            }
            let term: String = compact[start..i].iter().map(|c| c.1).collect();
            let at = compact[start].0;
            let mut coef = sign;
            let mut exp = 0u32;
            for factor in term.split('*') {
                if let Some(qpos) = factor.find('q') {
                    if qpos > 0 {
                        coef *= parse_rational(&factor[..qpos])
                            .ok_or_else(|| err(at, "bad coefficient"))?;
                    }
                    let rest = &factor[qpos + 1..];
                    exp += match rest.strip_prefix('^') {
                        Some(p) => p.parse::<u32>().map_err(|_| err(at, "bad exponent"))?,
                        None if rest.is_empty() => 1,
                        None => return Err(err(at, "expected `^` after `q`")),
                    };
                } else {
                    coef *= parse_rational(factor).ok_or_else(|| err(at, "bad coefficient"))?;
                }
            }
            terms.push((exp, coef));
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        QPolynomial::from_terms(self.terms().chain(rhs.terms()).map(|(k, c)| (k, c.clone())))
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::from_terms(self.terms().map(|(k, c)| (k, -c)))
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        QPolynomial::from_terms(
            self.terms()
                .flat_map(|(i, a)| rhs.terms().map(move |(j, b)| (i + j, a * b))),
        )
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

/// A reduced quotient of polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRationalFunction {
    numerator: QPolynomial,
    denominator: QPolynomial,
}

impl QRationalFunction {
    pub fn new(numerator: QPolynomial, denominator: QPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = numerator.gcd(&denominator);
        let (num, _) = numerator.div_rem(&g)?;
        let (den, _) = denominator.div_rem(&g)?;
        let lc = den.leading_coefficient().unwrap().recip();
        Ok(Self {
            numerator: num.scale(&lc),
            denominator: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        Self {
            numerator: QPolynomial::zero(),
            denominator: QPolynomial::one(),
        }
    }

    pub fn from_polynomial(p: QPolynomial) -> Self {
        Self {
            numerator: p,
            denominator: QPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.denominator
    }

    /// Re-reduces; a canonical value is a fixed point.
    pub fn normalized(&self) -> Self {
        Self::new(self.numerator.clone(), self.denominator.clone()).expect("nonzero denominator")
    }

    pub fn is_constant(&self, c: &BigRational) -> bool {
        self.denominator == QPolynomial::one() && self.numerator == QPolynomial::constant(c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            &self.denominator * &other.denominator,
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&Self {
            numerator: -&other.numerator,
            denominator: other.denominator.clone(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.numerator.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Self::new(
            &self.numerator * &other.denominator,
            &self.denominator * &other.numerator,
        )
    }

    /// Value at `q`; a pole is reported as division by zero.
    pub fn evaluate(&self, q: &BigRational) -> Result<BigRational> {
        let den = self.denominator.evaluate(q);
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Ok(self.numerator.evaluate(q) / den)
    }

    pub fn evaluate_int(&self, q: i64) -> Result<BigRational> {
        self.evaluate(&BigRational::from_integer(BigInt::from(q)))
    }
}

impl fmt::Display for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == QPolynomial::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl fmt::Debug for QRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> QPolynomial {
        QPolynomial::parse(s).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(poly("3q^4").to_string(), "3q^4");
        assert_eq!(poly("q^4 - 2q + 1/2").to_string(), "q^4 - 2q + 1/2");
        assert_eq!(poly("-q").to_string(), "-q");
        assert_eq!(poly("0").to_string(), "0");
        assert_eq!(poly("q^2*q^3*2"), QPolynomial::int_monomial(2, 5));
        assert_eq!(poly("q + q"), QPolynomial::int_monomial(2, 1));
        assert!(QPolynomial::parse("").is_err());
        assert!(QPolynomial::parse("3x").is_err());
        assert!(QPolynomial::parse("q^").is_err());
        assert!(QPolynomial::parse("1/0").is_err());
    }

    #[test]
    fn monomial_cancellation() {
        let f = QRationalFunction::new(poly("q^4"), poly("6q^4")).unwrap();
        assert!(f.is_constant(&rat(1, 6)));
    }

    #[test]
    fn evaluation() {
        assert_eq!(poly("2q^4").evaluate_int(5), rat(1250, 1));
        // |G_2(q)| / (6 q^4) at q = 5
        let g2 = &(&poly("q^6") * &poly("q^6 - 1")) * &poly("q^2 - 1");
        let f = QRationalFunction::new(g2, poly("6q^4")).unwrap();
        let direct = 5i64.pow(6) * (5i64.pow(6) - 1) * (5 * 5 - 1) / (6 * 5i64.pow(4));
        assert_eq!(direct, 1_562_400);
        assert_eq!(f.evaluate_int(5).unwrap(), rat(direct, 1));
    }

    #[test]
    fn division_errors() {
        assert_eq!(
            QRationalFunction::new(poly("q"), QPolynomial::zero()).unwrap_err(),
            Error::DivisionByZeroPolynomial
        );
        let one = QRationalFunction::from_polynomial(QPolynomial::one());
        assert!(one.div(&QRationalFunction::zero()).is_err());
        let pole = QRationalFunction::new(QPolynomial::one(), poly("q - 1")).unwrap();
        assert!(pole.evaluate_int(1).is_err());
        assert!(QPolynomial::one().div_rem(&QPolynomial::zero()).is_err());
    }

    #[test]
    fn gcd_reduction() {
        // (q^2 - 1) / (q - 1) = q + 1
        let f = QRationalFunction::new(poly("q^2 - 1"), poly("2q - 2")).unwrap();
        assert_eq!(f.numerator(), &poly("1/2 q + 1/2"));
        assert_eq!(f.denominator(), &QPolynomial::one());
        assert_eq!(QPolynomial::zero().degree(), None);
    }
}
