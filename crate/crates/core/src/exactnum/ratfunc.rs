use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::CyclotomicElement;
use super::densepoly;
use super::laurent::LaurentPolynomial;
use super::ExactError;

/// An element of `Q(ζ_d)(q)`.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term equal to 1, and numerator and denominator share no
/// polynomial factor. Equal field elements therefore compare equal
/// structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn zero(order: u32) -> Self {
        Self::from_laurent(LaurentPolynomial::zero(order))
    }

    pub fn one(order: u32) -> Self {
        Self::from_laurent(LaurentPolynomial::one(order))
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::from_int(order, v))
    }

    pub fn constant(c: CyclotomicElement) -> Self {
        Self::from_laurent(LaurentPolynomial::constant(c))
    }

    pub fn q(order: u32) -> Self {
        Self::q_pow(order, 1)
    }

    pub fn q_pow(order: u32, e: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::q_pow(order, e))
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        assert!(!p.is_half(), "rational functions use integer exponents");
        let den = LaurentPolynomial::one(p.order());
        RationalFunction { num: p, den }
    }

    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        let order = num.order();
        if num.is_zero() {
            return Self::zero(order);
        }
        if let Some((c, e)) = den.as_monomial() {
            let inv = c.inv().expect("nonzero monomial");
            return Self::from_laurent(num.mul_monomial(&inv, -e));
        }
        let (ns, n) = num.to_dense();
        let (ds, d) = den.to_dense();
        let g = densepoly::gcd(&n, &d);
        let (n, d) = if densepoly::is_one(&g) {
            (n, d)
        } else {
            (densepoly::divrem(&n, &g).0, densepoly::divrem(&d, &g).0)
        };
        let scale = d[0].inv().expect("denominator has nonzero constant term");
        let n: Vec<_> = n.iter().map(|c| c * &scale).collect();
        let d: Vec<_> = d.iter().map(|c| c * &scale).collect();
        let num = LaurentPolynomial::from_dense(order, ns - ds, n);
        let den = LaurentPolynomial::from_dense(order, 0, d);
        if den.is_one() {
            return Self::from_laurent(num);
        }
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<CyclotomicElement> {
        self.as_laurent().and_then(LaurentPolynomial::as_constant)
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order());
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.mul(&other.num));
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Multiplies by `c q^e`.
    pub fn mul_monomial(&self, c: &CyclotomicElement, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        RationalFunction {
            num: self.num.mul_monomial(c, e),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &CyclotomicElement) -> Self {
        self.mul_monomial(c, 0)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Substitutes `q = value`.
    pub fn specialize_q(&self, value: &CyclotomicElement) -> Result<CyclotomicElement, ExactError> {
        let d = self.den.evaluate(value)?;
        let inv = d.inv().ok_or(ExactError::PoleAtValue)?;
        Ok(&self.num.evaluate(value)? * &inv)
    }

    pub fn lift_to(&self, order: u32) -> Result<Self, ExactError> {
        if order == self.order() {
            return Ok(self.clone());
        }
        Ok(RationalFunction {
            num: self.num.lift_to(order)?,
            den: self.den.lift_to(order)?,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.to_text()
        } else {
            format!("({})/({})", self.num.to_text(), self.den.to_text())
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::add(self, rhs)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::sub(self, rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::mul(self, rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(self)
    }
}
