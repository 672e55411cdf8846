use std::fmt;

use num_traits::Zero;

use super::cyclotomic::CyclotomicElement;
use super::rational::{rat_is_negative, rat_to_string};
use super::ExactError;

/// A Laurent polynomial in `q` with coefficients in `Q(ζ_d)`.
///
/// With `half` set, a stored exponent `e` stands for `q^{e/2}`. Terms are
/// sorted by exponent and never carry a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    order: u32,
    half: bool,
    terms: Vec<(i64, CyclotomicElement)>,
}

impl LaurentPolynomial {
    pub fn zero(order: u32) -> Self {
        LaurentPolynomial {
            order,
            half: false,
            terms: Vec::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(CyclotomicElement::one(order))
    }

    pub fn constant(c: CyclotomicElement) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::constant(CyclotomicElement::from_int(order, v))
    }

    /// `c · q^e`.
    pub fn monomial(c: CyclotomicElement, e: i64) -> Self {
        let order = c.order();
        let terms = if c.is_zero() { Vec::new() } else { vec![(e, c)] };
        LaurentPolynomial {
            order,
            half: false,
            terms,
        }
    }

    /// `q^e`.
    pub fn q_pow(order: u32, e: i64) -> Self {
        Self::monomial(CyclotomicElement::one(order), e)
    }

    /// `q^{h/2}` in half-step representation.
    pub fn q_half_pow(order: u32, h: i64) -> Self {
        LaurentPolynomial {
            order,
            half: true,
            terms: vec![(h, CyclotomicElement::one(order))],
        }
    }

    /// Builds from `(exponent, coefficient)` pairs in any order; repeated
    /// exponents are summed.
    pub fn from_terms(
        order: u32,
        half: bool,
        terms: impl IntoIterator<Item = (i64, CyclotomicElement)>,
    ) -> Self {
        let mut v: Vec<(i64, CyclotomicElement)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, CyclotomicElement)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            assert_eq!(c.order(), order, "cyclotomic order mismatch");
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = &*lc + &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPolynomial {
            order,
            half,
            terms: out,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_half(&self) -> bool {
        self.half
    }

    pub fn terms(&self) -> &[(i64, CyclotomicElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The constant value if this is a constant (possibly zero).
    pub fn as_constant(&self) -> Option<CyclotomicElement> {
        match self.terms.as_slice() {
            [] => Some(CyclotomicElement::zero(self.order)),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// `Some((c, e))` when this is a single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(&CyclotomicElement, i64)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// The coefficient of the lowest-order term.
    pub fn low_coeff(&self) -> Option<&CyclotomicElement> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Reinterprets integer exponents as half-steps (`q^e = q^{2e/2}`).
    pub fn embed_half(&self) -> Self {
        if self.half {
            return self.clone();
        }
        LaurentPolynomial {
            order: self.order,
            half: true,
            terms: self.terms.iter().map(|(e, c)| (2 * e, c.clone())).collect(),
        }
    }

    /// Converts a half-step polynomial back to integer exponents, failing on
    /// any odd half-step count.
    pub fn integrality_check(&self) -> Result<Self, ExactError> {
        if !self.half {
            return Ok(self.clone());
        }
        if let Some((e, _)) = self.terms.iter().find(|(e, _)| e % 2 != 0) {
            return Err(ExactError::NonIntegralExponent(*e));
        }
        Ok(LaurentPolynomial {
            order: self.order,
            half: false,
            terms: self.terms.iter().map(|(e, c)| (e / 2, c.clone())).collect(),
        })
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        assert_eq!(self.half, other.half, "mixed half-step representations");
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        self.check(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            if ea < eb {
                out.push((*ea, ca.clone()));
                i += 1;
            } else if eb < ea {
                out.push((*eb, cb.clone()));
                j += 1;
            } else {
                let s = ca + cb;
                if !s.is_zero() {
                    out.push((*ea, s));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        LaurentPolynomial {
            order: self.order,
            half: self.half,
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            order: self.order,
            half: self.half,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            let half = self.half || other.half;
            return LaurentPolynomial {
                order: self.order,
                half,
                terms: Vec::new(),
            };
        }
        self.check(other);
        if let Some((c, e)) = other.as_monomial() {
            return self.mul_monomial(c, e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return other.mul_monomial(c, e);
        }
        let lo = self.min_exp().unwrap() + other.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut dense: Vec<Option<CyclotomicElement>> = vec![None; (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = &mut dense[(ea + eb - lo) as usize];
                let p = ca * cb;
                *slot = Some(match slot.take() {
                    Some(acc) => &acc + &p,
                    None => p,
                });
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter_map(|(k, c)| c.filter(|c| !c.is_zero()).map(|c| (lo + k as i64, c)))
            .collect();
        LaurentPolynomial {
            order: self.order,
            half: self.half,
            terms,
        }
    }

    /// Multiplies by `c q^e`.
    pub fn mul_monomial(&self, c: &CyclotomicElement, e: i64) -> Self {
        if c.is_zero() {
            return Self {
                order: self.order,
                half: self.half,
                terms: Vec::new(),
            };
        }
        let terms = if c.is_one() {
            self.terms.iter().map(|(a, x)| (a + e, x.clone())).collect()
        } else {
            self.terms.iter().map(|(a, x)| (a + e, x * c)).collect()
        };
        LaurentPolynomial {
            order: self.order,
            half: self.half,
            terms,
        }
    }

    pub fn scale(&self, c: &CyclotomicElement) -> Self {
        self.mul_monomial(c, 0)
    }

    pub fn shift(&self, e: i64) -> Self {
        LaurentPolynomial {
            order: self.order,
            half: self.half,
            terms: self.terms.iter().map(|(a, x)| (a + e, x.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order);
        if self.half {
            out = out.embed_half();
        }
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `q = value` (integer exponents only).
    pub fn evaluate(&self, value: &CyclotomicElement) -> Result<CyclotomicElement, ExactError> {
        if self.half {
            return Err(ExactError::HalfStepEvaluation);
        }
        let mut acc = CyclotomicElement::zero(self.order);
        if self.is_zero() {
            return Ok(acc);
        }
        let needs_inverse = self.min_exp().unwrap() < 0;
        let inv = if needs_inverse {
            Some(value.inv().ok_or(ExactError::PoleAtValue)?)
        } else {
            None
        };
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                value.pow(*e)
            } else {
                inv.as_ref().unwrap().pow(-*e)
            };
            acc = &acc + &(c * &p);
        }
        Ok(acc)
    }

    /// Coefficients of `q^{-min} · self`, low degree first, with the shift.
    pub(crate) fn to_dense(&self) -> (i64, Vec<CyclotomicElement>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![CyclotomicElement::zero(self.order); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(order: u32, shift: i64, coeffs: Vec<CyclotomicElement>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (shift + k as i64, c))
            .collect();
        LaurentPolynomial {
            order,
            half: false,
            terms,
        }
    }

    /// Lifts coefficients into `Q(ζ_m)` for a multiple `m` of the order.
    pub fn lift_to(&self, order: u32) -> Result<Self, ExactError> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((*e, c.lift_to(order)?)))
            .collect::<Result<_, ExactError>>()?;
        Ok(LaurentPolynomial {
            order,
            half: self.half,
            terms,
        })
    }

    /// Canonical JSON form: sorted `[exponent, [coords…]]` pairs. Half-step
    /// exponents print as `"k/2"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    let exp = if self.half {
                        serde_json::Value::String(format!("{e}/2"))
                    } else {
                        serde_json::Value::from(*e)
                    };
                    serde_json::Value::Array(vec![exp, c.to_json()])
                })
                .collect(),
        )
    }

    /// Human-readable form, highest power first, e.g. `q^2 + 1 - q^-1`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let qpart = match (*e, self.half) {
                (0, _) => String::new(),
                (1, false) => "q".into(),
                (e, false) => format!("q^{e}"),
                (e, true) if e % 2 == 0 => match e / 2 {
                    1 => "q".into(),
                    k => format!("q^{k}"),
                },
                (e, true) => format!("q^({e}/2)"),
            };
            let (neg, coeff) = coeff_text(c);
            let body = match (coeff.as_str(), qpart.is_empty()) {
                (_, true) => coeff,
                ("1", false) => qpart,
                (_, false) => format!("{coeff}*{qpart}"),
            };
            match (idx, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

/// Sign and magnitude text of a coefficient; multi-term cyclotomic values are
/// parenthesised.
fn coeff_text(c: &CyclotomicElement) -> (bool, String) {
    if let Some(r) = c.as_rational() {
        let neg = rat_is_negative(r);
        let abs = if neg { -r.clone() } else { r.clone() };
        return (neg, rat_to_string(&abs));
    }
    if c.weight() == 1 {
        let lead = c.coords().iter().find(|x| !x.is_zero()).unwrap();
        if rat_is_negative(lead) {
            return (true, (-c).to_text());
        }
        return (false, c.to_text());
    }
    (false, format!("({})", c.to_text()))
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Converts a half-step polynomial to integer exponents, rejecting odd
/// half-step counts.
pub fn integrality_check(p: &LaurentPolynomial) -> Result<LaurentPolynomial, ExactError> {
    p.integrality_check()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrality_examples() {
        let q1 = LaurentPolynomial::q_half_pow(1, 2);
        assert_eq!(integrality_check(&q1).unwrap(), LaurentPolynomial::q_pow(1, 1));

        let bad = LaurentPolynomial::q_half_pow(1, 1).add(&LaurentPolynomial::one(1).embed_half());
        assert!(matches!(
            integrality_check(&bad),
            Err(ExactError::NonIntegralExponent(1))
        ));

        let prod = LaurentPolynomial::q_half_pow(1, 4).mul(&LaurentPolynomial::q_half_pow(1, -2));
        assert_eq!(integrality_check(&prod).unwrap(), LaurentPolynomial::q_pow(1, 1));
    }

    #[test]
    fn embed_then_check_is_identity() {
        let p = LaurentPolynomial::q_pow(3, -2)
            .add(&LaurentPolynomial::from_int(3, 5))
            .add(&LaurentPolynomial::monomial(CyclotomicElement::zeta_pow(3, 1), 4));
        assert_eq!(p.embed_half().integrality_check().unwrap(), p);
    }

    #[test]
    fn cancellation_drops_terms() {
        let q = LaurentPolynomial::q_pow(1, 1);
        assert!(q.sub(&q).is_zero());
        let a = q.add(&LaurentPolynomial::one(1));
        let b = q.sub(&LaurentPolynomial::one(1));
        // (q + 1)(q - 1) = q^2 - 1
        assert_eq!(
            a.mul(&b),
            LaurentPolynomial::q_pow(1, 2).sub(&LaurentPolynomial::one(1))
        );
    }

    #[test]
    fn text_form() {
        let p = LaurentPolynomial::q_pow(1, 2)
            .add(&LaurentPolynomial::one(1))
            .sub(&LaurentPolynomial::q_pow(1, -1));
        assert_eq!(p.to_text(), "q^2 + 1 - q^-1");
    }

    #[test]
    fn evaluation_with_negative_exponents() {
        let p = LaurentPolynomial::q_pow(1, 1).add(&LaurentPolynomial::q_pow(1, -1));
        let v = p.evaluate(&CyclotomicElement::from_int(1, 2)).unwrap();
        assert_eq!(v, CyclotomicElement::from_rational(1, crate::exactnum::rat(5, 2)));
        assert!(matches!(
            p.evaluate(&CyclotomicElement::zero(1)),
            Err(ExactError::PoleAtValue)
        ));
    }
}
