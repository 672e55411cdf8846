use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::densepoly;
use super::rational::{rat_int, rat_is_negative, rat_to_string, Rational};
use super::ExactError;

/// Precomputed data for `Q(ζ_d) = Q[x]/(Φ_d(x))`.
struct FieldData {
    degree: usize,
    /// Φ_d, low degree first, monic.
    modulus: Vec<Rational>,
    /// `powers[k]` = x^k reduced mod Φ_d, as `degree` coordinates.
    powers: Vec<Vec<Rational>>,
}

impl FieldData {
    fn build(order: u32) -> FieldData {
        let d = order as usize;
        // Φ_d = (x^d - 1) / prod_{e | d, e < d} Φ_e
        let mut num = vec![Rational::zero(); d + 1];
        num[0] = -Rational::one();
        num[d] = Rational::one();
        for e in 1..order {
            if order.is_multiple_of(e) {
                let (q, r) = densepoly::divrem(&num, &field(e).modulus);
                debug_assert!(r.is_empty());
                num = q;
            }
        }
        let modulus = num;
        let degree = modulus.len() - 1;
        let count = d.max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut current = vec![Rational::zero(); degree];
        current[0] = Rational::one();
        for _ in 0..count {
            powers.push(current.clone());
            // multiply by x and reduce using x^degree = -sum modulus[i] x^i
            let top = current[degree - 1].clone();
            let mut next = vec![Rational::zero(); degree];
            for i in (1..degree).rev() {
                next[i] = current[i - 1].clone();
            }
            if !top.is_zero() {
                for (i, c) in next.iter_mut().enumerate() {
                    *c -= &top * &modulus[i];
                }
            }
            current = next;
        }
        FieldData {
            degree,
            modulus,
            powers,
        }
    }
}

fn field(order: u32) -> &'static FieldData {
    static FIELDS: OnceLock<RwLock<HashMap<u32, &'static FieldData>>> = OnceLock::new();
    let table = FIELDS.get_or_init(Default::default);
    if let Some(data) = table.read().unwrap().get(&order) {
        return data;
    }
    let built = FieldData::build(order);
    let mut guard = table.write().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| Box::leak(Box::new(built)))
}

/// Euler's totient, the degree of `Q(ζ_d)` over `Q`.
pub fn totient(order: u32) -> usize {
    field(order).degree
}

/// An element of the cyclotomic field `Q(ζ_d)` in the power basis
/// `1, ζ, …, ζ^{φ(d)-1}`, reduced modulo the d-th cyclotomic polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    order: u32,
    coords: Vec<Rational>,
}

impl CyclotomicElement {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CyclotomicElement {
            order,
            coords: vec![Rational::zero(); totient(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, value: Rational) -> Self {
        let mut out = Self::zero(order);
        out.coords[0] = value;
        out
    }

    pub fn from_int(order: u32, value: i64) -> Self {
        Self::from_rational(order, rat_int(value))
    }

    /// Builds an element from power-basis coordinates; the vector must have
    /// length φ(d).
    pub fn from_coords(order: u32, coords: Vec<Rational>) -> Result<Self, ExactError> {
        if coords.len() != totient(order) {
            return Err(ExactError::CoordinateLength {
                order,
                expected: totient(order),
                got: coords.len(),
            });
        }
        Ok(CyclotomicElement { order, coords })
    }

    /// ζ_d^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let d = order as i64;
        let k = k.rem_euclid(d) as usize;
        CyclotomicElement {
            order,
            coords: field(order).powers[k].clone(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicElement {
            order: self.order,
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch(self.order, other.order));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let data = field(self.order);
        let deg = data.degree;
        let mut wide = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut coords: Vec<Rational> = wide[..deg].to_vec();
        for (k, c) in wide.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (slot, p) in coords.iter_mut().zip(&data.powers[k]) {
                if !p.is_zero() {
                    *slot += c * p;
                }
            }
        }
        Ok(CyclotomicElement {
            order: self.order,
            coords,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch(self.order, other.order));
        }
        Ok(CyclotomicElement {
            order: self.order,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(self.order, r.recip()));
        }
        let data = field(self.order);
        let mut a = self.coords.clone();
        densepoly::trim(&mut a);
        let mut s = densepoly::inverse_mod(&a, &data.modulus)?;
        s.resize(data.degree, Rational::zero());
        Some(CyclotomicElement {
            order: self.order,
            coords: s,
        })
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut result = Self::one(self.order);
        let mut b = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        result
    }

    /// Embeds `Q(ζ_e)` into `Q(ζ_d)` for `e | d` via ζ_e ↦ ζ_d^{d/e}.
    pub fn lift_to(&self, order: u32) -> Result<Self, ExactError> {
        if self.order == order {
            return Ok(self.clone());
        }
        if !order.is_multiple_of(self.order) {
            return Err(ExactError::OrderMismatch(self.order, order));
        }
        let step = (order / self.order) as i64;
        let mut out = Self::zero(order);
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &Self::zeta_pow(order, step * i as i64).scale(c);
            }
        }
        Ok(out)
    }

    /// Text form with `z` standing for ζ_d, e.g. `1/2 - z`.
    pub fn to_text(&self) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = rat_is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            let body = match i {
                0 => rat_to_string(&abs),
                _ => {
                    let var = if i == 1 { "z".to_string() } else { format!("z^{i}") };
                    if abs.is_one() {
                        var
                    } else {
                        format!("{}*{}", rat_to_string(&abs), var)
                    }
                }
            };
            parts.push((neg, body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (neg, body)) in parts.into_iter().enumerate() {
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

    /// Number of nonzero coordinates.
    pub(crate) fn weight(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords
                .iter()
                .map(|c| serde_json::Value::String(rat_to_string(c)))
                .collect(),
        )
    }
}

/// The j-th root of unity ξ_j = ζ_d^{j-1}, 1 ≤ j ≤ d, so that ξ_1 = 1.
pub fn root_of_unity(order: u32, j: u32) -> CyclotomicElement {
    assert!(
        (1..=order).contains(&j),
        "root index {j} out of range 1..={order}"
    );
    CyclotomicElement::zeta_pow(order, j as i64 - 1)
}

pub fn cyclotomic_mul(
    a: &CyclotomicElement,
    b: &CyclotomicElement,
) -> Result<CyclotomicElement, ExactError> {
    a.try_mul(b)
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self.to_text(), self.order)
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.try_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        CyclotomicElement {
            order: self.order,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.try_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            order: self.order,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        -&self
    }
}
