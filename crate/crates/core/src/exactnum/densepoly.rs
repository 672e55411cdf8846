//! Dense univariate polynomial helpers (coefficients low degree first) over
//! an exact field. Used for cyclotomic reduction and rational-function gcds.

use num_traits::{One, Zero};

use super::cyclotomic::CyclotomicElement;
use super::rational::Rational;

pub(crate) trait FieldCoeff: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_c(&self) -> bool;
    fn add_c(&self, other: &Self) -> Self;
    fn sub_c(&self, other: &Self) -> Self;
    fn mul_c(&self, other: &Self) -> Self;
    fn inv_c(&self) -> Self;
}

impl FieldCoeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_c(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_c(&self, other: &Self) -> Self {
        self * other
    }
    fn inv_c(&self) -> Self {
        self.recip()
    }
}

impl FieldCoeff for CyclotomicElement {
    fn zero_like(&self) -> Self {
        CyclotomicElement::zero(self.order())
    }
    fn one_like(&self) -> Self {
        CyclotomicElement::one(self.order())
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_c(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_c(&self, other: &Self) -> Self {
        self * other
    }
    fn inv_c(&self) -> Self {
        self.inv().expect("inverse of zero coefficient")
    }
}

pub(crate) fn trim<T: FieldCoeff>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero_c()) {
        p.pop();
    }
}

pub(crate) fn mul<T: FieldCoeff>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![a[0].zero_like(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_c() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_c(&x.mul_c(y));
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub<T: FieldCoeff>(a: &[T], b: &[T]) -> Vec<T> {
    let len = a.len().max(b.len());
    let zero = a.first().or(b.first()).map(|c| c.zero_like());
    let Some(zero) = zero else { return Vec::new() };
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(x.sub_c(y));
    }
    trim(&mut out);
    out
}

/// Euclidean division; `divisor` must be nonzero and trimmed.
pub(crate) fn divrem<T: FieldCoeff>(dividend: &[T], divisor: &[T]) -> (Vec<T>, Vec<T>) {
    assert!(!divisor.is_empty(), "polynomial division by zero");
    let mut rem: Vec<T> = dividend.to_vec();
    trim(&mut rem);
    if rem.len() < divisor.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = divisor.last().unwrap().inv_c();
    let shift_max = rem.len() - divisor.len();
    let mut quot = vec![divisor[0].zero_like(); shift_max + 1];
    for shift in (0..=shift_max).rev() {
        let top = &rem[shift + divisor.len() - 1];
        if top.is_zero_c() {
            continue;
        }
        let factor = top.mul_c(&lead_inv);
        for (j, c) in divisor.iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub_c(&factor.mul_c(c));
        }
        quot[shift] = factor;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn make_monic<T: FieldCoeff>(p: &[T]) -> Vec<T> {
    match p.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = lead.inv_c();
            p.iter().map(|c| c.mul_c(&inv)).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd<T: FieldCoeff>(a: &[T], b: &[T]) -> Vec<T> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = make_monic(&y);
        y = make_monic(&r);
    }
    make_monic(&x)
}

/// Returns `s` with `s * a = 1 (mod m)`, assuming `gcd(a, m) = 1`.
pub(crate) fn inverse_mod<T: FieldCoeff>(a: &[T], m: &[T]) -> Option<Vec<T>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<T> = Vec::new();
    let mut s1: Vec<T> = vec![r1[0].one_like()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant iff a is invertible.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].inv_c();
    let s: Vec<T> = s0.iter().map(|x| x.mul_c(&c)).collect();
    let (_, s) = divrem(&s, m);
    Some(s)
}

pub(crate) fn is_one<T: FieldCoeff>(p: &[T]) -> bool {
    p.len() == 1 && p[0] == p[0].one_like()
}

impl FieldCoeff for super::ratfunc::RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero(self.order())
    }
    fn one_like(&self) -> Self {
        Self::one(self.order())
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_c(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_c(&self, other: &Self) -> Self {
        self * other
    }
    fn inv_c(&self) -> Self {
        self.inv().expect("inverse of zero coefficient")
    }
}
