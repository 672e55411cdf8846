//! Exact arithmetic in the Yokonuma–Hecke algebra `Y_{d,n}(q)` in its
//! standard basis `t_1^{a_1} ⋯ t_n^{a_n} g_w`. With `d = 1` this is the
//! Iwahori–Hecke algebra `H_n(q)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::exactnum::{CyclotomicElement, ExactError, RationalFunction};
use crate::permgroup::{CosetSystem, Composition, Permutation};

/// Largest supported standard-basis size `d^n · n!`.
pub const MAX_BASIS: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YError {
    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("n = {0} is too small: the ideal is zero for n <= 2")]
    NTooSmall(usize),
    #[error("elements belong to different algebras")]
    ParamsMismatch,
    #[error("character value list has length {got}, expected {expected}")]
    CharacterLength { got: usize, expected: usize },
    #[error("invalid parameters d = {d}, n = {n}")]
    InvalidParams { d: usize, n: usize },
    #[error("basis of size d^n n! exceeds {MAX_BASIS}")]
    TooLarge,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Shared tables for one `Y_{d,n}(q)`.
///
/// Basis elements `t^a g_w` are keyed by `tcode · n! + w`, where `w` is the
/// index of the permutation in lexicographic order and `tcode` reads
/// `(a_1, …, a_n)` as base-`d` digits with `a_1` most significant.
pub struct YAlgebra {
    d: usize,
    n: usize,
    order: u32,
    nfact: usize,
    dn: usize,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    /// `right_simple[w][i-1]` = index of `w s_i`.
    right_simple: Vec<Vec<usize>>,
    /// `t_action[w][b]` = tcode of `g_w t^b g_w^{-1}`.
    t_action: Vec<Vec<u32>>,
    /// `tadd[a * dn + b]`, present for small `dn`.
    tadd: Option<Vec<u32>>,
    pow_d: Vec<usize>,
    consts: Consts,
}

struct Consts {
    q: RationalFunction,
    /// `(q - 1) / d`
    qm1_over_d: RationalFunction,
}

impl fmt::Debug for YAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y_{{{},{}}}", self.d, self.n)
    }
}

impl YAlgebra {
    pub fn new(d: usize, n: usize) -> Result<Arc<Self>, YError> {
        Self::with_coeff_order(d, n, d as u32)
    }

    /// An algebra whose scalars live in `Q(ζ_order)(q)`; `d` must divide
    /// `order`. Used for Hecke algebras carrying cyclotomic scalars.
    pub fn with_coeff_order(d: usize, n: usize, order: u32) -> Result<Arc<Self>, YError> {
        if d == 0 || n == 0 || order == 0 || !(order as usize).is_multiple_of(d) {
            return Err(YError::InvalidParams { d, n });
        }
        let nfact: usize = (1..=n).product();
        let dn = d
            .checked_pow(n as u32)
            .filter(|dn| dn.checked_mul(nfact).is_some_and(|s| s <= MAX_BASIS))
            .ok_or(YError::TooLarge)?;
        let perms = Permutation::all(n);
        let perm_index: HashMap<_, _> = perms.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let lengths = perms.iter().map(Permutation::length).collect();
        let words = perms.iter().map(Permutation::reduced_word).collect();
        let right_simple = perms
            .iter()
            .map(|w| (1..n).map(|i| perm_index[&w.mul_simple_right(i)]).collect())
            .collect();
        let pow_d: Vec<usize> = (0..n).map(|j| d.pow((n - 1 - j) as u32)).collect();
        let decode = |code: usize| -> Vec<usize> { pow_d.iter().map(|p| code / p % d).collect() };
        let encode = |a: &[usize]| -> usize { a.iter().zip(&pow_d).map(|(x, p)| x * p).sum() };
        let t_action = perms
            .iter()
            .map(|w| {
                (0..dn)
                    .map(|b| {
                        let b = decode(b);
                        let mut out = vec![0; n];
                        for (j, &bj) in b.iter().enumerate() {
                            out[w.apply(j + 1) - 1] = bj;
                        }
                        encode(&out) as u32
                    })
                    .collect()
            })
            .collect();
        let tadd = (dn <= 1024).then(|| {
            let mut table = Vec::with_capacity(dn * dn);
            for a in 0..dn {
                let da = decode(a);
                for b in 0..dn {
                    let db = decode(b);
                    let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % d).collect();
                    table.push(encode(&s) as u32);
                }
            }
            table
        });
        let q = RationalFunction::q(order);
        let qm1_over_d = (&q - &RationalFunction::one(order))
            .scale(&CyclotomicElement::from_rational(order, crate::exactnum::rat(1, d as i64)));
        Ok(Arc::new(YAlgebra {
            d,
            n,
            order,
            nfact,
            dn,
            perms,
            perm_index,
            lengths,
            words,
            right_simple,
            t_action,
            tadd,
            pow_d,
            consts: Consts { q, qm1_over_d },
        }))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cyclotomic order of the scalars.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `d^n · n!`.
    pub fn dim(&self) -> usize {
        self.dn * self.nfact
    }

    pub fn num_perms(&self) -> usize {
        self.nfact
    }

    pub fn num_tcodes(&self) -> usize {
        self.dn
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, idx: usize) -> &Permutation {
        &self.perms[idx]
    }

    pub fn perm_index(&self, w: &Permutation) -> usize {
        self.perm_index[w]
    }

    pub fn length(&self, idx: usize) -> usize {
        self.lengths[idx]
    }

    pub fn reduced_word(&self, idx: usize) -> &[usize] {
        &self.words[idx]
    }

    pub fn key(&self, tcode: usize, perm: usize) -> usize {
        tcode * self.nfact + perm
    }

    /// `(tcode, perm index)` of a basis key.
    pub fn split_key(&self, key: usize) -> (usize, usize) {
        (key / self.nfact, key % self.nfact)
    }

    pub fn decode_t(&self, code: usize) -> Vec<usize> {
        self.pow_d.iter().map(|p| code / p % self.d).collect()
    }

    /// Encodes exponents, reducing each modulo `d`.
    pub fn encode_t(&self, a: &[i64]) -> usize {
        a.iter()
            .zip(&self.pow_d)
            .map(|(&x, p)| x.rem_euclid(self.d as i64) as usize * p)
            .sum()
    }

    fn tadd(&self, a: usize, b: usize) -> usize {
        match &self.tadd {
            Some(t) => t[a * self.dn + b] as usize,
            None => {
                let (da, db) = (self.decode_t(a), self.decode_t(b));
                let s: Vec<i64> = da.iter().zip(&db).map(|(x, y)| (x + y) as i64).collect();
                self.encode_t(&s)
            }
        }
    }

    /// tcode of `a + s(ε_j - ε_k)` for 0-based `j`, `k`.
    fn tshift(&self, a: usize, j: usize, k: usize, s: usize) -> usize {
        if j == k {
            return a;
        }
        let d = self.d;
        let aj = a / self.pow_d[j] % d;
        let ak = a / self.pow_d[k] % d;
        let nj = (aj + s) % d;
        let nk = (ak + d - s % d) % d;
        a + nj * self.pow_d[j] + nk * self.pow_d[k] - aj * self.pow_d[j] - ak * self.pow_d[k]
    }

    fn rf_one(&self) -> RationalFunction {
        RationalFunction::one(self.order)
    }

    pub fn zero(self: &Arc<Self>) -> YElement {
        YElement {
            alg: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn unit(self: &Arc<Self>) -> YElement {
        self.scalar(self.rf_one())
    }

    pub fn scalar(self: &Arc<Self>, c: RationalFunction) -> YElement {
        self.basis_term(0, 0, c)
    }

    /// `c · t^a g_w` from a tcode and permutation index.
    pub fn basis_term(self: &Arc<Self>, tcode: usize, perm: usize, c: RationalFunction) -> YElement {
        assert_eq!(c.order(), self.order, "scalar field mismatch");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(self.key(tcode, perm), c)]
        };
        YElement {
            alg: self.clone(),
            terms,
        }
    }

    /// The basis element `t^a g_w`.
    pub fn basis_element(self: &Arc<Self>, a: &[i64], w: &Permutation) -> Result<YElement, YError> {
        if a.len() != self.n || w.n() != self.n {
            return Err(YError::ParamsMismatch);
        }
        Ok(self.basis_term(self.encode_t(a), self.perm_index(w), self.rf_one()))
    }

    fn check_g(&self, i: usize) -> Result<(), YError> {
        if i == 0 || i >= self.n {
            return Err(YError::IndexOutOfRange {
                what: "generator g",
                index: i,
                max: self.n.saturating_sub(1),
            });
        }
        Ok(())
    }

    fn check_t(&self, j: usize) -> Result<(), YError> {
        if j == 0 || j > self.n {
            return Err(YError::IndexOutOfRange {
                what: "framing generator t",
                index: j,
                max: self.n,
            });
        }
        Ok(())
    }

    pub fn gen_g(self: &Arc<Self>, i: usize) -> Result<YElement, YError> {
        self.check_g(i)?;
        let w = Permutation::simple(self.n, i).expect("checked");
        Ok(self.basis_term(0, self.perm_index(&w), self.rf_one()))
    }

    /// `t_j^s` for any integer `s`.
    pub fn gen_t_pow(self: &Arc<Self>, j: usize, s: i64) -> Result<YElement, YError> {
        self.check_t(j)?;
        let mut a = vec![0i64; self.n];
        a[j - 1] = s;
        Ok(self.basis_term(self.encode_t(&a), 0, self.rf_one()))
    }

    pub fn gen_t(self: &Arc<Self>, j: usize) -> Result<YElement, YError> {
        self.gen_t_pow(j, 1)
    }

    /// `g_w` for the permutation `w`.
    pub fn g_perm(self: &Arc<Self>, w: &Permutation) -> YElement {
        self.basis_term(0, self.perm_index(w), self.rf_one())
    }

    /// `e_{j,k} = (1/d) Σ_s t_j^s t_k^{-s}`.
    pub fn e_pair(self: &Arc<Self>, j: usize, k: usize) -> Result<YElement, YError> {
        self.check_t(j)?;
        self.check_t(k)?;
        let c = self.inv_d();
        let mut terms = BTreeMap::new();
        for s in 0..self.d {
            let code = self.tshift(0, j - 1, k - 1, s);
            let entry = terms.entry(self.key(code, 0)).or_insert_with(|| RationalFunction::zero(self.order));
            *entry = &*entry + &c;
        }
        Ok(self.from_map(terms))
    }

    pub fn e(self: &Arc<Self>, i: usize) -> Result<YElement, YError> {
        self.check_g(i)?;
        self.e_pair(i, i + 1)
    }

    /// `T_j = (1/d) Σ_s t_j^s`.
    pub fn big_t(self: &Arc<Self>, j: usize) -> Result<YElement, YError> {
        self.check_t(j)?;
        let c = self.inv_d();
        let mut out = self.zero();
        for s in 0..self.d as i64 {
            out = out.add(&self.gen_t_pow(j, s)?.scale(&c));
        }
        Ok(out)
    }

    fn inv_d(&self) -> RationalFunction {
        RationalFunction::constant(CyclotomicElement::from_rational(
            self.order,
            crate::exactnum::rat(1, self.d as i64),
        ))
    }

    /// `g_i^{-1} = q^{-1} g_i + (q^{-1} - 1) e_i`.
    pub fn gen_g_inv(self: &Arc<Self>, i: usize) -> Result<YElement, YError> {
        let qi = RationalFunction::q_pow(self.order, -1);
        let a = self.gen_g(i)?.scale(&qi);
        let b = self.e(i)?.scale(&(&qi - &self.rf_one()));
        Ok(a.add(&b))
    }

    /// `g_{i_1} ⋯ g_{i_r}` for any word.
    pub fn g_word(self: &Arc<Self>, word: &[usize]) -> Result<YElement, YError> {
        let mut out = self.unit();
        for &i in word {
            self.check_g(i)?;
            out = out.mul_g(i);
        }
        Ok(out)
    }

    /// The idempotent `E_χ` for the character with `χ(t_j) = ζ_d^{c_j}`.
    pub fn e_chi(self: &Arc<Self>, exps: &[usize]) -> Result<YElement, YError> {
        if exps.len() != self.n {
            return Err(YError::CharacterLength {
                got: exps.len(),
                expected: self.n,
            });
        }
        let d = self.d as i64;
        let scale = crate::exactnum::rat(1, d.pow(self.n as u32));
        let mut terms = Vec::with_capacity(self.dn);
        for code in 0..self.dn {
            let a = self.decode_t(code);
            let e: i64 = a.iter().zip(exps).map(|(&x, &c)| (x * c) as i64).sum();
            let z = CyclotomicElement::zeta_pow(self.d as u32, -e)
                .lift_to(self.order)?
                .scale(&scale);
            terms.push((self.key(code, 0), RationalFunction::constant(z)));
        }
        Ok(YElement {
            alg: self.clone(),
            terms,
        })
    }

    /// `E_χ` from explicit character values, each a d-th root of unity.
    pub fn e_chi_values(self: &Arc<Self>, values: &[CyclotomicElement]) -> Result<YElement, YError> {
        let exps = values
            .iter()
            .map(|v| {
                (0..self.d)
                    .find(|&c| {
                        CyclotomicElement::zeta_pow(self.d as u32, c as i64)
                            .lift_to(v.order())
                            .is_ok_and(|z| &z == v)
                    })
                    .ok_or(YError::Exact(ExactError::OrderMismatch(v.order(), self.d as u32)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.e_chi(&exps)
    }

    /// `E_μ = Σ_k E_{χ_k^μ}`.
    pub fn e_mu(self: &Arc<Self>, sys: &CosetSystem) -> Result<YElement, YError> {
        let mut out = self.zero();
        for k in 0..sys.len() {
            out = out.add(&self.e_chi(&sys.character(k))?);
        }
        Ok(out)
    }

    pub fn e_mu_of(self: &Arc<Self>, mu: &Composition) -> Result<YElement, YError> {
        self.e_mu(&CosetSystem::new(mu))
    }

    /// `g_{i,i+1} = 1 + g_i + g_{i+1} + g_i g_{i+1} + g_{i+1} g_i + g_i g_{i+1} g_i`.
    pub fn g_pair_sum(self: &Arc<Self>, i: usize) -> Result<YElement, YError> {
        self.check_g(i + 1)?;
        let mut out = self.unit();
        for word in [vec![i], vec![i + 1], vec![i, i + 1], vec![i + 1, i], vec![i, i + 1, i]] {
            out = out.add(&self.g_word(&word)?);
        }
        Ok(out)
    }

    /// `e_1 e_2 g_{1,2}`.
    pub fn ftl_generator(self: &Arc<Self>) -> Result<YElement, YError> {
        if self.n < 3 {
            return Err(YError::NTooSmall(self.n));
        }
        Ok(self.e(1)?.mul(&self.e(2)?).mul(&self.g_pair_sum(1)?))
    }

    /// `T_1 e_1 e_2 g_{1,2}`.
    pub fn ctl_generator(self: &Arc<Self>) -> Result<YElement, YError> {
        Ok(self.big_t(1)?.mul(&self.ftl_generator()?))
    }

    /// `g_1 g_2 ⋯ g_{n-1}` and its inverse.
    fn cycle_and_inverse(self: &Arc<Self>) -> Result<(YElement, YElement), YError> {
        let word: Vec<usize> = (1..self.n).collect();
        let c = self.g_word(&word)?;
        let mut inv = self.unit();
        for &i in word.iter().rev() {
            inv = inv.mul(&self.gen_g_inv(i)?);
        }
        Ok((c, inv))
    }

    /// Elements assembled from a key → coefficient map.
    fn from_map(self: &Arc<Self>, map: BTreeMap<usize, RationalFunction>) -> YElement {
        YElement {
            alg: self.clone(),
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds an element from arbitrary `(key, coefficient)` pairs.
    pub fn from_terms(self: &Arc<Self>, terms: impl IntoIterator<Item = (usize, RationalFunction)>) -> YElement {
        let mut acc = Accumulator::new(self.dim());
        for (k, c) in terms {
            acc.add(k, &c);
        }
        YElement {
            alg: self.clone(),
            terms: acc.into_terms(),
        }
    }
}

/// Dense scratch space indexed by basis key.
struct Accumulator {
    slots: Vec<Option<RationalFunction>>,
    touched: Vec<usize>,
}

impl Accumulator {
    fn new(size: usize) -> Self {
        Accumulator {
            slots: vec![None; size],
            touched: Vec::new(),
        }
    }

    fn add(&mut self, key: usize, c: &RationalFunction) {
        match &mut self.slots[key] {
            Some(acc) => *acc = &*acc + c,
            slot @ None => {
                *slot = Some(c.clone());
                self.touched.push(key);
            }
        }
    }

    fn add_owned(&mut self, key: usize, c: RationalFunction) {
        match &mut self.slots[key] {
            Some(acc) => *acc = &*acc + &c,
            slot @ None => {
                *slot = Some(c);
                self.touched.push(key);
            }
        }
    }

    fn into_terms(mut self) -> Vec<(usize, RationalFunction)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for k in self.touched {
            if let Some(c) = self.slots[k].take() {
                if !c.is_zero() {
                    out.push((k, c));
                }
            }
        }
        out
    }
}

/// An element of `Y_{d,n}(q)`: sorted `(basis key, coefficient)` pairs with
/// nonzero coefficients.
#[derive(Clone)]
pub struct YElement {
    alg: Arc<YAlgebra>,
    terms: Vec<(usize, RationalFunction)>,
}

impl PartialEq for YElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.terms == other.terms
    }
}

impl Eq for YElement {}

/// One standard-basis term.
pub struct Term<'a> {
    pub t: Vec<usize>,
    pub w: &'a Permutation,
    pub coeff: &'a RationalFunction,
}

impl YElement {
    pub fn algebra(&self) -> &Arc<YAlgebra> {
        &self.alg
    }

    pub fn raw_terms(&self) -> &[(usize, RationalFunction)] {
        &self.terms
    }

    pub fn terms(&self) -> impl Iterator<Item = Term<'_>> {
        self.terms.iter().map(|(k, c)| {
            let (t, w) = self.alg.split_key(*k);
            Term {
                t: self.alg.decode_t(t),
                w: self.alg.perm(w),
                coeff: c,
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the basis key (zero if absent).
    pub fn coeff(&self, key: usize) -> RationalFunction {
        match self.terms.binary_search_by_key(&key, |(k, _)| *k) {
            Ok(pos) => self.terms[pos].1.clone(),
            Err(_) => RationalFunction::zero(self.alg.order),
        }
    }

    fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg)
            || (self.alg.d == other.alg.d && self.alg.n == other.alg.n && self.alg.order == other.alg.order)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, YError> {
        if !self.same_algebra(other) {
            return Err(YError::ParamsMismatch);
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &other.terms[j];
            match ka.cmp(kb) {
                std::cmp::Ordering::Less => {
                    out.push((*ka, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*kb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ka, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(YElement {
            alg: self.alg.clone(),
            terms: out,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("algebra mismatch")
    }

    pub fn neg(&self) -> Self {
        YElement {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return self.alg.zero();
        }
        YElement {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    /// Right multiplication by `g_i`.
    pub fn mul_g(&self, i: usize) -> Self {
        let alg = &self.alg;
        let mut acc = Accumulator::new(alg.dim());
        for (key, c) in &self.terms {
            let (t, w) = alg.split_key(*key);
            let ws = alg.right_simple[w][i - 1];
            if alg.lengths[ws] > alg.lengths[w] {
                acc.add(alg.key(t, ws), c);
            } else {
                acc.add_owned(alg.key(t, ws), c * &alg.consts.q);
                // (q - 1) t^a e_{w(i), w(i+1)} g_w
                let perm = &alg.perms[w];
                let (j, k) = (perm.apply(i) - 1, perm.apply(i + 1) - 1);
                let cc = c * &alg.consts.qm1_over_d;
                for s in 0..alg.d {
                    acc.add(alg.key(alg.tshift(t, j, k, s), w), &cc);
                }
            }
        }
        YElement {
            alg: self.alg.clone(),
            terms: acc.into_terms(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, YError> {
        if !self.same_algebra(other) {
            return Err(YError::ParamsMismatch);
        }
        let alg = &self.alg;
        // group the right factor by its braid part
        let mut by_perm: BTreeMap<usize, Vec<(usize, &RationalFunction)>> = BTreeMap::new();
        for (key, c) in &other.terms {
            let (t, v) = alg.split_key(*key);
            by_perm.entry(v).or_default().push((t, c));
        }
        let mut total = Accumulator::new(alg.dim());
        for (v, tpart) in by_perm {
            // self · Σ c_b t^b, using g_w t^b = t^{w(b)} g_w
            let mut acc = Accumulator::new(alg.dim());
            for (key, x) in &self.terms {
                let (a, w) = alg.split_key(*key);
                for (b, y) in &tpart {
                    let wb = alg.t_action[w][*b] as usize;
                    acc.add_owned(alg.key(alg.tadd(a, wb), w), x * *y);
                }
            }
            let mut part = YElement {
                alg: alg.clone(),
                terms: acc.into_terms(),
            };
            for &i in &alg.words[v] {
                part = part.mul_g(i);
            }
            for (k, c) in part.terms {
                total.add_owned(k, c);
            }
        }
        Ok(YElement {
            alg: alg.clone(),
            terms: total.into_terms(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("algebra mismatch")
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = self.alg.unit();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `c^{i-1} x c^{-(i-1)}` with `c = g_1 g_2 ⋯ g_{n-1}`.
    pub fn conjugate_shift(&self, i: usize) -> Result<Self, YError> {
        if i == 0 {
            return Err(YError::IndexOutOfRange {
                what: "shift",
                index: i,
                max: self.alg.n,
            });
        }
        let (c, cinv) = self.alg.cycle_and_inverse()?;
        let mut out = self.clone();
        for _ in 1..i {
            out = c.mul(&out).mul(&cinv);
        }
        Ok(out)
    }

    /// All coefficients lie in `Q(ζ)[q, q^{-1}]`.
    pub fn is_laurent(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.as_laurent().is_some())
    }

    /// Image under `q ↦ 1` in the group algebra of `(Z/dZ) ≀ S_n`.
    pub fn specialize_group_algebra(&self) -> Result<GroupAlgebraElement, YError> {
        let one = CyclotomicElement::one(self.alg.order);
        let mut terms = BTreeMap::new();
        for (key, c) in &self.terms {
            let v = c.specialize_q(&one)?;
            if !v.is_zero() {
                terms.insert(*key, v);
            }
        }
        Ok(GroupAlgebraElement {
            alg: self.alg.clone(),
            terms,
        })
    }

    /// JSON records `{t, w, coeff}` in canonical order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|t| json!({ "t": t.t, "w": t.w.one_line(), "coeff": t.coeff.to_json() }))
                .collect(),
        )
    }

    /// Expression text that parses back to this element, e.g.
    /// `(q - 1)*t1*g1*g2 + 1`.
    pub fn to_expression(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|term| {
                let mut factors = vec![format!("({})", term.coeff.to_text())];
                for (j, &a) in term.t.iter().enumerate() {
                    match a {
                        0 => {}
                        1 => factors.push(format!("t{}", j + 1)),
                        a => factors.push(format!("t{}^{}", j + 1, a)),
                    }
                }
                for i in term.w.reduced_word() {
                    factors.push(format!("g{i}"));
                }
                factors.join("*")
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for YElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expression())
    }
}

/// An element of the group algebra `Q(ζ_d)[(Z/dZ) ≀ S_n]` in the basis
/// `t^a w`, keyed like [`YElement`].
#[derive(Clone)]
pub struct GroupAlgebraElement {
    alg: Arc<YAlgebra>,
    terms: BTreeMap<usize, CyclotomicElement>,
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, v)| {
                let (t, w) = self.alg.split_key(*k);
                ((self.alg.decode_t(t), self.alg.perm(w).one_line()), v)
            }))
            .finish()
    }
}

impl GroupAlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<usize, CyclotomicElement> {
        &self.terms
    }

    /// Product in the wreath product: `(t^a w)(t^b v) = t^{a + w(b)} wv`.
    pub fn mul(&self, other: &Self) -> Self {
        let alg = &self.alg;
        let mut terms: BTreeMap<usize, CyclotomicElement> = BTreeMap::new();
        for (ka, x) in &self.terms {
            let (a, w) = alg.split_key(*ka);
            for (kb, y) in &other.terms {
                let (b, v) = alg.split_key(*kb);
                let t = alg.tadd(a, alg.t_action[w][b] as usize);
                let wv = alg.perm_index(&alg.perm(w).compose(alg.perm(v)));
                let entry = terms
                    .entry(alg.key(t, wv))
                    .or_insert_with(|| CyclotomicElement::zero(alg.order));
                *entry = &*entry + &(x * y);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        GroupAlgebraElement {
            alg: alg.clone(),
            terms,
        }
    }
}
