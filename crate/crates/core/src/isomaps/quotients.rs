//! The isomorphisms `FTL_{d,n}(q) ≅ ⊕_μ Mat_{m_μ}(TL^μ(q))` and
//! `CTL_{d,n}(q) ≅ ⊕_μ Mat_{m_μ}(TL_{μ_1}(q) ⊗ H^{(μ_2,…,μ_d)}(q))`.
//!
//! Quotient elements are represented by their images on the matrix side,
//! which is a canonical form: two elements of `Y_{d,n}(q)` agree in the
//! quotient exactly when their images agree.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::exactnum::{CyclotomicElement, RationalFunction};
use crate::linalg::rank;
use crate::permgroup::Permutation;
use crate::reps::{Quotient, RepFamily};
use crate::ykalgebra::{YAlgebra, YElement};

use super::tl::{reducer, TlReducer};
use super::{DirectSum, HMatrix, IsoContext, IsoError};

/// How one tensor factor `H_{μ_i}(q)` is treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// Reduced to `TL_{μ_i}(q)`; keys index the Jones basis.
    Tl,
    /// Kept as `H_{μ_i}(q)`; keys index `S_{μ_i}` in lexicographic order.
    Hecke,
}

/// An element of a tensor product of Temperley–Lieb and Hecke algebras,
/// keyed by one basis index per factor.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<Vec<usize>, RationalFunction>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: Vec<usize>, c: RationalFunction) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[usize]) -> Option<&RationalFunction> {
        self.terms.get(key)
    }

    pub fn add_term(&mut self, key: Vec<usize>, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.neg());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| json!({ "index": k, "coeff": c.to_text() }))
                .collect(),
        )
    }
}

/// A square matrix over a tensor algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorMatrix {
    size: usize,
    entries: Vec<TensorElement>,
}

impl TensorMatrix {
    pub fn zeros(size: usize) -> Self {
        TensorMatrix {
            size,
            entries: vec![TensorElement::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, k: usize, l: usize) -> &TensorElement {
        &self.entries[k * self.size + l]
    }

    pub fn set(&mut self, k: usize, l: usize, a: TensorElement) {
        self.entries[k * self.size + l] = a;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TensorElement::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|k| (0..self.size).all(|l| k == l || self.get(k, l).is_zero()))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.size)
                .map(|k| Value::Array((0..self.size).map(|l| self.get(k, l).to_json()).collect()))
                .collect(),
        )
    }
}

impl DirectSum<TensorMatrix> {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.blocks
                .iter()
                .map(|(mu, m)| json!({ "mu": mu.parts(), "matrix": m.to_json() }))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|(_, m)| m.is_zero())
    }
}

struct Factor {
    kind: FactorKind,
    /// 0-based offset of the block inside `{1, …, n}`.
    start: usize,
    len: usize,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, usize>,
    tl: Option<Arc<TlReducer>>,
}

impl Factor {
    fn new(kind: FactorKind, start: usize, len: usize, order: u32) -> Result<Self, IsoError> {
        let perms = Permutation::all(len);
        let perm_index = perms.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let tl = match kind {
            FactorKind::Tl => Some(reducer(len, order)?),
            FactorKind::Hecke => None,
        };
        Ok(Factor {
            kind,
            start,
            len,
            perms,
            perm_index,
            tl,
        })
    }

    fn basis_size(&self) -> usize {
        match &self.tl {
            Some(r) => r.len(),
            None => self.perms.len(),
        }
    }

    /// The restriction of `x ∈ S_μ` to this block, renumbered from 1.
    fn restrict(&self, x: &Permutation) -> Permutation {
        let line: Vec<usize> = (1..=self.len).map(|j| x.apply(self.start + j) - self.start).collect();
        Permutation::from_one_line(&line).expect("x lies in the Young subgroup")
    }

    /// Nonzero `(key, coefficient)` pairs of the image of `G_w`, `w ∈ S_len`.
    fn image(&self, w: &Permutation, order: u32) -> Vec<(usize, RationalFunction)> {
        let wi = self.perm_index[w];
        match &self.tl {
            Some(r) => r
                .coords(wi)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(b, c)| (b, c.clone()))
                .collect(),
            None => vec![(wi, RationalFunction::one(order))],
        }
    }

    /// The permutation `w` with `G_w` the basis element `key`.
    fn basis_perm(&self, key: usize) -> Option<&Permutation> {
        match &self.tl {
            Some(r) => (key < r.len()).then(|| r.pair_perm(key)),
            None => self.perms.get(key),
        }
    }
}

struct QBlock {
    size: usize,
    factors: Vec<Factor>,
}

/// A basis element `b_1 ⋯ b_d M_{k,l}` of one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLabel {
    pub block: usize,
    pub key: Vec<usize>,
    pub k: usize,
    pub l: usize,
}

/// The isomorphism for one quotient of one `Y_{d,n}(q)`.
pub struct QuotientIso {
    which: Quotient,
    iso: IsoContext,
    blocks: Vec<QBlock>,
}

impl QuotientIso {
    pub fn new(y: &Arc<YAlgebra>, which: Quotient) -> Result<Self, IsoError> {
        let iso = IsoContext::new(y)?;
        let order = y.order();
        let blocks = iso
            .blocks()
            .iter()
            .map(|b| {
                let mu = b.mu();
                let starts = mu.block_starts();
                let factors = mu
                    .parts()
                    .iter()
                    .zip(&starts)
                    .enumerate()
                    .map(|(i, (&len, &start))| {
                        let kind = match which {
                            Quotient::Ftl => FactorKind::Tl,
                            Quotient::Ctl if i == 0 => FactorKind::Tl,
                            Quotient::Ctl => FactorKind::Hecke,
                        };
                        Factor::new(kind, start - 1, len, order)
                    })
                    .collect::<Result<_, _>>()?;
                Ok(QBlock {
                    size: b.size(),
                    factors,
                })
            })
            .collect::<Result<_, IsoError>>()?;
        Ok(QuotientIso { which, iso, blocks })
    }

    pub fn which(&self) -> Quotient {
        self.which
    }

    pub fn iso(&self) -> &IsoContext {
        &self.iso
    }

    pub fn factor_kinds(&self, block: usize) -> Vec<FactorKind> {
        self.blocks[block].factors.iter().map(|f| f.kind).collect()
    }

    fn order(&self) -> u32 {
        self.iso.algebra().order()
    }

    /// `ρ^μ` (or `ρ_1 ⊗ id`) on one entry, an element of `H^μ(q) ⊂ H_n(q)`.
    pub fn reduce_entry(&self, block: usize, h: &YElement) -> Result<TensorElement, IsoError> {
        let qb = &self.blocks[block];
        let alg = h.algebra();
        let mu = self.iso.blocks()[block].mu();
        let mut out = TensorElement::zero();
        for (key, c) in h.raw_terms() {
            let x = alg.perm(alg.split_key(*key).1);
            if !mu.in_young_subgroup(x) {
                return Err(IsoError::NotInYoungSubgroup(x.clone(), mu.clone()));
            }
            let images: Vec<_> = qb
                .factors
                .iter()
                .map(|f| f.image(&f.restrict(x), self.order()))
                .collect();
            for combo in images.iter().map(|v| v.iter()).multi_cartesian_product() {
                let coeff = combo.iter().fold(c.clone(), |acc, (_, v)| &acc * v);
                out.add_term(combo.iter().map(|(k, _)| *k).collect(), coeff);
            }
        }
        Ok(out)
    }

    /// The section `TL^μ(q) → H^μ(q)` sending each basis element `b` to
    /// `G_w` for the reduced word of `b`.
    pub fn lift_entry(&self, block: usize, a: &TensorElement) -> Result<YElement, IsoError> {
        let qb = &self.blocks[block];
        let h = self.iso.hecke();
        let mut terms = Vec::with_capacity(a.terms.len());
        for (key, c) in &a.terms {
            if key.len() != qb.factors.len() {
                return Err(IsoError::TensorKey(key.clone()));
            }
            let mut line = vec![0; h.n()];
            for (f, &b) in qb.factors.iter().zip(key) {
                let w = f.basis_perm(b).ok_or_else(|| IsoError::TensorKey(key.clone()))?;
                for j in 1..=f.len {
                    line[f.start + j - 1] = f.start + w.apply(j);
                }
            }
            let x = Permutation::from_one_line(&line).expect("block permutations assemble");
            terms.push((h.key(0, h.perm_index(&x)), c.clone()));
        }
        Ok(h.from_terms(terms))
    }

    pub fn reduce_matrix(&self, block: usize, a: &HMatrix) -> Result<TensorMatrix, IsoError> {
        let s = a.size();
        let mut out = TensorMatrix::zeros(s);
        for k in 0..s {
            for l in 0..s {
                out.set(k, l, self.reduce_entry(block, a.get(k, l))?);
            }
        }
        Ok(out)
    }

    pub fn lift_matrix(&self, block: usize, a: &TensorMatrix) -> Result<HMatrix, IsoError> {
        let s = a.size();
        let h = self.iso.hecke();
        let mut out = HMatrix::zeros(h, s);
        for k in 0..s {
            for l in 0..s {
                out.set(k, l, self.lift_entry(block, a.get(k, l))?);
            }
        }
        Ok(out)
    }

    /// The image of `x` in every block: `ρ^μ ∘ Ψ_μ` (FTL) or
    /// `(ρ_1 ⊗ id) ∘ Ψ_μ` (CTL).
    pub fn psi(&self, x: &YElement) -> Result<DirectSum<TensorMatrix>, IsoError> {
        let blocks = self
            .iso
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, b)| Ok((b.mu().clone(), self.reduce_matrix(i, &b.psi(x)?)?)))
            .collect::<Result<_, IsoError>>()?;
        Ok(DirectSum { blocks })
    }

    /// A representative in `Y_{d,n}(q)` of the quotient element with image `a`.
    pub fn phi(&self, a: &DirectSum<TensorMatrix>) -> Result<YElement, IsoError> {
        self.check(a)?;
        let mut out = self.iso.algebra().zero();
        for (i, (b, (_, m))) in self.iso.blocks().iter().zip(&a.blocks).enumerate() {
            if m.size() != b.size() {
                return Err(IsoError::BlockSize {
                    mu: b.mu().clone(),
                    got: m.size(),
                    expected: b.size(),
                });
            }
            if !m.is_zero() {
                out = out.add(&b.phi(&self.lift_matrix(i, m)?)?);
            }
        }
        Ok(out)
    }

    fn check(&self, a: &DirectSum<TensorMatrix>) -> Result<(), IsoError> {
        let ok = a.blocks.len() == self.blocks.len()
            && self.iso.blocks().iter().zip(&a.blocks).all(|(b, (mu, _))| b.mu() == mu);
        if ok {
            Ok(())
        } else {
            Err(IsoError::BlockMismatch {
                d: self.iso.algebra().d(),
                n: self.iso.algebra().n(),
            })
        }
    }

    /// Multiplication on the matrix side: entries are lifted, multiplied
    /// in `H^μ(q)` and reduced again.
    pub fn mul(&self, a: &DirectSum<TensorMatrix>, b: &DirectSum<TensorMatrix>) -> Result<DirectSum<TensorMatrix>, IsoError> {
        self.check(a)?;
        self.check(b)?;
        let blocks = a
            .blocks
            .iter()
            .zip(&b.blocks)
            .enumerate()
            .map(|(i, ((mu, x), (_, y)))| {
                let prod = self.lift_matrix(i, x)?.mul(&self.lift_matrix(i, y)?);
                Ok((mu.clone(), self.reduce_matrix(i, &prod)?))
            })
            .collect::<Result<_, IsoError>>()?;
        Ok(DirectSum { blocks })
    }

    pub fn zero(&self) -> DirectSum<TensorMatrix> {
        DirectSum {
            blocks: self
                .iso
                .blocks()
                .iter()
                .map(|b| (b.mu().clone(), TensorMatrix::zeros(b.size())))
                .collect(),
        }
    }

    /// All `(μ, b_1, …, b_d, k, l)` in that nesting order.
    pub fn basis_labels(&self) -> Vec<BasisLabel> {
        let mut out = Vec::new();
        for (i, qb) in self.blocks.iter().enumerate() {
            for key in qb.factors.iter().map(|f| 0..f.basis_size()).multi_cartesian_product() {
                for k in 0..qb.size {
                    for l in 0..qb.size {
                        out.push(BasisLabel {
                            block: i,
                            key: key.clone(),
                            k,
                            l,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn basis_element(&self, label: &BasisLabel) -> DirectSum<TensorMatrix> {
        let mut out = self.zero();
        out.blocks[label.block]
            .1
            .set(label.k, label.l, TensorElement::term(label.key.clone(), RationalFunction::one(self.order())));
        out
    }

    pub fn basis(&self) -> Vec<DirectSum<TensorMatrix>> {
        self.basis_labels().iter().map(|l| self.basis_element(l)).collect()
    }
}

fn quotient_iso(x: &YElement, which: Quotient) -> Result<QuotientIso, IsoError> {
    QuotientIso::new(x.algebra(), which)
}

pub fn ftl_psi(x: &YElement) -> Result<DirectSum<TensorMatrix>, IsoError> {
    quotient_iso(x, Quotient::Ftl)?.psi(x)
}

pub fn ftl_phi(y: &Arc<YAlgebra>, a: &DirectSum<TensorMatrix>) -> Result<YElement, IsoError> {
    QuotientIso::new(y, Quotient::Ftl)?.phi(a)
}

pub fn ctl_psi(x: &YElement) -> Result<DirectSum<TensorMatrix>, IsoError> {
    quotient_iso(x, Quotient::Ctl)?.psi(x)
}

pub fn ctl_phi(y: &Arc<YAlgebra>, a: &DirectSum<TensorMatrix>) -> Result<YElement, IsoError> {
    QuotientIso::new(y, Quotient::Ctl)?.phi(a)
}

pub fn ftl_basis(d: usize, n: usize) -> Result<Vec<DirectSum<TensorMatrix>>, IsoError> {
    Ok(QuotientIso::new(&YAlgebra::new(d, n)?, Quotient::Ftl)?.basis())
}

pub fn ctl_basis(d: usize, n: usize) -> Result<Vec<DirectSum<TensorMatrix>>, IsoError> {
    Ok(QuotientIso::new(&YAlgebra::new(d, n)?, Quotient::Ctl)?.basis())
}

/// Rank of the basis images `φ(b)` acting on the irreducibles that factor
/// through the quotient, with `q` specialised to `q_value`. Equal to the
/// basis size exactly when the images are independent there, which
/// implies independence over `Q(ζ_d)(q)`.
pub fn basis_rank(iso: &QuotientIso, q_value: i64) -> Result<usize, IsoError> {
    let y = iso.iso().algebra();
    let family = RepFamily::get(y.d(), y.n(), y.order());
    let modules: Vec<_> = family.modules().iter().filter(|m| iso.which().admits(m.shape())).collect();
    let q = CyclotomicElement::from_int(y.order(), q_value);
    let rows = iso
        .basis()
        .iter()
        .map(|b| {
            let x = iso.phi(b)?;
            let mut row = Vec::new();
            for m in &modules {
                for e in m.rep_element(&x)?.entries() {
                    row.push(e.specialize_q(&q)?);
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, IsoError>>()?;
    Ok(rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{dim_ctl, dim_ftl};

    #[test]
    fn basis_sizes_match_dimensions() {
        for (d, n) in [(1, 3), (2, 2), (2, 3), (3, 3)] {
            assert_eq!(ftl_basis(d, n).unwrap().len() as u128, dim_ftl(d, n));
            assert_eq!(ctl_basis(d, n).unwrap().len() as u128, dim_ctl(d, n));
        }
        assert_eq!(ftl_basis(1, 3).unwrap().len(), 5);
    }

    #[test]
    fn generators_are_killed() {
        let y = YAlgebra::new(2, 3).unwrap();
        assert!(ftl_psi(&y.ftl_generator().unwrap()).unwrap().is_zero());
        assert!(ctl_psi(&y.ctl_generator().unwrap()).unwrap().is_zero());
    }

    #[test]
    fn psi_after_phi_is_identity_on_basis() {
        let y = YAlgebra::new(2, 3).unwrap();
        for which in [Quotient::Ftl, Quotient::Ctl] {
            let iso = QuotientIso::new(&y, which).unwrap();
            for b in iso.basis() {
                assert_eq!(iso.psi(&iso.phi(&b).unwrap()).unwrap(), b);
            }
        }
    }
}
