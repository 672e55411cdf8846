//! Explicit isomorphisms from `Y_{d,n}(q)` onto `⊕_μ Mat_{m_μ}(H^μ(q))`,
//! where `μ` runs over compositions of `n` with `d` parts and `H^μ(q)` is the
//! Hecke algebra of the Young subgroup `S_μ`, and the induced isomorphisms
//! for the quotients `FTL_{d,n}(q)` and `CTL_{d,n}(q)`.
//!
//! Matrix indices `k, l` are 0-based here; `k` labels the coset
//! representative `π_{μ,k}` in the order of [`CosetSystem`].

mod quotients;
mod tl;

use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::exactnum::{CyclotomicElement, ExactError, LaurentPolynomial, RationalFunction};
use crate::permgroup::{compositions, Composition, CosetSystem, Permutation};
use crate::reps::RepError;
use crate::ykalgebra::{YAlgebra, YElement, YError};

pub use quotients::{
    basis_rank, ctl_basis, ctl_phi, ctl_psi, ftl_basis, ftl_phi, ftl_psi, BasisLabel, FactorKind, QuotientIso,
    TensorElement, TensorMatrix,
};
pub use tl::{reducer, rho_reduce, TlReducer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("permutation {0:?} is not in the Young subgroup of {1:?}")]
    NotInYoungSubgroup(Permutation, Composition),
    #[error("matrix of size {got} does not fit block {mu:?} of size {expected}")]
    BlockSize { mu: Composition, got: usize, expected: usize },
    #[error("direct sum does not match the compositions of Y_{{{d},{n}}}")]
    BlockMismatch { d: usize, n: usize },
    #[error("expected an element of a Hecke algebra, got framing order {0}")]
    NotHecke(usize),
    #[error("the Jones basis images for {0} strands are not independent")]
    SingularReduction(usize),
    #[error("tensor key {0:?} is out of range")]
    TensorKey(Vec<usize>),
    #[error(transparent)]
    Algebra(#[from] YError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// The data of `Ψ̃_μ(E_{χ_k} g_w) = q^{h/2} G_x M_{k,l}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTilde {
    pub l: usize,
    /// `h`, the exponent of `q^{1/2}`.
    pub half_exp: i64,
    pub x: Permutation,
}

/// `q^{h/2}` as an integral exponent, or `NonIntegralExponent`.
fn integral_exponent(order: u32, half: i64) -> Result<i64, IsoError> {
    let p = LaurentPolynomial::q_half_pow(order, half).integrality_check()?;
    Ok(p.as_monomial().map(|(_, e)| e).expect("a power of q is a monomial"))
}

/// A square matrix with entries in `H_n(q)` (scalars `Q(ζ_d)(q)`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HMatrix {
    size: usize,
    entries: Vec<YElement>,
}

impl HMatrix {
    pub fn zeros(h: &Arc<YAlgebra>, size: usize) -> Self {
        HMatrix {
            size,
            entries: vec![h.zero(); size * size],
        }
    }

    pub fn identity(h: &Arc<YAlgebra>, size: usize) -> Self {
        let mut m = Self::zeros(h, size);
        for k in 0..size {
            m.entries[k * size + k] = h.unit();
        }
        m
    }

    /// `a · M_{k,l}`.
    pub fn unit_matrix(h: &Arc<YAlgebra>, size: usize, k: usize, l: usize, a: YElement) -> Self {
        let mut m = Self::zeros(h, size);
        m.entries[k * size + l] = a;
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, k: usize, l: usize) -> &YElement {
        &self.entries[k * self.size + l]
    }

    pub fn set(&mut self, k: usize, l: usize, a: YElement) {
        self.entries[k * self.size + l] = a;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(YElement::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|k| (0..self.size).all(|l| k == l || self.get(k, l).is_zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        HMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        HMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let s = self.size;
        let mut entries = Vec::with_capacity(s * s);
        for k in 0..s {
            for l in 0..s {
                let h = self.get(k, l).algebra().clone();
                let mut acc = h.zero();
                for j in 0..s {
                    let (a, b) = (self.get(k, j), other.get(j, l));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                entries.push(acc);
            }
        }
        HMatrix { size: s, entries }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.size)
                .map(|k| Value::Array((0..self.size).map(|l| self.get(k, l).to_json()).collect()))
                .collect(),
        )
    }
}

/// An element of a direct sum of matrix algebras, one block per composition
/// in the order of [`compositions`]. Every block is present.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectSum<M> {
    pub blocks: Vec<(Composition, M)>,
}

impl DirectSum<HMatrix> {
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

/// Per-block tables: `Ψ̃` for every `(k, w)` and the matching exponents.
pub struct Block {
    mu: Composition,
    sys: CosetSystem,
    chars: Vec<Vec<usize>>,
    rep_len: Vec<i64>,
    /// `psi[k][w]` = `(l, index of x in H_n, total half exponent after U)`.
    psi: Vec<Vec<(usize, usize, i64)>>,
    y: Arc<YAlgebra>,
    h: Arc<YAlgebra>,
}

impl Block {
    fn new(y: &Arc<YAlgebra>, h: &Arc<YAlgebra>, mu: &Composition) -> Self {
        let sys = CosetSystem::new(mu);
        let m = sys.len();
        let chars = (0..m).map(|k| sys.character(k)).collect();
        let rep_len: Vec<i64> = sys.reps().iter().map(|p| p.length() as i64).collect();
        let mut block = Block {
            mu: mu.clone(),
            sys,
            chars,
            rep_len,
            psi: Vec::new(),
            y: y.clone(),
            h: h.clone(),
        };
        block.psi = (0..m)
            .map(|k| {
                y.perms()
                    .iter()
                    .map(|w| {
                        let t = block.psi_tilde(k, w);
                        let half = t.half_exp + block.rep_len[k] - block.rep_len[t.l];
                        (t.l, h.perm_index(&t.x), half)
                    })
                    .collect()
            })
            .collect();
        block
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn cosets(&self) -> &CosetSystem {
        &self.sys
    }

    /// `m_μ`, the number of cosets.
    pub fn size(&self) -> usize {
        self.sys.len()
    }

    /// The character `χ_k` as exponents of `ζ_d`.
    pub fn character(&self, k: usize) -> &[usize] {
        &self.chars[k]
    }

    /// `Ψ̃_μ(E_{χ_k} g_w)`: `l` is the index with `w(χ_l) = χ_k`, and
    /// `x = π_k^{-1} w π_l ∈ S_μ` carries the half exponent
    /// `ℓ(w) - ℓ(x)`.
    pub fn psi_tilde(&self, k: usize, w: &Permutation) -> PsiTilde {
        let pk = self.sys.rep(k);
        let l = self.sys.coset_of(&w.inverse().compose(pk));
        let x = pk.inverse().compose(w).compose(self.sys.rep(l));
        debug_assert!(self.mu.in_young_subgroup(&x));
        PsiTilde {
            l,
            half_exp: w.length() as i64 - x.length() as i64,
            x,
        }
    }

    /// The inverse of [`Block::psi_tilde`] on `G_x M_{k,l}`: returns
    /// `(h, v)` with `Φ̃_μ(G_x M_{k,l}) = q^{h/2} E_{χ_k} g_v E_{χ_l}`,
    /// where `v = π_k x π_l^{-1}` and `h = ℓ(x) - ℓ(v)`.
    pub fn phi_tilde(&self, k: usize, l: usize, x: &Permutation) -> (i64, Permutation) {
        let v = self.sys.rep(k).compose(x).compose(&self.sys.rep(l).inverse());
        (x.length() as i64 - v.length() as i64, v)
    }

    /// The exponent of the inverse map written with `ℓ(π_k^{-1} x π_l)` in
    /// place of `ℓ(π_k x π_l^{-1})`. It agrees with [`Block::phi_tilde`]
    /// only when the two lengths coincide and does not invert `Ψ̃_μ` in
    /// general; kept so the discrepancy stays testable.
    pub fn phi_tilde_as_printed(&self, k: usize, l: usize, x: &Permutation) -> (i64, Permutation) {
        let v = self.sys.rep(k).compose(x).compose(&self.sys.rep(l).inverse());
        let other = self.sys.rep(k).inverse().compose(x).compose(self.sys.rep(l));
        (x.length() as i64 - other.length() as i64, v)
    }

    fn zetas(&self) -> Vec<CyclotomicElement> {
        let d = self.y.d() as u32;
        (0..d as i64)
            .map(|e| CyclotomicElement::zeta_pow(d, e).lift_to(self.y.order()).unwrap())
            .collect()
    }

    /// `Ψ_μ(E_μ x) = U_μ Ψ̃_μ(E_μ x) U_μ^{-1}` with
    /// `U_μ = Σ_k q^{ℓ(π_k)/2} M_{k,k}`. Each `E_{χ_k} t^a g_w` is first
    /// rewritten as `χ_k(t^a) E_{χ_k} g_w`.
    pub fn psi(&self, x: &YElement) -> Result<HMatrix, IsoError> {
        let xa = x.algebra();
        if (xa.d(), xa.n(), xa.order()) != (self.y.d(), self.y.n(), self.y.order()) {
            return Err(YError::ParamsMismatch.into());
        }
        let m = self.size();
        let d = self.y.d();
        let order = self.y.order();
        let zetas = self.zetas();
        let mut acc: Vec<Vec<(usize, RationalFunction)>> = vec![Vec::new(); m * m];
        for (key, c) in x.raw_terms() {
            let (tcode, w) = self.y.split_key(*key);
            let a = self.y.decode_t(tcode);
            for k in 0..m {
                let e: usize = a.iter().zip(&self.chars[k]).map(|(x, c)| x * c).sum();
                let (l, xi, half) = self.psi[k][w];
                let qe = integral_exponent(order, half)?;
                acc[k * m + l].push((xi, c.mul_monomial(&zetas[e % d], qe)));
            }
        }
        Ok(HMatrix {
            size: m,
            entries: acc.into_iter().map(|t| self.h.from_terms(t)).collect(),
        })
    }

    /// `Φ_μ(A) = Φ̃_μ(U_μ^{-1} A U_μ)`. Since `g_v E_{χ_l} = E_{χ_k} g_v`
    /// for `v(χ_l) = χ_k`, each `G_x M_{k,l}` maps to a multiple of
    /// `E_{χ_k} g_v`.
    pub fn phi(&self, a: &HMatrix) -> Result<YElement, IsoError> {
        self.phi_with(a, Self::phi_tilde)
    }

    /// [`Block::phi`] built on [`Block::phi_tilde_as_printed`].
    pub fn phi_as_printed(&self, a: &HMatrix) -> Result<YElement, IsoError> {
        self.phi_with(a, Self::phi_tilde_as_printed)
    }

    fn phi_with(
        &self,
        a: &HMatrix,
        tilde: impl Fn(&Self, usize, usize, &Permutation) -> (i64, Permutation),
    ) -> Result<YElement, IsoError> {
        let m = self.size();
        if a.size() != m {
            return Err(IsoError::BlockSize {
                mu: self.mu.clone(),
                got: a.size(),
                expected: m,
            });
        }
        let d = self.y.d();
        let order = self.y.order();
        let n = self.y.n();
        let zetas = self.zetas();
        let scale = crate::exactnum::rat(1, (d as i64).pow(n as u32));
        let mut terms = Vec::new();
        for k in 0..m {
            for l in 0..m {
                let entry = a.get(k, l);
                for (key, c) in entry.raw_terms() {
                    let (_, xi) = entry.algebra().split_key(*key);
                    let x = entry.algebra().perm(xi);
                    if !self.mu.in_young_subgroup(x) {
                        return Err(IsoError::NotInYoungSubgroup(x.clone(), self.mu.clone()));
                    }
                    let (half, v) = tilde(self, k, l, x);
                    let qe = integral_exponent(order, half + self.rep_len[l] - self.rep_len[k])?;
                    let vi = self.y.perm_index(&v);
                    let base = c.mul_monomial(&CyclotomicElement::from_rational(order, scale.clone()), qe);
                    for code in 0..self.y.num_tcodes() {
                        let t = self.y.decode_t(code);
                        let e: usize = t.iter().zip(&self.chars[k]).map(|(x, c)| x * c).sum();
                        let z = &zetas[(d - e % d) % d];
                        terms.push((self.y.key(code, vi), base.scale(z)));
                    }
                }
            }
        }
        Ok(self.y.from_terms(terms))
    }
}

/// All blocks of one `Y_{d,n}(q)` together with the Hecke algebra
/// `H_n(q)` over `Q(ζ_d)(q)` that hosts every `H^μ(q)`.
pub struct IsoContext {
    y: Arc<YAlgebra>,
    h: Arc<YAlgebra>,
    blocks: Vec<Block>,
}

impl IsoContext {
    pub fn new(y: &Arc<YAlgebra>) -> Result<Self, IsoError> {
        let h = YAlgebra::with_coeff_order(1, y.n(), y.order())?;
        let blocks = compositions(y.d(), y.n())
            .iter()
            .map(|mu| Block::new(y, &h, mu))
            .collect();
        Ok(IsoContext { y: y.clone(), h, blocks })
    }

    pub fn algebra(&self) -> &Arc<YAlgebra> {
        &self.y
    }

    /// The Hecke algebra `H_n(q)` containing each `H^μ(q)`.
    pub fn hecke(&self) -> &Arc<YAlgebra> {
        &self.h
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, mu: &Composition) -> Option<&Block> {
        self.blocks.iter().find(|b| &b.mu == mu)
    }

    /// `Ψ_n = ⊕_μ Ψ_μ`.
    pub fn psi_n(&self, x: &YElement) -> Result<DirectSum<HMatrix>, IsoError> {
        Ok(DirectSum {
            blocks: self
                .blocks
                .iter()
                .map(|b| Ok((b.mu.clone(), b.psi(x)?)))
                .collect::<Result<_, IsoError>>()?,
        })
    }

    /// `Φ_n = Σ_μ Φ_μ`.
    pub fn phi_n(&self, a: &DirectSum<HMatrix>) -> Result<YElement, IsoError> {
        self.check_blocks(&a.blocks)?;
        let mut out = self.y.zero();
        for (b, (_, m)) in self.blocks.iter().zip(&a.blocks) {
            out = out.add(&b.phi(m)?);
        }
        Ok(out)
    }

    fn check_blocks<M>(&self, blocks: &[(Composition, M)]) -> Result<(), IsoError> {
        if blocks.len() != self.blocks.len() || self.blocks.iter().zip(blocks).any(|(b, (mu, _))| &b.mu != mu) {
            return Err(IsoError::BlockMismatch {
                d: self.y.d(),
                n: self.y.n(),
            });
        }
        Ok(())
    }

    /// The identity of every block.
    pub fn identity(&self) -> DirectSum<HMatrix> {
        DirectSum {
            blocks: self
                .blocks
                .iter()
                .map(|b| (b.mu.clone(), HMatrix::identity(&self.h, b.size())))
                .collect(),
        }
    }
}
