//! The irreducible representations `V_λ` of `Y_{d,n}(q)` on standard
//! d-tableaux, and the quotient tests built on them.
//!
//! Matrices act on column vectors: column `T` of `rep_g(i)` is the image of
//! `v_T`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::exactnum::{CyclotomicElement, RationalFunction};
use crate::linalg::RfMatrix;
use crate::permgroup::Permutation;
use crate::tableaux::{enumerate_d_partitions, standard_tableaux, DPartition, DTableau};
use crate::ykalgebra::{YAlgebra, YElement, YError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("element of Y_{{{0},{1}}} cannot act on a module for Y_{{{2},{3}}}")]
    ParamsMismatch(usize, usize, usize, usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error(transparent)]
    Algebra(#[from] YError),
}

/// Which Temperley–Lieb type quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quotient {
    Ftl,
    Ctl,
}

impl Quotient {
    /// The combinatorial admissibility predicate.
    pub fn admits(self, shape: &DPartition) -> bool {
        match self {
            Quotient::Ftl => shape.ftl_admissible(),
            Quotient::Ctl => shape.ctl_admissible(),
        }
    }

    pub fn generator(self, alg: &Arc<YAlgebra>) -> Result<YElement, YError> {
        match self {
            Quotient::Ftl => alg.ftl_generator(),
            Quotient::Ctl => alg.ctl_generator(),
        }
    }
}

/// `V_λ` with its basis of standard d-tableaux in canonical order.
pub struct RepModule {
    shape: DPartition,
    n: usize,
    order: u32,
    basis: Vec<DTableau>,
    index: HashMap<DTableau, usize>,
    /// Matrices of `g_w` for all `w` in lexicographic order.
    g_perm: OnceLock<Vec<RfMatrix>>,
}

impl RepModule {
    /// Scalars in `Q(ζ_d)(q)` with `d` the number of components.
    pub fn new(shape: &DPartition) -> Self {
        Self::with_order(shape, shape.d() as u32)
    }

    /// Scalars in `Q(ζ_order)(q)`; `d` must divide `order`.
    pub fn with_order(shape: &DPartition, order: u32) -> Self {
        assert_eq!(order as usize % shape.d(), 0, "d must divide the scalar order");
        let basis = standard_tableaux(shape);
        let index = basis.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        RepModule {
            shape: shape.clone(),
            n: shape.size(),
            order,
            basis,
            index,
            g_perm: OnceLock::new(),
        }
    }

    pub fn shape(&self) -> &DPartition {
        &self.shape
    }

    pub fn basis(&self) -> &[DTableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn d(&self) -> usize {
        self.shape.d()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn xi(&self, p: usize) -> CyclotomicElement {
        CyclotomicElement::zeta_pow(self.d() as u32, p as i64 - 1)
            .lift_to(self.order)
            .expect("order divides")
    }

    /// `t_j` acts diagonally by `ξ_{p(T|j)}` with `ξ_m = ζ_d^{m-1}`.
    pub fn rep_t(&self, j: usize) -> Result<RfMatrix, RepError> {
        if j == 0 || j > self.n {
            return Err(RepError::IndexOutOfRange(j));
        }
        let mut m = RfMatrix::zeros(self.order, self.dim(), self.dim());
        for (k, t) in self.basis.iter().enumerate() {
            m.set(k, k, RationalFunction::constant(self.xi(t.position(j))));
        }
        Ok(m)
    }

    pub fn rep_g(&self, i: usize) -> Result<RfMatrix, RepError> {
        if i == 0 || i >= self.n {
            return Err(RepError::IndexOutOfRange(i));
        }
        let order = self.order;
        let q = RationalFunction::q(order);
        let mut m = RfMatrix::zeros(order, self.dim(), self.dim());
        for (k, t) in self.basis.iter().enumerate() {
            let (pi, pj) = (t.position(i), t.position(i + 1));
            let swapped = t.apply_transposition(i).map(|s| self.index[&s]);
            if pi > pj {
                m.set(swapped.expect("different components"), k, RationalFunction::one(order));
            } else if pi < pj {
                m.set(swapped.expect("different components"), k, q.clone());
            } else {
                let ci = RationalFunction::q_pow(order, t.content_exponent(i));
                let cj = RationalFunction::q_pow(order, t.content_exponent(i + 1));
                let den = &cj - &ci;
                let diag = (&(&q * &cj) - &cj).div(&den).expect("contents differ");
                m.set(k, k, diag);
                if let Some(s) = swapped {
                    let off = (&(&q * &cj) - &ci).div(&den).expect("contents differ");
                    m.set(s, k, off);
                }
            }
        }
        Ok(m)
    }

    /// `e_i` is the projector onto tableaux with `p_i = p_{i+1}`.
    pub fn rep_e(&self, i: usize) -> Result<RfMatrix, RepError> {
        if i == 0 || i >= self.n {
            return Err(RepError::IndexOutOfRange(i));
        }
        let mut m = RfMatrix::zeros(self.order, self.dim(), self.dim());
        for (k, t) in self.basis.iter().enumerate() {
            if t.position(i) == t.position(i + 1) {
                m.set(k, k, RationalFunction::one(self.order));
            }
        }
        Ok(m)
    }

    /// Matrices of `g_w` for every permutation in lexicographic order.
    pub fn g_perm_matrices(&self) -> &[RfMatrix] {
        self.g_perm.get_or_init(|| {
            let gens: Vec<RfMatrix> = (1..self.n).map(|i| self.rep_g(i).unwrap()).collect();
            let mut by_perm: HashMap<Permutation, RfMatrix> = HashMap::new();
            let all = Permutation::all(self.n);
            // build by increasing length so each g_w = g_{w'} g_i is one product
            let mut sorted: Vec<&Permutation> = all.iter().collect();
            sorted.sort_by_key(|w| w.length());
            for w in sorted {
                let m = match (1..self.n).find(|&i| w.has_right_descent(i)) {
                    None => RfMatrix::identity(self.order, self.dim()),
                    Some(i) => by_perm[&w.mul_simple_right(i)].mul(&gens[i - 1]),
                };
                by_perm.insert(w.clone(), m);
            }
            all.iter().map(|w| by_perm.remove(w).unwrap()).collect()
        })
    }

    /// The matrix of an arbitrary element.
    pub fn rep_element(&self, x: &YElement) -> Result<RfMatrix, RepError> {
        let alg = x.algebra();
        if alg.d() != self.d() || alg.n() != self.n || alg.order() != self.order {
            return Err(RepError::ParamsMismatch(alg.d(), alg.n(), self.d(), self.n));
        }
        let gw = self.g_perm_matrices();
        let d = self.d() as i64;
        // exponent of ζ_d contributed by t_j on each basis tableau
        let pexp: Vec<Vec<i64>> = self
            .basis
            .iter()
            .map(|t| (1..=self.n).map(|j| t.position(j) as i64 - 1).collect())
            .collect();
        let zetas: Vec<CyclotomicElement> = (0..d)
            .map(|e| CyclotomicElement::zeta_pow(d as u32, e).lift_to(self.order).unwrap())
            .collect();
        let mut factors: HashMap<usize, Vec<RationalFunction>> = HashMap::new();
        for (key, c) in x.raw_terms() {
            let (tcode, w) = alg.split_key(*key);
            let a = alg.decode_t(tcode);
            let f = factors
                .entry(w)
                .or_insert_with(|| vec![RationalFunction::zero(self.order); self.dim()]);
            for (k, p) in pexp.iter().enumerate() {
                let e: i64 = a.iter().zip(p).map(|(&aj, &pj)| aj as i64 * pj).sum();
                let z = &zetas[e.rem_euclid(d) as usize];
                f[k] = &f[k] + &c.scale(z);
            }
        }
        let mut out = RfMatrix::zeros(self.order, self.dim(), self.dim());
        let mut ws: Vec<_> = factors.into_iter().collect();
        ws.sort_by_key(|(w, _)| *w);
        for (w, f) in ws {
            out = out.add(&gw[w].scale_rows(&f));
        }
        Ok(out)
    }

    /// Whether the ideal generator acts as zero.
    pub fn kills_generator(&self, which: Quotient) -> Result<bool, RepError> {
        let alg = YAlgebra::with_coeff_order(self.d(), self.n, self.order)?;
        Ok(self.rep_element(&which.generator(&alg)?)?.is_zero())
    }
}

/// All irreducible modules of one `Y_{d,n}(q)`, cached per `(d, n, order)`.
pub struct RepFamily {
    modules: Vec<RepModule>,
}

impl RepFamily {
    pub fn get(d: usize, n: usize, order: u32) -> Arc<RepFamily> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize, u32), Arc<RepFamily>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap();
        guard
            .entry((d, n, order))
            .or_insert_with(|| {
                Arc::new(RepFamily {
                    modules: enumerate_d_partitions(d, n)
                        .iter()
                        .map(|s| RepModule::with_order(s, order))
                        .collect(),
                })
            })
            .clone()
    }

    pub fn modules(&self) -> &[RepModule] {
        &self.modules
    }
}

/// Whether `V_λ` factors through the quotient, decided both by the
/// two-column predicate and by the action of the ideal generator; the two
/// must agree.
pub fn passes_to_quotient(shape: &DPartition, which: Quotient) -> Result<bool, RepError> {
    let combinatorial = which.admits(shape);
    if shape.size() < 3 {
        // the ideal is zero
        return Ok(true);
    }
    let by_matrix = RepModule::new(shape).kills_generator(which)?;
    assert_eq!(
        combinatorial, by_matrix,
        "admissibility of {shape:?} for {which:?} disagrees with the generator action"
    );
    Ok(combinatorial)
}

/// Membership in the defining ideal of the quotient: `x` acts as zero on
/// every irreducible module that factors through the quotient.
pub fn ideal_membership(x: &YElement, which: Quotient) -> Result<bool, RepError> {
    let alg = x.algebra();
    let family = RepFamily::get(alg.d(), alg.n(), alg.order());
    for m in family.modules() {
        if which.admits(m.shape()) && !m.rep_element(x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(rows: &[Vec<usize>]) -> DPartition {
        DPartition::from_rows(rows).unwrap()
    }

    #[test]
    fn rep_t_examples() {
        let m = RepModule::new(&dp(&[vec![2, 1]]));
        assert_eq!(m.rep_t(1).unwrap(), RfMatrix::identity(1, 2));
        let m = RepModule::new(&dp(&[vec![1], vec![1]]));
        let t1 = m.rep_t(1).unwrap();
        assert!(t1.get(0, 0).is_one());
        assert_eq!(t1.get(1, 1), &RationalFunction::from_int(2, -1));
    }

    #[test]
    fn rep_g_examples() {
        let q = RationalFunction::q(1);
        let row = RepModule::new(&dp(&[vec![2]]));
        assert_eq!(row.rep_g(1).unwrap().get(0, 0), &q);
        let col = RepModule::new(&dp(&[vec![1, 1]]));
        assert_eq!(col.rep_g(1).unwrap().get(0, 0), &RationalFunction::from_int(1, -1));

        let m = RepModule::new(&dp(&[vec![1], vec![1]]));
        let g = m.rep_g(1).unwrap();
        let q2 = RationalFunction::q(2);
        let mut expected = RfMatrix::zeros(2, 2, 2);
        expected.set(0, 1, RationalFunction::one(2));
        expected.set(1, 0, q2.clone());
        assert_eq!(g, expected);
        assert_eq!(g.mul(&g), RfMatrix::identity(2, 2).scale(&q2));
    }

    #[test]
    fn rep_e_examples() {
        let m = RepModule::new(&dp(&[vec![2, 1]]));
        assert_eq!(m.rep_e(1).unwrap(), RfMatrix::identity(1, 2));
        let m = RepModule::new(&dp(&[vec![1], vec![1]]));
        assert!(m.rep_e(1).unwrap().is_zero());
    }

    #[test]
    fn rep_element_examples() {
        let y = YAlgebra::new(3, 3).unwrap();
        let m = RepModule::new(&dp(&[vec![1], vec![1], vec![1]]));
        assert_eq!(m.rep_element(&y.unit()).unwrap(), RfMatrix::identity(3, 6));
        assert!(m.rep_element(&y.ftl_generator().unwrap()).unwrap().is_zero());

        let h = YAlgebra::new(1, 3).unwrap();
        let row = RepModule::new(&dp(&[vec![3]]));
        let img = row.rep_element(&h.ftl_generator().unwrap()).unwrap();
        // Σ_w q^{ℓ(w)} over S_3
        let q = RationalFunction::q(1);
        let one = RationalFunction::one(1);
        let two = RationalFunction::from_int(1, 2);
        let expected = &(&(&one + &(&two * &q)) + &(&two * &(&q * &q))) + &(&q * &(&q * &q));
        assert_eq!(img.get(0, 0), &expected);
    }

    #[test]
    fn quotient_examples() {
        assert!(passes_to_quotient(&dp(&[vec![2, 2]]), Quotient::Ftl).unwrap());
        assert!(!passes_to_quotient(&dp(&[vec![3], vec![]]), Quotient::Ftl).unwrap());
        assert!(!passes_to_quotient(&dp(&[vec![3], vec![]]), Quotient::Ctl).unwrap());
        assert!(!passes_to_quotient(&dp(&[vec![1], vec![3]]), Quotient::Ftl).unwrap());
        assert!(passes_to_quotient(&dp(&[vec![1], vec![3]]), Quotient::Ctl).unwrap());
    }

    #[test]
    fn membership_examples() {
        let y = YAlgebra::new(2, 3).unwrap();
        assert!(ideal_membership(&y.ftl_generator().unwrap(), Quotient::Ftl).unwrap());
        assert!(!ideal_membership(&y.unit(), Quotient::Ftl).unwrap());
        assert!(!ideal_membership(&y.unit(), Quotient::Ctl).unwrap());
        assert!(ideal_membership(&y.ctl_generator().unwrap(), Quotient::Ftl).unwrap());
        assert!(ideal_membership(&y.ctl_generator().unwrap(), Quotient::Ctl).unwrap());
    }
}
