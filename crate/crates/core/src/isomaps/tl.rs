//! The reduction `ρ : H_m(q) → TL_m(q)` in the Jones basis.
//!
//! `TL_m(q)` acts faithfully on the sum of the two-column irreducibles of
//! `H_m(q)`, whose total dimension is `C_m`. Flattening the matrices of the
//! Jones basis gives an invertible `C_m × C_m` system, solved once per `m`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exactnum::RationalFunction;
use crate::linalg::invert;
use crate::permgroup::Permutation;
use crate::reps::RepModule;
use crate::tableaux::{enumerate_d_partitions, jones_pairs, JonesMode, JonesPair};
use crate::ykalgebra::YElement;

use super::IsoError;

/// Cached reduction data for one number of strands.
pub struct TlReducer {
    m: usize,
    order: u32,
    pairs: Vec<JonesPair>,
    pair_perms: Vec<Permutation>,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, usize>,
    /// `table[w]` = Jones coordinates of `G_w`, `w` in lexicographic order.
    table: Vec<Vec<RationalFunction>>,
}

impl TlReducer {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The Jones basis `𝔗_m` in canonical order.
    pub fn pairs(&self) -> &[JonesPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The permutation whose `G_w` is the Jones basis element `b`. Jones
    /// words are reduced, so `G_{word} = G_w`.
    pub fn pair_perm(&self, b: usize) -> &Permutation {
        &self.pair_perms[b]
    }

    /// All of `S_m` in lexicographic order.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm_index(&self, w: &Permutation) -> usize {
        self.perm_index[w]
    }

    /// Jones coordinates of `G_w`.
    pub fn coords(&self, w: usize) -> &[RationalFunction] {
        &self.table[w]
    }

    fn build(m: usize) -> Result<Self, IsoError> {
        let pairs = jones_pairs(m, JonesMode::Tl);
        let perms = Permutation::all(m);
        let perm_index: HashMap<Permutation, usize> =
            perms.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let pair_perms: Vec<Permutation> = pairs
            .iter()
            .map(|p| Permutation::from_word(m, &p.word()).expect("Jones word in range"))
            .collect();
        let c = pairs.len();
        let zero = RationalFunction::zero(1);
        let one = RationalFunction::one(1);
        let table = if m < 3 {
            // the ideal is zero and the Jones words run over all of S_m
            let mut table = vec![vec![zero; c]; perms.len()];
            for (b, w) in pair_perms.iter().enumerate() {
                table[perm_index[w]][b] = one.clone();
            }
            table
        } else {
            let modules: Vec<RepModule> = enumerate_d_partitions(1, m)
                .iter()
                .filter(|s| s.ftl_admissible())
                .map(|s| RepModule::with_order(s, 1))
                .collect();
            let flatten = |w: usize| -> Vec<RationalFunction> {
                modules
                    .iter()
                    .flat_map(|md| md.g_perm_matrices()[w].entries().to_vec())
                    .collect()
            };
            let columns: Vec<Vec<RationalFunction>> = pair_perms.iter().map(|w| flatten(perm_index[w])).collect();
            if columns.iter().any(|col| col.len() != c) {
                return Err(IsoError::SingularReduction(m));
            }
            let rows: Vec<Vec<RationalFunction>> =
                (0..c).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
            let inv = invert(&rows).ok_or(IsoError::SingularReduction(m))?;
            (0..perms.len())
                .map(|w| {
                    let v = flatten(w);
                    inv.iter()
                        .map(|row| {
                            row.iter()
                                .zip(&v)
                                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                                .fold(RationalFunction::zero(1), |acc, (a, b)| &acc + &(a * b))
                        })
                        .collect()
                })
                .collect()
        };
        Ok(TlReducer {
            m,
            order: 1,
            pairs,
            pair_perms,
            perms,
            perm_index,
            table,
        })
    }

    fn lifted(&self, order: u32) -> Result<Self, IsoError> {
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|c| c.lift_to(order)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TlReducer {
            m: self.m,
            order,
            pairs: self.pairs.clone(),
            pair_perms: self.pair_perms.clone(),
            perms: self.perms.clone(),
            perm_index: self.perm_index.clone(),
            table,
        })
    }
}

/// The reduction data for `m` strands with scalars in `Q(ζ_order)(q)`,
/// built once and shared.
pub fn reducer(m: usize, order: u32) -> Result<Arc<TlReducer>, IsoError> {
    type Cache = Mutex<HashMap<(usize, u32), Arc<TlReducer>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().unwrap().get(&(m, order)) {
        return Ok(r.clone());
    }
    let base = match cache.lock().unwrap().get(&(m, 1)) {
        Some(r) => r.clone(),
        None => Arc::new(TlReducer::build(m)?),
    };
    let r = if order == 1 { base.clone() } else { Arc::new(base.lifted(order)?) };
    let mut guard = cache.lock().unwrap();
    guard.entry((m, 1)).or_insert(base);
    Ok(guard.entry((m, order)).or_insert(r).clone())
}

/// The image in `TL_m(q)` of an element of `H_m(q)`, as coordinates over
/// the Jones basis `𝔗_m`.
pub fn rho_reduce(h: &YElement) -> Result<Vec<RationalFunction>, IsoError> {
    let alg = h.algebra();
    if alg.d() != 1 {
        return Err(IsoError::NotHecke(alg.d()));
    }
    let r = reducer(alg.n(), alg.order())?;
    let mut out = vec![RationalFunction::zero(alg.order()); r.len()];
    for (key, c) in h.raw_terms() {
        let (_, w) = alg.split_key(*key);
        for (o, x) in out.iter_mut().zip(r.coords(w)) {
            if !x.is_zero() {
                *o = &*o + &(c * x);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ykalgebra::YAlgebra;

    #[test]
    fn jones_basis_reduces_to_itself() {
        for m in 0..=4 {
            let r = reducer(m, 1).unwrap();
            for b in 0..r.len() {
                let w = r.perm_index(r.pair_perm(b));
                let coords = r.coords(w);
                for (j, c) in coords.iter().enumerate() {
                    assert_eq!(c.is_one(), j == b);
                    assert!(c.is_one() || c.is_zero());
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let h = YAlgebra::new(1, 3).unwrap();
        let unit = rho_reduce(&h.unit()).unwrap();
        assert!(unit[0].is_one() && unit[1..].iter().all(RationalFunction::is_zero));
        let g12 = h.g_pair_sum(1).unwrap();
        assert!(rho_reduce(&g12).unwrap().iter().all(RationalFunction::is_zero));
        // coordinates stay Laurent polynomials
        let r = reducer(4, 1).unwrap();
        assert!((0..24).all(|w| r.coords(w).iter().all(|c| c.as_laurent().is_some())));
    }
}
