//! The symmetric group: permutations, Coxeter lengths and reduced words,
//! compositions with their Young subgroups, minimal-length left coset
//! representatives and the Deodhar case split.
//!
//! Permutations compose right to left, `(vw)(j) = v(w(j))`, so a word
//! `s_{i_1} … s_{i_r}` acts by applying `s_{i_r}` first. Under this
//! convention `s_3 s_2 s_1` has one-line notation `(4,1,2,3)`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..={1}")]
    NotAPermutation(Vec<usize>, usize),
    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },
}

/// A permutation of `{1, …, n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation `w(1), …, w(n)`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, PermError> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotAPermutation(one_line.to_vec(), n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: one_line.iter().map(|v| v - 1).collect(),
        })
    }


    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self, PermError> {
        if i == 0 || i >= n {
            return Err(PermError::GeneratorOutOfRange { index: i, n });
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// `s_{i_1} s_{i_2} … s_{i_r}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, PermError> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(PermError::GeneratorOutOfRange { index: i, n });
            }
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }


    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "permutations of different degrees");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (j, &v) in self.images.iter().enumerate() {
            inv[v] = j;
        }
        Permutation { images: inv }
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        w
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i - 1 {
                    i
                } else if v == i {
                    i - 1
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether `ℓ(s_i w) < ℓ(w)`, i.e. `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x == v).unwrap();
        pos(i) < pos(i - 1)
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// The lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (1..w.n())
                .find(|&i| w.has_left_descent(i))
                .expect("non-identity permutation has a descent");
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// All permutations of `{1, …, n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// `w(χ)(t_j) = χ(t_{w^{-1}(j)})` on a vector of character values.
pub fn act_on_character<T: Clone>(w: &Permutation, chi: &[T]) -> Vec<T> {
    assert_eq!(w.n(), chi.len(), "character length must match degree");
    let mut out = chi.to_vec();
    for (j, &v) in w.images.iter().enumerate() {
        out[v] = chi[j].clone();
    }
    out
}

/// A composition `(μ_1, …, μ_d)` of `n` into `d` non-negative parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn d(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 0-based block (part) index holding each 1-based position.
    pub fn block_of_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        for (b, &m) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(b, m));
        }
        out
    }

    /// First 1-based position of each block.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&m| {
                let s = start;
                start += m;
                s
            })
            .collect()
    }

    /// `J^μ`: the generators `s_j` lying in the Young subgroup `S_μ`.
    pub fn j_set(&self) -> Vec<usize> {
        let blocks = self.block_of_positions();
        (1..self.n()).filter(|&j| blocks[j - 1] == blocks[j]).collect()
    }

    pub fn in_young_subgroup(&self, w: &Permutation) -> bool {
        let blocks = self.block_of_positions();
        w.images.iter().enumerate().all(|(j, &v)| blocks[j] == blocks[v])
    }

    /// The staircase character: positions of block `b` get value index `b`
    /// (so `ξ_{b+1}`).
    pub fn staircase(&self) -> Vec<usize> {
        self.block_of_positions()
    }

    /// `n! / (μ_1! ⋯ μ_d!)`.
    pub fn multinomial(&self) -> u128 {
        let mut out: u128 = 1;
        let mut total = 0u128;
        for &m in &self.parts {
            for k in 1..=m as u128 {
                total += 1;
                out = out * total / k;
            }
        }
        out
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// All compositions of `n` into `d` parts, first part descending, e.g.
/// `(2,0), (1,1), (0,2)`.
pub fn compositions(d: usize, n: usize) -> Vec<Composition> {
    fn rec(d: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if d == 1 {
            prefix.push(n);
            out.push(Composition::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            rec(d - 1, n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

/// Outcome of Deodhar's lemma for `s_i π_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeodharCase {
    /// `s_i π_k` lies in another coset `π_l S_μ` and `π_k^{-1} s_i π_l = 1`.
    Swap,
    /// `s_i π_k = π_k s_j` with `j ∈ J^μ`.
    Descend(usize),
}

/// The minimal-length left coset representatives of `S_n / S_μ`, sorted by
/// length and then by one-line notation, so the identity comes first.
#[derive(Clone)]
pub struct CosetSystem {
    mu: Composition,
    reps: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl CosetSystem {
    pub fn new(mu: &Composition) -> Self {
        let n = mu.n();
        let j_set = mu.j_set();
        // w is minimal in w S_μ iff it is increasing on every block.
        let mut reps: Vec<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|w| j_set.iter().all(|&j| !w.has_right_descent(j)))
            .collect();
        reps.sort_by_cached_key(|w| (w.length(), w.images.clone()));
        let index = reps.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        CosetSystem {
            mu: mu.clone(),
            reps,
            index,
        }
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// `π_{μ,k}` for 0-based `k`.
    pub fn rep(&self, k: usize) -> &Permutation {
        &self.reps[k]
    }

    /// 0-based index of the coset containing `w`.
    pub fn coset_of(&self, w: &Permutation) -> usize {
        let mut images = w.images.clone();
        let mut start = 0;
        for &m in self.mu.parts() {
            images[start..start + m].sort_unstable();
            start += m;
        }
        self.index[&Permutation { images }]
    }

    /// Splits `w = π_k x` with `x ∈ S_μ`; returns `(k, x)`.
    pub fn factor(&self, w: &Permutation) -> (usize, Permutation) {
        let k = self.coset_of(w);
        (k, self.reps[k].inverse().compose(w))
    }

    /// Deodhar's lemma for 0-based `k` and generator `s_i`: the index `l`
    /// with `s_i π_l ∈ π_k S_μ` and the case.
    pub fn deodhar(&self, k: usize, i: usize) -> (usize, DeodharCase) {
        let pi = &self.reps[k];
        let moved = pi.mul_simple_left(i);
        let l = self.coset_of(&moved);
        if l != k {
            return (l, DeodharCase::Swap);
        }
        let x = pi.inverse().compose(&moved);
        let word = x.reduced_word();
        debug_assert_eq!(word.len(), 1);
        (l, DeodharCase::Descend(word[0]))
    }

    /// The character `χ_k = π_k(χ_1)` as value indices.
    pub fn character(&self, k: usize) -> Vec<usize> {
        act_on_character(&self.reps[k], &self.mu.staircase())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::simple(2, 1).unwrap().length(), 1);
        let w = Permutation::from_word(4, &[3, 2, 1]).unwrap();
        assert_eq!(w.one_line(), vec![4, 1, 2, 3]);
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(perm(&[3, 2, 1]).reduced_word(), vec![1, 2, 1]);
        assert_eq!(perm(&[4, 1, 2, 3]).reduced_word(), vec![3, 2, 1]);
        assert_eq!(perm(&[2, 3, 4, 1]).reduced_word(), vec![1, 2, 3]);
    }

    #[test]
    fn reduced_word_is_lex_smallest_exhaustively() {
        for n in 2..=4 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(Permutation::from_word(n, &word).unwrap(), w);
                assert_eq!(word.len(), w.length());
                if word.is_empty() {
                    continue;
                }
                let best = (0..word.len())
                    .map(|_| 1..n)
                    .multi_cartesian_product()
                    .find(|cand| Permutation::from_word(n, cand).unwrap() == w);
                assert_eq!(best, Some(word), "{w:?}");
            }
        }
    }

    #[test]
    fn length_subadditive() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            for v in &all {
                for w in &all {
                    let vw = v.compose(w);
                    assert!(vw.length() <= v.length() + w.length());
                    let mut word = v.reduced_word();
                    word.extend(w.reduced_word());
                    let concatenated_is_reduced = word.len() == vw.length();
                    assert_eq!(
                        concatenated_is_reduced,
                        vw.length() == v.length() + w.length()
                    );
                }
            }
        }
    }

    #[test]
    fn composition_order() {
        let c: Vec<_> = compositions(2, 4).iter().map(|m| m.parts().to_vec()).collect();
        assert_eq!(
            c,
            vec![vec![4, 0], vec![3, 1], vec![2, 2], vec![1, 3], vec![0, 4]]
        );
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(Composition::new(vec![1, 3]).j_set(), vec![2, 3]);
    }

    #[test]
    fn coset_examples() {
        let full = CosetSystem::new(&Composition::new(vec![3]));
        assert_eq!(full.len(), 1);
        assert!(full.rep(0).is_identity());

        let sys = CosetSystem::new(&Composition::new(vec![2, 2]));
        assert_eq!(sys.len(), 6);

        let sys = CosetSystem::new(&Composition::new(vec![1, 3]));
        assert_eq!(sys.len(), 4);
        assert!(sys.rep(0).is_identity());
        assert_eq!(sys.rep(3).reduced_word(), vec![3, 2, 1]);
    }

    #[test]
    fn coset_factorisation_is_unique_and_length_additive() {
        for n in 1..=5 {
            for d in 1..=3 {
                for mu in compositions(d, n) {
                    let sys = CosetSystem::new(&mu);
                    assert_eq!(sys.len() as u128, mu.multinomial());
                    let young = Permutation::all(n)
                        .into_iter()
                        .filter(|x| mu.in_young_subgroup(x))
                        .collect::<Vec<_>>();
                    assert_eq!(young.len() * sys.len(), (1..=n).product::<usize>());
                    for w in Permutation::all(n) {
                        let hits: Vec<_> = sys
                            .reps()
                            .iter()
                            .enumerate()
                            .filter_map(|(k, pi)| {
                                let x = pi.inverse().compose(&w);
                                mu.in_young_subgroup(&x).then_some((k, x))
                            })
                            .collect();
                        assert_eq!(hits.len(), 1);
                        let (k, x) = &hits[0];
                        assert_eq!(sys.factor(&w), (*k, x.clone()));
                        assert_eq!(w.length(), sys.rep(*k).length() + x.length());
                    }
                }
            }
        }
    }

    #[test]
    fn deodhar_examples() {
        let sys = CosetSystem::new(&Composition::new(vec![4]));
        for i in 1..4 {
            assert_eq!(sys.deodhar(0, i), (0, DeodharCase::Descend(i)));
        }
        let sys = CosetSystem::new(&Composition::new(vec![1, 3]));
        assert_eq!(sys.deodhar(3, 2), (3, DeodharCase::Descend(3)));
        let sys = CosetSystem::new(&Composition::new(vec![2, 2]));
        let (l, case) = sys.deodhar(0, 2);
        assert_eq!(case, DeodharCase::Swap);
        assert_ne!(l, 0);
    }

    #[test]
    fn deodhar_cases_satisfy_their_equations() {
        for n in 2..=5 {
            for d in 1..=3 {
                for mu in compositions(d, n) {
                    let sys = CosetSystem::new(&mu);
                    let j_set = mu.j_set();
                    for k in 0..sys.len() {
                        for i in 1..n {
                            let (l, case) = sys.deodhar(k, i);
                            let s = Permutation::simple(n, i).unwrap();
                            let x = sys.rep(k).inverse().compose(&s).compose(sys.rep(l));
                            match case {
                                DeodharCase::Swap => {
                                    assert_ne!(k, l);
                                    assert!(x.is_identity());
                                }
                                DeodharCase::Descend(j) => {
                                    assert_eq!(k, l);
                                    assert!(j_set.contains(&j));
                                    assert_eq!(x, Permutation::simple(n, j).unwrap());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn character_action() {
        let chi = vec!["a", "b", "c"];
        assert_eq!(act_on_character(&Permutation::identity(3), &chi), chi);
        let s1 = Permutation::simple(3, 1).unwrap();
        assert_eq!(act_on_character(&s1, &chi), vec!["b", "a", "c"]);
        let all = Permutation::all(3);
        for v in &all {
            for w in &all {
                assert_eq!(
                    act_on_character(&v.compose(w), &chi),
                    act_on_character(v, &act_on_character(w, &chi))
                );
            }
        }
    }

    #[test]
    fn staircase_stabiliser_is_young_subgroup() {
        let mu = Composition::new(vec![2, 1]);
        let chi = mu.staircase();
        for w in Permutation::all(3) {
            assert_eq!(act_on_character(&w, &chi) == chi, mu.in_young_subgroup(&w));
        }
    }
}
