//! Partitions, d-partitions and standard d-tableaux, the Jones index sets
//! for Temperley–Lieb bases, Catalan numbers and dimension formulas.

use std::fmt;

use serde_json::{json, Value};

use crate::permgroup::{compositions, Composition, Permutation};

/// A partition, rows weakly decreasing, all rows positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Drops trailing zero rows; panics if the rows increase.
    pub fn new(mut rows: Vec<usize>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]) && !rows.contains(&0),
            "rows of a partition must be weakly decreasing"
        );
        Partition { rows }
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// At most two columns, i.e. `λ_1 ≤ 2`.
    pub fn two_column(&self) -> bool {
        self.rows.first().is_none_or(|&r| r <= 2)
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// A d-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPartition {
    components: Vec<Partition>,
}

impl DPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a d-partition needs d >= 1 components");
        DPartition { components }
    }

    /// From nested row lists, e.g. `[[2, 1], [1]]`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, String> {
        let mut comps = Vec::with_capacity(rows.len());
        for r in rows {
            if r.windows(2).any(|w| w[0] < w[1]) || r.contains(&0) {
                return Err(format!("{r:?} is not a partition"));
            }
            comps.push(Partition { rows: r.clone() });
        }
        if comps.is_empty() {
            return Err("a d-partition needs at least one component".into());
        }
        Ok(DPartition { components: comps })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Every component has at most two columns.
    pub fn ftl_admissible(&self) -> bool {
        self.components.iter().all(Partition::two_column)
    }

    /// The first component has at most two columns.
    pub fn ctl_admissible(&self) -> bool {
        self.components[0].two_column()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.components.iter().map(Partition::to_json).collect())
    }
}

impl fmt::Debug for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.components)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                rows: prefix.clone(),
            });
            return;
        }
        for r in (1..=n.min(max)).rev() {
            prefix.push(r);
            rec(n - r, r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All d-partitions of `n`: grouped by the composition of component sizes
/// (first size descending), then reverse lexicographic in each component.
pub fn enumerate_d_partitions(d: usize, n: usize) -> Vec<DPartition> {
    let mut out = Vec::new();
    for mu in compositions(d, n) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &m in mu.parts() {
            let options = enumerate_partitions(m);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|components| DPartition { components }));
    }
    out
}

/// A cell of a d-diagram: 0-based row, column and component.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

/// A filling of a d-partition by `1..=n`; `cells[i-1]` holds entry `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DTableau {
    shape: DPartition,
    cells: Vec<Cell>,
}

impl DTableau {
    pub fn shape(&self) -> &DPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, i: usize) -> Cell {
        self.cells[i - 1]
    }

    /// 1-based component index `p(T|i)`.
    pub fn position(&self, i: usize) -> usize {
        self.cells[i - 1].comp + 1
    }

    /// The exponent `y - x` of the quantum content `c(T|i) = q^{y-x}`.
    pub fn content_exponent(&self, i: usize) -> i64 {
        let c = self.cells[i - 1];
        c.col as i64 - c.row as i64
    }

    pub fn is_standard(&self) -> bool {
        let n = self.n();
        // entry at each cell, for neighbour lookups
        let find = |cell: Cell| self.cells.iter().position(|&c| c == cell);
        (0..n).all(|e| {
            let c = self.cells[e];
            let left_ok = c.col == 0
                || find(Cell {
                    col: c.col - 1,
                    ..c
                })
                .is_some_and(|l| l < e);
            let up_ok = c.row == 0
                || find(Cell {
                    row: c.row - 1,
                    ..c
                })
                .is_some_and(|u| u < e);
            left_ok && up_ok
        })
    }

    /// The tableau `T^{s_i}` with `i` and `i+1` exchanged, or `None` when it
    /// is not standard (its vector is then zero).
    pub fn apply_transposition(&self, i: usize) -> Option<DTableau> {
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        let t = DTableau {
            shape: self.shape.clone(),
            cells,
        };
        t.is_standard().then_some(t)
    }

    /// `T^σ`, which places entry `σ(i)` where `T` has `i`.
    pub fn permute(&self, sigma: &Permutation) -> DTableau {
        let mut cells = self.cells.clone();
        for i in 1..=self.n() {
            cells[sigma.apply(i) - 1] = self.cells[i - 1];
        }
        DTableau {
            shape: self.shape.clone(),
            cells,
        }
    }

    /// `[x, y, k, entry]` records with 1-based coordinates.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.cells
                .iter()
                .enumerate()
                .map(|(e, c)| json!([c.row + 1, c.col + 1, c.comp + 1, e + 1]))
                .collect(),
        )
    }
}

impl fmt::Debug for DTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut comps: Vec<Vec<Vec<usize>>> = self
            .shape
            .components
            .iter()
            .map(|p| p.rows.iter().map(|&r| vec![0; r]).collect())
            .collect();
        for (e, c) in self.cells.iter().enumerate() {
            comps[c.comp][c.row][c.col] = e + 1;
        }
        write!(f, "{comps:?}")
    }
}

/// All standard d-tableaux of the given shape, in lexicographic order of
/// the sequence of (component, row) in which `1, 2, …, n` are placed.
pub fn standard_tableaux(shape: &DPartition) -> Vec<DTableau> {
    fn rec(
        shape: &DPartition,
        fill: &mut [Vec<usize>],
        cells: &mut Vec<Cell>,
        n: usize,
        out: &mut Vec<DTableau>,
    ) {
        if cells.len() == n {
            out.push(DTableau {
                shape: shape.clone(),
                cells: cells.clone(),
            });
            return;
        }
        for (k, part) in shape.components.iter().enumerate() {
            for (row, &len) in part.rows.iter().enumerate() {
                let col = fill[k][row];
                if col < len && (row == 0 || fill[k][row - 1] > col) {
                    fill[k][row] += 1;
                    cells.push(Cell { row, col, comp: k });
                    rec(shape, fill, cells, n, out);
                    cells.pop();
                    fill[k][row] -= 1;
                }
            }
        }
    }
    let mut fill: Vec<Vec<usize>> = shape
        .components
        .iter()
        .map(|p| vec![0; p.rows.len()])
        .collect();
    let mut out = Vec::new();
    rec(shape, &mut fill, &mut Vec::new(), shape.size(), &mut out);
    out
}

/// Number of standard tableaux of a partition, by the hook length formula.
pub fn count_standard(p: &Partition) -> u128 {
    let n = p.size();
    let mut hooks: u128 = 1;
    for (r, &len) in p.rows.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = p.rows[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(n) / hooks
}

/// Number of standard d-tableaux: multinomial times the component counts.
pub fn count_standard_d(shape: &DPartition) -> u128 {
    let sizes = Composition::new(shape.components.iter().map(Partition::size).collect());
    shape
        .components
        .iter()
        .map(count_standard)
        .product::<u128>()
        * sizes.multinomial()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

pub fn dim_tl(n: usize) -> u128 {
    catalan(n)
}

/// `d^n n!`.
pub fn dim_y(d: usize, n: usize) -> u128 {
    (d as u128).pow(n as u32) * factorial(n)
}

/// `Σ_μ m_μ² C_{μ_1} ⋯ C_{μ_d}`.
pub fn dim_ftl(d: usize, n: usize) -> u128 {
    compositions(d, n)
        .iter()
        .map(|mu| {
            let m = mu.multinomial();
            m * m * mu.parts().iter().map(|&p| catalan(p)).product::<u128>()
        })
        .sum()
}

/// `Σ_k binom(n,k)² C_k (d-1)^{n-k} (n-k)!`.
pub fn dim_ctl_by_k(d: usize, n: usize) -> u128 {
    (0..=n)
        .map(|k| {
            let b = binomial(n, k);
            b * b * catalan(k) * ((d as u128 - 1).pow((n - k) as u32)) * factorial(n - k)
        })
        .sum()
}

/// `Σ_μ m_μ² C_{μ_1} μ_2! ⋯ μ_d!`.
pub fn dim_ctl_by_compositions(d: usize, n: usize) -> u128 {
    compositions(d, n)
        .iter()
        .map(|mu| {
            let m = mu.multinomial();
            let rest: u128 = mu.parts()[1..].iter().map(|&p| factorial(p)).product();
            m * m * catalan(mu.parts()[0]) * rest
        })
        .sum()
}

/// The CTL dimension; both closed forms are evaluated and must agree.
pub fn dim_ctl(d: usize, n: usize) -> u128 {
    let a = dim_ctl_by_k(d, n);
    let b = dim_ctl_by_compositions(d, n);
    assert_eq!(a, b, "the two CTL dimension formulas disagree at d={d}, n={n}");
    a
}

/// Sum of squared standard tableau counts over shapes passing `keep`.
pub fn dim_by_tableaux(d: usize, n: usize, keep: impl Fn(&DPartition) -> bool) -> u128 {
    enumerate_d_partitions(d, n)
        .iter()
        .filter(|s| keep(s))
        .map(|s| {
            let c = count_standard_d(s);
            c * c
        })
        .sum()
}

/// A pair `(i, k)` indexing the product of descending runs
/// `(G_{i_1} … G_{i_1-k_1}) ⋯ (G_{i_p} … G_{i_p-k_p})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JonesPair {
    pub i: Vec<usize>,
    pub k: Vec<usize>,
}

impl JonesPair {
    pub fn empty() -> Self {
        JonesPair {
            i: Vec::new(),
            k: Vec::new(),
        }
    }

    /// Whether the bottoms `i_j - k_j` are strictly increasing as well.
    pub fn is_tl(&self) -> bool {
        self.bottoms().windows(2).all(|w| w[0] < w[1])
    }

    fn bottoms(&self) -> Vec<usize> {
        self.i.iter().zip(&self.k).map(|(i, k)| i - k).collect()
    }

    /// The generator word, runs concatenated; empty for `(∅, ∅)`.
    pub fn word(&self) -> Vec<usize> {
        self.i
            .iter()
            .zip(&self.k)
            .flat_map(|(&i, &k)| (i - k..=i).rev())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "i": self.i, "k": self.k })
    }
}

impl fmt::Debug for JonesPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.i, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JonesMode {
    /// Every pair: indexes the standard basis of the Hecke algebra.
    All,
    /// Pairs with increasing bottoms: indexes the Jones basis of TL.
    Tl,
}

/// Jones pairs for `n` strands in lexicographic order of their run lists.
pub fn jones_pairs(n: usize, mode: JonesMode) -> Vec<JonesPair> {
    fn rec(n: usize, mode: JonesMode, cur: &mut JonesPair, out: &mut Vec<JonesPair>) {
        out.push(cur.clone());
        let next_i = cur.i.last().map_or(1, |&i| i + 1);
        for i in next_i..n {
            for k in 0..i {
                if mode == JonesMode::Tl {
                    if let (Some(&li), Some(&lk)) = (cur.i.last(), cur.k.last()) {
                        if i - k <= li - lk {
                            continue;
                        }
                    }
                }
                cur.i.push(i);
                cur.k.push(k);
                rec(n, mode, cur, out);
                cur.i.pop();
                cur.k.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, mode, &mut JonesPair::empty(), &mut out);
    out
}

pub fn jones_word(p: &JonesPair) -> Vec<usize> {
    p.word()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn dp(rows: &[Vec<usize>]) -> DPartition {
        DPartition::from_rows(rows).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let p4: Vec<_> = enumerate_partitions(4).iter().map(|p| p.rows.clone()).collect();
        assert_eq!(
            p4,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        let d22 = enumerate_d_partitions(2, 2);
        assert_eq!(
            d22,
            vec![
                dp(&[vec![2], vec![]]),
                dp(&[vec![1, 1], vec![]]),
                dp(&[vec![1], vec![1]]),
                dp(&[vec![], vec![2]]),
                dp(&[vec![], vec![1, 1]]),
            ]
        );
    }

    #[test]
    fn tableau_counts() {
        let two = standard_tableaux(&dp(&[vec![1], vec![1]]));
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].position(1), 1);
        assert_eq!(two[1].position(1), 2);
        assert_eq!(standard_tableaux(&dp(&[vec![2, 1]])).len(), 2);
        let total: usize = enumerate_d_partitions(2, 3)
            .iter()
            .map(|s| standard_tableaux(s).len().pow(2))
            .sum();
        assert_eq!(total, 48);
    }

    #[test]
    fn enumeration_matches_hook_formula() {
        for d in 1..=3 {
            for n in 0..=5 {
                for s in enumerate_d_partitions(d, n) {
                    let tabs = standard_tableaux(&s);
                    assert_eq!(tabs.len() as u128, count_standard_d(&s));
                    assert!(tabs.iter().all(DTableau::is_standard));
                    let distinct: HashSet<_> = tabs.iter().collect();
                    assert_eq!(distinct.len(), tabs.len());
                }
                assert_eq!(dim_by_tableaux(d, n, |_| true), dim_y(d, n));
            }
        }
    }

    #[test]
    fn contents_and_positions() {
        let row = &standard_tableaux(&dp(&[vec![3]]))[0];
        assert_eq!(
            (1..=3).map(|i| row.content_exponent(i)).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        // ((2,3), ∅, (1)): 1 in component 3, 2 and 3 in the row of component 1
        let shape = dp(&[vec![2], vec![], vec![1]]);
        let t = standard_tableaux(&shape)
            .into_iter()
            .find(|t| t.position(1) == 3)
            .unwrap();
        assert_eq!((1..=3).map(|i| t.position(i)).collect::<Vec<_>>(), vec![3, 1, 1]);
        assert_eq!(
            (1..=3).map(|i| t.content_exponent(i)).collect::<Vec<_>>(),
            vec![0, 0, 1]
        );
        let col = &standard_tableaux(&dp(&[vec![1, 1]]))[0];
        assert_eq!(col.content_exponent(2), -1);
    }

    #[test]
    fn transpositions() {
        let row = &standard_tableaux(&dp(&[vec![2]]))[0];
        assert!(row.apply_transposition(1).is_none());
        let two = standard_tableaux(&dp(&[vec![1], vec![1]]));
        assert_eq!(two[0].apply_transposition(1).as_ref(), Some(&two[1]));
    }

    #[test]
    fn content_equivariance() {
        for d in 1..=2 {
            for s in enumerate_d_partitions(d, 3) {
                for t in standard_tableaux(&s) {
                    for sigma in Permutation::all(3) {
                        let ts = t.permute(&sigma);
                        let inv = sigma.inverse();
                        for i in 1..=3 {
                            let j = inv.apply(i);
                            assert_eq!(ts.content_exponent(i), t.content_exponent(j));
                            assert_eq!(ts.position(i), t.position(j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn admissibility() {
        assert!(Partition::new(vec![1, 1, 1]).two_column());
        assert!(!Partition::new(vec![3]).two_column());
        assert!(!dp(&[vec![3], vec![1]]).ctl_admissible());
        assert!(dp(&[vec![1], vec![3]]).ctl_admissible());
        assert!(!dp(&[vec![1], vec![3]]).ftl_admissible());
    }

    #[test]
    fn dimensions() {
        assert_eq!(catalan(4), 14);
        assert_eq!(dim_ftl(2, 3), 46);
        assert_eq!(dim_ctl(2, 3), 47);
        assert_eq!(dim_ftl(2, 2), 8);
        assert_eq!(dim_y(2, 2), 8);
        for n in 0..=8 {
            assert_eq!(dim_by_tableaux(1, n, DPartition::ftl_admissible), catalan(n));
            assert_eq!(dim_ftl(1, n), dim_tl(n));
            assert_eq!(dim_ctl(1, n), dim_tl(n));
        }
        for d in 1..=4 {
            for n in 0..=6 {
                dim_ctl(d, n);
                assert!(dim_ftl(d, n) <= dim_ctl(d, n));
                assert!(dim_ctl(d, n) <= dim_y(d, n));
                if n <= 2 {
                    assert_eq!(dim_ftl(d, n), dim_y(d, n));
                    assert_eq!(dim_ctl(d, n), dim_y(d, n));
                }
            }
        }
        for d in 1..=3 {
            for n in 0..=5 {
                assert_eq!(dim_by_tableaux(d, n, DPartition::ftl_admissible), dim_ftl(d, n));
                assert_eq!(dim_by_tableaux(d, n, DPartition::ctl_admissible), dim_ctl(d, n));
            }
        }
    }

    #[test]
    fn jones_sets() {
        assert_eq!(jones_pairs(1, JonesMode::All), vec![JonesPair::empty()]);
        assert_eq!(jones_pairs(4, JonesMode::All).len(), 24);
        assert_eq!(jones_pairs(4, JonesMode::Tl).len(), 14);
        for n in 1..=8 {
            assert_eq!(jones_pairs(n, JonesMode::Tl).len() as u128, catalan(n));
        }
        for n in 1..=5 {
            let all = jones_pairs(n, JonesMode::All);
            assert_eq!(all.len() as u128, factorial(n));
            let perms: HashSet<_> = all
                .iter()
                .map(|p| {
                    let w = Permutation::from_word(n, &p.word()).unwrap();
                    // the runs form reduced words
                    assert_eq!(w.length(), p.word().len());
                    w
                })
                .collect();
            assert_eq!(perms.len(), all.len());
        }
        assert!(jones_word(&JonesPair::empty()).is_empty());
        let p = JonesPair {
            i: vec![2, 3],
            k: vec![1, 0],
        };
        assert_eq!(p.word(), vec![2, 1, 3]);
    }
}
