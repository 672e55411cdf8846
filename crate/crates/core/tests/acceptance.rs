//! Acceptance criteria at exact equality.
//!
//! Runs as a plain binary (`harness = false`) so that every criterion prints
//! one PASS/FAIL line even when the run is captured. Expected values are
//! recomputed here from first principles wherever the library could be
//! checked against something independent of itself.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use yokonuma::exactnum::{CyclotomicElement, RationalFunction};
use yokonuma::isomaps::{basis_rank, ftl_basis, ctl_basis, reducer, rho_reduce, DirectSum, HMatrix, IsoContext, QuotientIso};
use yokonuma::linalg::RfMatrix;
use yokonuma::permgroup::Permutation;
use yokonuma::reps::{ideal_membership, Quotient, RepFamily, RepModule};
use yokonuma::tableaux::{
    dim_ctl_by_compositions, dim_ctl_by_k, dim_ftl, dim_tl, dim_y, enumerate_d_partitions, enumerate_partitions,
    jones_pairs, standard_tableaux, DPartition, JonesMode, Partition,
};
use yokonuma::verify::random_element;
use yokonuma::ykalgebra::{YAlgebra, YElement};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

// ---- independent oracles -------------------------------------------------

/// Catalan numbers by the convolution recurrence.
fn catalan_table(max: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for m in 1..=max {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn at_most_two_columns(p: &Partition) -> bool {
    p.rows().iter().all(|&r| r <= 2)
}

fn ftl_shape(s: &DPartition) -> bool {
    s.components().iter().all(at_most_two_columns)
}

fn ctl_shape(s: &DPartition) -> bool {
    at_most_two_columns(&s.components()[0])
}

/// `Σ (#standard tableaux)^2` over the kept shapes, counting tableaux by
/// explicit enumeration rather than the hook formula.
fn tableau_square_sum(d: usize, n: usize, keep: impl Fn(&DPartition) -> bool) -> u128 {
    enumerate_d_partitions(d, n)
        .iter()
        .filter(|s| keep(s))
        .map(|s| (standard_tableaux(s).len() as u128).pow(2))
        .sum()
}

fn rf(order: u32, v: i64) -> RationalFunction {
    RationalFunction::from_int(order, v)
}

fn mat_pow(m: &RfMatrix, k: usize) -> RfMatrix {
    (0..k).fold(RfMatrix::identity(m.order(), m.rows()), |acc, _| acc.mul(m))
}

/// `(1/d) Σ_s T_i^s T_{i+1}^{-s}` built from the framing matrices alone.
fn e_from_framings(m: &RepModule, i: usize) -> Result<RfMatrix, String> {
    let d = m.d();
    let ti = ok(m.rep_t(i))?;
    let tj = ok(m.rep_t(i + 1))?;
    let mut sum = RfMatrix::zeros(m.order(), m.dim(), m.dim());
    for s in 0..d {
        sum = sum.add(&mat_pow(&ti, s).mul(&mat_pow(&tj, (d - s) % d)));
    }
    Ok(sum.scale(&ok(rf(m.order(), d as i64).inv())?))
}

/// The seminormal Hecke action written through the axial distance
/// `r = c(i+1) - c(i)` of the entries `i`, `i+1`:
/// `g_i v_T = (q-1)q^r/(q^r-1) v_T + (q^{r+1}-1)/(q^r-1) v_{T s_i}`.
fn hecke_seminormal(m: &RepModule, i: usize) -> Result<RfMatrix, String> {
    let order = m.order();
    let q = RationalFunction::q(order);
    let one = rf(order, 1);
    let basis = m.basis();
    let mut out = RfMatrix::zeros(order, basis.len(), basis.len());
    for (k, t) in basis.iter().enumerate() {
        let content = |e: usize| {
            let c = t.cell(e);
            c.col as i64 - c.row as i64
        };
        let r = content(i + 1) - content(i);
        let qr = RationalFunction::q_pow(order, r);
        let den = &qr - &one;
        out.set(k, k, ok((&(&q - &one) * &qr).div(&den))?);
        if let Some(s) = t.apply_transposition(i) {
            let target = basis.iter().position(|b| *b == s).ok_or("swapped tableau missing")?;
            let num = &RationalFunction::q_pow(order, r + 1) - &one;
            out.set(target, k, ok(num.div(&den))?);
        }
    }
    Ok(out)
}

/// Row echelon form over `Q(ζ)(q)`, kept in insertion order.
struct Echelon {
    rows: Vec<(usize, Vec<RationalFunction>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<RationalFunction>) -> Vec<RationalFunction> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    /// Adds `v` to the span; false if it was already there.
    fn insert(&mut self, v: Vec<RationalFunction>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        self.rows.push((p, v.iter().map(|x| x * &inv).collect()));
        true
    }

    fn contains(&self, v: Vec<RationalFunction>) -> bool {
        self.reduce(v).iter().all(RationalFunction::is_zero)
    }
}

fn hecke_vector(x: &YElement) -> Vec<RationalFunction> {
    (0..x.algebra().dim()).map(|k| x.coeff(k)).collect()
}

// ---- criteria ------------------------------------------------------------

fn dimension_identities() -> Outcome {
    let cat = catalan_table(8);
    let mut timings = Vec::new();
    let mut timed = |label: &str, f: &mut dyn FnMut() -> Result<(), String>| -> Result<(), String> {
        let start = Instant::now();
        f()?;
        let el = start.elapsed();
        ensure!(el < Duration::from_secs(1), "{label} took {el:?}");
        timings.push(el);
        Ok(())
    };
    timed("dim_TL", &mut || {
        for n in 1..=8 {
            let sum: u128 = enumerate_partitions(n)
                .iter()
                .filter(|p| at_most_two_columns(p))
                .map(|p| (standard_tableaux(&DPartition::new(vec![p.clone()])).len() as u128).pow(2))
                .sum();
            ensure!(sum == cat[n] && dim_tl(n) == cat[n], "n={n}: sum {sum}, dim_tl {}, C_n {}", dim_tl(n), cat[n]);
        }
        Ok(())
    })?;
    timed("dim_Y", &mut || {
        for d in 1..=3 {
            for n in 1..=5 {
                let expected = (d as u128).pow(n as u32) * factorial(n);
                let sum = tableau_square_sum(d, n, |_| true);
                ensure!(sum == expected && dim_y(d, n) == expected, "d={d} n={n}: {sum} vs {expected}");
            }
        }
        Ok(())
    })?;
    timed("dim_FTL", &mut || {
        let oracle = tableau_square_sum(2, 3, ftl_shape);
        ensure!(oracle == 46 && dim_ftl(2, 3) == 46, "dim_FTL(2,3): oracle {oracle}, library {}", dim_ftl(2, 3));
        let small = tableau_square_sum(2, 2, ftl_shape);
        ensure!(small == 8 && dim_ftl(2, 2) == 8 && dim_y(2, 2) == 8, "dim_FTL(2,2) = {small}");
        Ok(())
    })?;
    timed("dim_CTL", &mut || {
        let oracle = tableau_square_sum(2, 3, ctl_shape);
        let (a, b) = (dim_ctl_by_k(2, 3), dim_ctl_by_compositions(2, 3));
        ensure!(oracle == 47 && a == 47 && b == 47, "dim_CTL(2,3): oracle {oracle}, by k {a}, by compositions {b}");
        Ok(())
    })?;
    Ok(format!("4 identity groups, slowest {:?}", timings.iter().max().unwrap()))
}

fn representation_relations() -> Outcome {
    let start = Instant::now();
    let mut modules = 0;
    for (d, n) in [(1, 4), (2, 3), (2, 4), (3, 3)] {
        let order = YAlgebra::new(d, n).map_err(|e| e.to_string())?.order();
        for m in RepFamily::get(d, n, order).modules() {
            let shape = m.shape();
            let q = RationalFunction::q(order);
            let id = RfMatrix::identity(order, m.dim());
            let t: Vec<RfMatrix> = (1..=n).map(|j| ok(m.rep_t(j))).collect::<Result<_, _>>()?;
            let g: Vec<RfMatrix> = (1..n).map(|i| ok(m.rep_g(i))).collect::<Result<_, _>>()?;
            let e: Vec<RfMatrix> = (1..n).map(|i| e_from_framings(m, i)).collect::<Result<_, _>>()?;
            for (j, tj) in t.iter().enumerate() {
                ensure!(mat_pow(tj, d) == id, "{shape:?}: t_{}^d", j + 1);
                for tk in &t {
                    ensure!(tj.mul(tk) == tk.mul(tj), "{shape:?}: framings commute");
                }
            }
            for i in 0..n - 1 {
                let quad = id.scale(&q).add(&e[i].mul(&g[i]).scale(&(&q - &rf(order, 1))));
                ensure!(g[i].mul(&g[i]) == quad, "{shape:?}: quadratic relation at g_{}", i + 1);
                for j in 0..n - 1 {
                    if i + 1 == j {
                        let lhs = g[i].mul(&g[j]).mul(&g[i]);
                        ensure!(lhs == g[j].mul(&g[i]).mul(&g[j]), "{shape:?}: braid relation g_{}", i + 1);
                    } else if i.abs_diff(j) > 1 {
                        ensure!(g[i].mul(&g[j]) == g[j].mul(&g[i]), "{shape:?}: far commutation");
                    }
                }
                let s = Permutation::simple(n, i + 1).unwrap();
                for (j, tj) in t.iter().enumerate() {
                    let lhs = g[i].mul(tj);
                    ensure!(lhs == t[s.apply(j + 1) - 1].mul(&g[i]), "{shape:?}: g_{} t_{}", i + 1, j + 1);
                }
            }
            if d == 1 {
                for i in 1..n {
                    ensure!(g[i - 1] == hecke_seminormal(m, i)?, "{shape:?}: differs from the Hecke seminormal form at g_{i}");
                }
            }
            modules += 1;
        }
    }
    let el = start.elapsed();
    ensure!(el < Duration::from_secs(30), "took {el:?}");
    Ok(format!("{modules} irreducible modules, {el:.1?}"))
}

fn quotient_classification() -> Outcome {
    let mut shapes = 0;
    let mut admitted = [0usize; 2];
    for (d, n) in [(2, 3), (2, 4), (3, 3)] {
        let order = YAlgebra::new(d, n).map_err(|e| e.to_string())?.order();
        for m in RepFamily::get(d, n, order).modules() {
            for (slot, (which, pred)) in [(Quotient::Ftl, ftl_shape as fn(&DPartition) -> bool), (Quotient::Ctl, ctl_shape)]
                .into_iter()
                .enumerate()
            {
                let killed = ok(m.kills_generator(which))?;
                let combinatorial = pred(m.shape());
                ensure!(killed == combinatorial, "{which:?} at {:?}: killed {killed}, two-column {combinatorial}", m.shape());
                admitted[slot] += combinatorial as usize;
            }
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes, {} FTL-admissible, {} CTL-admissible", admitted[0], admitted[1]))
}

fn isomorphism_suite() -> Outcome {
    let start = Instant::now();
    let y = YAlgebra::new(2, 4).map_err(|e| e.to_string())?;
    let ctx = ok(IsoContext::new(&y))?;
    let h = ctx.hecke().clone();
    let one = rf(y.order(), 1);

    for key in 0..y.dim() {
        let x = y.from_terms([(key, one.clone())]);
        let image = ok(ctx.psi_n(&x))?;
        for (mu, m) in &image.blocks {
            for k in 0..m.size() {
                for l in 0..m.size() {
                    ensure!(m.get(k, l).is_laurent(), "non-integral entry of Ψ_{mu:?}({x:?})");
                }
            }
        }
        ensure!(ok(ctx.phi_n(&image))? == x, "Φ∘Ψ moves {x:?}");
    }

    let zero = DirectSum {
        blocks: ctx.blocks().iter().map(|b| (b.mu().clone(), HMatrix::zeros(&h, b.size()))).collect(),
    };
    let mut units = 0;
    for (bi, b) in ctx.blocks().iter().enumerate() {
        let young: Vec<&Permutation> = y.perms().iter().filter(|w| b.mu().in_young_subgroup(w)).collect();
        for k in 0..b.size() {
            for l in 0..b.size() {
                for x in &young {
                    let mut a = zero.clone();
                    a.blocks[bi].1 = HMatrix::unit_matrix(&h, b.size(), k, l, h.g_perm(x));
                    ensure!(ok(ctx.psi_n(&ok(ctx.phi_n(&a))?))? == a, "Ψ∘Φ moves G_{x:?} M_({k},{l}) in {:?}", b.mu());
                    units += 1;
                }
            }
        }
    }
    ensure!(units == y.dim(), "{units} matrix units for dimension {}", y.dim());

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for b in ctx.blocks() {
        for _ in 0..30 {
            let x = random_element(&y, &mut rng, 4);
            let z = random_element(&y, &mut rng, 4);
            let lhs = ok(b.psi(&x.mul(&z)))?;
            ensure!(lhs == ok(b.psi(&x))?.mul(&ok(b.psi(&z))?), "Ψ_{:?} not multiplicative", b.mu());
        }
    }

    for b in ctx.blocks() {
        let e_mu = ok(y.e_mu_of(b.mu()))?;
        ensure!(ok(b.psi(&e_mu))? == HMatrix::identity(&h, b.size()), "Ψ_{:?}(E_μ) is not the identity", b.mu());
        for j in 1..=4 {
            let img = ok(b.psi(&e_mu.mul(&ok(y.gen_t(j))?)))?;
            let mut expected = HMatrix::zeros(&h, b.size());
            for k in 0..b.size() {
                let z = ok(CyclotomicElement::zeta_pow(2, b.character(k)[j - 1] as i64).lift_to(h.order()))?;
                expected.set(k, k, h.scalar(RationalFunction::constant(z)));
            }
            ensure!(img.is_diagonal() && img == expected, "Ψ_{:?}(E_μ t_{j}) = {img:?}", b.mu());
        }
    }
    let el = start.elapsed();
    ensure!(el < Duration::from_secs(120), "took {el:?}");
    Ok(format!("{} basis elements, {units} matrix units, 150 random products, {el:.1?}", y.dim()))
}

fn worked_examples() -> Outcome {
    let y = YAlgebra::new(2, 4).map_err(|e| e.to_string())?;
    let ctx = ok(IsoContext::new(&y))?;
    let sizes: Vec<(Vec<usize>, usize)> = ctx.blocks().iter().map(|b| (b.mu().parts().to_vec(), b.size())).collect();
    let expected_sizes = vec![(vec![4, 0], 1), (vec![3, 1], 4), (vec![2, 2], 6), (vec![1, 3], 4), (vec![0, 4], 1)];
    ensure!(sizes == expected_sizes, "blocks {sizes:?}");

    let h = ctx.hecke();
    let g12 = ok(h.g_pair_sum(1))?;
    let g23 = ok(h.g_pair_sum(2))?;
    let gen = ok(y.e(1))?.mul(&ok(y.e(2))?).mul(&ok(y.g_pair_sum(1))?);
    for b in ctx.blocks() {
        let m = b.size();
        let expected = match b.mu().parts() {
            [4, 0] | [0, 4] => HMatrix::unit_matrix(h, m, 0, 0, g12.clone()),
            [3, 1] => HMatrix::unit_matrix(h, m, 0, 0, g12.clone()),
            [1, 3] => HMatrix::unit_matrix(h, m, 3, 3, g23.clone()),
            _ => HMatrix::zeros(h, m),
        };
        ensure!(ok(b.psi(&gen))? == expected, "image of e_1e_2g_(1,2) in {:?}", b.mu());
    }

    let ctl_gen = ok(y.big_t(1))?.mul(&gen);
    for b in ctx.blocks() {
        let m = b.size();
        let expected = match b.mu().parts() {
            [4, 0] | [3, 1] => HMatrix::unit_matrix(h, m, 0, 0, g12.clone()),
            _ => HMatrix::zeros(h, m),
        };
        ensure!(ok(b.psi(&ctl_gen))? == expected, "image of T_1e_1e_2g_(1,2) in {:?}", b.mu());
    }
    Ok("block sizes and both generator images reproduced".into())
}

fn quotient_isomorphisms() -> Outcome {
    let mut counts = Vec::new();
    for (d, n) in [(2, 3), (3, 3), (2, 4)] {
        let y = YAlgebra::new(d, n).map_err(|e| e.to_string())?;
        let one = rf(y.order(), 1);
        for which in [Quotient::Ftl, Quotient::Ctl] {
            let iso = ok(QuotientIso::new(&y, which))?;
            let gen = ok(which.generator(&y))?;
            ensure!(ok(iso.psi(&gen))?.is_zero(), "{which:?} generator survives at ({d},{n})");
            let ctx = iso.iso();
            for b in ctx.blocks() {
                let full = ok(b.psi(&gen))?;
                let reduced = ok(iso.reduce_matrix(ctx.blocks().iter().position(|c| c.mu() == b.mu()).unwrap(), &full))?;
                ensure!(reduced.is_zero(), "{which:?} generator survives in block {:?}", b.mu());
            }
            let basis = iso.basis();
            for a in &basis {
                ensure!(ok(iso.psi(&ok(iso.phi(a))?))? == *a, "ψ∘φ moves a basis element at ({d},{n})");
            }
            for key in 0..y.dim() {
                let x = y.from_terms([(key, one.clone())]);
                let back = ok(iso.phi(&ok(iso.psi(&x))?))?;
                ensure!(ok(ideal_membership(&back.sub(&x), which))?, "φ∘ψ({x:?}) - x is not in the ideal");
            }
            counts.push(basis.len());
        }
    }
    Ok(format!("FTL/CTL basis sizes {counts:?}"))
}

fn basis_suite() -> Outcome {
    let cat = catalan_table(8);
    for n in 1..=8 {
        let pairs = jones_pairs(n, JonesMode::Tl);
        ensure!(pairs.len() as u128 == cat[n], "|T_{n}| = {} vs {}", pairs.len(), cat[n]);
    }
    for n in 1..=5 {
        let mut seen = HashSet::new();
        for p in jones_pairs(n, JonesMode::All) {
            let word = p.word();
            let w = ok(Permutation::from_word(n, &word))?;
            ensure!(w.length() == word.len(), "{p:?} is not reduced");
            ensure!(seen.insert(w.one_line()), "{p:?} repeats a permutation");
        }
        ensure!(seen.len() as u128 == factorial(n), "n={n}: {} permutations", seen.len());
    }
    for (d, n) in [(2, 3), (3, 3)] {
        let ftl = ok(ftl_basis(d, n))?.len() as u128;
        let ctl = ok(ctl_basis(d, n))?.len() as u128;
        let (ftl_dim, ctl_dim) = (tableau_square_sum(d, n, ftl_shape), tableau_square_sum(d, n, ctl_shape));
        ensure!(ftl == ftl_dim && ftl == dim_ftl(d, n), "({d},{n}): {ftl} FTL basis elements, dimension {ftl_dim}");
        ensure!(ctl == ctl_dim && ctl == dim_ctl_by_k(d, n), "({d},{n}): {ctl} CTL basis elements, dimension {ctl_dim}");
    }
    let y = YAlgebra::new(2, 3).map_err(|e| e.to_string())?;
    let mut ranks = Vec::new();
    for which in [Quotient::Ftl, Quotient::Ctl] {
        let iso = ok(QuotientIso::new(&y, which))?;
        let (r, len) = (ok(basis_rank(&iso, 2))?, iso.basis_labels().len());
        ensure!(r == len, "{which:?}: rank {r} of {len}");
        ranks.push(r);
    }
    Ok(format!("Catalan and Hecke counts through n=8/5, ranks {ranks:?} at (2,3)"))
}

fn oracle_cross_checks() -> Outcome {
    // rho_reduce against the span of x G_{1,2} y in H_m
    for m in [3, 4] {
        let h = YAlgebra::new(1, m).map_err(|e| e.to_string())?;
        let gen = ok(h.g_pair_sum(1))?;
        let perms: Vec<YElement> = h.perms().iter().map(|w| h.g_perm(w)).collect();
        let mut ideal = Echelon::new();
        for a in &perms {
            let left = a.mul(&gen);
            for b in &perms {
                ideal.insert(hecke_vector(&left.mul(b)));
            }
        }
        let cat = catalan_table(m)[m] as usize;
        ensure!(ideal.rows.len() == perms.len() - cat, "H_{m}: ideal rank {}", ideal.rows.len());
        let red = ok(reducer(m, h.order()))?;
        let jones: Vec<YElement> = (0..red.len()).map(|b| h.g_perm(red.pair_perm(b))).collect();
        let mut with_jones = Echelon { rows: ideal.rows.clone() };
        for j in &jones {
            ensure!(with_jones.insert(hecke_vector(j)), "H_{m}: Jones elements dependent modulo the ideal");
        }
        for g in &perms {
            let coords = ok(rho_reduce(g))?;
            let mut residual = g.clone();
            for (c, j) in coords.iter().zip(&jones) {
                residual = residual.sub(&j.scale(c));
            }
            ensure!(ideal.contains(hecke_vector(&residual)), "H_{m}: rho_reduce({g:?}) is off by a non-ideal element");
        }
    }

    // e(i) against the framing average
    let mut e_checked = 0;
    for (d, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        let order = YAlgebra::new(d, n).map_err(|e| e.to_string())?.order();
        for m in RepFamily::get(d, n, order).modules() {
            for i in 1..n {
                ensure!(ok(m.rep_e(i))? == e_from_framings(m, i)?, "rep_e({i}) at {:?}", m.shape());
                e_checked += 1;
            }
        }
    }

    // shift identities, checked both directly and as c·x = shift(x)·c
    for d in [1, 2] {
        let y = YAlgebra::new(d, 4).map_err(|e| e.to_string())?;
        let c = ok(y.g_word(&[1, 2, 3]))?;
        let ei = |i: usize| -> Result<YElement, String> {
            let base = ok(y.g_pair_sum(i))?;
            Ok(if d == 1 { base } else { ok(y.e(i))?.mul(&ok(y.e(i + 1))?).mul(&base) })
        };
        let x = ei(1)?;
        ensure!(ok(x.conjugate_shift(1))? == x, "d={d}: shift by one step is not the identity");
        let shifted = ok(x.conjugate_shift(2))?;
        ensure!(shifted == ei(2)?, "d={d}: shift gives {shifted:?}");
        ensure!(c.mul(&x) == shifted.mul(&c), "d={d}: shift is not conjugation by g_1g_2g_3");
    }
    Ok(format!("ideal spans in H_3 and H_4, {e_checked} e(i) matrices, shifts at d=1,2"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("dimension identities", dimension_identities),
        ("representation relations", representation_relations),
        ("quotient classification", quotient_classification),
        ("isomorphism suite", isomorphism_suite),
        ("worked examples", worked_examples),
        ("FTL/CTL isomorphisms", quotient_isomorphisms),
        ("basis suite", basis_suite),
        ("oracle cross-checks", oracle_cross_checks),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{:.1?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
