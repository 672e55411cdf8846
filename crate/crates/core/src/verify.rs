//! Machine checks of the algebraic identities, grouped into suites and
//! reported as JSON. Every check records how many instances it examined.

use std::error::Error;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::exactnum::{CyclotomicElement, RationalFunction};
use crate::isomaps::{basis_rank, HMatrix, IsoContext, QuotientIso};
use crate::linalg::RfMatrix;
use crate::permgroup::{compositions, DeodharCase, Permutation};
use crate::reps::{Quotient, RepFamily, RepModule};
use crate::tableaux::{
    catalan, dim_ctl_by_compositions, dim_ctl_by_k, dim_ftl, dim_y, factorial, jones_pairs, JonesMode,
};
use crate::ykalgebra::{YAlgebra, YElement, YError};

type CheckResult = Result<(), Box<dyn Error>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Idempotents,
    Iso,
    Quotients,
    Dims,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Idempotents => "idempotents",
            Suite::Iso => "iso",
            Suite::Quotients => "quotients",
            Suite::Dims => "dims",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "relations" => Suite::Relations,
            "idempotents" => Suite::Idempotents,
            "iso" => Suite::Iso,
            "quotients" => Suite::Quotients,
            "dims" => Suite::Dims,
            "all" => Suite::All,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    /// The first failing instance, or the error that stopped the check.
    pub detail: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.detail.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "instances": self.instances,
            "passed": self.passed(),
        });
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        v
    }
}

/// All checks run for one `(d, n)`.
#[derive(Debug, Clone)]
pub struct Report {
    pub d: usize,
    pub n: usize,
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// `(μ, m_μ)` for every block, filled by the isomorphism suite.
    pub blocks: Vec<(Vec<usize>, usize)>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "d": self.d,
            "n": self.n,
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        });
        if !self.blocks.is_empty() {
            v["blocks"] = Value::Array(
                self.blocks
                    .iter()
                    .map(|(mu, m)| json!({ "mu": mu, "size": m }))
                    .collect(),
            );
        }
        v
    }
}

/// Counts instances and remembers the first failure.
struct Tally {
    instances: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }
}

fn run_check(name: &str, body: impl FnOnce(&mut Tally) -> CheckResult) -> Check {
    let mut t = Tally {
        instances: 0,
        failures: 0,
        first: None,
    };
    let outcome = body(&mut t);
    let detail = match outcome {
        Err(e) => Some(format!("error: {e}")),
        Ok(()) => t.first.map(|f| format!("failed at {f}")),
    };
    Check {
        name: name.to_string(),
        instances: t.instances,
        failures: t.failures,
        detail,
    }
}

/// Runs `suite` for `Y_{d,n}(q)`. Randomised checks draw from a ChaCha
/// stream seeded with `seed`.
pub fn run(d: usize, n: usize, suite: Suite, seed: u64) -> Result<Report, YError> {
    let y = YAlgebra::new(d, n)?;
    let mut report = Report {
        d,
        n,
        suite,
        checks: Vec::new(),
        blocks: Vec::new(),
    };
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Dims) {
        report.checks.extend(dims_suite(d, n));
    }
    if wants(Suite::Relations) {
        report.checks.extend(relations_suite(&y));
    }
    if wants(Suite::Idempotents) {
        report.checks.extend(idempotents_suite(&y));
    }
    if wants(Suite::Iso) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        report.checks.extend(iso_suite(&y, &mut rng));
        report.blocks = compositions(d, n)
            .iter()
            .map(|mu| (mu.parts().to_vec(), mu.multinomial() as usize))
            .collect();
    }
    if wants(Suite::Quotients) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
        report.checks.extend(quotients_suite(&y, &mut rng));
    }
    Ok(report)
}

/// A random element with `terms` standard-basis terms and coefficients
/// `c q^e`, `c ∈ [-3, 3]`, `e ∈ [-1, 1]`.
pub fn random_element(y: &Arc<YAlgebra>, rng: &mut impl Rng, terms: usize) -> YElement {
    let one = CyclotomicElement::one(y.order());
    y.from_terms((0..terms).map(|_| {
        let key = rng.gen_range(0..y.dim());
        let c = RationalFunction::from_int(y.order(), rng.gen_range(-3..=3)).mul_monomial(&one, rng.gen_range(-1..=1));
        (key, c)
    }))
}

fn dims_suite(d: usize, n: usize) -> Vec<Check> {
    vec![
        run_check("dim_tl_sum_of_squares", |t| {
            for m in 0..=n {
                let by_tableaux = crate::tableaux::dim_by_tableaux(1, m, |s| s.ftl_admissible());
                t.record(by_tableaux == catalan(m), || format!("m = {m}"));
            }
            Ok(())
        }),
        run_check("dim_y_sum_of_squares", |t| {
            t.record(crate::tableaux::dim_by_tableaux(d, n, |_| true) == dim_y(d, n), String::new);
            Ok(())
        }),
        run_check("dim_ftl_formula", |t| {
            let by_tableaux = crate::tableaux::dim_by_tableaux(d, n, |s| s.ftl_admissible());
            t.record(by_tableaux == dim_ftl(d, n), || format!("{by_tableaux} vs {}", dim_ftl(d, n)));
            if n <= 2 {
                t.record(dim_ftl(d, n) == dim_y(d, n), || "no ideal for n <= 2".into());
            }
            Ok(())
        }),
        run_check("dim_ctl_formulas", |t| {
            let by_tableaux = crate::tableaux::dim_by_tableaux(d, n, |s| s.ctl_admissible());
            t.record(by_tableaux == dim_ctl_by_k(d, n), || "sum over k".into());
            t.record(by_tableaux == dim_ctl_by_compositions(d, n), || "sum over compositions".into());
            Ok(())
        }),
        run_check("jones_sets", |t| {
            for m in 0..=n.max(2) {
                t.record(jones_pairs(m, JonesMode::Tl).len() as u128 == catalan(m), || format!("TL pairs, m = {m}"));
                let all = jones_pairs(m, JonesMode::All);
                let perms: std::collections::HashSet<Permutation> = all
                    .iter()
                    .map(|p| Permutation::from_word(m, &p.word()).unwrap())
                    .collect();
                let reduced = all.iter().all(|p| {
                    let w = Permutation::from_word(m, &p.word()).unwrap();
                    w.length() == p.word().len()
                });
                t.record(
                    all.len() as u128 == factorial(m) && perms.len() == all.len() && reduced,
                    || format!("Hecke pairs, m = {m}"),
                );
            }
            Ok(())
        }),
    ]
}

/// Generator images in some algebra: `g[i-1]`, `t[j-1]`, `e[i-1]`.
struct Gens<T> {
    g: Vec<T>,
    t: Vec<T>,
    e: Vec<T>,
    one: T,
}

/// The defining relations as `(name, lhs, rhs)`.
fn relation_instances<T: Clone>(
    d: usize,
    gens: &Gens<T>,
    mul: impl Fn(&T, &T) -> T,
    quad_rhs: impl Fn(&T, &T) -> T,
) -> Vec<(String, T, T)> {
    let n = gens.t.len();
    let (g, t) = (&gens.g, &gens.t);
    let m3 = |a: &T, b: &T, c: &T| mul(&mul(a, b), c);
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for j in i + 2..n - 1 {
            out.push((format!("b1 g{} g{}", i + 1, j + 1), mul(&g[i], &g[j]), mul(&g[j], &g[i])));
        }
        if i + 2 < n {
            out.push((
                format!("b2 g{}", i + 1),
                m3(&g[i], &g[i + 1], &g[i]),
                m3(&g[i + 1], &g[i], &g[i + 1]),
            ));
        }
        for j in 0..n {
            let sj = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            out.push((format!("f2 t{} g{}", j + 1, i + 1), mul(&t[j], &g[i]), mul(&g[i], &t[sj])));
        }
        out.push((format!("quadratic g{}", i + 1), mul(&g[i], &g[i]), quad_rhs(&gens.e[i], &g[i])));
    }
    for j in 0..n {
        for k in j + 1..n {
            out.push((format!("f1 t{} t{}", j + 1, k + 1), mul(&t[j], &t[k]), mul(&t[k], &t[j])));
        }
        let p = (0..d).fold(gens.one.clone(), |acc, _| mul(&acc, &t[j]));
        out.push((format!("f3 t{}", j + 1), p, gens.one.clone()));
    }
    out
}

fn relations_suite(y: &Arc<YAlgebra>) -> Vec<Check> {
    let (d, n) = (y.d(), y.n());
    let order = y.order();
    let q = RationalFunction::q(order);
    let qm1 = &q - &RationalFunction::one(order);
    let inv_d = RationalFunction::constant(CyclotomicElement::from_rational(order, crate::exactnum::rat(1, d as i64)));
    vec![
        run_check("algebra_relations", |t| {
            let gens = Gens {
                g: (1..n).map(|i| y.gen_g(i)).collect::<Result<_, _>>()?,
                t: (1..=n).map(|j| y.gen_t(j)).collect::<Result<_, _>>()?,
                e: (1..n).map(|i| y.e(i)).collect::<Result<_, _>>()?,
                one: y.unit(),
            };
            let quad = |e: &YElement, g: &YElement| y.scalar(q.clone()).add(&e.mul(g).scale(&qm1));
            for (name, lhs, rhs) in relation_instances(d, &gens, |a, b| a.mul(b), quad) {
                t.record(lhs == rhs, || name);
            }
            Ok(())
        }),
        run_check("rep_relations", |t| {
            for m in RepFamily::get(d, n, order).modules() {
                record_module_relations(m, t)?;
            }
            Ok(())
        }),
        run_check("rep_e_matches_framing_sum", |t| {
            // e_i = (1/d) Σ_s t_i^s t_{i+1}^{-s}, with t^{-1} = t^{d-1}
            for m in RepFamily::get(d, n, order).modules() {
                let id = RfMatrix::identity(order, m.dim());
                for i in 1..n {
                    let ti = m.rep_t(i)?;
                    let tj = m.rep_t(i + 1)?;
                    let tj_inv = (1..d).fold(id.clone(), |acc, _| acc.mul(&tj));
                    let mut sum = RfMatrix::zeros(order, m.dim(), m.dim());
                    let (mut a, mut b) = (id.clone(), id.clone());
                    for _ in 0..d {
                        sum = sum.add(&a.mul(&b));
                        a = a.mul(&ti);
                        b = b.mul(&tj_inv);
                    }
                    t.record(sum.scale(&inv_d) == m.rep_e(i)?, || format!("e{i} on {:?}", m.shape()));
                }
            }
            Ok(())
        }),
    ]
}

fn record_module_relations(m: &RepModule, t: &mut Tally) -> CheckResult {
    let (d, n, order) = (m.d(), m.n(), m.order());
    let q = RationalFunction::q(order);
    let qm1 = &q - &RationalFunction::one(order);
    let one = RfMatrix::identity(order, m.dim());
    let gens = Gens {
        g: (1..n).map(|i| m.rep_g(i)).collect::<Result<_, _>>()?,
        t: (1..=n).map(|j| m.rep_t(j)).collect::<Result<_, _>>()?,
        e: (1..n).map(|i| m.rep_e(i)).collect::<Result<_, _>>()?,
        one: one.clone(),
    };
    let quad = |e: &RfMatrix, g: &RfMatrix| one.scale(&q).add(&e.mul(g).scale(&qm1));
    for (name, lhs, rhs) in relation_instances(d, &gens, |a, b| a.mul(b), quad) {
        t.record(lhs == rhs, || format!("{name} on {:?}", m.shape()));
    }
    Ok(())
}

/// The defining relations checked on the matrices of one module.
pub fn module_relations(m: &RepModule) -> Check {
    run_check("rep_relations", |t| record_module_relations(m, t))
}

fn idempotents_suite(y: &Arc<YAlgebra>) -> Vec<Check> {
    let (d, n) = (y.d(), y.n());
    let order = y.order();
    let chars: Vec<Vec<usize>> = (0..y.num_tcodes()).map(|c| y.decode_t(c)).collect();
    let zeta = |e: usize| RationalFunction::constant(CyclotomicElement::zeta_pow(d as u32, e as i64).lift_to(order).unwrap());
    let idems: Result<Vec<YElement>, YError> = chars.iter().map(|c| y.e_chi(c)).collect();
    vec![
        run_check("e_chi_idempotent_and_complete", |t| {
            let idems = idems.clone()?;
            for (c, e) in chars.iter().zip(&idems) {
                t.record(&e.mul(e) == e, || format!("E_chi for {c:?}"));
            }
            let sum = idems.iter().fold(y.zero(), |acc, e| acc.add(e));
            t.record(sum == y.unit(), || "sum of all E_chi".into());
            Ok(())
        }),
        run_check("e_chi_orthogonal", |t| {
            let idems = idems.clone()?;
            let all_pairs = idems.len() <= 27;
            for (a, b) in (0..idems.len()).tuple_combinations() {
                if all_pairs || b == a + 1 {
                    t.record(idems[a].mul(&idems[b]).is_zero(), || format!("{:?} {:?}", chars[a], chars[b]));
                }
            }
            Ok(())
        }),
        run_check("framing_acts_by_character", |t| {
            let idems = idems.clone()?;
            for (c, e) in chars.iter().zip(&idems) {
                for j in 1..=n {
                    let lhs = y.gen_t(j)?.mul(e);
                    t.record(lhs == e.scale(&zeta(c[j - 1])), || format!("t{j} on {c:?}"));
                }
            }
            Ok(())
        }),
        run_check("g_permutes_characters", |t| {
            // g_i E_χ = E_{s_i(χ)} g_i
            let idems = idems.clone()?;
            for (c, e) in chars.iter().zip(&idems) {
                for i in 1..n {
                    let mut sc = c.clone();
                    sc.swap(i - 1, i);
                    let g = y.gen_g(i)?;
                    t.record(g.mul(e) == y.e_chi(&sc)?.mul(&g), || format!("g{i} on {c:?}"));
                }
            }
            Ok(())
        }),
        run_check("e_mu_central_and_complete", |t| {
            let mut sum = y.zero();
            for mu in compositions(d, n) {
                let e = y.e_mu_of(&mu)?;
                for i in 1..n {
                    let g = y.gen_g(i)?;
                    t.record(g.mul(&e) == e.mul(&g), || format!("g{i} and E_{mu:?}"));
                }
                for j in 1..=n {
                    let tj = y.gen_t(j)?;
                    t.record(tj.mul(&e) == e.mul(&tj), || format!("t{j} and E_{mu:?}"));
                }
                sum = sum.add(&e);
            }
            t.record(sum == y.unit(), || "sum of all E_mu".into());
            Ok(())
        }),
        run_check("e_i_identities", |t| {
            for i in 1..n {
                let e = y.e(i)?;
                let g = y.gen_g(i)?;
                t.record(e.mul(&e) == e, || format!("e{i} idempotent"));
                t.record(e.mul(&g) == g.mul(&e), || format!("e{i} g{i}"));
                t.record(y.gen_t(i)?.mul(&e) == y.gen_t(i + 1)?.mul(&e), || format!("t{i} e{i}"));
            }
            Ok(())
        }),
    ]
}

fn iso_suite(y: &Arc<YAlgebra>, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let (d, n) = (y.d(), y.n());
    let order = y.order();
    let ctx = match IsoContext::new(y) {
        Ok(c) => c,
        Err(e) => return vec![run_check("iso_setup", |_| Err(e.into()))],
    };
    let h = ctx.hecke().clone();
    let one = RationalFunction::one(order);
    let images: Result<Vec<_>, _> = (0..y.dim())
        .map(|key| {
            let x = y.from_terms([(key, one.clone())]);
            ctx.psi_n(&x).map(|img| (x, img))
        })
        .collect();
    let mut checks = vec![
        run_check("integrality", |t| {
            for (x, img) in images.as_ref().map_err(|e| e.clone())? {
                for (mu, m) in &img.blocks {
                    for k in 0..m.size() {
                        for l in 0..m.size() {
                            t.record(m.get(k, l).is_laurent(), || format!("{x:?} in block {mu:?}"));
                        }
                    }
                }
            }
            Ok(())
        }),
        run_check("phi_after_psi_identity", |t| {
            for (x, img) in images.as_ref().map_err(|e| e.clone())? {
                t.record(&ctx.phi_n(img)? == x, || format!("{x:?}"));
            }
            Ok(())
        }),
        run_check("psi_after_phi_identity", |t| {
            for b in ctx.blocks() {
                let sub: Vec<&Permutation> = h.perms().iter().filter(|x| b.mu().in_young_subgroup(x)).collect();
                for (k, l) in (0..b.size()).cartesian_product(0..b.size()) {
                    for x in &sub {
                        let a = HMatrix::unit_matrix(&h, b.size(), k, l, h.g_perm(x));
                        t.record(b.psi(&b.phi(&a)?)? == a, || format!("G_{x:?} M_{{{},{}}} in {:?}", k + 1, l + 1, b.mu()));
                    }
                }
            }
            Ok(())
        }),
        run_check("homomorphism", |t| {
            for b in ctx.blocks() {
                for _ in 0..30 {
                    let x = random_element(y, rng, 4);
                    let z = random_element(y, rng, 4);
                    let lhs = b.psi(&x.mul(&z))?;
                    t.record(lhs == b.psi(&x)?.mul(&b.psi(&z)?), || format!("{x:?} * {z:?} in {:?}", b.mu()));
                }
            }
            Ok(())
        }),
        run_check("framing_image_diagonal", |t| {
            for b in ctx.blocks() {
                for j in 1..=n {
                    let img = b.psi(&y.gen_t(j)?)?;
                    let mut expected = HMatrix::zeros(&h, b.size());
                    for k in 0..b.size() {
                        let z = CyclotomicElement::zeta_pow(d as u32, b.character(k)[j - 1] as i64).lift_to(order)?;
                        expected.set(k, k, h.scalar(RationalFunction::constant(z)));
                    }
                    t.record(img == expected, || format!("t{j} in {:?}", b.mu()));
                }
            }
            Ok(())
        }),
        run_check("braid_image_structure", |t| {
            let q = RationalFunction::q(order);
            for b in ctx.blocks() {
                let j_set = b.mu().j_set();
                for i in 1..n {
                    let img = b.psi(&y.gen_g(i)?)?;
                    for k in 0..b.size() {
                        let (l, case) = b.cosets().deodhar(k, i);
                        let support: Vec<usize> = (0..b.size()).filter(|&c| !img.get(k, c).is_zero()).collect();
                        let ok = support == [l]
                            && !img.get(l, k).is_zero()
                            && match case {
                                DeodharCase::Descend(j) => j_set.contains(&j) && img.get(k, k) == &h.gen_g(j)?,
                                DeodharCase::Swap => {
                                    let e = img.get(k, l);
                                    *e == h.unit() || *e == h.scalar(q.clone())
                                }
                            };
                        t.record(ok, || format!("g{i}, row {} in {:?}", k + 1, b.mu()));
                    }
                }
            }
            Ok(())
        }),
    ];
    if n >= 3 {
        checks.push(run_check("ftl_generator_image", |t| {
            let gen = y.ftl_generator()?;
            let pair_sums: Vec<YElement> = (1..n - 1).map(|i| h.g_pair_sum(i)).collect::<Result<_, _>>()?;
            for b in ctx.blocks() {
                let img = b.psi(&gen)?;
                t.record(img.is_diagonal(), || format!("diagonal in {:?}", b.mu()));
                for k in 0..b.size() {
                    let c = b.character(k);
                    let equal = c[0] == c[1] && c[1] == c[2];
                    let entry = img.get(k, k);
                    let ok = if equal { pair_sums.contains(entry) } else { entry.is_zero() };
                    t.record(ok, || format!("entry {} in {:?}", k + 1, b.mu()));
                }
            }
            Ok(())
        }));
        checks.push(run_check("ctl_generator_image", |t| {
            let gen = y.ctl_generator()?;
            let g12 = h.g_pair_sum(1)?;
            for b in ctx.blocks() {
                let img = b.psi(&gen)?;
                for (k, l) in (0..b.size()).cartesian_product(0..b.size()) {
                    let c = b.character(k);
                    let trivial = k == l && c[..3].iter().all(|&v| v == 0);
                    let entry = img.get(k, l);
                    t.record(if trivial { *entry == g12 } else { entry.is_zero() }, || {
                        format!("entry ({}, {}) in {:?}", k + 1, l + 1, b.mu())
                    });
                }
            }
            Ok(())
        }));
    }
    checks
}

fn quotients_suite(y: &Arc<YAlgebra>, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let (d, n) = (y.d(), y.n());
    let one = RationalFunction::one(y.order());
    let mut checks = Vec::new();
    for which in [Quotient::Ftl, Quotient::Ctl] {
        let tag = match which {
            Quotient::Ftl => "ftl",
            Quotient::Ctl => "ctl",
        };
        let iso = match QuotientIso::new(y, which) {
            Ok(i) => i,
            Err(e) => {
                checks.push(run_check(&format!("{tag}_setup"), |_| Err(e.into())));
                continue;
            }
        };
        let dim = match which {
            Quotient::Ftl => dim_ftl(d, n),
            Quotient::Ctl => dim_ctl_by_k(d, n),
        };
        checks.push(run_check(&format!("{tag}_basis_count"), |t| {
            let count = iso.basis_labels().len() as u128;
            t.record(count == dim, || format!("{count} elements, dimension {dim}"));
            Ok(())
        }));
        if n >= 3 {
            checks.push(run_check(&format!("{tag}_admissibility"), |t| {
                for m in RepFamily::get(d, n, y.order()).modules() {
                    t.record(m.kills_generator(which)? == which.admits(m.shape()), || format!("{:?}", m.shape()));
                }
                Ok(())
            }));
            checks.push(run_check(&format!("{tag}_generator_killed"), |t| {
                t.record(iso.psi(&which.generator(y)?)?.is_zero(), String::new);
                Ok(())
            }));
            checks.push(run_check(&format!("{tag}_ideal_killed"), |t| {
                let gen = which.generator(y)?;
                for _ in 0..10 {
                    let a = random_element(y, rng, 2);
                    let b = random_element(y, rng, 2);
                    let x = a.mul(&gen).mul(&b);
                    t.record(iso.psi(&x)?.is_zero(), || format!("{a:?} * gen * {b:?}"));
                }
                Ok(())
            }));
        }
        checks.push(run_check(&format!("{tag}_psi_after_phi_identity"), |t| {
            for b in iso.basis() {
                t.record(iso.psi(&iso.phi(&b)?)? == b, || format!("{:?}", b.to_json()));
            }
            Ok(())
        }));
        checks.push(run_check(&format!("{tag}_phi_after_psi_mod_ideal"), |t| {
            for key in 0..y.dim() {
                let x = y.from_terms([(key, one.clone())]);
                let back = iso.phi(&iso.psi(&x)?)?;
                t.record(crate::reps::ideal_membership(&back.sub(&x), which)?, || format!("{x:?}"));
            }
            Ok(())
        }));
        checks.push(run_check(&format!("{tag}_homomorphism"), |t| {
            for _ in 0..10 {
                let a = random_element(y, rng, 4);
                let b = random_element(y, rng, 4);
                let lhs = iso.psi(&a.mul(&b))?;
                t.record(lhs == iso.mul(&iso.psi(&a)?, &iso.psi(&b)?)?, || format!("{a:?} * {b:?}"));
            }
            Ok(())
        }));
        if dim <= 64 {
            checks.push(run_check(&format!("{tag}_basis_independent"), |t| {
                let r = basis_rank(&iso, 2)?;
                t.record(r as u128 == dim, || format!("rank {r} of {dim}"));
                Ok(())
            }));
        }
    }
    checks
}

