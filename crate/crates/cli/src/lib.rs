//! Command-line front end: argument definitions and command execution.
//! Every command produces one JSON value.

pub mod cache;
pub mod expr;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;
use yokonuma::isomaps::{reducer, FactorKind, IsoError, QuotientIso};
use yokonuma::permgroup::{compositions, CosetSystem, Permutation};
use yokonuma::reps::{Quotient, RepModule};
use yokonuma::tableaux::{
    count_standard_d, dim_ctl, dim_ftl, dim_tl, dim_y, enumerate_d_partitions, jones_pairs, standard_tableaux,
    DPartition, JonesMode,
};
use yokonuma::verify::{self, Suite};
use yokonuma::ykalgebra::{YAlgebra, YError};

use cache::Cache;
use expr::{EvalError, ParseError};

#[derive(Debug, Parser)]
#[command(name = "yokonuma", version, about = "Exact computations in Yokonuma-Hecke algebras and their Temperley-Lieb quotients")]
pub struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for cached results; caching is off when unset.
    #[arg(long, global = true, env = "YOKONUMA_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DimKind {
    Y,
    Tl,
    Ftl,
    Ctl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Dpartitions,
    Tableaux,
    Jonespairs,
    Cosets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuotientKind {
    Ftl,
    Ctl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Relations,
    Idempotents,
    Iso,
    Quotients,
    Dims,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Idempotents => Suite::Idempotents,
            SuiteArg::Iso => Suite::Iso,
            SuiteArg::Quotients => Suite::Quotients,
            SuiteArg::Dims => Suite::Dims,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of Y_{d,n}, TL_n, FTL_{d,n} or CTL_{d,n}.
    Dim {
        kind: DimKind,
        #[arg(short, default_value_t = 1)]
        d: usize,
        #[arg(short)]
        n: usize,
    },
    /// List d-partitions, standard tableaux, Jones pairs or coset representatives.
    Enumerate {
        what: EnumKind,
        #[arg(short, default_value_t = 1)]
        d: usize,
        #[arg(short)]
        n: usize,
        /// Restrict tableaux to one shape.
        #[arg(long)]
        shape: Option<String>,
        /// List all Jones pairs (a basis of the Hecke algebra), not only the TL ones.
        #[arg(long)]
        all: bool,
    },
    /// Matrices of the generators on one irreducible representation.
    Rep {
        #[arg(short)]
        d: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
        /// Shape as JSON (`[[2,1],[1]]`) or with `|` between components (`2,1|1`).
        #[arg(long)]
        shape: String,
    },
    /// Normal form of an expression in the standard basis.
    Mul {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        n: usize,
        expr: String,
    },
    /// Basis of FTL_{d,n} or CTL_{d,n} as matrix-side labels.
    Basis {
        kind: QuotientKind,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        n: usize,
    },
    /// Run verification suites and report every check.
    Verify {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] YError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Eval(_) | CliError::Usage(_) | CliError::Algebra(_) => 2,
            CliError::Iso(_) | CliError::Io(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let kind = match self {
            CliError::Parse(_) => "parse",
            CliError::Eval(_) => "evaluation",
            CliError::Usage(_) => "usage",
            CliError::Algebra(_) => "algebra",
            CliError::Iso(_) => "isomorphism",
            CliError::Io(_) => "io",
        };
        let mut err = json!({ "kind": kind, "message": self.to_string() });
        if let CliError::Parse(p) = self {
            err["position"] = json!(p.position);
            err["expected"] = json!(p.expected);
        }
        json!({ "error": err })
    }
}

/// A command result: the JSON value and whether every check passed.
pub struct Outcome {
    pub value: Value,
    pub success: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, success: true }
    }
}

/// Parses `[[2,1],[1]]` or `2,1|1`.
pub fn parse_shape(text: &str) -> Result<DPartition, CliError> {
    let rows: Vec<Vec<usize>> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad shape {text:?}: {e}")))?
    } else {
        text.split('|')
            .map(|comp| {
                comp.split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| CliError::Usage(format!("bad shape {text:?}"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    DPartition::from_rows(&rows).map_err(CliError::Usage)
}

fn algebra(d: usize, n: usize) -> Result<std::sync::Arc<YAlgebra>, CliError> {
    if d == 0 || n == 0 {
        return Err(CliError::Usage(format!("need d >= 1 and n >= 1, got d = {d}, n = {n}")));
    }
    Ok(YAlgebra::new(d, n)?)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cache = cli.cache_dir.as_ref().map(Cache::new);
    match &cli.command {
        Command::Dim { kind, d, n } => {
            let dim = match kind {
                DimKind::Y => dim_y(*d, *n),
                DimKind::Tl => dim_tl(*n),
                DimKind::Ftl => dim_ftl(*d, *n),
                DimKind::Ctl => dim_ctl(*d, *n),
            };
            Ok(Outcome::ok(json!({ "dim": dim })))
        }
        Command::Enumerate { what, d, n, shape, all } => enumerate(*what, *d, *n, shape.as_deref(), *all).map(Outcome::ok),
        Command::Rep { d, n, shape } => rep(*d, *n, shape, cache.as_ref()),
        Command::Mul { d, n, expr } => {
            let alg = algebra(*d, *n)?;
            let x = expr::evaluate(&expr::parse(expr)?, &alg)?;
            Ok(Outcome::ok(json!({
                "d": d,
                "n": n,
                "normal_form": x.to_expression(),
                "terms": x.to_json(),
            })))
        }
        Command::Basis { kind, d, n } => {
            let which = match kind {
                QuotientKind::Ftl => Quotient::Ftl,
                QuotientKind::Ctl => Quotient::Ctl,
            };
            let tag = format!("basis-{}", if which == Quotient::Ftl { "ftl" } else { "ctl" });
            let value = Cache::get_or_compute(cache.as_ref(), *d, *n, &tag, || basis(which, *d, *n))?;
            Ok(Outcome::ok(value))
        }
        Command::Verify { d, n, suite } => {
            algebra(*d, *n)?;
            let suite = Suite::from(*suite);
            let tag = format!("verify-{}-seed{}", suite.name(), cli.seed);
            let value = Cache::get_or_compute(cache.as_ref(), *d, *n, &tag, || -> Result<Value, CliError> {
                Ok(verify::run(*d, *n, suite, cli.seed)?.to_json())
            })?;
            let success = value["passed"] == json!(true);
            Ok(Outcome { value, success })
        }
    }
}

fn enumerate(what: EnumKind, d: usize, n: usize, shape: Option<&str>, all: bool) -> Result<Value, CliError> {
    Ok(match what {
        EnumKind::Dpartitions => {
            let items: Vec<Value> = enumerate_d_partitions(d, n)
                .iter()
                .map(|s| json!({ "shape": s.to_json(), "dim": count_standard_d(s) }))
                .collect();
            json!({ "d": d, "n": n, "count": items.len(), "items": items })
        }
        EnumKind::Tableaux => {
            let shapes = match shape {
                Some(s) => vec![parse_shape(s)?],
                None => enumerate_d_partitions(d, n),
            };
            let items: Vec<Value> = shapes
                .iter()
                .map(|s| {
                    let ts: Vec<Value> = standard_tableaux(s).iter().map(|t| t.to_json()).collect();
                    json!({ "shape": s.to_json(), "count": ts.len(), "tableaux": ts })
                })
                .collect();
            json!({ "d": d, "n": n, "items": items })
        }
        EnumKind::Jonespairs => {
            let mode = if all { JonesMode::All } else { JonesMode::Tl };
            let items: Vec<Value> = jones_pairs(n, mode)
                .iter()
                .map(|p| json!({ "i": p.i, "k": p.k, "word": p.word() }))
                .collect();
            json!({ "n": n, "mode": if all { "all" } else { "tl" }, "count": items.len(), "items": items })
        }
        EnumKind::Cosets => {
            let items: Vec<Value> = compositions(d, n)
                .iter()
                .map(|mu| {
                    let sys = CosetSystem::new(mu);
                    let reps: Vec<Value> = (0..sys.len())
                        .map(|k| {
                            let p = sys.rep(k);
                            json!({
                                "k": k + 1,
                                "one_line": p.one_line(),
                                "word": p.reduced_word(),
                                "character": sys.character(k),
                            })
                        })
                        .collect();
                    json!({ "mu": mu.parts(), "size": sys.len(), "reps": reps })
                })
                .collect();
            json!({ "d": d, "n": n, "items": items })
        }
    })
}

fn rep(d: Option<usize>, n: Option<usize>, shape: &str, cache: Option<&Cache>) -> Result<Outcome, CliError> {
    let shape = parse_shape(shape)?;
    if d.is_some_and(|d| d != shape.d()) || n.is_some_and(|n| n != shape.size()) {
        return Err(CliError::Usage(format!(
            "shape {shape:?} has d = {} and n = {}",
            shape.d(),
            shape.size()
        )));
    }
    if shape.size() == 0 {
        return Err(CliError::Usage("shape must have at least one box".into()));
    }
    let (d, n) = (shape.d(), shape.size());
    let tag = format!("rep-{}", serde_json::to_string(&shape.to_json()).unwrap_or_default());
    let value = Cache::get_or_compute(cache, d, n, &tag, || -> Result<Value, CliError> {
        let m = RepModule::new(&shape);
        let mats = |f: &dyn Fn(usize) -> Result<yokonuma::linalg::RfMatrix, yokonuma::reps::RepError>,
                    range: std::ops::RangeInclusive<usize>| {
            range
                .map(|i| f(i).map(|x| x.to_json()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(e.to_string()))
        };
        let check = verify::module_relations(&m);
        Ok(json!({
            "shape": shape.to_json(),
            "d": d,
            "n": n,
            "dim": m.dim(),
            "basis": m.basis().iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            "t": mats(&|j| m.rep_t(j), 1..=n)?,
            "g": mats(&|i| m.rep_g(i), 1..=n - 1)?,
            "e": mats(&|i| m.rep_e(i), 1..=n - 1)?,
            "relations": check.to_json(),
        }))
    })?;
    let success = value["relations"]["passed"] == json!(true);
    Ok(Outcome { value, success })
}

fn basis(which: Quotient, d: usize, n: usize) -> Result<Value, CliError> {
    let y = algebra(d, n)?;
    let iso = QuotientIso::new(&y, which)?;
    let blocks = iso.iso().blocks();
    let mut elements = Vec::new();
    for label in iso.basis_labels() {
        let b = &blocks[label.block];
        let factors: Vec<Value> = iso
            .factor_kinds(label.block)
            .iter()
            .zip(b.mu().parts())
            .zip(&label.key)
            .map(|((kind, &len), &key)| -> Result<Value, CliError> {
                Ok(match kind {
                    FactorKind::Tl => {
                        let r = reducer(len, 1)?;
                        let p = &r.pairs()[key];
                        json!({ "tl": { "i": p.i, "k": p.k } })
                    }
                    FactorKind::Hecke => json!({ "hecke": Permutation::all(len)[key].one_line() }),
                })
            })
            .collect::<Result<_, _>>()?;
        elements.push(json!({
            "mu": b.mu().parts(),
            "k": label.k + 1,
            "l": label.l + 1,
            "factors": factors,
        }));
    }
    let dim = match which {
        Quotient::Ftl => dim_ftl(d, n),
        Quotient::Ctl => dim_ctl(d, n),
    };
    Ok(json!({
        "kind": if which == Quotient::Ftl { "ftl" } else { "ctl" },
        "d": d,
        "n": n,
        "dim": dim,
        "count": elements.len(),
        "elements": elements,
    }))
}
