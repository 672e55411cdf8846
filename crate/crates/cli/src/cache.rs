//! On-disk cache of command results as versioned JSON files.
//!
//! A file is keyed by `(d, n, kind, convention version)`. The convention
//! version changes whenever coset, tableau or Jones-basis ordering changes,
//! which invalidates every older file.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

/// Bumped on any change of enumeration or indexing conventions.
pub const CONVENTION_VERSION: u32 = 1;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, d: usize, n: usize, kind: &str) -> PathBuf {
        let safe: String = kind
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
            .collect();
        self.dir.join(format!("{safe}-d{d}-n{n}-v{CONVENTION_VERSION}.json"))
    }

    /// The cached value, if a file with matching key fields exists.
    pub fn load(&self, d: usize, n: usize, kind: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(d, n, kind)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        let matches = v["version"] == json!(CONVENTION_VERSION)
            && v["d"] == json!(d)
            && v["n"] == json!(n)
            && v["kind"] == json!(kind);
        matches.then(|| v["data"].clone())
    }

    pub fn store(&self, d: usize, n: usize, kind: &str, data: &Value) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let record = json!({
            "version": CONVENTION_VERSION,
            "d": d,
            "n": n,
            "kind": kind,
            "data": data,
        });
        let tmp = self.path(d, n, kind).with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&record)?)?;
        fs::rename(tmp, self.path(d, n, kind))
    }

    /// Returns the cached value or computes and stores it. Failures to write
    /// the cache are ignored.
    pub fn get_or_compute<E>(
        cache: Option<&Self>,
        d: usize,
        n: usize,
        kind: &str,
        compute: impl FnOnce() -> Result<Value, E>,
    ) -> Result<Value, E> {
        if let Some(v) = cache.and_then(|c| c.load(d, n, kind)) {
            return Ok(v);
        }
        let v = compute()?;
        if let Some(c) = cache {
            let _ = c.store(d, n, kind, &v);
        }
        Ok(v)
    }
}
