//! Exhaustive positivity sweeps with an append-only JSONL cache.
//!
//! The cache starts with one header line recording the engine version and
//! conventions, followed by one structure table per line. Lines are keyed by
//! `(type, basis, u-word, v-word)`; a rerun only computes missing keys and
//! appends them in pair order.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use eqschub::json::structure_table_json;
use eqschub::{
    positivity_certificate, restriction_table, structure_constants, verify_product_identity,
    y_structure_constants, Basis, Error, RestrictionTable, RootSystem, WeylElement,
    ENGINE_VERSION,
};

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub system: RootSystem,
    pub max_length: usize,
    pub basis: Basis,
    /// Worker threads; 0 lets the pool pick.
    pub jobs: usize,
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub system: String,
    pub max_length: usize,
    pub basis: Basis,
    pub pairs: usize,
    pub fails: Vec<SweepFailure>,
    pub wall_time: Duration,
    pub cache: Option<PathBuf>,
    /// Pairs computed in this run (the rest came from the cache).
    pub computed: usize,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.fails.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    fn cache_text(&self) -> String {
        self.cache
            .as_ref()
            .map_or_else(|| "none".to_string(), |p| p.display().to_string())
    }

    /// Deterministic summary; wall time is deliberately left out.
    pub fn to_json(&self) -> Value {
        json!({
            "type": self.system,
            "max_length": self.max_length,
            "basis": self.basis.as_str(),
            "pairs": self.pairs,
            "fails": self.fails,
            "verdict": self.verdict(),
            "cache": self.cache_text(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "type: {}\nmax-length: {}\nbasis: {}\npairs: {}\nfails: {}\n",
            self.system,
            self.max_length,
            self.basis,
            self.pairs,
            self.fails.len()
        );
        for f in &self.fails {
            out.push_str(&format!(
                "  fail u={} v={}: {}\n",
                word_text(&f.u),
                word_text(&f.v),
                f.reason
            ));
        }
        out.push_str(&format!("verdict: {}\ncache: {}\n", self.verdict(), self.cache_text()));
        out
    }

    pub fn to_csv(&self) -> String {
        format!(
            "type,max_length,basis,pairs,fails,verdict\n{},{},{},{},{},{}\n",
            csv_field(&self.system),
            self.max_length,
            self.basis,
            self.pairs,
            self.fails.len(),
            self.verdict()
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn word_text(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn cache_header() -> Value {
    json!({
        "header": {
            "engine": format!("eqschub {ENGINE_VERSION}"),
            "conventions": {
                "restriction": "KK",
                "pairing": "a[i][j] = <alpha_j, alpha_i^vee>",
                "words": "1-based letters; s_i1...s_ik acts right-to-left",
                "monomial_order": "graded lex, descending",
            }
        }
    })
}

type Key = (String, String, Vec<usize>, Vec<usize>);

fn key_of(line: &Value) -> Option<Key> {
    let word = |v: &Value| -> Option<Vec<usize>> {
        v.as_array()?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize))
            .collect()
    };
    Some((
        line.get("type")?.as_str()?.to_string(),
        line.get("basis")?.as_str()?.to_string(),
        word(line.get("u")?)?,
        word(line.get("v")?)?,
    ))
}

/// Failure reason recorded in a cache line, if any.
fn line_failure(line: &Value) -> Option<String> {
    if line.get("identity").and_then(Value::as_str) != Some("holds") {
        return Some("product identity fails".into());
    }
    let verdict = line.pointer("/certificate/verdict").and_then(Value::as_str);
    if verdict != Some("pass") {
        return Some("positivity certificate fails".into());
    }
    None
}

fn read_cache(path: &Path) -> Result<HashMap<Key, Value>, CliError> {
    let cache_err = |reason: String| CliError::Cache {
        path: path.display().to_string(),
        reason,
    };
    let mut out = HashMap::new();
    if !path.exists() {
        return Ok(out);
    }
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        None => return Ok(out),
        Some(first) => {
            let header: Value =
                serde_json::from_str(first).map_err(|e| cache_err(format!("bad header: {e}")))?;
            if header != cache_header() {
                return Err(cache_err("header does not match this engine".into()));
            }
        }
    }
    for (n, line) in lines.enumerate() {
        let value: Value = serde_json::from_str(line)
            .map_err(|e| cache_err(format!("line {}: {e}", n + 2)))?;
        let key = key_of(&value).ok_or_else(|| cache_err(format!("line {}: missing key", n + 2)))?;
        out.insert(key, value);
    }
    Ok(out)
}

/// Pairs swept for bound `k`: everything when the range is the whole group,
/// otherwise `l(u), l(v) <= k / 2` so every product stays inside the bound.
fn sweep_elements(rs: &RootSystem, k: usize) -> Result<Vec<WeylElement>, Error> {
    let range = rs.enumerate_upto(k)?;
    if range.is_complete() {
        return Ok(range.elements().to_vec());
    }
    Ok(range
        .elements()
        .iter()
        .filter(|w| w.length() <= k / 2)
        .cloned()
        .collect())
}

fn compute_line(
    table: &RestrictionTable,
    basis: Basis,
    u: &WeylElement,
    v: &WeylElement,
) -> Result<Value, Error> {
    let st = match basis {
        Basis::X => structure_constants(table, u, v)?,
        Basis::Y => y_structure_constants(table, u, v)?,
    };
    let cert = positivity_certificate(&st);
    let identity = verify_product_identity(table, &st)?;
    let mut line = structure_table_json(&st, &cert);
    line["identity"] = json!(if identity.holds() { "holds" } else { "fails" });
    Ok(line)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, CliError> {
    let start = Instant::now();
    let rs = &cfg.system;
    if cfg.basis == Basis::Y && !rs.is_finite() {
        return Err(Error::NotFiniteType.into());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;

    let elements = sweep_elements(rs, cfg.max_length)?;
    let keys: Vec<(Key, &WeylElement, &WeylElement)> = elements
        .iter()
        .flat_map(|u| elements.iter().map(move |v| (u, v)))
        .map(|(u, v)| {
            let key = (
                rs.name().to_string(),
                cfg.basis.as_str().to_string(),
                u.word_1based(),
                v.word_1based(),
            );
            (key, u, v)
        })
        .collect();

    let cached = match &cfg.cache {
        Some(path) => read_cache(path)?,
        None => HashMap::new(),
    };
    let missing: Vec<&(Key, &WeylElement, &WeylElement)> =
        keys.iter().filter(|(k, _, _)| !cached.contains_key(k)).collect();

    let fresh: Vec<Value> = if missing.is_empty() {
        Vec::new()
    } else {
        let bound = match cfg.basis {
            Basis::X => cfg.max_length,
            Basis::Y => rs.longest_element()?.length(),
        };
        pool.install(|| -> Result<Vec<Value>, Error> {
            let table = restriction_table(rs, bound)?;
            missing
                .par_iter()
                .map(|(_, u, v)| compute_line(&table, cfg.basis, u, v))
                .collect()
        })?
    };

    if let Some(path) = &cfg.cache {
        if !fresh.is_empty() {
            let new_file = fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
            let mut f = OpenOptions::new().create(true).append(true).open(path)?;
            let mut buf = String::new();
            if new_file {
                buf.push_str(&cache_header().to_string());
                buf.push('\n');
            }
            for line in &fresh {
                buf.push_str(&line.to_string());
                buf.push('\n');
            }
            f.write_all(buf.as_bytes())?;
        }
    }

    let fresh_by_key: HashMap<Key, &Value> = missing
        .iter()
        .zip(&fresh)
        .map(|((k, _, _), line)| (k.clone(), line))
        .collect();
    let mut fails = Vec::new();
    for (key, u, v) in &keys {
        let line = cached.get(key).or_else(|| fresh_by_key.get(key).copied());
        let line = line.expect("every key is cached or computed");
        if let Some(reason) = line_failure(line) {
            fails.push(SweepFailure {
                u: u.word_1based(),
                v: v.word_1based(),
                reason,
            });
        }
    }
    Ok(SweepReport {
        system: rs.name().to_string(),
        max_length: cfg.max_length,
        basis: cfg.basis,
        pairs: keys.len(),
        fails,
        wall_time: start.elapsed(),
        cache: cfg.cache.clone(),
        computed: fresh.len(),
    })
}
