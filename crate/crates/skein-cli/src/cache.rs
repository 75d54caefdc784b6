//! Persistent 6j cache: one JSON file per canonical key, written through a
//! temporary file and an atomic rename.

use crate::error::{CliError, CliResult};
use crate::serial::{parse_rational, CacheStats, FieldTable, JsonScalar, ScalarJson, SCHEMA};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use skein_core::calculus::SixjArgs;
use skein_core::scalar::{Cyclo, Ring};
use skein_core::skein::operators::evaluate_sixj;
use skein_core::skein::{SixjKey, SixjMethod, SixjProvider};
use skein_core::{Backend, ExactBackend, KernelError};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct StoredValue {
    schema: String,
    n: i64,
    kprime: i64,
    method: String,
    a: String,
    b: String,
    g: String,
    e1: i8,
    e2: i8,
    value: ScalarJson,
}

fn method_name(m: SixjMethod) -> &'static str {
    match m {
        SixjMethod::Closed => "closed",
        SixjMethod::Oracle => "oracle",
    }
}

/// Hex SHA-256 of the canonical key text.
pub fn key_digest(n: i64, kprime: i64, method: SixjMethod, key: &SixjKey) -> String {
    let text = format!(
        "{SCHEMA}|{n}|{kprime}|{}|{}|{}|{}|{}|{}",
        method_name(method),
        key.a,
        key.b,
        key.g,
        key.e1,
        key.e2
    );
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

/// Exact 6j values memoized in memory and, when a directory is set, on disk.
pub struct DiskSixjCache {
    dir: Option<PathBuf>,
    method: SixjMethod,
    memory: BTreeMap<SixjKey, Cyclo>,
    from_disk: Vec<SixjKey>,
    fields: FieldTable,
    stats: CacheStats,
}

impl DiskSixjCache {
    pub fn new(dir: Option<PathBuf>, method: SixjMethod) -> CliResult<Self> {
        if let Some(d) = &dir {
            std::fs::create_dir_all(d).map_err(|source| CliError::Io { path: d.display().to_string(), source })?;
        }
        Ok(Self { dir, method, memory: BTreeMap::new(), from_disk: Vec::new(), fields: FieldTable::default(), stats: CacheStats::default() })
    }

    pub fn stats(&self) -> &CacheStats {
        &self.stats
    }

    fn path(&self, b: &ExactBackend, key: &SixjKey) -> Option<PathBuf> {
        let root = b.root();
        self.dir.as_ref().map(|d| d.join(format!("{}.json", key_digest(root.n(), root.kprime(), self.method, key))))
    }

    fn load(&mut self, path: &Path, b: &ExactBackend, key: &SixjKey) -> Option<Cyclo> {
        let text = std::fs::read_to_string(path).ok()?;
        let stored: StoredValue = serde_json::from_str(&text).ok()?;
        let root = b.root();
        let same = stored.schema == SCHEMA
            && stored.n == root.n()
            && stored.kprime == root.kprime()
            && stored.method == method_name(self.method)
            && parse_rational(&stored.a).ok()? == key.a
            && parse_rational(&stored.b).ok()? == key.b
            && parse_rational(&stored.g).ok()? == key.g
            && (stored.e1, stored.e2) == (key.e1, key.e2);
        if !same {
            return None;
        }
        // A value from a smaller field embeds; one from an unrelated field is recomputed.
        Cyclo::from_json(&stored.value, &b.one(), &mut self.fields).ok()
    }

    fn store(&self, path: &Path, b: &ExactBackend, key: &SixjKey, value: &Cyclo) -> CliResult<()> {
        let root = b.root();
        let stored = StoredValue {
            schema: SCHEMA.into(),
            n: root.n(),
            kprime: root.kprime(),
            method: method_name(self.method).into(),
            a: key.a.to_string(),
            b: key.b.to_string(),
            g: key.g.to_string(),
            e1: key.e1,
            e2: key.e2,
            value: value.to_json(),
        };
        let io = |source| CliError::Io { path: path.display().to_string(), source };
        let tmp = path.with_extension(format!("tmp{}", rand::thread_rng().gen::<u64>()));
        let mut f = std::fs::File::create(&tmp).map_err(io)?;
        f.write_all(serde_json::to_string(&stored).expect("serializable").as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        std::fs::rename(&tmp, path).map_err(io)
    }

    /// Recomputes up to `count` values that were read from disk and
    /// compares them exactly.
    pub fn spot_check(&mut self, b: &ExactBackend, count: usize) -> CliResult<usize> {
        let mut keys = self.from_disk.clone();
        keys.shuffle(&mut rand::thread_rng());
        keys.truncate(count);
        for key in &keys {
            let fresh = evaluate_sixj(b, self.method, &key.args())?;
            if !fresh.equals(&self.memory[key]) {
                return Err(CliError::Failure(format!("cached 6j value for {key:?} disagrees with a fresh evaluation")));
            }
        }
        self.stats.spot_checked += keys.len() as u64;
        Ok(keys.len())
    }
}

impl SixjProvider<ExactBackend> for DiskSixjCache {
    fn sixj(&mut self, b: &ExactBackend, args: &SixjArgs) -> Result<Cyclo, KernelError> {
        let Some(key) = SixjKey::new(b.root().n(), args) else {
            self.stats.computed += 1;
            return evaluate_sixj(b, self.method, args);
        };
        if let Some(v) = self.memory.get(&key) {
            self.stats.memory_hits += 1;
            return Ok(v.clone());
        }
        let path = self.path(b, &key);
        if let Some(p) = &path {
            if let Some(v) = self.load(p, b, &key) {
                self.stats.disk_hits += 1;
                self.from_disk.push(key.clone());
                self.memory.insert(key, v.clone());
                return Ok(v);
            }
        }
        let v = evaluate_sixj(b, self.method, &key.args())?;
        self.stats.computed += 1;
        if let Some(p) = &path {
            // A failed write only costs a recomputation next time.
            let _ = self.store(p, b, &key, &v);
        }
        self.memory.insert(key, v.clone());
        Ok(v)
    }
}
