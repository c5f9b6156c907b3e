//! Persistent cache of lattice-point counts.
//!
//! One JSON object per line:
//! `{"s":3,"n":2,"mode":"closed","count":"288"}`. Counts are decimal strings
//! so they survive JSON consumers limited to 53-bit integers.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::CountMode;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub s: u32,
    pub n: u64,
    pub mode: CountMode,
}

/// One line of the cache file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub s: u32,
    pub n: u64,
    pub mode: CountMode,
    pub count: String,
}

impl CacheRecord {
    fn new(key: CacheKey, count: &BigUint) -> Self {
        Self {
            s: key.s,
            n: key.n,
            mode: key.mode,
            count: count.to_str_radix(10),
        }
    }

    pub fn key(&self) -> CacheKey {
        CacheKey {
            s: self.s,
            n: self.n,
            mode: self.mode,
        }
    }
}

/// Many readers, one writer. Appends go straight to the backing file.
#[derive(Debug)]
pub struct EhrhartCache {
    path: Option<PathBuf>,
    entries: RwLock<BTreeMap<CacheKey, BigUint>>,
    writer: Mutex<Option<File>>,
}

impl EhrhartCache {
    pub fn in_memory() -> Self {
        Self {
            path: None,
            entries: RwLock::new(BTreeMap::new()),
            writer: Mutex::new(None),
        }
    }

    /// Loads `path` if it exists; new entries are appended to it.
    ///
    /// Malformed lines and conflicting duplicate records are errors.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let cache_err = |message: String| Error::Cache {
            path: path.clone(),
            message,
        };
        let mut entries = BTreeMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CacheRecord = serde_json::from_str(&line)
                    .map_err(|e| cache_err(format!("line {}: {e}", lineno + 1)))?;
                let count = BigUint::parse_bytes(rec.count.as_bytes(), 10).ok_or_else(|| {
                    cache_err(format!("line {}: bad count {:?}", lineno + 1, rec.count))
                })?;
                if let Some(prev) = entries.insert(rec.key(), count.clone()) {
                    if prev != count {
                        return Err(cache_err(format!(
                            "line {}: conflicting counts {prev} and {count} for {:?}",
                            lineno + 1,
                            rec.key()
                        )));
                    }
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Self {
            path: Some(path),
            entries: RwLock::new(entries),
            writer: Mutex::new(Some(file)),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, key: &CacheKey) -> Option<BigUint> {
        self.entries.read().unwrap().get(key).cloned()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Records a count. Re-inserting an equal count is a no-op; a different one is an error.
    pub fn insert(&self, key: CacheKey, count: BigUint) -> Result<()> {
        let mut writer = self.writer.lock().unwrap();
        {
            let mut entries = self.entries.write().unwrap();
            match entries.get(&key) {
                Some(prev) if *prev == count => return Ok(()),
                Some(prev) => {
                    return Err(Error::Inconsistent(format!(
                        "cache holds {prev} for {key:?}, recomputed {count}"
                    )))
                }
                None => {
                    entries.insert(key, count.clone());
                }
            }
        }
        if let Some(file) = writer.as_mut() {
            let line = serde_json::to_string(&CacheRecord::new(key, &count))
                .expect("cache record serializes");
            writeln!(file, "{line}")?;
            file.flush()?;
        }
        Ok(())
    }

    /// All records in key order.
    pub fn records(&self) -> Vec<CacheRecord> {
        self.entries
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| CacheRecord::new(*k, v))
            .collect()
    }

    /// Drops every entry and truncates the backing file.
    pub fn clear(&self) -> Result<()> {
        let mut writer = self.writer.lock().unwrap();
        self.entries.write().unwrap().clear();
        if let Some(path) = &self.path {
            fs::write(path, b"")?;
            *writer = Some(OpenOptions::new().append(true).open(path)?);
        }
        Ok(())
    }
}
