//! On-disk character tables and the per-degree table store.
//!
//! One JSON file per degree, named `chartable-dNN.vV.json`. The payload holds
//! the degree, the partition order and every `χ_λ(μ)` as a decimal string;
//! a SHA-256 over the compact payload encoding guards against corruption.
//! The cache is optional: a missing, stale or corrupt file means recompute.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::character::{CharacterMemo, CharacterTable, Provenance};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub const FORMAT_NAME: &str = "hurwitz-character-table";
pub const FORMAT_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "HURWITZ_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablePayload {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub format: String,
    pub version: u32,
    pub payload: TablePayload,
    pub sha256: String,
}

impl TablePayload {
    pub fn from_table(table: &CharacterTable) -> Self {
        Self {
            degree: table.degree(),
            partitions: table.partitions().to_vec(),
            values: table
                .values()
                .iter()
                .map(|row| row.iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }

    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("payload serializes");
        hex::encode(Sha256::digest(bytes))
    }
}

impl TableFile {
    pub fn from_table(table: &CharacterTable) -> Self {
        let payload = TablePayload::from_table(table);
        Self {
            format: FORMAT_NAME.to_string(),
            version: FORMAT_VERSION,
            sha256: payload.digest(),
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table file serializes");
        s.push('\n');
        s
    }
}

pub fn cache_file_name(degree: usize) -> String {
    format!("chartable-d{degree:02}.v{FORMAT_VERSION}.json")
}

/// Writes `table` to `path` (via a temporary sibling and rename).
pub fn write_table(table: &CharacterTable, path: &Path) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| Error::CacheIo {
            path: parent.to_path_buf(),
            source,
        })?;
    }
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    fs::write(&tmp, TableFile::from_table(table).to_json()).map_err(|source| Error::CacheIo {
        path: tmp.clone(),
        source,
    })?;
    fs::rename(&tmp, path).map_err(|source| Error::CacheIo {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a table file. `Ok(None)` when the file is absent or carries a
/// different format version; an error when it is present but unreadable,
/// fails the digest check, or does not match `degree`.
pub fn read_table(path: &Path, degree: usize) -> Result<Option<CharacterTable>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(source) => {
            return Err(Error::CacheIo {
                path: path.to_path_buf(),
                source,
            })
        }
    };
    let malformed = |reason: String| Error::CacheFormat {
        path: path.to_path_buf(),
        reason,
    };
    let raw: serde_json::Value = serde_json::from_str(&text).map_err(|e| malformed(e.to_string()))?;
    if raw.get("format").and_then(|v| v.as_str()) != Some(FORMAT_NAME)
        || raw.get("version").and_then(|v| v.as_u64()) != Some(FORMAT_VERSION as u64)
    {
        return Ok(None);
    }
    let file: TableFile = serde_json::from_value(raw).map_err(|e| malformed(e.to_string()))?;
    if file.payload.digest() != file.sha256 {
        return Err(malformed("payload digest mismatch".into()));
    }
    if file.payload.degree != degree {
        return Err(malformed(format!(
            "expected degree {degree}, file holds degree {}",
            file.payload.degree
        )));
    }
    let values = file
        .payload
        .values
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.parse::<BigInt>().map_err(|e| malformed(format!("{v:?}: {e}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::from_values(
        degree,
        file.payload.partitions,
        values,
        Provenance::LoadedFromCache(path.to_path_buf()),
    )
    .map(Some)
    .map_err(|e| malformed(e.to_string()))
}

/// Hands out one shared table per degree, loading from and writing to the
/// cache directory when one is configured.
pub struct TableStore {
    memo: CharacterMemo,
    cache_dir: Option<PathBuf>,
    tables: RwLock<HashMap<usize, Arc<CharacterTable>>>,
}

impl TableStore {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        Self {
            memo: CharacterMemo::new(),
            cache_dir,
            tables: RwLock::new(HashMap::new()),
        }
    }

    /// Pure recompute, no files touched.
    pub fn in_memory() -> Self {
        Self::new(None)
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn memo(&self) -> &CharacterMemo {
        &self.memo
    }

    pub fn table(&self, degree: usize) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.tables.read().unwrap().get(&degree) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.load_or_compute(degree)?);
        let mut tables = self.tables.write().unwrap();
        Ok(Arc::clone(tables.entry(degree).or_insert(table)))
    }

    fn load_or_compute(&self, degree: usize) -> Result<CharacterTable> {
        let Some(dir) = &self.cache_dir else {
            return Ok(CharacterTable::compute(degree, &self.memo));
        };
        let path = dir.join(cache_file_name(degree));
        match read_table(&path, degree) {
            Ok(Some(table)) => return Ok(table),
            Ok(None) => {}
            // A damaged file is overwritten by a fresh computation.
            Err(Error::CacheFormat { .. }) => {}
            Err(e) => return Err(e),
        }
        let table = CharacterTable::compute(degree, &self.memo);
        write_table(&table, &path)?;
        Ok(table)
    }
}

impl Default for TableStore {
    fn default() -> Self {
        Self::in_memory()
    }
}
