use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

/// Read-through JSON cache, one file per key named by the hex SHA-256 of the key.
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn key(operation: &str, params: &Value) -> String {
        let mut h = Sha256::new();
        h.update(operation.as_bytes());
        h.update([0u8]);
        h.update(params.to_string().as_bytes());
        hex::encode(h.finalize())
    }

    pub fn path_for(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Returns the cached value for `(operation, params)` or runs `producer` and stores it.
    /// Unreadable entries are recomputed and overwritten; `warn` receives a note.
    pub fn get_or_compute<E>(
        &self,
        operation: &str,
        params: &Value,
        warn: &mut dyn Write,
        producer: impl FnOnce() -> Result<Value, E>,
    ) -> Result<Value, E> {
        let Some(path) = self.path_for(&Cache::key(operation, params)) else {
            return producer();
        };
        if let Ok(bytes) = fs::read(&path) {
            match serde_json::from_slice::<Value>(&bytes) {
                Ok(v) => return Ok(v),
                Err(e) => {
                    let _ = writeln!(warn, "warning: corrupt cache entry {} ({e}); recomputing", path.display());
                }
            }
        }
        let value = producer()?;
        if let Err(e) = store(&path, &value) {
            let _ = writeln!(warn, "warning: could not write cache entry {}: {e}", path.display());
        }
        Ok(value)
    }
}

fn store(path: &Path, value: &Value) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let nonce = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos())
        .unwrap_or(0);
    let tmp = dir.join(format!(".{}.{}.{nonce}.tmp", path.file_name().unwrap().to_string_lossy(), std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(serde_json::to_string_pretty(value)?.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// `$XDG_CACHE_HOME/admissible`, else `$HOME/.cache/admissible`.
pub fn default_dir() -> Option<PathBuf> {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|x| !x.is_empty()) {
        return Some(PathBuf::from(x).join("admissible"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("admissible"))
}
