//! On-disk cache for built Hom complexes, keyed by a canonical hash of the
//! input graphs, the construction flags, and the tool version.

use std::fs;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::graph::Graph;
use crate::hom::HomComplex;

/// Canonical cache key: sha256 over the graph serializations, flags, and
/// version, hex-encoded.
pub fn cache_key(source: &Graph, target: &Graph, dim_cap: Option<usize>, version: &str) -> String {
    let mut h = Sha256::new();
    h.update(source.to_text().as_bytes());
    h.update([0u8]);
    h.update(target.to_text().as_bytes());
    h.update([0u8]);
    h.update(format!("dim_cap={dim_cap:?}").as_bytes());
    h.update([0u8]);
    h.update(version.as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub struct ComplexCache {
    dir: PathBuf,
}

impl ComplexCache {
    pub fn new(dir: PathBuf) -> Self {
        ComplexCache { dir }
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Returns the cached complex if present and intact; corrupt entries are
    /// treated as misses.
    pub fn load(&self, key: &str) -> Option<HomComplex> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        HomComplex::from_cache_string(&text).ok()
    }

    /// Stores atomically (write to a temp file, then rename).
    pub fn store(&self, key: &str, x: &HomComplex) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(".{key}.tmp"));
        fs::write(&tmp, x.to_cache_string())?;
        fs::rename(&tmp, self.path(key))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::DEFAULT_CELL_CAP;

    #[test]
    fn round_trip_and_key_sensitivity() {
        let g = Graph::cycle(5).unwrap();
        let h = Graph::complete(3).unwrap();
        let x = HomComplex::build(&g, &h, None, DEFAULT_CELL_CAP).unwrap();
        let dir = std::env::temp_dir().join(format!("homcx-cache-test-{}", std::process::id()));
        let cache = ComplexCache::new(dir.clone());
        let key = cache_key(&g, &h, None, "test");
        assert!(cache.load(&key).is_none());
        cache.store(&key, &x).unwrap();
        let y = cache.load(&key).unwrap();
        assert_eq!(x.cells, y.cells);
        assert_eq!(x.cover, y.cover);
        assert_eq!(x.to_cache_string(), y.to_cache_string());
        // a different flag or version changes the key
        assert_ne!(key, cache_key(&g, &h, Some(2), "test"));
        assert_ne!(key, cache_key(&g, &h, None, "test2"));
        assert_ne!(key, cache_key(&h, &g, None, "test"));
        std::fs::remove_dir_all(dir).ok();
    }
}
