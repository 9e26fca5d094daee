//! One JSON file per `(shape, p)` holding a [`SpechtData`].
//!
//! Each file starts with a self-describing header
//! `{format_version, p, shape, dims}` followed by the payload. Files with a
//! different `format_version` are treated as misses; files that fail to
//! parse or whose header disagrees with the payload are reported as
//! corrupt.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use log::debug;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Partition, Prime};
use crate::error::{Error, Result};
use crate::specht::{SpechtData, SpechtStore};

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable consulted by the CLI for the cache directory.
pub const CACHE_DIR_ENV: &str = "CSEXT_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub degree: usize,
    pub dim: usize,
    pub tabloids: usize,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    format_version: u32,
    p: u32,
    shape: Partition,
    dims: Dims,
    data: SpechtData,
}

#[derive(Deserialize)]
struct VersionProbe {
    format_version: u32,
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
    version: u32,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        Self::with_version(dir, FORMAT_VERSION)
    }

    /// A cache that reads and writes a specific format version.
    pub fn with_version(dir: impl Into<PathBuf>, version: u32) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir, version })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, shape: &Partition, p: Prime) -> PathBuf {
        let name = if shape.is_zero() {
            "empty".to_string()
        } else {
            shape.parts().iter().map(u32::to_string).collect::<Vec<_>>().join("-")
        };
        self.dir.join(format!("p{p}_{name}.json"))
    }

    pub fn cache_put(&self, data: &SpechtData) -> Result<()> {
        let p = Prime::new(data.modulus.get())?;
        let entry = Entry {
            format_version: self.version,
            p: p.get(),
            shape: data.shape.clone(),
            dims: Dims { degree: data.shape.degree(), dim: data.dim(), tabloids: data.basis.rows() },
            data: data.clone(),
        };
        let path = self.path_for(&data.shape, p);
        let tmp = path.with_extension("json.tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            serde_json::to_writer(&mut f, &entry)?;
            f.flush()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn cache_get(&self, shape: &Partition, p: Prime) -> Result<Option<SpechtData>> {
        let path = self.path_for(shape, p);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |reason: String| Error::CorruptCache { path: path.clone(), reason };
        let probe: VersionProbe = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        if probe.format_version != self.version {
            debug!("ignoring {} with format version {}", path.display(), probe.format_version);
            return Ok(None);
        }
        let entry: Entry = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        let d = &entry.data;
        let consistent = entry.p == p.get()
            && d.modulus.get() == p.get()
            && entry.shape == *shape
            && d.shape == *shape
            && entry.dims.dim == d.dim()
            && entry.dims.degree == shape.degree()
            && entry.dims.tabloids == d.basis.rows()
            && d.basis.cols() == d.dim()
            && d.gram.rows() == d.dim()
            && d.rep.dim == d.dim();
        if !consistent {
            return Err(corrupt("header does not match payload".into()));
        }
        Ok(Some(entry.data))
    }
}

impl SpechtStore for DiskCache {
    fn load(&self, shape: &Partition, p: Prime) -> Result<Option<SpechtData>> {
        self.cache_get(shape, p)
    }

    fn store(&self, data: &SpechtData) -> Result<()> {
        self.cache_put(data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specht::{specht_data, DegreeCap, SpechtEngine};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn roundtrip_and_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        assert!(cache.cache_get(&part(&[2, 2]), pr(3)).unwrap().is_none());

        let data = specht_data(&part(&[2, 2]), pr(3), DegreeCap::DEFAULT).unwrap();
        cache.cache_put(&data).unwrap();
        assert_eq!(cache.cache_get(&part(&[2, 2]), pr(3)).unwrap(), Some(data));
        assert!(cache.cache_get(&part(&[2, 2]), pr(5)).unwrap().is_none());

        let bumped = DiskCache::with_version(dir.path(), FORMAT_VERSION + 1).unwrap();
        assert!(bumped.cache_get(&part(&[2, 2]), pr(3)).unwrap().is_none());
    }

    #[test]
    fn header_is_self_describing() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        let data = specht_data(&part(&[2, 1]), pr(5), DegreeCap::DEFAULT).unwrap();
        cache.cache_put(&data).unwrap();
        let text = fs::read_to_string(cache.path_for(&part(&[2, 1]), pr(5))).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["format_version"], 1);
        assert_eq!(v["p"], 5);
        assert_eq!(v["shape"], serde_json::json!([2, 1]));
        assert_eq!(v["dims"], serde_json::json!({"degree": 3, "dim": 2, "tabloids": 3}));
    }

    #[test]
    fn corrupt_entry_is_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        let path = cache.path_for(&part(&[3, 1]), pr(3));
        fs::write(&path, "{\"format_version\": 1, \"p\": 3, garbage").unwrap();
        assert!(matches!(cache.cache_get(&part(&[3, 1]), pr(3)), Err(Error::CorruptCache { .. })));

        let engine = SpechtEngine::with_store(DegreeCap::DEFAULT, Box::new(cache.clone()));
        let built = engine.data(&part(&[3, 1]), pr(3)).unwrap();
        assert_eq!(cache.cache_get(&part(&[3, 1]), pr(3)).unwrap().as_ref(), Some(&*built));
    }
}
