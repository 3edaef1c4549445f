//! Memoized ideal powers, optionally persisted to a directory.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::json::{IdealDoc, FORMAT_VERSION};

/// Session cache of `I^s`, shared across threads.
///
/// Powers are computed incrementally from the highest cached one. Two threads
/// racing on the same power compute identical values; the first insertion
/// wins and both observe it, so the cache is linearizable.
///
/// With a directory attached, each computed power is also written to
/// `<dir>/<fingerprint>-<s>.json` and read back on later misses. Files whose
/// recorded base ideal differs from the requested one are ignored.
#[derive(Default)]
pub struct PowerCache {
    // entry k holds base^(k+1)
    mem: Mutex<HashMap<MonomialIdeal, Vec<Arc<MonomialIdeal>>>>,
    dir: Option<PathBuf>,
    computed: AtomicU64,
    loaded: AtomicU64,
}

#[derive(Serialize, Deserialize)]
struct PowerDoc {
    format: u32,
    exponent: u32,
    base: IdealDoc,
    ideal: IdealDoc,
}

impl PowerCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|source| Error::Io { path: dir.clone(), source })?;
        Ok(Self { dir: Some(dir), ..Self::default() })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Number of powers computed by multiplication so far.
    pub fn computed(&self) -> u64 {
        self.computed.load(Ordering::Relaxed)
    }

    /// Number of powers read back from the cache directory so far.
    pub fn loaded(&self) -> u64 {
        self.loaded.load(Ordering::Relaxed)
    }

    pub fn power(&self, base: &MonomialIdeal, s: u32) -> Result<Arc<MonomialIdeal>> {
        if s == 0 {
            return Ok(Arc::new(MonomialIdeal::unit(base.ring())));
        }
        let s = s as usize;
        let (mut have, mut acc) = {
            let mem = self.mem.lock().expect("power cache poisoned");
            match mem.get(base) {
                Some(v) if v.len() >= s => return Ok(v[s - 1].clone()),
                Some(v) if !v.is_empty() => (v.len(), v[v.len() - 1].clone()),
                _ => (0, Arc::new(MonomialIdeal::unit(base.ring()))),
            }
        };
        while have < s {
            let k = have + 1;
            let next = match self.load(base, k)? {
                Some(p) => p,
                None => {
                    let p = acc.product(base)?;
                    self.computed.fetch_add(1, Ordering::Relaxed);
                    self.store(base, k, &p)?;
                    p
                }
            };
            acc = self.insert(base, k, Arc::new(next));
            have = k;
        }
        Ok(acc)
    }

    /// `[I^0, I^1, ..., I^up_to]`.
    pub fn powers(&self, base: &MonomialIdeal, up_to: u32) -> Result<Vec<Arc<MonomialIdeal>>> {
        self.power(base, up_to)?;
        (0..=up_to).map(|s| self.power(base, s)).collect()
    }

    fn insert(&self, base: &MonomialIdeal, k: usize, value: Arc<MonomialIdeal>) -> Arc<MonomialIdeal> {
        let mut mem = self.mem.lock().expect("power cache poisoned");
        let v = mem.entry(base.clone()).or_default();
        if v.len() >= k {
            v[k - 1].clone()
        } else {
            debug_assert_eq!(v.len(), k - 1);
            v.push(value.clone());
            value
        }
    }

    fn path_for(&self, base: &MonomialIdeal, k: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}-{k}.json", base.fingerprint())))
    }

    fn load(&self, base: &MonomialIdeal, k: usize) -> Result<Option<MonomialIdeal>> {
        let Some(path) = self.path_for(base, k) else {
            return Ok(None);
        };
        let Ok(text) = fs::read_to_string(&path) else {
            return Ok(None);
        };
        let Ok(doc) = serde_json::from_str::<PowerDoc>(&text) else {
            return Ok(None);
        };
        if doc.format != FORMAT_VERSION || doc.exponent as usize != k {
            return Ok(None);
        }
        match (MonomialIdeal::try_from(doc.base), MonomialIdeal::try_from(doc.ideal)) {
            (Ok(b), Ok(p)) if &b == base => {
                self.loaded.fetch_add(1, Ordering::Relaxed);
                Ok(Some(p))
            }
            _ => Ok(None),
        }
    }

    fn store(&self, base: &MonomialIdeal, k: usize, power: &MonomialIdeal) -> Result<()> {
        let Some(path) = self.path_for(base, k) else {
            return Ok(());
        };
        let doc = PowerDoc {
            format: FORMAT_VERSION,
            exponent: k as u32,
            base: base.into(),
            ideal: power.into(),
        };
        let tmp = path.with_extension(format!("tmp{}-{:?}", std::process::id(), std::thread::current().id()));
        let text = serde_json::to_string(&doc)?;
        fs::write(&tmp, text)
            .and_then(|()| fs::rename(&tmp, &path))
            .map_err(|source| Error::Io { path, source })
    }
}
