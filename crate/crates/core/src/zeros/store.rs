use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::specfun::Order;

use super::bessel::bessel_zeros_range;
use super::cache::complex_cache_file_name;
use super::{
    cache_file_name, cache_load, cache_load_complex, cache_store, cache_store_complex,
    find_hn_zeros, find_struve_zeros, ComplexZeroSet, Family, ZeroTable, COMPLEX_ZERO_TOL,
    REAL_ZERO_TOL,
};

/// Environment variable naming a directory for cached zero tables.
pub const CACHE_DIR_ENV: &str = "RAYLEIGH_CACHE_DIR";

type Slot<T> = Arc<Mutex<Option<Arc<T>>>>;

/// Memoizes zero tables across threads, with an optional directory of JSON
/// caches behind the in-memory copy. Each (family, order) has its own lock,
/// so different tables are computed concurrently and the same table once.
#[derive(Debug, Default)]
pub struct ZeroStore {
    cache_dir: Option<PathBuf>,
    real: Mutex<HashMap<(Family, u64), Slot<ZeroTable>>>,
    complex: Mutex<HashMap<usize, Slot<ComplexZeroSet>>>,
}

impl ZeroStore {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        ZeroStore {
            cache_dir: Some(dir.into()),
            ..Self::default()
        }
    }

    /// Uses the directory named by `RAYLEIGH_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::with_cache_dir(dir),
            _ => Self::in_memory(),
        }
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    fn slot<K: std::hash::Hash + Eq, T>(map: &Mutex<HashMap<K, Slot<T>>>, key: K) -> Slot<T> {
        let mut map = map.lock().unwrap_or_else(|e| e.into_inner());
        map.entry(key).or_default().clone()
    }

    /// A table with at least `count` zeros; it may hold more.
    pub fn table(&self, family: Family, order: Order, count: usize) -> Result<Arc<ZeroTable>> {
        let slot = Self::slot(&self.real, (family, order.nu.to_bits()));
        let mut guard = slot.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(t) = guard.as_ref().filter(|t| t.count() >= count) {
            return Ok(t.clone());
        }
        let path = self
            .cache_dir
            .as_ref()
            .map(|d| d.join(cache_file_name(family, order.nu)));
        if let Some(path) = &path {
            let cached = cache_load(family, order.nu, count, path)?;
            if let Some(t) = cached.filter(|t| t.abs_tol() <= REAL_ZERO_TOL) {
                let t = Arc::new(t);
                *guard = Some(t.clone());
                return Ok(t);
            }
        }
        let have = guard.as_ref().map_or(0, |t| t.count());
        let table = match family {
            Family::BesselJ => {
                let mut zeros = guard.as_ref().map_or_else(Vec::new, |t| t.zeros().to_vec());
                zeros.extend(bessel_zeros_range(order, have + 1, count, REAL_ZERO_TOL)?);
                ZeroTable::new(family, order.nu, zeros, REAL_ZERO_TOL)?
            }
            // The scan restarts from the origin on the same grid, so a longer
            // table reproduces the shorter one bit for bit.
            Family::StruveH => find_struve_zeros(order, count.max(2 * have), REAL_ZERO_TOL)?,
        };
        if let Some(path) = &path {
            cache_store(&table, path)?;
        }
        let table = Arc::new(table);
        *guard = Some(table.clone());
        Ok(table)
    }

    /// The zeros of H_n.
    pub fn hn_zeros(&self, n: usize) -> Result<Arc<ComplexZeroSet>> {
        let slot = Self::slot(&self.complex, n);
        let mut guard = slot.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(set) = guard.as_ref() {
            return Ok(set.clone());
        }
        let path = self
            .cache_dir
            .as_ref()
            .map(|d| d.join(complex_cache_file_name(n)));
        let cached = match &path {
            Some(p) => cache_load_complex(n, p)?.filter(|s| s.abs_tol() <= COMPLEX_ZERO_TOL),
            None => None,
        };
        let set = match cached {
            Some(set) => set,
            None => {
                let set = find_hn_zeros(n, COMPLEX_ZERO_TOL)?;
                if let Some(p) = &path {
                    cache_store_complex(&set, p)?;
                }
                set
            }
        };
        let set = Arc::new(set);
        *guard = Some(set.clone());
        Ok(set)
    }
}
