//! Process-wide memoization of the expensive series, keyed by truncation.
//!
//! The configuration series and the two necklace series are pure functions of
//! the truncation, and the alternating-multiplicity queries hit them once per
//! degree; recomputing a degree-12 plethysm on every query would dominate the
//! run time. The coarse strategy here (hold the lock while computing) is fine
//! because computations never re-enter their own cache.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::series::SymSeries;

pub(crate) struct SeriesCache(OnceLock<Mutex<HashMap<usize, SymSeries>>>);

impl SeriesCache {
    pub(crate) const fn new() -> Self {
        SeriesCache(OnceLock::new())
    }

    pub(crate) fn get_or(&self, key: usize, compute: impl FnOnce() -> SymSeries) -> SymSeries {
        let map = self.0.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().unwrap();
        guard.entry(key).or_insert_with(compute).clone()
    }

    /// Lookup without computing, for fallible producers that insert manually.
    pub(crate) fn get(&self, key: usize) -> Option<SymSeries> {
        let map = self.0.get_or_init(|| Mutex::new(HashMap::new()));
        map.lock().unwrap().get(&key).cloned()
    }

    pub(crate) fn insert(&self, key: usize, value: SymSeries) {
        let map = self.0.get_or_init(|| Mutex::new(HashMap::new()));
        map.lock().unwrap().insert(key, value);
    }
}

/// `configuration_series(truncation)` results.
pub(crate) static CONFIGURATION: SeriesCache = SeriesCache::new();

/// Rotation-averaged necklace series by truncation.
pub(crate) static CYCLIC: SeriesCache = SeriesCache::new();

/// Rotation-and-reflection-averaged necklace series by truncation; only
/// populated by successful, integrality-checked computations.
pub(crate) static DIHEDRAL: SeriesCache = SeriesCache::new();
