//! Concurrent memo tables for the coefficient engines.
//!
//! Values are pure functions of their keys, so a racing insert can only ever
//! write the value already present; lookups never depend on scheduling.

use std::collections::HashMap;
use std::hash::Hash;

use parking_lot::RwLock;

pub struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.map.read().get(key).cloned()
    }

    pub fn insert(&self, key: K, value: V) {
        self.map.write().insert(key, value);
    }

    /// Returns the cached value or computes it without holding the lock.
    pub fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(key) {
            return v;
        }
        let v = compute();
        self.map.write().entry(key.clone()).or_insert_with(|| v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().clear();
    }

    /// Snapshot of all entries, sorted by key.
    pub fn entries(&self) -> Vec<(K, V)>
    where
        K: Ord,
    {
        let mut v: Vec<_> = self
            .map
            .read()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}
