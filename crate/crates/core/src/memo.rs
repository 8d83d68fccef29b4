//! Process-wide memo tables for pure per-n computations.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

pub(crate) struct Memo<K, V> {
    cell: OnceLock<Mutex<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Copy, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            cell: OnceLock::new(),
        }
    }

    /// Cached value for `key`, computing it on a miss. Errors are not cached.
    /// The lock is not held while computing, so two threads may both
    /// compute the same entry; the results are identical.
    pub(crate) fn get_or_try<E>(
        &self,
        key: K,
        compute: impl FnOnce() -> Result<V, E>,
    ) -> Result<V, E> {
        let map = self.cell.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = map.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = compute()?;
        map.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }
}
