//! Exact Fibonacci numbers.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `F_0 ..= F_N` in exact integers, grown on demand.
#[derive(Debug, Clone)]
pub struct FibTable {
    values: Vec<BigUint>,
}

impl Default for FibTable {
    fn default() -> Self {
        Self::new()
    }
}

impl FibTable {
    pub fn new() -> Self {
        Self {
            values: vec![BigUint::zero(), BigUint::one()],
        }
    }

    /// Table holding at least `F_0 ..= F_limit`.
    pub fn with_limit(limit: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(limit);
        table
    }

    pub fn extend_to(&mut self, limit: usize) {
        while self.values.len() <= limit {
            let len = self.values.len();
            let next = &self.values[len - 1] + &self.values[len - 2];
            self.values.push(next);
        }
    }

    /// Largest index currently held.
    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&mut self, m: usize) -> &BigUint {
        self.extend_to(m);
        &self.values[m]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

fn shared() -> &'static RwLock<FibTable> {
    static TABLE: OnceLock<RwLock<FibTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(FibTable::new()))
}

/// `F_m`, served from a process-wide table. Readers only ever observe a
/// fully built prefix.
pub fn fib(m: usize) -> BigUint {
    {
        let table = shared().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.values.get(m) {
            return v.clone();
        }
    }
    let mut table = shared().write().unwrap_or_else(|e| e.into_inner());
    table.get(m).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(fib(0), BigUint::zero());
        assert_eq!(fib(1), BigUint::one());
        let first: Vec<u32> = (2..=7).map(|m| fib(m).try_into().unwrap()).collect();
        assert_eq!(first, [1, 2, 3, 5, 8, 13]);
        assert_eq!(fib(6), BigUint::from(8u32));
    }

    #[test]
    fn fib_30_against_u64_loop() {
        let (mut a, mut b) = (0u64, 1u64);
        for _ in 0..30 {
            (a, b) = (b, a + b);
        }
        assert_eq!(a, 832_040);
        assert_eq!(fib(30), BigUint::from(a));
    }

    #[test]
    fn recurrence_holds_on_large_table() {
        let table = FibTable::with_limit(500);
        let v = table.values();
        assert_eq!(table.limit(), 500);
        for m in 2..=500 {
            assert_eq!(v[m], &v[m - 1] + &v[m - 2]);
        }
        assert_eq!(fib(500), v[500]);
    }

    #[test]
    fn concurrent_readers_agree() {
        let results: Vec<BigUint> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8).map(|i| s.spawn(move || fib(300 + i * 10))).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let table = FibTable::with_limit(370);
        for (i, v) in results.iter().enumerate() {
            assert_eq!(*v, table.values()[300 + i * 10]);
        }
    }
}
