//! Test-only oracles, written without touching the library's enumeration,
//! counting or codec code paths.

#![allow(dead_code)]

pub mod cli;

use fibcomp::{ClassSpec, Composition};

/// Every composition of `n` with parts accepted by `allowed`, by naive
/// recursion on the first part, sorted lexicographically.
pub fn brute_force(n: u32, allowed: &dyn Fn(u32) -> bool) -> Vec<Vec<u32>> {
    fn go(rem: u32, prefix: &mut Vec<u32>, allowed: &dyn Fn(u32) -> bool, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in 1..=rem {
            if allowed(p) {
                prefix.push(p);
                go(rem - p, prefix, allowed, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), allowed, &mut out);
    out.sort();
    out
}

/// Part predicate for each class, spelled out independently of `ClassSpec::admits`.
pub fn predicate(class: ClassSpec) -> Box<dyn Fn(u32) -> bool> {
    match class {
        ClassSpec::All => Box::new(|_| true),
        ClassSpec::Parts12 => Box::new(|p| p == 1 || p == 2),
        ClassSpec::Odd => Box::new(|p| p % 2 == 1),
        ClassSpec::Min2 => Box::new(|p| p >= 2),
    }
}

pub fn class_brute_force(class: ClassSpec, n: u32) -> Vec<Composition> {
    brute_force(n, &*predicate(class))
        .into_iter()
        .map(|parts| Composition::new(parts).unwrap())
        .collect()
}

/// Fibonacci numbers by a plain u128 loop; exact up to index 185.
pub fn fib_u128(m: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..m {
        (a, b) = (b, a + b);
    }
    a
}

/// Cut/join word of `parts` computed by position arithmetic on partial sums.
pub fn word_of(parts: &[u32]) -> String {
    let n: u32 = parts.iter().sum();
    let mut cuts = std::collections::BTreeSet::new();
    let mut acc = 0;
    for &p in &parts[..parts.len() - 1] {
        acc += p;
        cuts.insert(acc);
    }
    (1..n)
        .map(|i| if cuts.contains(&i) { 'C' } else { 'J' })
        .collect()
}

pub fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}
