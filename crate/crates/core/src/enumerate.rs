//! Counting, lazy enumeration, ranking and part-count statistics for a
//! restriction class.
//!
//! Canonical order is ascending lexicographic order on part sequences, so
//! `(1,1,3) < (1,3,1) < (3,1,1) < (5)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::composition::{ClassSpec, Composition};
use crate::error::{Error, Result};

impl ClassSpec {
    /// Whether at least one class composition of `m` exists.
    pub fn has_composition(self, m: u32) -> bool {
        m == 0 || m >= self.min_part()
    }
}

/// `counts[m]` = number of class compositions of `m`, for `0 <= m <= limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    class: ClassSpec,
    counts: Vec<BigUint>,
}

impl CountTable {
    /// DP over the first part: `counts[m] = sum of counts[m - p]` over allowed `p <= m`.
    pub fn build(class: ClassSpec, limit: u32) -> Self {
        let limit = limit as usize;
        let mut counts: Vec<BigUint> = Vec::with_capacity(limit + 1);
        counts.push(BigUint::one());
        for m in 1..=limit {
            let mut total = BigUint::zero();
            let mut p = class.min_part() as usize;
            while p <= m {
                total += &counts[m - p];
                match class.next_part(p as u32) {
                    Some(next) => p = next as usize,
                    None => break,
                }
            }
            counts.push(total);
        }
        Self { class, counts }
    }

    pub fn class(&self) -> ClassSpec {
        self.class
    }

    pub fn limit(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Panics if `m` exceeds the table limit.
    pub fn count(&self, m: u32) -> &BigUint {
        &self.counts[m as usize]
    }

    /// Allowed parts `p <= rem` in ascending order.
    fn parts_up_to(&self, rem: u32) -> impl Iterator<Item = u32> + '_ {
        let class = self.class;
        std::iter::successors(Some(class.min_part()), move |&p| class.next_part(p))
            .take_while(move |&p| p <= rem)
    }

    /// 0-based position of `c` among the class compositions of its total.
    pub fn rank(&self, c: &Composition) -> Result<BigUint> {
        if !self.class.contains(c) {
            return Err(Error::NotInClass {
                class: self.class,
                composition: c.to_string(),
            });
        }
        let n = c.total();
        assert!(n <= self.limit(), "composition total exceeds table limit");
        let mut rank = BigUint::zero();
        let mut rem = n;
        for &part in c.parts() {
            for p in self.parts_up_to(rem).take_while(|&p| p < part) {
                rank += self.count(rem - p);
            }
            rem -= part;
        }
        Ok(rank)
    }

    /// The class composition of `n` at 0-based position `r`.
    pub fn unrank(&self, n: u32, r: &BigUint) -> Result<Composition> {
        assert!(n <= self.limit(), "n exceeds table limit");
        let total = self.count(n);
        if r >= total {
            return Err(Error::RankOutOfRange {
                class: self.class,
                n,
                rank: r.to_string(),
                count: total.to_string(),
            });
        }
        let mut r = r.clone();
        let mut rem = n;
        let mut parts = Vec::new();
        while rem > 0 {
            let mut chosen = None;
            for p in self.parts_up_to(rem) {
                let block = self.count(rem - p);
                if r < *block {
                    chosen = Some(p);
                    break;
                }
                r -= block;
            }
            let p = chosen.expect("rank below count always selects a part");
            parts.push(p);
            rem -= p;
        }
        Ok(Composition::from_parts_unchecked(parts))
    }
}

/// Number of class compositions of `n`.
pub fn count(class: ClassSpec, n: u32) -> BigUint {
    CountTable::build(class, n).count(n).clone()
}

pub fn rank(class: ClassSpec, c: &Composition) -> Result<BigUint> {
    CountTable::build(class, c.total()).rank(c)
}

pub fn unrank(class: ClassSpec, n: u32, r: &BigUint) -> Result<Composition> {
    CountTable::build(class, n).unrank(n, r)
}

/// Lexicographically smallest class composition of `rem`, appended to `out`.
fn push_smallest(class: ClassSpec, mut rem: u32, out: &mut Vec<u32>) {
    while rem > 0 {
        let mut p = class.min_part();
        while !class.has_composition(rem - p) {
            p = class
                .next_part(p)
                .expect("a feasible remainder has a completion");
        }
        out.push(p);
        rem -= p;
    }
}

/// Lazy canonical-order stream of the class compositions of `n`.
///
/// The stream state is the next composition to yield; it can be read with
/// [`Compositions::cursor`] and resumed with [`Compositions::resume`].
#[derive(Debug, Clone)]
pub struct Compositions {
    class: ClassSpec,
    n: u32,
    next: Option<Vec<u32>>,
}

impl Compositions {
    pub fn new(class: ClassSpec, n: u32) -> Self {
        let next = class.has_composition(n).then(|| {
            let mut parts = Vec::new();
            push_smallest(class, n, &mut parts);
            parts
        });
        Self { class, n, next }
    }

    /// Stream starting at `start`, which must be a class composition.
    pub fn resume(class: ClassSpec, start: Composition) -> Result<Self> {
        if !class.contains(&start) {
            return Err(Error::NotInClass {
                class,
                composition: start.to_string(),
            });
        }
        Ok(Self {
            class,
            n: start.total(),
            next: Some(start.into_parts()),
        })
    }

    /// Stream starting at rank `r`. An out-of-range rank is an error.
    pub fn from_rank(class: ClassSpec, n: u32, r: &BigUint) -> Result<Self> {
        let start = unrank(class, n, r)?;
        Ok(Self {
            class,
            n,
            next: Some(start.into_parts()),
        })
    }

    pub fn class(&self) -> ClassSpec {
        self.class
    }

    pub fn total(&self) -> u32 {
        self.n
    }

    /// Next composition the stream will yield, if any.
    pub fn cursor(&self) -> Option<Composition> {
        self.next
            .as_ref()
            .map(|p| Composition::from_parts_unchecked(p.clone()))
    }

    fn successor(class: ClassSpec, n: u32, current: &[u32]) -> Option<Vec<u32>> {
        let mut prefix_sum: u32 = current.iter().sum();
        for i in (0..current.len()).rev() {
            prefix_sum -= current[i];
            let rem = n - prefix_sum;
            let mut candidate = class.next_part(current[i]);
            while let Some(v) = candidate.filter(|&v| v <= rem) {
                if class.has_composition(rem - v) {
                    let mut parts = current[..i].to_vec();
                    parts.push(v);
                    push_smallest(class, rem - v, &mut parts);
                    return Some(parts);
                }
                candidate = class.next_part(v);
            }
        }
        None
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        self.next = Self::successor(self.class, self.n, &current);
        Some(Composition::from_parts_unchecked(current))
    }
}

impl std::iter::FusedIterator for Compositions {}

/// All class compositions of `n`, in canonical order.
pub fn enumerate(class: ClassSpec, n: u32) -> Compositions {
    Compositions::new(class, n)
}

/// Compositions with ranks in `lo..hi` (clamped to the class count).
pub fn enumerate_range(
    class: ClassSpec,
    n: u32,
    lo: &BigUint,
    hi: &BigUint,
) -> impl Iterator<Item = Composition> {
    let total = count(class, n);
    let hi = hi.min(&total).clone();
    let (stream, len) = if *lo < hi {
        let stream = Compositions::from_rank(class, n, lo).expect("lo is below the count");
        let len = (&hi - lo).to_usize().unwrap_or(usize::MAX);
        (Some(stream), len)
    } else {
        (None, 0)
    };
    stream.into_iter().flatten().take(len)
}

/// Map from part count `j` to the number of class compositions of `n` with
/// exactly `j` parts. Only nonzero entries are present; `n = 0` gives `{0: 1}`.
pub fn count_by_parts(class: ClassSpec, n: u32) -> BTreeMap<usize, BigUint> {
    let n = n as usize;
    // by_parts[m][j]: compositions of m with j parts.
    let mut by_parts: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n + 1]; n + 1];
    by_parts[0][0] = BigUint::one();
    for m in 1..=n {
        for p in (1..=m).filter(|&p| class.admits(p as u32)) {
            for j in 1..=m {
                if !by_parts[m - p][j - 1].is_zero() {
                    let add = by_parts[m - p][j - 1].clone();
                    by_parts[m][j] += add;
                }
            }
        }
    }
    by_parts[n]
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (j, v.clone()))
        .collect()
}

/// Pascal's triangle in exact integers.
#[derive(Debug, Clone)]
pub struct PascalTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl Default for PascalTriangle {
    fn default() -> Self {
        Self::new()
    }
}

impl PascalTriangle {
    pub fn new() -> Self {
        Self {
            rows: vec![vec![BigUint::one()]],
        }
    }

    pub fn extend_to(&mut self, a: usize) {
        while self.rows.len() <= a {
            let prev = self.rows.last().expect("row 0 always present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigUint::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigUint::one());
            self.rows.push(row);
        }
    }

    /// `binomial(a, b)`, zero when `a < 0`, `b < 0` or `b > a`.
    pub fn binomial(&mut self, a: i64, b: i64) -> BigUint {
        if a < 0 || b < 0 || b > a {
            return BigUint::zero();
        }
        self.extend_to(a as usize);
        self.rows[a as usize][b as usize].clone()
    }
}

/// One-off binomial coefficient.
pub fn binomial(a: i64, b: i64) -> BigUint {
    PascalTriangle::new().binomial(a, b)
}
