//! Exact checks of the Fibonacci sum identities and of `c(n) = 2^(n-1)`.
//!
//! Every row compares two exact integers. Where the sizes are small enough,
//! the row is additionally tied to a class count obtained by walking the
//! enumeration stream, so the closed forms and the enumerator check each other.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::composition::ClassSpec;
use crate::enumerate::{count, count_by_parts, enumerate, PascalTriangle};
use crate::error::ParseError;
use crate::fib::FibTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `F_1 + F_3 + ... + F_(2n-1) = F_(2n)`
    Eq1,
    /// `F_2 + F_4 + ... + F_(2n) = F_(2n+1) - 1`
    Eq2,
    /// `2 (F_1 + F_4 + ... + F_(3n-2)) = F_(3n)`
    Eq3,
    /// `sum_k binomial(n-1-k, k) = F_n`
    Eq4,
    /// `c(n) = 2^(n-1)`
    Pow2,
}

impl IdentityId {
    pub const ALL_IDS: [IdentityId; 5] = [
        IdentityId::Eq1,
        IdentityId::Eq2,
        IdentityId::Eq3,
        IdentityId::Eq4,
        IdentityId::Pow2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq2 => "eq2",
            IdentityId::Eq3 => "eq3",
            IdentityId::Eq4 => "eq4",
            IdentityId::Pow2 => "pow2",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "F_1 + F_3 + ... + F_(2n-1) = F_(2n)",
            IdentityId::Eq2 => "F_2 + F_4 + ... + F_(2n) = F_(2n+1) - 1",
            IdentityId::Eq3 => "2 (F_1 + F_4 + ... + F_(3n-2)) = F_(3n)",
            IdentityId::Eq4 => "C(n-1,0) + C(n-2,1) + C(n-3,2) + ... = F_n",
            IdentityId::Pow2 => "c(n) = 2^(n-1)",
        }
    }

    /// First `n` the identity is tabulated from. `eq2` includes the empty
    /// sum at `n = 0`.
    pub fn first_n(self) -> u32 {
        match self {
            IdentityId::Eq2 => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL_IDS
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| ParseError::UnknownIdentity(s.to_string()))
    }
}

/// How far each level of checking goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityConfig {
    /// Class-count cross-checks run while the enumerated total stays at or
    /// below this.
    pub enum_max: u32,
    /// Term-by-term part-count checks for `eq4` run while `n + 1` stays at
    /// or below this.
    pub parts_max: u32,
    /// Brute-force enumeration for `pow2` runs up to this `n`.
    pub pow2_enum_max: u32,
}

impl IdentityConfig {
    pub const DEFAULT_FORMULA_MAX: u32 = 30;
}

impl Default for IdentityConfig {
    fn default() -> Self {
        Self {
            enum_max: 22,
            parts_max: 25,
            pow2_enum_max: 16,
        }
    }
}

/// Class count reached by walking the enumeration stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountCheck {
    pub class: ClassSpec,
    pub total: u32,
    pub enumerated: BigUint,
    pub expected: BigUint,
}

impl CountCheck {
    fn run(class: ClassSpec, total: u32, expected: BigUint) -> Self {
        let enumerated = BigUint::from(enumerate(class, total).count());
        Self {
            class,
            total,
            enumerated,
            expected,
        }
    }

    pub fn agrees(&self) -> bool {
        self.enumerated == self.expected
    }
}

/// Per-part-count comparison for `eq4`: `k + 1` parts against `binomial(n-1-k, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartsCheck {
    /// Tally of min2 compositions of `n + 1` by part count, from enumeration.
    pub enumerated: BTreeMap<usize, BigUint>,
    /// Same statistic from the part-count DP.
    pub dp: BTreeMap<usize, BigUint>,
    /// Class count of min2 compositions of `n + 1`.
    pub class_count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRow {
    pub n: u32,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub count_check: Option<CountCheck>,
    /// `eq4` only: the nonzero binomial terms, in summation order.
    pub terms: Vec<BigUint>,
    pub parts_check: Option<PartsCheck>,
    pub ok: bool,
}

impl IdentityRow {
    fn new(n: u32, lhs: BigUint, rhs: BigUint) -> Self {
        Self {
            n,
            ok: lhs == rhs,
            lhs,
            rhs,
            count_check: None,
            terms: Vec::new(),
            parts_check: None,
        }
    }

    fn with_count_check(mut self, check: CountCheck) -> Self {
        self.ok &= check.agrees();
        self.count_check = Some(check);
        self
    }
}

fn join_plus<'a>(values: impl Iterator<Item = &'a BigUint>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join("+")
}

impl fmt::Display for IdentityRow {
    /// `n lhs rhs ok`, with `terms=` and `parts=` columns for `eq4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok { "ok" } else { "FAIL" };
        write!(f, "{} {} {} {}", self.n, self.lhs, self.rhs, status)?;
        if !self.terms.is_empty() {
            write!(f, " terms={}", join_plus(self.terms.iter()))?;
        }
        if let Some(parts) = &self.parts_check {
            write!(f, " parts={}", join_plus(parts.enumerated.values()))?;
        }
        if let Some(check) = self.count_check.as_ref().filter(|c| !c.agrees()) {
            write!(
                f,
                " count({},{})={} expected {}",
                check.class, check.total, check.enumerated, check.expected
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub n_min: u32,
    pub n_max: u32,
    pub rows: Vec<IdentityRow>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn first_failure(&self) -> Option<&IdentityRow> {
        self.rows.iter().find(|r| !r.ok)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}: {}", self.id, self.id.statement())?;
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Runs identity `id` for every `n` from its first index up to `n_max`.
pub fn check_identity(id: IdentityId, n_max: u32, config: &IdentityConfig) -> IdentityReport {
    let n_min = id.first_n();
    let mut fib = FibTable::with_limit(3 * n_max as usize + 2);
    let mut pascal = PascalTriangle::new();
    let rows = (n_min..=n_max)
        .map(|n| match id {
            IdentityId::Eq1 => eq1_row(n, &mut fib, config),
            IdentityId::Eq2 => eq2_row(n, &mut fib, config),
            IdentityId::Eq3 => eq3_row(n, &mut fib, config),
            IdentityId::Eq4 => eq4_row(n, &mut fib, &mut pascal, config),
            IdentityId::Pow2 => pow2_row(n, config),
        })
        .collect();
    IdentityReport {
        id,
        n_min,
        n_max,
        rows,
    }
}

pub fn check_eq1(n_max: u32) -> IdentityReport {
    check_identity(IdentityId::Eq1, n_max, &IdentityConfig::default())
}

pub fn check_eq2(n_max: u32) -> IdentityReport {
    check_identity(IdentityId::Eq2, n_max, &IdentityConfig::default())
}

pub fn check_eq3(n_max: u32) -> IdentityReport {
    check_identity(IdentityId::Eq3, n_max, &IdentityConfig::default())
}

pub fn check_eq4(n_max: u32) -> IdentityReport {
    check_identity(IdentityId::Eq4, n_max, &IdentityConfig::default())
}

pub fn check_pow2(n_max: u32) -> IdentityReport {
    check_identity(IdentityId::Pow2, n_max, &IdentityConfig::default())
}

fn eq1_row(n: u32, fib: &mut FibTable, config: &IdentityConfig) -> IdentityRow {
    let n = n as usize;
    let lhs: BigUint = (1..=n).map(|i| fib.get(2 * i - 1).clone()).sum();
    let rhs = fib.get(2 * n).clone();
    let row = IdentityRow::new(n as u32, lhs, rhs.clone());
    let total = 2 * n as u32;
    if total <= config.enum_max {
        // odd compositions of 2n are counted by F_(2n)
        row.with_count_check(CountCheck::run(ClassSpec::Odd, total, rhs))
    } else {
        row
    }
}

fn eq2_row(n: u32, fib: &mut FibTable, config: &IdentityConfig) -> IdentityRow {
    let n = n as usize;
    let lhs: BigUint = (1..=n).map(|i| fib.get(2 * i).clone()).sum();
    let rhs_plus_one = fib.get(2 * n + 1).clone();
    let rhs = &rhs_plus_one - BigUint::one();
    let row = IdentityRow::new(n as u32, lhs, rhs);
    let total = 2 * n as u32 + 1;
    if total <= config.enum_max {
        row.with_count_check(CountCheck::run(ClassSpec::Odd, total, rhs_plus_one))
    } else {
        row
    }
}

fn eq3_row(n: u32, fib: &mut FibTable, config: &IdentityConfig) -> IdentityRow {
    let n = n as usize;
    let sum: BigUint = (1..=n).map(|i| fib.get(3 * i - 2).clone()).sum();
    let lhs = sum * 2u32;
    let rhs = fib.get(3 * n).clone();
    let row = IdentityRow::new(n as u32, lhs, rhs.clone());
    let total = 3 * n as u32 + 1;
    if total <= config.enum_max {
        // min2 compositions of 3n + 1 are counted by F_(3n)
        row.with_count_check(CountCheck::run(ClassSpec::Min2, total, rhs))
    } else {
        row
    }
}

fn eq4_row(
    n: u32,
    fib: &mut FibTable,
    pascal: &mut PascalTriangle,
    config: &IdentityConfig,
) -> IdentityRow {
    let top = i64::from(n) - 1;
    let terms: Vec<BigUint> = (0..)
        .take_while(|&k| top - k >= k)
        .map(|k| pascal.binomial(top - k, k))
        .collect();
    let lhs: BigUint = terms.iter().sum();
    let rhs = fib.get(n as usize).clone();
    let mut row = IdentityRow::new(n, lhs, rhs.clone());

    if n < config.parts_max {
        let total = n + 1;
        let mut enumerated: BTreeMap<usize, BigUint> = BTreeMap::new();
        let mut class_count = BigUint::zero();
        for c in enumerate(ClassSpec::Min2, total) {
            *enumerated.entry(c.len()).or_default() += 1u32;
            class_count += 1u32;
        }
        let dp = count_by_parts(ClassSpec::Min2, total);
        // k + 1 parts <-> binomial(n-1-k, k)
        let zero = BigUint::zero();
        let term_by_term = (0..terms.len().max(enumerated.len()))
            .all(|k| enumerated.get(&(k + 1)).unwrap_or(&zero) == terms.get(k).unwrap_or(&zero));
        row.ok &= term_by_term && dp == enumerated && class_count == rhs;
        row.parts_check = Some(PartsCheck {
            enumerated,
            dp,
            class_count,
        });
    }
    row.terms = terms;
    row
}

fn pow2_row(n: u32, config: &IdentityConfig) -> IdentityRow {
    let rhs = BigUint::one() << (n - 1);
    let row = IdentityRow::new(n, count(ClassSpec::All, n), rhs.clone());
    if n <= config.pow2_enum_max {
        row.with_count_check(CountCheck::run(ClassSpec::All, n, rhs))
    } else {
        row
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn row(report: &IdentityReport, n: u32) -> &IdentityRow {
        report.rows.iter().find(|r| r.n == n).unwrap()
    }

    #[test]
    fn eq1_rows() {
        let report = check_eq1(15);
        assert!(report.passed());
        assert_eq!(row(&report, 1).lhs, big(1));
        assert_eq!(row(&report, 3).lhs, big(8));
        assert_eq!(row(&report, 3).rhs, big(8));
        // F_30 = 832040 by the loop oracle in fib.rs.
        assert_eq!(row(&report, 15).rhs, big(832_040));
        assert!(row(&report, 11).count_check.is_some());
        assert!(row(&report, 12).count_check.is_none());
    }

    #[test]
    fn eq2_rows() {
        let report = check_eq2(10);
        assert!(report.passed());
        assert_eq!(row(&report, 0).lhs, big(0));
        assert_eq!(row(&report, 0).rhs, big(0));
        assert_eq!(row(&report, 1).rhs, big(1));
        assert_eq!(row(&report, 2).lhs, big(4));
        assert_eq!(row(&report, 2).rhs, big(4));
    }

    #[test]
    fn eq3_rows() {
        let report = check_eq3(10);
        assert!(report.passed());
        assert_eq!(row(&report, 1).lhs, big(2));
        assert_eq!(row(&report, 2).lhs, big(8));
        assert_eq!(row(&report, 2).rhs, big(8));
        // F_15 = 610; 2 * (1 + 3 + 13 + 55 + 233) = 610.
        assert_eq!(row(&report, 5).rhs, big(610));
        assert!(row(&report, 7).count_check.is_some());
        assert!(row(&report, 8).count_check.is_none());
    }

    #[test]
    fn eq4_rows() {
        let report = check_eq4(8);
        assert!(report.passed());
        let five = row(&report, 5);
        assert_eq!(five.terms, [big(1), big(3), big(1)]);
        assert_eq!(five.lhs, big(5));
        let parts = five.parts_check.as_ref().unwrap();
        assert_eq!(
            parts.enumerated,
            BTreeMap::from([(1, big(1)), (2, big(3)), (3, big(1))])
        );
        assert_eq!(five.to_string(), "5 5 5 ok terms=1+3+1 parts=1+3+1");
        assert_eq!(row(&report, 1).terms, [big(1)]);
    }

    #[test]
    fn pow2_rows() {
        let report = check_pow2(64);
        assert!(report.passed());
        assert_eq!(row(&report, 5).to_string(), "5 16 16 ok");
        assert_eq!(row(&report, 1).rhs, big(1));
        let doubled = (0..63).fold(big(1), |acc, _| acc * 2u32);
        assert_eq!(row(&report, 64).rhs, doubled);
        assert!(row(&report, 16).count_check.is_some());
        assert!(row(&report, 17).count_check.is_none());
    }

    #[test]
    fn report_text() {
        let text = check_pow2(2).to_string();
        assert_eq!(text, "# pow2: c(n) = 2^(n-1)\n1 1 1 ok\n2 2 2 ok\n");
    }
}
