//! Complexity profiles and word-counting bounds for low-complexity shifts.

use serde::Serialize;

use crate::error::Result;
use crate::words::LanguageTable;

/// `P(1..N)` with its first differences and the linear-growth constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    /// `values[n - 1] = P(n)`.
    pub values: Vec<usize>,
    /// `differences[n - 1] = P(n + 1) - P(n)`.
    pub differences: Vec<usize>,
    /// Largest observed difference.
    #[serde(rename = "B")]
    pub b: usize,
    /// Smallest integer `k` with `P(n) < k·n` on the upper half of the
    /// measured range, `ceil(N/2) <= n <= N`.
    pub k_linear: usize,
    pub max_n: usize,
}

impl ComplexityProfile {
    pub fn p(&self, n: usize) -> usize {
        self.values[n - 1]
    }

    /// First measured length of the tail window used for `k_linear`.
    pub fn tail_start(&self) -> usize {
        self.max_n.div_ceil(2).max(1)
    }
}

/// Exact complexity profile of a table.
pub fn profile(table: &LanguageTable) -> ComplexityProfile {
    let max_n = table.max_n();
    let values: Vec<usize> = (1..=max_n).map(|n| table.complexity(n)).collect();
    let differences: Vec<usize> = values.windows(2).map(|w| w[1] - w[0]).collect();
    let b = differences.iter().copied().max().unwrap_or(0);
    let tail = max_n.div_ceil(2).max(1);
    let k_linear = (tail..=max_n).map(|n| values[n - 1] / n + 1).max().unwrap_or(1);
    ComplexityProfile { values, differences, b, k_linear, max_n }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CassaigneVerdict {
    /// All differences are at most the bound; carries the observed maximum.
    BoundedBy { observed: usize },
    /// `P(n + 1) - P(n)` exceeds the bound at this `n`.
    ExceededAt { n: usize },
}

/// Checks that the difference function stays within `bound`.
pub fn cassaigne_check(profile: &ComplexityProfile, bound: usize) -> CassaigneVerdict {
    match profile.differences.iter().position(|&d| d > bound) {
        Some(i) => CassaigneVerdict::ExceededAt { n: i + 1 },
        None => CassaigneVerdict::BoundedBy { observed: profile.b },
    }
}

/// Number of words of length `n` that do not extend uniquely `m` times to the right.
pub fn extension_failure_count(table: &LanguageTable, n: usize, m: usize) -> Result<usize> {
    table.check_depth(n + m)?;
    if m == 0 {
        return Ok(0);
    }
    let mut count = 0;
    for w in table.level(n) {
        if !table.extends_uniquely_right(w, m)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of words of length `n` with at least two left extensions.
pub fn nonuniquely_left_extendable_count(table: &LanguageTable, n: usize) -> Result<usize> {
    table.check_depth(n + 1)?;
    let mut count = 0;
    for w in table.level(n) {
        if table.left_extensions(w)?.len() >= 2 {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of words of length `n` with at least two right extensions.
pub fn right_special_count(table: &LanguageTable, n: usize) -> Result<usize> {
    table.check_depth(n + 1)?;
    let mut count = 0;
    for w in table.level(n) {
        if table.right_extensions(w)?.len() >= 2 {
            count += 1;
        }
    }
    Ok(count)
}

/// Smallest measured `n` with `P(n) <= n`. Such a shift consists of periodic points only.
pub fn morse_hedlund_flag(profile: &ComplexityProfile) -> Option<usize> {
    profile.values.iter().enumerate().find(|&(i, &p)| p <= i + 1).map(|(i, _)| i + 1)
}
