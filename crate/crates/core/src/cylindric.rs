//! Profiles, cylindric partitions and the brute-force enumeration oracle.
//!
//! A cylindric partition of profile `c = (c_1, …, c_k)` is a `k`-tuple of
//! ordinary partitions where row `i` dominates row `i+1` shifted by
//! `c_{i+1}` places, and row `k` dominates row `1` shifted by `c_1` places.
//! Entries past the end of a row read as zero.
//!
//! Every generating function elsewhere in the crate is ultimately checked
//! against [`oracle_f`], [`oracle_f_n`] and [`oracle_f_y`], which count the
//! objects one at a time.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Coefficient;
use crate::series::{BiSeries, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CylindricError {
    #[error("a profile needs at least one part")]
    EmptyProfile,
    #[error("malformed profile {0:?}: expected comma-separated nonnegative integers")]
    Malformed(String),
    #[error("profile has {expected} rows but the partition has {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} is not a partition: {reason}")]
    NotAPartition { row: usize, reason: &'static str },
}

/// A composition `(c_1, …, c_k)` indexing a family of cylindric partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    parts: Vec<usize>,
}

impl Profile {
    pub fn new(parts: Vec<usize>) -> Result<Self, CylindricError> {
        if parts.is_empty() {
            return Err(CylindricError::EmptyProfile);
        }
        Ok(Self { parts })
    }

    /// Shorthand for tests and fixtures.
    ///
    /// # Panics
    /// If `parts` is empty.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("nonempty profile")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `c_i` with 1-based `i`.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// Number of rows `k`.
    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// `ℓ = Σ c_i`.
    pub fn level(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `t = k + ℓ`.
    pub fn modulus(&self) -> usize {
        self.rank() + self.level()
    }

    /// `(c_1, …, c_k) -> (c_k, c_1, …, c_{k-1})`.
    pub fn rotate(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.rotate_right(1);
        Self { parts }
    }

    /// The lexicographically largest rotation.
    pub fn canonical(&self) -> Self {
        let mut best = self.clone();
        let mut cur = self.clone();
        for _ in 1..self.rank() {
            cur = cur.rotate();
            if cur.parts > best.parts {
                best = cur.clone();
            }
        }
        best
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Profile {
    type Err = CylindricError;

    /// Parses `"2,1,1"` (surrounding parentheses are tolerated).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CylindricError::Malformed(s.to_string()))?;
        Self::new(parts)
    }
}

/// All compositions of `level` into `rank` nonnegative parts, in
/// lexicographically decreasing order.
pub fn compositions(level: usize, rank: usize) -> Vec<Profile> {
    fn go(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Profile>) {
        if slots == 1 {
            cur.push(left);
            out.push(Profile { parts: cur.clone() });
            cur.pop();
            return;
        }
        for first in (0..=left).rev() {
            cur.push(first);
            go(left - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    assert!(rank >= 1);
    let mut out = Vec::new();
    go(level, rank, &mut Vec::with_capacity(rank), &mut out);
    out
}

/// Distinct canonical representatives among the compositions of `level`
/// into `rank` parts.
pub fn canonical_profiles(level: usize, rank: usize) -> Vec<Profile> {
    let mut v: Vec<Profile> = compositions(level, rank).iter().map(Profile::canonical).collect();
    v.sort_by(|a, b| b.cmp(a));
    v.dedup();
    v
}

/// A tuple of partitions, one per profile row, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylindricPartition {
    rows: Vec<Vec<u32>>,
}

impl CylindricPartition {
    /// Checks that every row is a weakly decreasing sequence of positive
    /// integers. The interlacing conditions are checked by [`validate`].
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, CylindricError> {
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(CylindricError::NotAPartition { row: i + 1, reason: "zero entry" });
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(CylindricError::NotAPartition { row: i + 1, reason: "entries increase" });
            }
        }
        Ok(Self { rows })
    }

    pub fn empty(rank: usize) -> Self {
        Self { rows: vec![Vec::new(); rank] }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `|Λ|`, the sum of all entries.
    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().map(|&x| x as u64).sum()
    }

    /// `max(Λ)`, the largest first entry (0 when every row is empty).
    pub fn maxpart(&self) -> u32 {
        self.rows.iter().filter_map(|r| r.first().copied()).max().unwrap_or(0)
    }
}

impl fmt::Display for CylindricPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "({})", join(row))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CylindricPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn entry(row: &[u32], j: usize) -> u32 {
    row.get(j).copied().unwrap_or(0)
}

/// `upper[j] >= lower[j + shift]` for every `j`, zeros past the ends.
fn dominates(upper: &[u32], lower: &[u32], shift: usize) -> bool {
    lower.iter().enumerate().skip(shift).all(|(p, &x)| entry(upper, p - shift) >= x)
}

/// Whether `lambda` satisfies both interlacing families for `profile`.
pub fn validate(profile: &Profile, lambda: &CylindricPartition) -> Result<bool, CylindricError> {
    let k = profile.rank();
    if lambda.rows.len() != k {
        return Err(CylindricError::RowCount { expected: k, found: lambda.rows.len() });
    }
    Ok((0..k).all(|r| {
        let next = (r + 1) % k;
        dominates(&lambda.rows[r], &lambda.rows[next], profile.parts[next])
    }))
}

/// Calls `visit` on every cylindric partition of `profile` with weight at
/// most `max_weight` and, when given, every entry at most `max_entry`.
///
/// Rows are generated in order; row `r > 0` is bounded entrywise by row
/// `r - 1` through the interlacing condition, and the wrap-around condition
/// between the last and first row is checked once all rows are fixed.
pub fn for_each(profile: &Profile, max_weight: u64, max_entry: Option<u32>, mut visit: impl FnMut(&[Vec<u32>])) {
    let k = profile.rank();
    let cap = max_entry.unwrap_or(u32::MAX).min(max_weight.min(u32::MAX as u64) as u32);
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); k];
    fill_row(profile, 0, cap, max_weight, &mut rows, &mut visit);
}

fn fill_row(
    profile: &Profile,
    r: usize,
    cap: u32,
    budget: u64,
    rows: &mut Vec<Vec<u32>>,
    visit: &mut impl FnMut(&[Vec<u32>]),
) {
    let k = profile.rank();
    if r == k {
        if dominates(&rows[k - 1], &rows[0], profile.parts[0]) {
            visit(rows);
        }
        return;
    }
    extend_row(profile, r, cap, budget, rows, visit);
}

/// Extends `rows[r]` by one more entry in every admissible way, recursing
/// into the next row after each prefix.
fn extend_row(
    profile: &Profile,
    r: usize,
    cap: u32,
    budget: u64,
    rows: &mut Vec<Vec<u32>>,
    visit: &mut impl FnMut(&[Vec<u32>]),
) {
    // The current prefix is itself a complete row.
    fill_row(profile, r + 1, cap, budget, rows, visit);

    let pos = rows[r].len();
    let mut hi = rows[r].last().copied().unwrap_or(cap).min(cap);
    if budget < hi as u64 {
        hi = budget as u32;
    }
    if r > 0 {
        let shift = profile.parts[r];
        if pos >= shift {
            hi = hi.min(entry(&rows[r - 1], pos - shift));
        }
    }
    for v in 1..=hi {
        rows[r].push(v);
        extend_row(profile, r, cap, budget - v as u64, rows, visit);
        rows[r].pop();
    }
}

/// All cylindric partitions of `profile` with weight at most `max_weight`
/// (and entries at most `max_entry`), ordered by weight and then
/// lexicographically by rows.
pub fn enumerate(profile: &Profile, max_weight: u64, max_entry: Option<u32>) -> Vec<CylindricPartition> {
    let mut out = Vec::new();
    for_each(profile, max_weight, max_entry, |rows| out.push(CylindricPartition { rows: rows.to_vec() }));
    out.sort_by_cached_key(|l| (l.weight(), l.rows.clone()));
    out
}

fn count_by_weight(profile: &Profile, max_weight: usize, max_entry: Option<u32>) -> Vec<u64> {
    let mut counts = vec![0u64; max_weight + 1];
    for_each(profile, max_weight as u64, max_entry, |rows| {
        let w: u64 = rows.iter().flatten().map(|&x| x as u64).sum();
        counts[w as usize] += 1;
    });
    counts
}

fn series_from_counts<T: Coefficient>(counts: &[u64]) -> Series<T> {
    Series::from_coeffs(counts.iter().map(|&c| T::from_count(c)).collect())
}

/// `F_c(q)` truncated at `q^max_weight`, by enumeration.
pub fn oracle_f<T: Coefficient>(profile: &Profile, max_weight: usize) -> Series<T> {
    series_from_counts(&count_by_weight(profile, max_weight, None))
}

/// `F_{c,n}(q)`: only partitions whose entries are all at most `n`.
pub fn oracle_f_n<T: Coefficient>(profile: &Profile, n: u32, max_weight: usize) -> Series<T> {
    series_from_counts(&count_by_weight(profile, max_weight, Some(n)))
}

/// `F_c(y,q)` with `y` marking the largest entry, truncated at `q^max_weight`
/// and `y^max_weight` (the largest entry never exceeds the weight).
pub fn oracle_f_y<T: Coefficient>(profile: &Profile, max_weight: usize) -> BiSeries<T> {
    let mut counts = vec![vec![0u64; max_weight + 1]; max_weight + 1];
    for_each(profile, max_weight as u64, None, |rows| {
        let w: u64 = rows.iter().flatten().map(|&x| x as u64).sum();
        let m = rows.iter().filter_map(|r| r.first().copied()).max().unwrap_or(0);
        counts[m as usize][w as usize] += 1;
    });
    BiSeries::from_terms(counts.iter().map(|c| series_from_counts(c)).collect())
}
