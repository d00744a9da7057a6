//! Changemaker vectors.
//!
//! `sigma = (sigma_0, ..., sigma_n)` is a changemaker when `sigma_0` is 0 or 1
//! and `sigma_{i-1} <= sigma_i <= 1 + sigma_0 + ... + sigma_{i-1}` for every
//! `i >= 1`. Equivalently every integer in `0..=|sigma|_1` is a subset sum of
//! the entries, which is what the coordinate-free test checks.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::SubsetSums;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Largest rank accepted by [`enumerate_changemakers`] when collecting a list.
pub const DEFAULT_ENUMERATION_CAPACITY: usize = 10;

/// A validated changemaker `sigma`, with `p = |<sigma, sigma>|` and `|sigma|_1` cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChangemakerVector {
    sigma: Vec<i64>,
    p: i64,
    one_norm: i64,
}

impl ChangemakerVector {
    pub fn new(sigma: Vec<i64>) -> Result<Self> {
        if !is_changemaker(&sigma) {
            return Err(Error::domain(format!("{sigma:?} is not a changemaker")));
        }
        Ok(Self::new_unchecked(sigma))
    }

    pub(crate) fn new_unchecked(sigma: Vec<i64>) -> Self {
        let p = sigma.iter().map(|s| s * s).sum();
        let one_norm = sigma.iter().sum();
        ChangemakerVector { sigma, p, one_norm }
    }

    pub fn entries(&self) -> &[i64] {
        &self.sigma
    }

    /// `n`, the rank of the orthogonal complement.
    pub fn rank(&self) -> usize {
        self.sigma.len() - 1
    }

    /// `sigma_n`.
    pub fn top(&self) -> i64 {
        *self.sigma.last().expect("non-empty")
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn one_norm(&self) -> i64 {
        self.one_norm
    }

    pub fn to_lattice_vector(&self) -> LatticeVector {
        LatticeVector::new(self.sigma.clone()).expect("non-empty")
    }
}

impl fmt::Display for ChangemakerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.sigma.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// The defining inequalities, checked index by index. Malformed input is `false`.
pub fn is_changemaker(sigma: &[i64]) -> bool {
    let Some(&first) = sigma.first() else {
        return false;
    };
    if first != 0 && first != 1 {
        return false;
    }
    let mut prefix = first;
    for w in sigma.windows(2) {
        let (prev, cur) = (w[0], w[1]);
        if cur < prev || cur > prefix + 1 {
            return false;
        }
        prefix += cur;
    }
    true
}

/// Pairings with short characteristic covectors cover every `j` of the right
/// parity with `|j| <= |sigma|_1`.
///
/// `<c, sigma>` over `c in {+-1}^{n+1}` takes the values `2s - |sigma|_1` for
/// subset sums `s`, so the condition is that every `s` in `0..=|sigma|_1` is
/// a subset sum.
pub fn coordinate_free_check(sigma: &[i64]) -> bool {
    if sigma.is_empty() || sigma.iter().any(|&s| s < 0) {
        return false;
    }
    let mut sums = SubsetSums::new();
    for &s in sigma {
        sums.insert(s as usize);
    }
    sums.is_complete()
}

/// Greedy subset sum from the largest index down: `A` with `sum_{k in A} sigma_k = target`.
///
/// Indices come back in increasing order.
pub fn subset_representation(sigma: &ChangemakerVector, target: i64) -> Result<Vec<usize>> {
    if target < 0 || target > sigma.one_norm() {
        return Err(Error::domain(format!(
            "subset target {target} outside 0..={}",
            sigma.one_norm()
        )));
    }
    let mut remaining = target;
    let mut chosen = Vec::new();
    for (k, &s) in sigma.entries().iter().enumerate().rev() {
        if s <= remaining && s > 0 {
            remaining -= s;
            chosen.push(k);
        }
    }
    if remaining != 0 {
        return Err(Error::invariant(format!(
            "greedy subset sum failed for {sigma} and target {target}"
        )));
    }
    chosen.reverse();
    Ok(chosen)
}

/// Lexicographic enumeration of changemakers `(1, sigma_1, ..., sigma_n)`.
///
/// Entries are capped by `max_entry` in addition to the changemaker ceiling.
/// [`Changemakers::advance`] yields borrowed slices without allocating; the
/// `Iterator` impl wraps each one in a [`ChangemakerVector`].
#[derive(Debug, Clone)]
pub struct Changemakers {
    sigma: Vec<i64>,
    // prefix[i] = sigma_0 + ... + sigma_{i-1}
    prefix: Vec<i64>,
    max_entry: i64,
    started: bool,
    exhausted: bool,
}

impl Changemakers {
    pub fn new(rank: usize) -> Self {
        Self::with_max_entry(rank, i64::MAX)
    }

    pub fn with_max_entry(rank: usize, max_entry: i64) -> Self {
        Changemakers {
            sigma: vec![1; rank + 1],
            prefix: (0..=rank as i64 + 1).collect(),
            max_entry,
            started: false,
            exhausted: max_entry < 1,
        }
    }

    pub fn rank(&self) -> usize {
        self.sigma.len() - 1
    }

    /// The next changemaker, or `None` once the enumeration is finished.
    pub fn advance(&mut self) -> Option<&[i64]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.sigma);
        }
        let len = self.sigma.len();
        // bump the rightmost entry that can still grow, then reset the tail to its minimum
        let mut i = len - 1;
        loop {
            if i == 0 {
                self.exhausted = true;
                return None;
            }
            let ceiling = (self.prefix[i] + 1).min(self.max_entry);
            if self.sigma[i] < ceiling {
                break;
            }
            i -= 1;
        }
        self.sigma[i] += 1;
        self.prefix[i + 1] = self.prefix[i] + self.sigma[i];
        for j in i + 1..len {
            self.sigma[j] = self.sigma[j - 1];
            self.prefix[j + 1] = self.prefix[j] + self.sigma[j];
        }
        Some(&self.sigma)
    }
}

impl Iterator for Changemakers {
    type Item = ChangemakerVector;

    fn next(&mut self) -> Option<ChangemakerVector> {
        self.advance()
            .map(|s| ChangemakerVector::new_unchecked(s.to_vec()))
    }
}

/// Every changemaker of length `rank + 1` with `sigma_0 = 1`, lexicographically,
/// optionally filtered.
pub fn enumerate_changemakers(
    rank: usize,
    filter: Option<&dyn Fn(&ChangemakerVector) -> bool>,
) -> Result<Vec<ChangemakerVector>> {
    enumerate_changemakers_bounded(rank, i64::MAX, DEFAULT_ENUMERATION_CAPACITY, filter)
}

/// [`enumerate_changemakers`] with an explicit entry bound and rank capacity.
pub fn enumerate_changemakers_bounded(
    rank: usize,
    max_entry: i64,
    capacity: usize,
    filter: Option<&dyn Fn(&ChangemakerVector) -> bool>,
) -> Result<Vec<ChangemakerVector>> {
    if rank == 0 {
        return Err(Error::domain("enumeration needs rank n >= 1"));
    }
    if rank > capacity {
        return Err(Error::Capacity {
            what: "changemaker enumeration rank",
            requested: rank as u64,
            limit: capacity as u64,
        });
    }
    Ok(Changemakers::with_max_entry(rank, max_entry)
        .filter(|s| filter.is_none_or(|f| f(s)))
        .collect())
}
