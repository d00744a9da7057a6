//! Subset-sum reachability as a growable bitset.

use alloc::vec::Vec;

/// Bit `s` is set iff some subset of the inserted values sums to `s`.
#[derive(Debug, Clone, Default)]
pub(crate) struct SubsetSums {
    words: Vec<u64>,
    total: usize,
}

impl SubsetSums {
    pub(crate) fn new() -> Self {
        let mut s = SubsetSums {
            words: Vec::new(),
            total: 0,
        };
        s.reset(0);
        s
    }

    /// Clear back to `{0}`, reserving room for sums up to `capacity`.
    pub(crate) fn reset(&mut self, capacity: usize) {
        self.words.clear();
        self.words.resize(capacity / 64 + 1, 0);
        self.words[0] = 1;
        self.total = 0;
    }

    pub(crate) fn total(&self) -> usize {
        self.total
    }

    /// `self |= self << value`.
    pub(crate) fn insert(&mut self, value: usize) {
        self.total += value;
        let needed = self.total / 64 + 1;
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        if value == 0 {
            return;
        }
        let word_shift = value / 64;
        let bit_shift = value % 64;
        for i in (0..self.words.len()).rev() {
            let mut shifted = 0u64;
            if i >= word_shift {
                let src = i - word_shift;
                shifted = self.words[src] << bit_shift;
                if bit_shift != 0 && src > 0 {
                    shifted |= self.words[src - 1] >> (64 - bit_shift);
                }
            }
            self.words[i] |= shifted;
        }
    }

    pub(crate) fn contains(&self, s: usize) -> bool {
        s <= self.total && self.words[s / 64] >> (s % 64) & 1 == 1
    }

    /// True iff every integer in `0..=total` is reachable.
    pub(crate) fn is_complete(&self) -> bool {
        let full_words = (self.total + 1) / 64;
        if self.words[..full_words].iter().any(|&w| w != u64::MAX) {
            return false;
        }
        let rem = (self.total + 1) % 64;
        rem == 0 || self.words[full_words] & ((1u64 << rem) - 1) == (1u64 << rem) - 1
    }
}
