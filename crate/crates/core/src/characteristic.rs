//! Characteristic covectors of `-Z^{n+1}`.
//!
//! These are exactly the vectors with every coordinate odd. Since `a^2 = 1 mod 8`
//! for odd `a`, the self-pairing is `-(n+1) - 8k` for an integer level `k >= 0`,
//! and `Char_k` collects the covectors of level `k`. The level is additive over
//! coordinates: a coordinate `a` contributes `(a^2 - 1) / 8`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// An all-odd vector of `-Z^{n+1}` together with its level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacteristicVector {
    coords: Vec<i64>,
    level: u64,
}

impl CharacteristicVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::domain("characteristic vector of rank 0"));
        }
        if let Some(c) = coords.iter().find(|&&c| c % 2 == 0) {
            return Err(Error::domain(format!("coordinate {c} is even")));
        }
        let level = coords.iter().map(|&c| level_cost(c)).sum();
        Ok(CharacteristicVector { coords, level })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// `<c, c> = -(n+1) - 8k`.
    pub fn self_pairing(&self) -> i64 {
        -(self.coords.len() as i64) - 8 * self.level as i64
    }

    pub fn to_lattice_vector(&self) -> LatticeVector {
        LatticeVector::new(self.coords.clone()).expect("non-empty")
    }
}

/// `(a^2 - 1) / 8` for odd `a`: 0 for +-1, 1 for +-3, 3 for +-5, 6 for +-7, ...
#[inline]
pub fn level_cost(a: i64) -> u64 {
    let m = a.unsigned_abs();
    (m * m - 1) / 8
}

/// Every element of `Char_level(-Z^{rank})`.
///
/// Odd absolute values are chosen coordinate by coordinate against the
/// remaining level budget, then signed; the count is finite for each level.
pub fn characteristic_vectors(rank: usize, level: u64) -> Vec<CharacteristicVector> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rank);
    fill(rank, level, &mut cur, &mut out);
    out
}

fn fill(rank: usize, budget: u64, cur: &mut Vec<i64>, out: &mut Vec<CharacteristicVector>) {
    if cur.len() == rank {
        if budget == 0 {
            let level = cur.iter().map(|&c| level_cost(c)).sum();
            out.push(CharacteristicVector {
                coords: cur.clone(),
                level,
            });
        }
        return;
    }
    let mut a = 1i64;
    while level_cost(a) <= budget {
        let rest = budget - level_cost(a);
        for signed in [a, -a] {
            cur.push(signed);
            fill(rank, rest, cur, out);
            cur.pop();
        }
        a += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels() {
        assert_eq!(level_cost(1), 0);
        assert_eq!(level_cost(-3), 1);
        assert_eq!(level_cost(5), 3);
        assert_eq!(level_cost(7), 6);
        let c = CharacteristicVector::new(alloc::vec![1, 1, 3]).unwrap();
        assert_eq!(c.level(), 1);
        assert_eq!(c.self_pairing(), -11);
        assert!(CharacteristicVector::new(alloc::vec![1, 2]).is_err());
        assert!(CharacteristicVector::new(alloc::vec![]).is_err());
    }

    #[test]
    fn char_counts() {
        // Char_0 = {+-1}^m; Char_1 = one +-3 and the rest +-1
        assert_eq!(characteristic_vectors(3, 0).len(), 8);
        assert_eq!(characteristic_vectors(3, 1).len(), 3 * 8);
        // level 2: two +-3 entries
        assert_eq!(characteristic_vectors(3, 2).len(), 3 * 8);
        // level 3: one +-5, or three +-3
        assert_eq!(characteristic_vectors(3, 3).len(), 3 * 8 + 8);
        for c in characteristic_vectors(4, 3) {
            assert_eq!(c.self_pairing(), -4 - 24);
            assert!(c.coords().iter().all(|x| x % 2 != 0));
        }
    }
}
