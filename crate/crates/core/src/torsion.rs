//! Torsion coefficients of lens space knots.
//!
//! Knot side: an L-space knot has symmetrized Alexander polynomial
//! `(-1)^r + sum_{j=1}^r (-1)^{j-1} (T^{n_j} + T^{-n_j})` with
//! `g = n_1 > n_2 > ... > n_r > 0`, and `t_i = sum_{j >= 1} j a_{i+j}`.
//!
//! Changemaker side: if `K(p)` is the lens space whose linear lattice is
//! `(sigma)^perp`, then for `0 <= i <= p/2`
//!
//! ```text
//! t_i = min { k : <c, sigma> + p = 2i (mod 2p) for some c in Char_k(-Z^{n+1}) }
//! ```
//!
//! and the genus is `(p - |sigma|_1) / 2`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::SubsetSums;
use crate::changemaker::{subset_representation, ChangemakerVector};
use crate::characteristic::{level_cost, CharacteristicVector};
use crate::error::{Error, Result};

/// Exponents `n_1 > n_2 > ... > n_r > 0` of an Alexander polynomial in L-space form.
///
/// The empty sequence is the unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlexanderExponents {
    exponents: Vec<i64>,
}

impl AlexanderExponents {
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.iter().any(|&n| n <= 0) {
            return Err(Error::domain("Alexander exponents must be positive"));
        }
        if exponents.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::domain(
                "Alexander exponents must be strictly decreasing",
            ));
        }
        Ok(AlexanderExponents { exponents })
    }

    /// Like [`AlexanderExponents::new`], additionally requiring `n_2 = g - 1`
    /// as every lens space knot does.
    pub fn new_lens_space(exponents: Vec<i64>) -> Result<Self> {
        let ae = Self::new(exponents)?;
        if ae.r() >= 2 && ae.exponents[1] != ae.genus() - 1 {
            return Err(Error::domain(format!(
                "lens space knots have n_2 = g - 1, got n_2 = {} with g = {}",
                ae.exponents[1],
                ae.genus()
            )));
        }
        Ok(ae)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn genus(&self) -> i64 {
        self.exponents.first().copied().unwrap_or(0)
    }

    pub fn r(&self) -> usize {
        self.exponents.len()
    }

    /// `n_3`, taken to be 0 when `r < 3`.
    pub fn n3(&self) -> i64 {
        self.exponents.get(2).copied().unwrap_or(0)
    }

    pub fn is_unknot(&self) -> bool {
        self.exponents.is_empty()
    }
}

/// The torsion coefficients `t_0, ..., t_g` of an L-space knot (zero afterwards).
///
/// Invariants: non-increasing, non-negative, ends with its only zero `t_g`,
/// consecutive differences in `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorsionSequence {
    values: Vec<i64>,
}

impl TorsionSequence {
    /// Validates the invariants. Trailing zeros past the first are dropped.
    pub fn new(mut values: Vec<i64>) -> Result<Self> {
        let Some(first_zero) = values.iter().position(|&t| t == 0) else {
            return Err(Error::domain("torsion sequence must reach 0"));
        };
        if values[first_zero..].iter().any(|&t| t != 0) {
            return Err(Error::domain("torsion sequence is not eventually zero"));
        }
        values.truncate(first_zero + 1);
        for w in values.windows(2) {
            let d = w[0] - w[1];
            if d != 0 && d != 1 {
                return Err(Error::domain(format!(
                    "torsion differences must be 0 or 1, found {} -> {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(TorsionSequence { values })
    }

    /// `t_0, ..., t_g` computed from the Alexander polynomial.
    pub fn from_exponents(ae: &AlexanderExponents) -> Self {
        let values = (0..=ae.genus())
            .map(|i| torsion_from_alexander(ae, i))
            .collect();
        TorsionSequence { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn genus(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    /// `t_i`, with `t_i = t_{-i}` and `t_i = 0` for `i >= g`.
    pub fn get(&self, i: i64) -> i64 {
        self.values
            .get(i.unsigned_abs() as usize)
            .copied()
            .unwrap_or(0)
    }
}

/// Nonzero coefficients `a_d` of the symmetrized Alexander polynomial.
pub fn coefficients(ae: &AlexanderExponents) -> BTreeMap<i64, i64> {
    let mut a = BTreeMap::new();
    a.insert(0, if ae.r() % 2 == 0 { 1 } else { -1 });
    for (j, &n) in ae.exponents().iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        a.insert(n, sign);
        a.insert(-n, sign);
    }
    a
}

/// Exponents of `Delta_{T_{2,2g+1}}`: `(g, g-1, ..., 1)`.
pub fn torus_knot_exponents(g: i64) -> Result<AlexanderExponents> {
    if g < 1 {
        return Err(Error::domain(format!(
            "torus knot T(2, 2g+1) needs g >= 1, got {g}"
        )));
    }
    Ok(AlexanderExponents {
        exponents: (1..=g).rev().collect(),
    })
}

/// `t_i = sum_{j >= 1} j a_{i+j}`.
pub fn torsion_from_alexander(ae: &AlexanderExponents, i: i64) -> i64 {
    coefficients(ae)
        .range(i + 1..)
        .map(|(&d, &a)| (d - i) * a)
        .sum()
}

/// `t_i - t_{i+1} = sum_{j : n_j >= i+1} (-1)^{j-1}`.
pub fn torsion_difference(ae: &AlexanderExponents, i: i64) -> i64 {
    ae.exponents()
        .iter()
        .enumerate()
        .filter(|&(_, &n)| n > i)
        .map(|(j, _)| if j % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Recovers the exponents from the torsion staircase.
///
/// `t_{i-1} - t_i` is the parity of `#{j : n_j >= i}`, so `i >= 1` is an
/// exponent exactly when that difference changes between `i - 1` and `i`.
pub fn exponents_from_torsion(ts: &TorsionSequence) -> AlexanderExponents {
    let g = ts.genus();
    let diff = |i: i64| ts.get(i) - ts.get(i + 1);
    let exponents = (1..=g).rev().filter(|&i| diff(i - 1) != diff(i)).collect();
    AlexanderExponents { exponents }
}

fn require_sigma0_one(sigma: &[i64]) -> Result<()> {
    if sigma.first() != Some(&1) {
        return Err(Error::domain(
            "torsion from a changemaker needs sigma_0 = 1",
        ));
    }
    Ok(())
}

/// `g = (p - |sigma|_1) / 2`.
pub fn genus_from_changemaker(sigma: &ChangemakerVector) -> Result<i64> {
    require_sigma0_one(sigma.entries())?;
    let diff = sigma.p() - sigma.one_norm();
    if diff % 2 != 0 {
        return Err(Error::invariant(format!(
            "p - |sigma|_1 = {diff} is odd for {sigma}"
        )));
    }
    Ok(diff / 2)
}

/// Minimum-level search for `t_i` on the changemaker side.
///
/// Levels are tried in increasing order. At level `k` the covectors of
/// `Char_k` are split into coordinates with `|c_j| >= 3` (enumerated
/// explicitly, their levels summing to `k`) and the remaining `+-1`
/// coordinates, whose pairings with `sigma` are handled all at once through
/// subset-sum reachability. Buffers are kept between calls, so one scanner
/// can be [`reset`](TorsionScanner::reset) and reused across many vectors.
#[derive(Debug, Clone)]
pub struct TorsionScanner {
    sigma: Vec<i64>,
    p: i64,
    heavy: Vec<bool>,
    all_sums: SubsetSums,
    scratch: SubsetSums,
}

impl Default for TorsionScanner {
    fn default() -> Self {
        TorsionScanner {
            sigma: Vec::new(),
            p: 0,
            heavy: Vec::new(),
            all_sums: SubsetSums::new(),
            scratch: SubsetSums::new(),
        }
    }
}

impl TorsionScanner {
    pub fn new(sigma: &ChangemakerVector) -> Result<Self> {
        let mut s = TorsionScanner::default();
        s.reset(sigma.entries())?;
        Ok(s)
    }

    /// Point the scanner at another vector. `sigma` must have `sigma_0 = 1`
    /// and non-negative entries; the changemaker condition is not re-checked.
    pub fn reset(&mut self, sigma: &[i64]) -> Result<()> {
        require_sigma0_one(sigma)?;
        if sigma.iter().any(|&s| s < 0) {
            return Err(Error::domain("negative entry in sigma"));
        }
        self.sigma.clear();
        self.sigma.extend_from_slice(sigma);
        self.p = sigma.iter().map(|s| s * s).sum();
        self.heavy.clear();
        self.heavy.resize(sigma.len(), false);
        let total: i64 = sigma.iter().sum();
        self.all_sums.reset(total as usize);
        for &s in sigma {
            self.all_sums.insert(s as usize);
        }
        Ok(())
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// `t_i` for `0 <= i <= p/2`.
    pub fn torsion(&mut self, i: i64) -> Result<u64> {
        if i < 0 || 2 * i > self.p {
            return Err(Error::domain(format!(
                "index {i} outside 0..=p/2 with p = {}",
                self.p
            )));
        }
        let modulus = 2 * self.p;
        let target = (self.p - 2 * i).rem_euclid(modulus);
        let cap = self.p as u64;
        for level in 0..=cap {
            if self.reaches(0, level, 0, target) {
                return Ok(level);
            }
        }
        Err(Error::invariant(format!(
            "no characteristic covector up to level {cap} for sigma = {:?}, i = {i}",
            self.sigma
        )))
    }

    /// Whether some covector with heavy coordinates chosen from `start..`
    /// and total level exactly `budget` hits `target`.
    fn reaches(&mut self, start: usize, budget: u64, heavy_sum: i64, target: i64) -> bool {
        if budget == 0 {
            return self.light_hits(heavy_sum, target);
        }
        for j in start..self.sigma.len() {
            let s = self.sigma[j];
            self.heavy[j] = true;
            let mut a = 3i64;
            while level_cost(a) <= budget {
                let rest = budget - level_cost(a);
                if self.reaches(j + 1, rest, heavy_sum + a * s, target)
                    || self.reaches(j + 1, rest, heavy_sum - a * s, target)
                {
                    self.heavy[j] = false;
                    return true;
                }
                a += 2;
            }
            self.heavy[j] = false;
        }
        false
    }

    /// The light coordinates contribute `S_L - 2s` for subset sums `s` of their
    /// entries; look for `s` with `heavy_sum + S_L - 2s = target (mod 2p)`.
    fn light_hits(&mut self, heavy_sum: i64, target: i64) -> bool {
        let sums = if self.heavy.iter().any(|&h| h) {
            let light_total: i64 = self
                .sigma
                .iter()
                .zip(&self.heavy)
                .filter(|(_, &h)| !h)
                .map(|(s, _)| s)
                .sum();
            self.scratch.reset(light_total as usize);
            for (&s, &h) in self.sigma.iter().zip(&self.heavy) {
                if !h {
                    self.scratch.insert(s as usize);
                }
            }
            &self.scratch
        } else {
            &self.all_sums
        };
        let light_total = sums.total() as i64;
        let d = heavy_sum + light_total - target;
        if d % 2 != 0 {
            return false;
        }
        let mut s = (d / 2).rem_euclid(self.p);
        while s <= light_total {
            if sums.contains(s as usize) {
                return true;
            }
            s += self.p;
        }
        false
    }
}

/// `t_i` computed from `sigma` by the minimum-level search.
pub fn torsion_from_changemaker(sigma: &ChangemakerVector, i: i64) -> Result<u64> {
    TorsionScanner::new(sigma)?.torsion(i)
}

/// All of `t_0, ..., t_g` from `sigma` at once.
///
/// Since the level of a characteristic covector is the sum of the per-coordinate
/// costs `(c_j^2 - 1) / 8`, the minimum level for every residue of `<c, sigma>`
/// mod `2p` is a min-plus product over the coordinates. Coordinates are capped
/// at cost `cap`; any minimum not exceeding `cap` is then exact, and the cap is
/// doubled until all of `t_0, ..., t_g` fall under it.
pub fn torsion_sequence(sigma: &ChangemakerVector) -> Result<Vec<i64>> {
    let g = genus_from_changemaker(sigma)?;
    let p = sigma.p();
    let modulus = (2 * p) as usize;
    let target = |i: i64| (p - 2 * i).rem_euclid(2 * p) as usize;
    let mut cap: u64 = 1;
    loop {
        let dist = residue_levels(sigma.entries(), modulus, cap);
        let values: Vec<u64> = (0..=g).map(|i| dist[target(i)]).collect();
        if values.iter().all(|&v| v <= cap) {
            return Ok(values.into_iter().map(|v| v as i64).collect());
        }
        if cap > p as u64 {
            return Err(Error::invariant(format!(
                "torsion levels exceed the safety cap {p} for {sigma}"
            )));
        }
        cap *= 2;
    }
}

fn residue_levels(sigma: &[i64], modulus: usize, cap: u64) -> Vec<u64> {
    const INF: u64 = u64::MAX;
    let mut dist = vec![INF; modulus];
    dist[0] = 0;
    let mut next = vec![INF; modulus];
    let m = modulus as i64;
    for &s in sigma {
        next.fill(INF);
        let mut a = 1i64;
        while level_cost(a) <= cap {
            let cost = level_cost(a);
            for signed in [a, -a] {
                let shift = (signed * s).rem_euclid(m) as usize;
                for (r, &d) in dist.iter().enumerate() {
                    if d == INF {
                        continue;
                    }
                    let to = if r + shift >= modulus {
                        r + shift - modulus
                    } else {
                        r + shift
                    };
                    let cand = d + cost;
                    if cand < next[to] {
                        next[to] = cand;
                    }
                }
            }
            a += 2;
        }
        core::mem::swap(&mut dist, &mut next);
    }
    dist
}

/// The level-one covector `sum_{j not in A} e_j - sum_{k in A} e_k + 2 e_t`, where `t`
/// is the first index with `sigma_t >= 3` and `A` is the greedy subset with sum
/// `sigma_t - 3`. It satisfies `p + <c, sigma> = p - |sigma|_1 - 6 = 2g - 6`.
pub fn lemma4_witness(sigma: &ChangemakerVector) -> Result<CharacteristicVector> {
    require_sigma0_one(sigma.entries())?;
    let entries = sigma.entries();
    let t = entries
        .iter()
        .position(|&s| s >= 3)
        .ok_or_else(|| Error::domain(format!("witness inapplicable: {sigma} has no entry >= 3")))?;
    let subset = subset_representation(sigma, entries[t] - 3)?;
    if subset.contains(&t) {
        return Err(Error::invariant(format!(
            "subset for {sigma} contains t = {t}"
        )));
    }
    let mut coords = vec![1i64; entries.len()];
    for k in subset {
        coords[k] = -1;
    }
    coords[t] += 2;
    CharacteristicVector::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristic::characteristic_vectors;
    use crate::lattice::pair;

    fn cm(s: &[i64]) -> ChangemakerVector {
        ChangemakerVector::new(s.to_vec()).unwrap()
    }

    fn ae(e: &[i64]) -> AlexanderExponents {
        AlexanderExponents::new(e.to_vec()).unwrap()
    }

    /// Literal scan: every covector of `Char_k`, level by level.
    fn brute_torsion(sigma: &[i64], i: i64) -> u64 {
        let p: i64 = sigma.iter().map(|s| s * s).sum();
        for k in 0.. {
            for c in characteristic_vectors(sigma.len(), k) {
                if (pair(c.coords(), sigma) + p - 2 * i).rem_euclid(2 * p) == 0 {
                    return k;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn coefficient_examples() {
        let c = coefficients(&ae(&[2, 1]));
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            [(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]
        );
        let c = coefficients(&ae(&[1]));
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            [(-1, 1), (0, -1), (1, 1)]
        );
        let c = coefficients(&ae(&[3, 2, 1]));
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            [(-3, 1), (-2, -1), (-1, 1), (0, -1), (1, 1), (2, -1), (3, 1)]
        );
        let c = coefficients(&ae(&[]));
        assert_eq!(c.into_iter().collect::<Vec<_>>(), [(0, 1)]);
    }

    /// Coefficients of `(T^{2(2g+1)} - 1)(T - 1) / ((T^2 - 1)(T^{2g+1} - 1))`,
    /// shifted down by `g` so the polynomial is symmetric.
    fn torus_alexander_by_division(g: i64) -> BTreeMap<i64, i64> {
        let m = 2 * g + 1;
        // (T^{2m} - 1) / (T^m - 1) = T^m + 1; (T - 1) / (T^2 - 1) = 1 / (T + 1)
        // so Delta = (T^m + 1) / (T + 1) = sum_{k=0}^{m-1} (-1)^k T^k
        let mut num = vec![0i64; m as usize + 1];
        num[0] = 1;
        num[m as usize] = 1;
        let mut quot = vec![0i64; m as usize];
        for d in (1..=m as usize).rev() {
            let c = num[d];
            quot[d - 1] = c;
            num[d] -= c;
            num[d - 1] -= c;
        }
        assert!(num.iter().all(|&c| c == 0));
        quot.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k as i64 - g, c))
            .collect()
    }

    #[test]
    fn torus_knot_exponents_match_polynomial_division() {
        for g in 1..=8 {
            let e = torus_knot_exponents(g).unwrap();
            assert_eq!(coefficients(&e), torus_alexander_by_division(g), "g = {g}");
        }
        assert_eq!(torus_knot_exponents(2).unwrap().exponents(), [2, 1]);
        assert_eq!(torus_knot_exponents(1).unwrap().exponents(), [1]);
        assert_eq!(torus_knot_exponents(3).unwrap().exponents(), [3, 2, 1]);
        assert!(torus_knot_exponents(0).is_err());
    }

    #[test]
    fn knot_side_examples() {
        assert_eq!(torsion_from_alexander(&ae(&[2, 1]), 0), 1);
        assert_eq!(torsion_from_alexander(&ae(&[3, 2, 1]), 0), 2);
        for e in [ae(&[2, 1]), ae(&[3, 2, 1]), ae(&[5, 4, 2]), ae(&[1])] {
            assert_eq!(torsion_from_alexander(&e, e.genus()), 0);
        }
        assert_eq!(torsion_difference(&ae(&[2, 1]), 1), 1);
        assert_eq!(torsion_difference(&ae(&[2, 1]), 2), 0);
        assert_eq!(torsion_difference(&ae(&[3, 2, 1]), 0), 1);
    }

    #[test]
    fn exponent_validation() {
        assert!(AlexanderExponents::new(vec![2, 2]).is_err());
        assert!(AlexanderExponents::new(vec![1, 2]).is_err());
        assert!(AlexanderExponents::new(vec![2, 0]).is_err());
        assert!(AlexanderExponents::new(vec![5, 3]).is_ok());
        assert!(AlexanderExponents::new_lens_space(vec![5, 3]).is_err());
        assert!(AlexanderExponents::new_lens_space(vec![5, 4, 1]).is_ok());
        assert_eq!(ae(&[5, 4]).n3(), 0);
        assert_eq!(ae(&[5, 4, 2]).n3(), 2);
    }

    #[test]
    fn reconstruction_examples() {
        let ts = TorsionSequence::new(vec![1, 1, 0]).unwrap();
        assert_eq!(exponents_from_torsion(&ts).exponents(), [2, 1]);
        let ts = TorsionSequence::new(vec![2, 1, 1, 0]).unwrap();
        assert_eq!(exponents_from_torsion(&ts).exponents(), [3, 2, 1]);
        let ts = TorsionSequence::new(vec![0]).unwrap();
        assert!(exponents_from_torsion(&ts).is_unknot());
        let ts = TorsionSequence::new(vec![1, 1, 1, 0, 0]).unwrap();
        assert_eq!(ts.values(), [1, 1, 1, 0]);
        assert_eq!(exponents_from_torsion(&ts).exponents(), [3, 2]);
    }

    #[test]
    fn torsion_sequence_validation() {
        assert!(TorsionSequence::new(vec![]).is_err());
        assert!(TorsionSequence::new(vec![1, 1]).is_err());
        assert!(TorsionSequence::new(vec![2, 0]).is_err());
        assert!(TorsionSequence::new(vec![1, 2, 0]).is_err());
        assert!(TorsionSequence::new(vec![1, 0, 1, 0]).is_err());
        assert!(TorsionSequence::new(vec![-1, 0]).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_from_changemaker(&cm(&[1, 2, 2])).unwrap(), 2);
        assert_eq!(genus_from_changemaker(&cm(&[1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(genus_from_changemaker(&cm(&[1, 1, 3])).unwrap(), 3);
        assert!(genus_from_changemaker(&cm(&[0, 1, 2])).is_err());
    }

    #[test]
    fn changemaker_side_examples() {
        let s = cm(&[1, 2, 2]);
        assert_eq!(torsion_from_changemaker(&s, 2).unwrap(), 0);
        assert_eq!(torsion_from_changemaker(&s, 0).unwrap(), 1);
        assert_eq!(torsion_from_changemaker(&s, 1).unwrap(), 1);
        assert!(torsion_from_changemaker(&s, 5).is_err());
        assert!(torsion_from_changemaker(&s, -1).is_err());
        assert!(torsion_from_changemaker(&cm(&[0, 1]), 0).is_err());
    }

    // Frozen from an independent brute-force Char_k scan.
    #[test]
    fn frozen_sequences() {
        let cases: &[(&[i64], &[i64])] = &[
            (&[1, 2, 2], &[1, 1, 0]),
            (&[1, 1, 3], &[1, 1, 1, 0]),
            (&[1, 1], &[0]),
            (&[1, 1, 1, 3], &[1, 1, 1, 0]),
            (&[1, 2, 4], &[3, 2, 2, 1, 1, 1, 1, 0]),
            (&[1, 2, 3], &[2, 1, 1, 1, 0]),
            (&[1, 1, 2], &[1, 0]),
            (&[1, 2, 2, 2], &[2, 1, 1, 0]),
            (&[1, 1, 1, 2, 2], &[1, 1, 0]),
            (&[1, 1, 1, 2, 2, 2], &[2, 1, 1, 0]),
        ];
        for (sigma, expected) in cases {
            let s = cm(sigma);
            assert_eq!(torsion_sequence(&s).unwrap(), *expected, "{s}");
            let mut scanner = TorsionScanner::new(&s).unwrap();
            let scanned: Vec<i64> = (0..expected.len() as i64)
                .map(|i| scanner.torsion(i).unwrap() as i64)
                .collect();
            assert_eq!(scanned, *expected, "{s}");
        }
    }

    #[test]
    fn scan_and_residue_routes_agree_with_brute_force() {
        for n in 1..=3 {
            for s in crate::changemaker::Changemakers::new(n) {
                let seq = torsion_sequence(&s).unwrap();
                let mut scanner = TorsionScanner::new(&s).unwrap();
                for i in 0..=s.p() / 2 {
                    let brute = brute_torsion(s.entries(), i);
                    assert_eq!(scanner.torsion(i).unwrap(), brute, "{s} i={i}");
                    if (i as usize) < seq.len() {
                        assert_eq!(seq[i as usize] as u64, brute, "{s} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn scanner_reset_reuses_buffers() {
        let mut scanner = TorsionScanner::default();
        scanner.reset(&[1, 2, 4]).unwrap();
        assert_eq!(scanner.torsion(0).unwrap(), 3);
        scanner.reset(&[1, 1]).unwrap();
        assert_eq!(scanner.torsion(0).unwrap(), 0);
        assert!(scanner.reset(&[2, 2]).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = lemma4_witness(&cm(&[1, 1, 3])).unwrap();
        assert_eq!(w.coords(), [1, 1, 3]);
        let w = lemma4_witness(&cm(&[1, 1, 1, 3])).unwrap();
        assert_eq!(w.coords(), [1, 1, 1, 3]);
        let s = cm(&[1, 2, 4]);
        let w = lemma4_witness(&s).unwrap();
        assert_eq!(w.coords(), [-1, 1, 3]);
        assert_eq!(w.level(), 1);
        let g = genus_from_changemaker(&s).unwrap();
        assert_eq!(g, 7);
        assert_eq!(s.p() + pair(w.coords(), s.entries()), 2 * g - 6);
        assert!(matches!(
            lemma4_witness(&cm(&[1, 2, 2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn witness_identity_through_rank_5() {
        for n in 1..=5 {
            for s in crate::changemaker::Changemakers::new(n) {
                if s.top() < 3 {
                    continue;
                }
                let w = lemma4_witness(&s).unwrap();
                assert_eq!(w.level(), 1);
                assert_eq!(
                    s.p() + pair(w.coords(), s.entries()),
                    s.p() - s.one_norm() - 6
                );
            }
        }
    }
}
