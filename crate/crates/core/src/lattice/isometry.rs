//! Exhaustive isometry search for small negative definite lattices.
//!
//! Short vectors are enumerated exactly (Fincke-Pohst over rationals, no
//! floating point), then images of the target basis are assigned by
//! backtracking on the pairing constraints.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use super::GramMatrix;
use crate::error::{Error, Result};

type Q = Ratio<i128>;

/// Limits for [`is_isometric`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsometryConfig {
    pub max_rank: usize,
}

impl Default for IsometryConfig {
    fn default() -> Self {
        IsometryConfig { max_rank: 5 }
    }
}

impl IsometryConfig {
    pub fn with_max_rank(max_rank: usize) -> Self {
        IsometryConfig { max_rank }
    }

    fn check_rank(&self, g: &GramMatrix) -> Result<()> {
        if g.rank() > self.max_rank {
            return Err(Error::Capacity {
                what: "isometry search rank",
                requested: g.rank() as u64,
                limit: self.max_rank as u64,
            });
        }
        Ok(())
    }

    /// True iff some `U` in `GL_n(Z)` has `U^T a U = b`.
    pub fn is_isometric(&self, a: &GramMatrix, b: &GramMatrix) -> Result<bool> {
        Ok(self.find_isometry(a, b)?.is_some())
    }

    /// Columns `w_0, ..., w_{r-1}` (in the basis of `a`) with `w_i^T a w_j = b_ij`,
    /// or `None` when the lattices are not isometric.
    pub fn find_isometry(&self, a: &GramMatrix, b: &GramMatrix) -> Result<Option<Vec<Vec<i64>>>> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        for g in [a, b] {
            if !g.is_negative_definite() {
                return Err(Error::domain(
                    "isometry search needs negative definite Gram matrices",
                ));
            }
        }
        if a.rank() != b.rank() || a.determinant() != b.determinant() {
            return Ok(None);
        }
        let bound = a
            .diagonal()
            .into_iter()
            .chain(b.diagonal())
            .map(|d| -d)
            .max()
            .expect("rank is positive");
        let vecs_a = short_vectors(a, bound);
        let vecs_b = short_vectors(b, bound);
        let counts = |m: &BTreeMap<i64, Vec<Vec<i64>>>| -> Vec<(i64, usize)> {
            m.iter().map(|(k, v)| (*k, v.len())).collect()
        };
        if counts(&vecs_a) != counts(&vecs_b) {
            return Ok(None);
        }

        let r = a.rank();
        let candidates: Vec<Vec<Candidate>> = (0..r)
            .map(|j| {
                let norm = -b.get(j, j);
                vecs_a
                    .get(&norm)
                    .map(|vs| {
                        vs.iter()
                            .filter(|x| j != 0 || is_sign_canonical(x))
                            .map(|x| Candidate::new(a, x))
                            .collect()
                    })
                    .unwrap_or_default()
            })
            .collect();

        let mut chosen: Vec<usize> = Vec::with_capacity(r);
        if assign(b, &candidates, &mut chosen) {
            let cols = chosen
                .iter()
                .enumerate()
                .map(|(j, &c)| candidates[j][c].coords.clone())
                .collect();
            Ok(Some(cols))
        } else {
            Ok(None)
        }
    }
}

/// [`IsometryConfig::is_isometric`] with the default rank bound.
pub fn is_isometric(a: &GramMatrix, b: &GramMatrix) -> Result<bool> {
    IsometryConfig::default().is_isometric(a, b)
}

struct Candidate {
    coords: Vec<i64>,
    // a * coords
    image: Vec<i64>,
}

impl Candidate {
    fn new(a: &GramMatrix, x: &[i64]) -> Self {
        let image = (0..a.rank())
            .map(|i| a.row(i).iter().zip(x).map(|(g, c)| g * c).sum())
            .collect();
        Candidate {
            coords: x.to_vec(),
            image,
        }
    }

    fn pair(&self, other: &Candidate) -> i64 {
        self.image
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }
}

fn is_sign_canonical(x: &[i64]) -> bool {
    x.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

fn assign(b: &GramMatrix, candidates: &[Vec<Candidate>], chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == candidates.len() {
        return true;
    }
    'next: for (idx, cand) in candidates[j].iter().enumerate() {
        for (i, &c) in chosen.iter().enumerate() {
            if candidates[i][c].pair(cand) != b.get(i, j) {
                continue 'next;
            }
        }
        chosen.push(idx);
        if assign(b, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// All nonzero `x` in `Z^r` with `0 < -x^T g x <= bound`, keyed by `-x^T g x`.
///
/// `g` must be negative definite.
pub fn short_vectors(g: &GramMatrix, bound: i64) -> BTreeMap<i64, Vec<Vec<i64>>> {
    let r = g.rank();
    // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2 for the positive form -g.
    let mut q: Vec<Vec<Q>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| Q::from_integer(-(g.get(i, j) as i128)))
                .collect()
        })
        .collect();
    for i in 0..r {
        for j in i + 1..r {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for k in i + 1..r {
            for l in k..r {
                let t = q[k][i] * q[i][l];
                q[k][l] -= t;
            }
        }
    }

    let mut out: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
    let mut x = vec![0i64; r];
    enumerate_level(g, &q, r, Q::from_integer(bound as i128), &mut x, &mut out);
    out
}

fn enumerate_level(
    g: &GramMatrix,
    q: &[Vec<Q>],
    level: usize,
    budget: Q,
    x: &mut [i64],
    out: &mut BTreeMap<i64, Vec<Vec<i64>>>,
) {
    if level == 0 {
        if x.iter().all(|&c| c == 0) {
            return;
        }
        let r = x.len();
        let mut norm = 0i64;
        for i in 0..r {
            for j in 0..r {
                norm -= x[i] * g.get(i, j) * x[j];
            }
        }
        out.entry(norm).or_default().push(x.to_vec());
        return;
    }
    let i = level - 1;
    let r = x.len();
    let mut shift = Q::from_integer(0);
    for j in i + 1..r {
        shift += q[i][j] * Q::from_integer(x[j] as i128);
    }
    let center = -shift;
    let nearest = (center + Q::new(1, 2)).floor().to_integer() as i64;
    let cost = |xi: i64| -> Q {
        let d = Q::from_integer(xi as i128) + shift;
        q[i][i] * d * d
    };

    let mut xi = nearest;
    loop {
        let c = cost(xi);
        if c > budget {
            break;
        }
        x[i] = xi;
        enumerate_level(g, q, i, budget - c, x, out);
        xi -= 1;
    }
    let mut xi = nearest + 1;
    loop {
        let c = cost(xi);
        if c > budget {
            break;
        }
        x[i] = xi;
        enumerate_level(g, q, i, budget - c, x, out);
        xi += 1;
    }
    x[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(rows: &[&[i64]]) -> GramMatrix {
        GramMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn brute_short(g: &GramMatrix, bound: i64, box_size: i64) -> BTreeMap<i64, usize> {
        let r = g.rank();
        let mut counts = BTreeMap::new();
        let side = (2 * box_size + 1) as usize;
        let total = side.pow(r as u32);
        for idx in 0..total {
            let mut rem = idx;
            let x: Vec<i64> = (0..r)
                .map(|_| {
                    let c = (rem % side) as i64 - box_size;
                    rem /= side;
                    c
                })
                .collect();
            if x.iter().all(|&c| c == 0) {
                continue;
            }
            let mut n = 0;
            for i in 0..r {
                for j in 0..r {
                    n -= x[i] * g.get(i, j) * x[j];
                }
            }
            if n <= bound {
                *counts.entry(n).or_insert(0) += 1;
            }
        }
        counts
    }

    #[test]
    fn short_vectors_match_box_search() {
        for g in [
            gm(&[&[-5, 1], &[1, -2]]),
            gm(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -3]]),
            gm(&[&[-3, 1, 1], &[1, -4, -2], &[1, -2, -6]]),
        ] {
            let found = short_vectors(&g, 9);
            let counts: BTreeMap<i64, usize> = found.iter().map(|(k, v)| (*k, v.len())).collect();
            assert_eq!(counts, brute_short(&g, 9, 9), "{g}");
        }
    }

    #[test]
    fn identity_and_small_cases() {
        assert!(is_isometric(&gm(&[&[-2]]), &gm(&[&[-2]])).unwrap());
        assert!(!is_isometric(&gm(&[&[-2]]), &gm(&[&[-3]])).unwrap());
        assert!(!is_isometric(&gm(&[&[-2]]), &gm(&[&[-2, 0], &[0, -1]])).unwrap());
        // equal determinant 6, different lattices
        assert!(!is_isometric(&gm(&[&[-2, 0], &[0, -3]]), &gm(&[&[-1, 0], &[0, -6]])).unwrap());
    }

    #[test]
    fn reversed_chain_is_isometric() {
        let a = GramMatrix::tridiagonal(&[-2, -2, -3]);
        let b = GramMatrix::tridiagonal(&[-3, -2, -2]);
        let cols = IsometryConfig::default()
            .find_isometry(&a, &b)
            .unwrap()
            .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0;
                for k in 0..3 {
                    for l in 0..3 {
                        s += cols[i][k] * a.get(k, l) * cols[j][l];
                    }
                }
                assert_eq!(s, b.get(i, j));
            }
        }
    }

    #[test]
    fn non_chain_basis_of_a_chain_lattice() {
        // basis change of [[-5,1],[1,-2]] by (v1, v1+v2)
        let a = gm(&[&[-5, 1], &[1, -2]]);
        let b = gm(&[&[-5, -4], &[-4, -5]]);
        assert!(is_isometric(&a, &b).unwrap());
    }

    #[test]
    fn capacity_and_domain_errors() {
        let big = GramMatrix::tridiagonal(&[-2; 6]);
        assert!(matches!(
            is_isometric(&big, &big),
            Err(Error::Capacity { .. })
        ));
        assert!(IsometryConfig::with_max_rank(6)
            .is_isometric(&big, &big)
            .unwrap());
        let indefinite = gm(&[&[-1, 2], &[2, -1]]);
        assert!(matches!(
            is_isometric(&indefinite, &indefinite),
            Err(Error::Domain(_))
        ));
    }
}
