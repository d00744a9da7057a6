//! Negative continued fractions and the linear lattices `Lambda(p, q)`.
//!
//! For `p > q > 0` coprime, `p/q = [x_1, ..., x_n]^- = x_1 - 1/(x_2 - 1/(... - 1/x_n))`
//! with every `x_i >= 2`, and `Lambda(p, q)` is presented by the tridiagonal
//! matrix with diagonal `-x_1, ..., -x_n` and off-diagonal entries `1`.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{GramMatrix, IsometryConfig};

/// A coprime pair `p > q > 0` with its negative continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearLatticeParams {
    p: i64,
    q: i64,
    cf: Vec<i64>,
}

impl LinearLatticeParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let cf = cf_expand(p, q)?;
        Ok(LinearLatticeParams { p, q, cf })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn cf(&self) -> &[i64] {
        &self.cf
    }

    pub fn rank(&self) -> usize {
        self.cf.len()
    }

    pub fn gram(&self) -> GramMatrix {
        chain_gram(&self.cf)
    }
}

fn check_pair(p: i64, q: i64) -> Result<()> {
    if !(p > q && q > 0) {
        return Err(Error::domain(format!(
            "need p > q > 0, got p = {p}, q = {q}"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::domain(format!(
            "p = {p} and q = {q} are not coprime"
        )));
    }
    Ok(())
}

/// The unique expansion `p/q = [x_1, ..., x_n]^-` with all `x_i >= 2`.
pub fn cf_expand(p: i64, q: i64) -> Result<Vec<i64>> {
    check_pair(p, q)?;
    let (mut a, mut b) = (p, q);
    let mut xs = Vec::new();
    while b > 0 {
        let x = Integer::div_ceil(&a, &b);
        xs.push(x);
        (a, b) = (b, x * b - a);
    }
    Ok(xs)
}

/// `[x_1, ..., x_n]^-` as a reduced fraction `(p, q)`.
pub fn cf_evaluate(xs: &[i64]) -> Result<(i64, i64)> {
    if xs.is_empty() {
        return Err(Error::domain("empty continued fraction"));
    }
    if let Some(x) = xs.iter().find(|&&x| x < 2) {
        return Err(Error::domain(format!(
            "continued fraction term {x} is below 2"
        )));
    }
    let (mut num, mut den) = (*xs.last().expect("non-empty"), 1i64);
    for &x in xs.iter().rev().skip(1) {
        (num, den) = (x * num - den, num);
    }
    Ok((num, den))
}

fn chain_gram(xs: &[i64]) -> GramMatrix {
    let diag: Vec<i64> = xs.iter().map(|x| -x).collect();
    GramMatrix::tridiagonal(&diag)
}

/// The linking matrix of the linear chain for `p/q`.
pub fn linear_gram(p: i64, q: i64) -> Result<GramMatrix> {
    Ok(chain_gram(&cf_expand(p, q)?))
}

/// `Lambda(p, q) = Lambda(p2, q2)` by the Gerstein criterion:
/// `p = p2` and either `q = q2` or `q q2 = 1 (mod p)`.
pub fn gerstein_isomorphic(p: i64, q: i64, p2: i64, q2: i64) -> bool {
    p == p2 && (q == q2 || (q as i128 * q2 as i128).rem_euclid(p as i128) == 1)
}

/// The representative with the smaller `q` among `{q, q^{-1} mod p}`.
pub fn gerstein_normalize(p: i64, q: i64) -> (i64, i64) {
    let inv = mod_inverse(q, p).expect("q is a unit mod p");
    (p, q.min(inv))
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// If `g` presents a linear lattice, its Gerstein-least parameters `(p, q)`.
///
/// A basis whose unit-pairing graph is already a chain (all other pairings 0,
/// every norm at least 2) is read off directly. Otherwise every admissible
/// `q` with the right chain length is tested by exhaustive isometry search,
/// which is bounded by `config.max_rank`.
pub fn recognize_linear_with(
    g: &GramMatrix,
    config: &IsometryConfig,
) -> Result<Option<(i64, i64)>> {
    if !g.is_negative_definite() {
        return Err(Error::domain(
            "recognize_linear needs a negative definite Gram matrix",
        ));
    }
    if let Some(xs) = chain_terms(g) {
        let (p, q) = cf_evaluate(&xs)?;
        if p as i128 != g.determinant().abs() {
            return Err(Error::invariant(
                "chain determinant disagrees with continued fraction",
            ));
        }
        return Ok(Some(gerstein_normalize(p, q)));
    }
    if g.rank() > config.max_rank {
        return Err(Error::Capacity {
            what: "isometry search rank",
            requested: g.rank() as u64,
            limit: config.max_rank as u64,
        });
    }
    let p = i64::try_from(g.determinant().abs())
        .map_err(|_| Error::domain("determinant does not fit in i64"))?;
    for q in 1..p {
        if p.gcd(&q) != 1 {
            continue;
        }
        let cf = cf_expand(p, q)?;
        if cf.len() != g.rank() {
            continue;
        }
        if config.is_isometric(g, &chain_gram(&cf))? {
            return Ok(Some((p, q)));
        }
    }
    Ok(None)
}

/// [`recognize_linear_with`] using the default isometry bound.
pub fn recognize_linear(g: &GramMatrix) -> Result<Option<(i64, i64)>> {
    recognize_linear_with(g, &IsometryConfig::default())
}

/// Continued-fraction terms if the basis of `g` is a chain up to order and signs.
fn chain_terms(g: &GramMatrix) -> Option<Vec<i64>> {
    let order = chain_order(g)?;
    let xs: Vec<i64> = order.iter().map(|&i| -g.get(i, i)).collect();
    xs.iter().all(|&x| x >= 2).then_some(xs)
}

/// Basis order along a path when the nonzero off-diagonal entries are all `+-1`
/// and form a path graph. Starts from the lower-indexed endpoint.
pub fn chain_order(g: &GramMatrix) -> Option<Vec<usize>> {
    let r = g.rank();
    let mut neighbours: Vec<Vec<usize>> = (0..r).map(|_| Vec::new()).collect();
    for (i, adjacent) in neighbours.iter_mut().enumerate() {
        for j in 0..r {
            if i == j {
                continue;
            }
            match g.get(i, j) {
                0 => {}
                1 | -1 => adjacent.push(j),
                _ => return None,
            }
        }
    }
    if r == 1 {
        return Some(alloc::vec![0]);
    }
    if neighbours.iter().any(|n| n.len() > 2 || n.is_empty()) {
        return None;
    }
    let start = (0..r).find(|&i| neighbours[i].len() == 1)?;
    let mut order = alloc::vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = neighbours[cur].iter().find(|&&n| n != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == r).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn gm(rows: &[&[i64]]) -> GramMatrix {
        GramMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(cf_expand(9, 2).unwrap(), [5, 2]);
        assert_eq!(cf_expand(7, 5).unwrap(), [2, 2, 3]);
        assert_eq!(cf_expand(11, 1).unwrap(), [11]);
        assert_eq!(cf_expand(4, 3).unwrap(), [2, 2, 2]);
        for (p, q) in [(5, 5), (5, 0), (6, 4), (3, 5), (-3, 1)] {
            assert!(cf_expand(p, q).is_err(), "{p}/{q}");
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(cf_evaluate(&[5, 2]).unwrap(), (9, 2));
        assert_eq!(cf_evaluate(&[2, 2, 2]).unwrap(), (4, 3));
        assert_eq!(cf_evaluate(&[7]).unwrap(), (7, 1));
        assert!(cf_evaluate(&[]).is_err());
        assert!(cf_evaluate(&[3, 1]).is_err());
    }

    #[test]
    fn gram_examples() {
        assert_eq!(linear_gram(9, 2).unwrap(), gm(&[&[-5, 1], &[1, -2]]));
        assert_eq!(
            linear_gram(7, 5).unwrap(),
            gm(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -3]])
        );
        assert_eq!(linear_gram(2, 1).unwrap(), gm(&[&[-2]]));
        assert_eq!(linear_gram(7, 5).unwrap().determinant(), -7);
        let params = LinearLatticeParams::new(7, 3).unwrap();
        assert_eq!(params.cf(), [3, 2, 2]);
        assert_eq!(params.rank(), 3);
    }

    #[test]
    fn gerstein_examples() {
        assert!(gerstein_isomorphic(7, 5, 7, 3));
        assert!(gerstein_isomorphic(9, 2, 9, 2));
        assert!(!gerstein_isomorphic(9, 2, 9, 4));
        assert!(!gerstein_isomorphic(9, 2, 11, 2));
        assert_eq!(gerstein_normalize(7, 5), (7, 3));
        assert_eq!(gerstein_normalize(9, 2), (9, 2));
    }

    #[test]
    fn recognition_examples() {
        assert_eq!(
            recognize_linear(&gm(&[&[-5, 1], &[1, -2]])).unwrap(),
            Some((9, 2))
        );
        assert_eq!(recognize_linear(&gm(&[&[-2, 0], &[0, -2]])).unwrap(), None);
        assert_eq!(recognize_linear(&gm(&[&[-2]])).unwrap(), Some((2, 1)));
        // a non-chain basis of Lambda(9, 2) goes through the isometry search
        assert_eq!(
            recognize_linear(&gm(&[&[-5, -4], &[-4, -5]])).unwrap(),
            Some((9, 2))
        );
        // reversed chain normalizes to the same representative
        assert_eq!(
            recognize_linear(&GramMatrix::tridiagonal(&[-3, -2, -2])).unwrap(),
            Some((7, 3))
        );
        assert_eq!(
            recognize_linear(&GramMatrix::tridiagonal(&[-2, -2, -3])).unwrap(),
            Some((7, 3))
        );
    }

    #[test]
    fn recognition_respects_capacity() {
        // sum of two rank-3 chains: not a chain, rank 6 exceeds the default bound
        let mut rows = vec![vec![0; 6]; 6];
        for b in [0, 3] {
            for i in 0..3 {
                rows[b + i][b + i] = -2;
                if i + 1 < 3 {
                    rows[b + i][b + i + 1] = 1;
                    rows[b + i + 1][b + i] = 1;
                }
            }
        }
        let g = GramMatrix::new(rows).unwrap();
        assert!(matches!(recognize_linear(&g), Err(Error::Capacity { .. })));
        assert_eq!(
            recognize_linear_with(&g, &IsometryConfig::with_max_rank(6)).unwrap(),
            None
        );
    }

    #[test]
    fn chain_order_handles_signs_and_order() {
        let g = gm(&[&[-2, 1, 1], &[1, -2, 0], &[1, 0, -3]]);
        assert_eq!(chain_order(&g).unwrap(), [1, 0, 2]);
        let g = gm(&[&[-2, -1], &[-1, -4]]);
        assert_eq!(chain_order(&g).unwrap(), [0, 1]);
        // a triangle is not a path
        let g = gm(&[&[-3, 1, 1], &[1, -3, 1], &[1, 1, -3]]);
        assert_eq!(chain_order(&g), None);
    }

    #[test]
    fn torus_knot_fraction_identities() {
        for g in 1..=50i64 {
            let mut first = vec![5];
            first.extend(core::iter::repeat_n(2, g as usize - 1));
            assert_eq!(cf_expand(4 * g + 1, g).unwrap(), first);
            let mut second = vec![2, 2, 3];
            second.extend(core::iter::repeat_n(2, g as usize - 1));
            assert_eq!(cf_expand(4 * g + 3, 3 * g + 2).unwrap(), second);
        }
    }

    proptest! {
        #[test]
        fn round_trip(p in 2i64..500, q in 1i64..500) {
            prop_assume!(q < p && p.gcd(&q) == 1);
            let xs = cf_expand(p, q).unwrap();
            prop_assert!(xs.iter().all(|&x| x >= 2));
            prop_assert_eq!(cf_evaluate(&xs).unwrap(), (p, q));
            prop_assert_eq!(linear_gram(p, q).unwrap().determinant().abs(), p as i128);
        }

        #[test]
        fn reversal_inverts_q(p in 2i64..300, q in 1i64..300) {
            prop_assume!(q < p && p.gcd(&q) == 1);
            let mut xs = cf_expand(p, q).unwrap();
            xs.reverse();
            let (p2, q2) = cf_evaluate(&xs).unwrap();
            prop_assert_eq!(p2, p);
            prop_assert!(gerstein_isomorphic(p, q, p2, q2));
        }
    }
}
