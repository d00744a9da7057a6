//! Vectors and Gram matrices in the negative definite lattice `-Z^{n+1}`.

mod isometry;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use isometry::{is_isometric, short_vectors, IsometryConfig};

/// An integer vector in `-Z^{n+1}`, written in the orthonormal basis `e_0, ..., e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<i64>,
}

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::domain(
                "a lattice vector needs ambient rank at least 1",
            ));
        }
        Ok(LatticeVector { coords })
    }

    /// The basis vector `e_i` of `-Z^{rank}`.
    pub fn basis(i: usize, rank: usize) -> Self {
        assert!(i < rank, "basis index {i} out of range for rank {rank}");
        let mut coords = vec![0; rank];
        coords[i] = 1;
        LatticeVector { coords }
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank > 0);
        LatticeVector {
            coords: vec![0; rank],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn ambient_rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `<v, v> = -sum v_i^2`.
    pub fn self_pairing(&self) -> i64 {
        -self.coords.iter().map(|c| c * c).sum::<i64>()
    }

    /// `self + factor * other`; panics on rank mismatch.
    pub fn add_scaled(&self, factor: i64, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.ambient_rank(), other.ambient_rank());
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + factor * b)
            .collect();
        LatticeVector { coords }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The pairing on `-Z^{n+1}`: `<u, v> = -sum u_i v_i`.
pub fn inner_product(u: &LatticeVector, v: &LatticeVector) -> Result<i64> {
    if u.ambient_rank() != v.ambient_rank() {
        return Err(Error::Dimension {
            expected: u.ambient_rank(),
            found: v.ambient_rank(),
        });
    }
    Ok(pair(&u.coords, &v.coords))
}

#[inline]
pub(crate) fn pair(u: &[i64], v: &[i64]) -> i64 {
    -u.iter().zip(v).map(|(a, b)| a * b).sum::<i64>()
}

/// A square symmetric integer matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl GramMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::domain("a Gram matrix needs rank at least 1"));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for row in &rows {
            if row.len() != rank {
                return Err(Error::Dimension {
                    expected: rank,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        let g = GramMatrix { rank, entries };
        for i in 0..rank {
            for j in 0..i {
                if g.get(i, j) != g.get(j, i) {
                    return Err(Error::domain("Gram matrix is not symmetric"));
                }
            }
        }
        Ok(g)
    }

    /// Tridiagonal matrix with diagonal `diag` and every off-diagonal entry `1`.
    pub fn tridiagonal(diag: &[i64]) -> Self {
        assert!(!diag.is_empty());
        let rank = diag.len();
        let mut entries = vec![0; rank * rank];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * rank + i] = d;
            if i + 1 < rank {
                entries[i * rank + i + 1] = 1;
                entries[(i + 1) * rank + i] = 1;
            }
        }
        GramMatrix { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.rank..(i + 1) * self.rank]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.rank).map(|i| self.get(i, i)).collect()
    }

    /// The Gram matrix of the reordered basis `(b_{perm[0]}, b_{perm[1]}, ...)`.
    pub fn permuted(&self, perm: &[usize]) -> GramMatrix {
        assert_eq!(perm.len(), self.rank);
        let rank = self.rank;
        let mut entries = Vec::with_capacity(rank * rank);
        for &i in perm {
            for &j in perm {
                entries.push(self.get(i, j));
            }
        }
        GramMatrix { rank, entries }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        determinant(self.rank, |i, j| self.get(i, j) as i128)
    }

    /// Leading principal minors `d_1, ..., d_rank`.
    pub fn leading_minors(&self) -> Vec<i128> {
        (1..=self.rank)
            .map(|k| determinant(k, |i, j| self.get(i, j) as i128))
            .collect()
    }

    /// Negative definite iff `(-1)^k d_k > 0` for every leading minor.
    pub fn is_negative_definite(&self) -> bool {
        self.leading_minors()
            .iter()
            .enumerate()
            .all(|(idx, &d)| if (idx + 1) % 2 == 0 { d > 0 } else { d < 0 })
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rank {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.rank {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn determinant(n: usize, entry: impl Fn(usize, usize) -> i128) -> i128 {
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `entries[i][j] = <v_i, v_j>`.
pub fn gram_matrix(basis: &[LatticeVector]) -> Result<GramMatrix> {
    let first = basis
        .first()
        .ok_or_else(|| Error::domain("gram_matrix of an empty list"))?;
    for v in basis {
        if v.ambient_rank() != first.ambient_rank() {
            return Err(Error::Dimension {
                expected: first.ambient_rank(),
                found: v.ambient_rank(),
            });
        }
    }
    let rank = basis.len();
    let mut entries = vec![0; rank * rank];
    for i in 0..rank {
        for j in i..rank {
            let x = pair(&basis[i].coords, &basis[j].coords);
            entries[i * rank + j] = x;
            entries[j * rank + i] = x;
        }
    }
    Ok(GramMatrix { rank, entries })
}

/// An integral basis of `(sigma)^perp` inside `-Z^{n+1}`.
///
/// Column reduction of the `1 x (n+1)` row `sigma` by unimodular operations
/// until a single nonzero entry (the gcd) remains; the transformed unit
/// vectors sitting over the zero entries span the kernel.
pub fn complement_basis(sigma: &LatticeVector) -> Result<Vec<LatticeVector>> {
    if sigma.is_zero() {
        return Err(Error::domain("orthogonal complement of the zero vector"));
    }
    let m = sigma.ambient_rank();
    let mut row = sigma.coords.clone();
    let mut cols: Vec<LatticeVector> = (0..m).map(|i| LatticeVector::basis(i, m)).collect();

    loop {
        let pivot = (0..m)
            .filter(|&i| row[i] != 0)
            .min_by_key(|&i| (row[i].abs(), i))
            .expect("sigma is nonzero");
        let mut done = true;
        for j in 0..m {
            if j == pivot || row[j] == 0 {
                continue;
            }
            let q = row[j].div_euclid(row[pivot]);
            row[j] -= q * row[pivot];
            cols[j] = cols[j].add_scaled(-q, &cols[pivot]);
            if row[j] != 0 {
                done = false;
            }
        }
        if done {
            let basis = cols
                .into_iter()
                .enumerate()
                .filter(|&(j, _)| j != pivot)
                .map(|(_, v)| v)
                .collect();
            return Ok(basis);
        }
    }
}
