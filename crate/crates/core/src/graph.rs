//! Standard bases of changemaker lattices with `sigma_n = 2` and their
//! intersection graphs.
//!
//! Such a `sigma` is `1^[k] 2^[n+1-k]` where `k` counts the leading ones.
//! For `k >= 2` the standard basis is `v_i = e_{i-1} - e_i` for `i != k` and
//! `v_k = e_{k-2} + e_{k-1} - e_k`; for `k = 1` it is `v_1 = 2 e_0 - e_1` and
//! `v_i = e_{i-1} - e_i` otherwise.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::changemaker::ChangemakerVector;
use crate::error::{Error, Result};
use crate::lattice::{pair, LatticeVector};

/// Number of leading ones `k` when `sigma = 1^[k] 2^[n+1-k]` with `1 <= k <= n`.
pub fn leading_ones(sigma: &ChangemakerVector) -> Option<usize> {
    let s = sigma.entries();
    let k = s.iter().take_while(|&&x| x == 1).count();
    let shaped = k >= 1 && k < s.len() && s[k..].iter().all(|&x| x == 2);
    shaped.then_some(k)
}

/// The standard basis `(v_1, ..., v_n)` of `(sigma)^perp`.
pub fn standard_basis(sigma: &ChangemakerVector) -> Result<Vec<LatticeVector>> {
    let k = leading_ones(sigma).ok_or_else(|| {
        Error::domain(format!(
            "standard basis needs sigma = 1^k 2^(n+1-k), got {sigma}"
        ))
    })?;
    let m = sigma.entries().len();
    let basis = (1..m)
        .map(|i| {
            let mut c = vec![0i64; m];
            if i == k && k == 1 {
                c[0] = 2;
                c[1] = -1;
            } else if i == k {
                c[k - 2] = 1;
                c[k - 1] = 1;
                c[k] = -1;
            } else {
                c[i - 1] = 1;
                c[i] = -1;
            }
            LatticeVector::new(c).expect("non-empty")
        })
        .collect();
    Ok(basis)
}

/// Vertices are basis vectors; `i ~ j` iff `|<v_i, v_j>| = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    vertices: Vec<LatticeVector>,
    edges: Vec<(usize, usize)>,
    adjacent: Vec<Vec<bool>>,
}

impl IntersectionGraph {
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacent[i][j]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacent[i].iter().filter(|&&a| a).count()
    }

    /// Some induced claw as `(center, [leaves])`.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let quad = [a, b, c, d];
                        for (pos, &center) in quad.iter().enumerate() {
                            let mut leaves = [0usize; 3];
                            let mut idx = 0;
                            for (q, &v) in quad.iter().enumerate() {
                                if q != pos {
                                    leaves[idx] = v;
                                    idx += 1;
                                }
                            }
                            let star = leaves.iter().all(|&l| self.adjacent[center][l]);
                            let independent = !self.adjacent[leaves[0]][leaves[1]]
                                && !self.adjacent[leaves[0]][leaves[2]]
                                && !self.adjacent[leaves[1]][leaves[2]];
                            if star && independent {
                                return Some((center, leaves));
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

pub fn intersection_graph(basis: &[LatticeVector]) -> Result<IntersectionGraph> {
    let n = basis.len();
    for w in basis.windows(2) {
        if w[0].ambient_rank() != w[1].ambient_rank() {
            return Err(Error::Dimension {
                expected: w[0].ambient_rank(),
                found: w[1].ambient_rank(),
            });
        }
    }
    let mut adjacent = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pair(basis[i].coords(), basis[j].coords()).abs() == 1 {
                adjacent[i][j] = true;
                adjacent[j][i] = true;
                edges.push((i, j));
            }
        }
    }
    Ok(IntersectionGraph {
        vertices: basis.to_vec(),
        edges,
        adjacent,
    })
}

/// True iff some four vertices induce `K_{1,3}`.
pub fn has_induced_claw(g: &IntersectionGraph) -> bool {
    g.find_claw().is_some()
}

/// Breadth-first connectivity; the empty graph counts as connected.
pub fn is_connected(g: &IntersectionGraph) -> bool {
    let n = g.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for (w, &edge) in g.adjacent[v].iter().enumerate() {
            if edge && !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}
