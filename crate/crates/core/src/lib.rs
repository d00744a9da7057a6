//! Exact arithmetic for changemaker lattices and lens space surgeries.
//!
//! Everything here works inside the negative definite standard lattice
//! `-Z^{n+1}` with orthonormal basis `e_0, ..., e_n`, so `<e_i, e_j> = -delta_ij`.
//!
//! - [`lattice`]: vectors, pairings, Gram matrices, orthogonal complements and a
//!   brute-force isometry test for small ranks.
//! - [`changemaker`]: the changemaker condition (coordinate and coordinate-free
//!   forms), lexicographic enumeration and greedy subset sums.
//! - [`linear`]: negative continued fractions and linear lattices `Lambda(p, q)`.
//! - [`characteristic`]: characteristic covectors and their levels.
//! - [`torsion`]: Alexander exponents, torsion coefficients from both the knot
//!   side and the changemaker side, and the genus formula.
//! - [`graph`]: the standard basis of a changemaker with top entry 2 and its
//!   intersection graph.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

mod bitset;
pub mod changemaker;
pub mod characteristic;
mod error;
pub mod graph;
pub mod lattice;
pub mod linear;
pub mod torsion;

pub use changemaker::{
    coordinate_free_check, enumerate_changemakers, enumerate_changemakers_bounded, is_changemaker,
    subset_representation, ChangemakerVector, Changemakers, DEFAULT_ENUMERATION_CAPACITY,
};
pub use characteristic::{characteristic_vectors, level_cost, CharacteristicVector};
pub use error::{Error, Result};
pub use graph::{
    has_induced_claw, intersection_graph, is_connected, leading_ones, standard_basis,
    IntersectionGraph,
};
pub use lattice::{
    complement_basis, gram_matrix, inner_product, is_isometric, short_vectors, GramMatrix,
    IsometryConfig, LatticeVector,
};
pub use linear::{
    cf_evaluate, cf_expand, chain_order, gerstein_isomorphic, gerstein_normalize, linear_gram,
    recognize_linear, recognize_linear_with, LinearLatticeParams,
};
pub use torsion::{
    coefficients, exponents_from_torsion, genus_from_changemaker, lemma4_witness,
    torsion_difference, torsion_from_alexander, torsion_from_changemaker, torsion_sequence,
    torus_knot_exponents, AlexanderExponents, TorsionScanner, TorsionSequence,
};
