//! Spectral-gap verification for interchange processes on weighted graphs.
//!
//! The crate builds the objects needed to compare the spectral gap of the
//! interchange process (a continuous-time walk on `S_n` where the labels at
//! the endpoints of edge `{i, j}` swap at rate `α_ij`) against the gap of the
//! single-particle random walk on the same graph:
//!
//! * [`graphs`]: weighted graphs, random-walk Laplacians, the vertex-collapse
//!   weight update and its rank-one identity, standard graph families.
//! * [`symfun`]: partitions, standard Young tableaux, contents.
//! * [`yor`]: Young's orthogonal representation, irrep Laplacians,
//!   Jucys–Murphy matrices, branching.
//! * [`spectral`]: dense and Lanczos eigensolvers, interlacing and
//!   multiset comparisons.
//! * [`interchange`]: the `n!`-state Laplacian, direct and per-irrep gaps.
//! * [`conjecture`]: the star-versus-clique Dirichlet inequality in its
//!   brute-force, per-irrep and closed forms.
//! * [`reduce`]: degree-one / series / parallel / Y-Δ reductions and the
//!   weighted elimination certifier.
//!
//! Data-parallel loops (one task per partition, per seeded instance) run on
//! rayon when the `parallel` feature is enabled; see [`Exec`].

pub mod conjecture;
pub mod error;
pub mod graphs;
pub mod interchange;
pub mod par;
pub mod perm;
pub mod reduce;
pub mod spectral;
pub mod symfun;
pub mod yor;

pub use error::{Error, Result};
pub use graphs::{SymmetricMatrix, WeightedGraph};
pub use par::Exec;
pub use perm::Permutation;
pub use symfun::{Partition, StandardTableau};

/// Default relative tolerance used throughout; comparisons scale it by
/// `1 + max|entry|` of the quantities involved.
pub const DEFAULT_TOL: f64 = 1e-9;
