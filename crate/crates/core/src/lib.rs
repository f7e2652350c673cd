//! Low-rank bases of matrix subspaces.
//!
//! Given a `d`-dimensional subspace `M` of real `m x n` matrices, this crate
//! computes a basis `X_1, ..., X_d` of `M` whose total rank
//! `rank(X_1) + ... + rank(X_d)` is as small as possible. The solver is a
//! greedy loop: for each element it first estimates the smallest reachable
//! rank by adaptive soft singular value thresholding interleaved with
//! projections onto the subspace ([`phase1`]), then pins a matrix of that
//! rank down by alternating projections between the rank-`r` set and the
//! unit sphere in the subspace ([`phase2`]). Linear independence of the
//! collected elements is maintained through a restart rule that re-draws an
//! iterate from the orthogonal complement of the span of the elements found
//! so far ([`greedy`]).
//!
//! When the subspace is known to admit a rank-one basis, the problem is
//! equivalent to a canonical polyadic decomposition of the third-order
//! tensor whose slices span the subspace; [`cp`] implements that route
//! (simultaneous diagonalization with an alternating-least-squares
//! fallback).
//!
//! [`problems`] generates reproducible test instances (synthetic bases of
//! prescribed ranks, a nuclear-norm counterexample, a Fourier eigenvector
//! compression demo), [`trace`] records per-iteration diagnostics, and
//! [`bench`] runs the seeded statistical experiment suites exposed by the
//! `lrb` binary.
//!
//! ```
//! use lowrank_basis::{greedy, problems};
//!
//! let spec = problems::SyntheticSpec {
//!     m: 8, n: 8, ranks: vec![1, 2], seed: 7, mix: true,
//! };
//! let (subspace, truth) = problems::generate_synthetic(&spec).unwrap();
//! let cfg = greedy::SolverConfig { master_seed: 42, ..Default::default() };
//! let basis = greedy::solve_low_rank_basis(&subspace, &cfg).unwrap();
//! assert_eq!(greedy::rank_multiset(&basis), truth.ranks);
//! ```

pub mod bench;
pub mod cli;
pub mod cp;
mod error;
pub mod greedy;
pub mod io;
pub mod kernels;
pub mod phase1;
pub mod phase2;
pub mod problems;
pub mod subspace;
pub mod trace;

pub use error::{Error, Result};

/// Dense real matrix used throughout the crate.
pub type Matrix = nalgebra::DMatrix<f64>;

/// Dense real column vector.
pub type Vector = nalgebra::DVector<f64>;
