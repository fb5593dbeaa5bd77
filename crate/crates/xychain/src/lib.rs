//! Ground-state pair entanglement in anisotropic XY spin-1/2 chains with
//! impurity-shaped disorder.
//!
//! The Hamiltonian on `N` sites is
//!
//! ```text
//! H = -sum_i  J_i [ (1+g)/2 sx_i sx_{i+1} + (1-g)/2 sy_i sy_{i+1} ]  -  sum_i h_i sz_i
//! ```
//!
//! with anisotropy `g` in `[0, 1]`, site-dependent couplings `J_i` and
//! transverse fields `h_i`, and either open or periodic boundaries. Couplings
//! and fields are modulated by deterministic double-Gaussian impurity
//! profiles centred on the middle of the chain (see [`chain`]).
//!
//! The crate computes the concurrence of the reduced two-site ground-state
//! density matrix along the classic free-fermion route:
//!
//! 1. [`chain`] — chain description, impurity profiles, couplings and fields;
//! 2. [`quadratic`] — the Jordan-Wigner quadratic form `(A, B)`;
//! 3. [`solver`] — Bogoliubov mode matrices `Phi`, `Psi` and single-particle
//!    energies from a singular value decomposition of `A - B`, plus the
//!    one-body Majorana-type correlation matrix `G`;
//! 4. [`correlations`] — two-site spin correlators from determinants of
//!    sub-blocks of `G` (Lieb/Schultz/Mattis determinant identities);
//! 5. [`entanglement`] — the reduced two-qubit X-form density matrix and its
//!    Wootters concurrence, via both the X-state closed form and a general
//!    4x4 route;
//! 6. [`oracle`] — an independent brute-force check that diagonalises the
//!    dense `2^N x 2^N` spin Hamiltonian directly (small `N` only);
//! 7. [`pipeline`] — a convenience layer tying 1-5 together per chain.
//!
//! Everything is deterministic: the same input produces bit-identical output.
//! The crate is `no_std` (it requires `alloc`); all numerics are dense
//! `f64` kernels written in-crate so that no platform BLAS is involved.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chain;
pub mod correlations;
pub mod entanglement;
pub mod error;
pub mod mat;
pub mod oracle;
pub mod pipeline;
pub mod quadratic;
pub mod solver;
pub mod svd;

pub mod eigen;

pub use chain::{gaussian_profile, Boundary, ChainSpec, DisorderProfile, ProfileParams};
pub use correlations::{pair_correlators, PairCorrelators};
pub use entanglement::{
    concurrence_general, concurrence_xstate, pair_density_matrix, ConcurrenceResult, XStateDensity,
};
pub use error::{Error, Result};
pub use mat::Mat;
pub use oracle::{
    dense_hamiltonian, ground_state_dense, oracle_concurrence, DenseSpinState, MAX_ORACLE_SITES,
    ORACLE_GAP_FLOOR,
};
pub use pipeline::{ChainSolution, PairEntanglement};
pub use quadratic::QuadraticForm;
pub use solver::{diagonalize, CorrelationMatrix, FermionModes};
