//! Jordan-Wigner quadratic form of the chain.
//!
//! After the Jordan-Wigner transformation the spin Hamiltonian becomes a
//! free-fermion form `H = sum_ij [ c+_i A_ij c_j + (1/2)(c+_i B_ij c+_j + h.c.) ]`
//! with a symmetric `A` and an antisymmetric `B`:
//!
//! ```text
//! A_ii     = -2 h_i
//! A_i,i+1  = A_i+1,i  = -J_i
//! B_i,i+1  = -g J_i,   B_i+1,i = +g J_i
//! ```
//!
//! Periodic chains add the wrap-around bond with the same pattern in the
//! `(n, 1)` corner. This treats the boundary term as if the fermion ring
//! were simply cyclic, ignoring the Jordan-Wigner parity string across the
//! boundary — the standard approximation, exact up to `O(1/N)` boundary
//! corrections in the observables computed here.

use crate::chain::{Boundary, ChainSpec};
use crate::error::{Error, Result};
use crate::mat::Mat;

/// The pair `(A, B)` of the fermion quadratic form.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm {
    /// Symmetric hopping/field matrix.
    pub a: Mat,
    /// Antisymmetric pairing matrix.
    pub b: Mat,
}

/// Assemble `(A, B)` from explicit coupling and field arrays.
///
/// `fields` has one entry per site; `couplings` one per bond (`n - 1` open,
/// `n` periodic).
pub fn assemble(
    couplings: &[f64],
    fields: &[f64],
    gamma: f64,
    boundary: Boundary,
) -> Result<QuadraticForm> {
    let n = fields.len();
    if n < 2 {
        return Err(Error::ChainTooShort { n_sites: n });
    }
    if !(gamma.is_finite() && (0.0..=1.0).contains(&gamma)) {
        return Err(Error::GammaOutOfRange { gamma });
    }
    let expected = match boundary {
        Boundary::Open => n - 1,
        Boundary::Periodic => n,
    };
    if couplings.len() != expected {
        return Err(Error::LengthMismatch {
            what: "couplings per bond",
            expected,
            found: couplings.len(),
        });
    }

    let mut a = Mat::zeros(n, n);
    let mut b = Mat::zeros(n, n);
    for (i, &h) in fields.iter().enumerate() {
        a[(i, i)] = -2.0 * h;
    }
    for (k, &j_k) in couplings.iter().enumerate() {
        let i = k;
        let j = (k + 1) % n;
        // Accumulate rather than assign so the degenerate two-site ring
        // (where both bonds join the same pair of sites) stays correct.
        a[(i, j)] += -j_k;
        a[(j, i)] += -j_k;
        b[(i, j)] += -gamma * j_k;
        b[(j, i)] += gamma * j_k;
    }
    Ok(QuadraticForm { a, b })
}

impl QuadraticForm {
    /// Assemble from a chain description.
    pub fn from_spec(spec: &ChainSpec) -> Result<Self> {
        assemble(
            &spec.couplings()?,
            &spec.fields()?,
            spec.gamma,
            spec.boundary,
        )
    }

    /// Matrix order (number of sites).
    pub fn n(&self) -> usize {
        self.a.rows()
    }

    /// `A - B`, the matrix whose SVD yields the Bogoliubov modes.
    pub fn a_minus_b(&self) -> Mat {
        let n = self.n();
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.a[(i, j)] - self.b[(i, j)];
            }
        }
        m
    }

    /// `A + B`.
    pub fn a_plus_b(&self) -> Mat {
        let n = self.n();
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.a[(i, j)] + self.b[(i, j)];
            }
        }
        m
    }
}
