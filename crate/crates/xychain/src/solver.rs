//! Bogoliubov diagonalisation of the quadratic form and the ground-state
//! correlation matrix.
//!
//! The mode equations `Phi (A - B) = Lambda Psi` and
//! `Psi (A + B) = Lambda Phi` (rows `phi_k`, `psi_k`, energies
//! `Lambda_k >= 0`) are solved through a single SVD: writing
//! `A - B = U Sigma V^T` gives `Phi = U^T`, `Psi = V^T`,
//! `Lambda = Sigma`. The ground state is the vacuum of the Bogoliubov
//! modes, and every ground-state observable used downstream derives from
//! the one-body correlation matrix
//!
//! ```text
//! G = -Psi^T Phi,        G_ij = -sum_k psi_ki phi_kj .
//! ```
//!
//! With all couplings zero, `A - B = -2 diag(h)` fixes the SVD signs so
//! that `G` is exactly the identity: every spin points up along the field.
//! A chain is flagged `degenerate` when its smallest mode energy is below
//! `1e-8` of the largest — the vacuum is then numerically ambiguous
//! (an exact zero mode means two parity sectors cross) and downstream
//! consumers should treat pair quantities with suspicion.

use alloc::vec::Vec;

use crate::error::Result;
use crate::mat::Mat;
use crate::quadratic::QuadraticForm;
use crate::svd::jacobi_svd;

/// Relative threshold under which the smallest mode energy marks the
/// spectrum as numerically degenerate.
pub const DEGENERACY_RATIO: f64 = 1e-8;

/// Bogoliubov modes of a chain: energies ascending, mode `k` occupying row
/// `k` of `phi` and `psi`.
#[derive(Debug, Clone)]
pub struct FermionModes {
    /// Single-particle energies, ascending, all `>= 0`.
    pub energies: Vec<f64>,
    /// Row-per-mode matrix multiplying `A - B` in the mode equations.
    pub phi: Mat,
    /// Row-per-mode matrix multiplying `A + B`.
    pub psi: Mat,
    /// Smallest energy below [`DEGENERACY_RATIO`] times the largest.
    pub degenerate: bool,
}

/// Ground-state one-body correlation matrix `G`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    pub g: Mat,
}

impl CorrelationMatrix {
    pub fn n(&self) -> usize {
        self.g.rows()
    }
}

/// Residual diagnostics of a mode decomposition, all as max-abs entries
/// relative to the max-abs entry of the corresponding input matrix.
#[derive(Debug, Clone, Copy)]
pub struct ModeResiduals {
    /// `|Phi Phi^T - I|`.
    pub phi_orthogonality: f64,
    /// `|Psi Psi^T - I|`.
    pub psi_orthogonality: f64,
    /// `|Phi (A - B) - diag(Lambda) Psi|` over `|A - B|`.
    pub minus_equation: f64,
    /// `|Psi (A + B) - diag(Lambda) Phi|` over `|A + B|`.
    pub plus_equation: f64,
}

/// Solve the mode equations for a chain's quadratic form.
pub fn diagonalize(qf: &QuadraticForm) -> Result<FermionModes> {
    let n = qf.n();
    let svd = jacobi_svd(&qf.a_minus_b())?;
    // SVD returns sigma descending; modes are conventionally ascending.
    let mut energies = Vec::with_capacity(n);
    let mut phi = Mat::zeros(n, n);
    let mut psi = Mat::zeros(n, n);
    for k in 0..n {
        let src = n - 1 - k;
        energies.push(svd.sigma[src]);
        for i in 0..n {
            phi[(k, i)] = svd.u[(i, src)];
            psi[(k, i)] = svd.v[(i, src)];
        }
    }
    let max = energies[n - 1];
    let min = energies[0];
    let degenerate = max == 0.0 || min < DEGENERACY_RATIO * max;
    Ok(FermionModes {
        energies,
        phi,
        psi,
        degenerate,
    })
}

impl FermionModes {
    pub fn n(&self) -> usize {
        self.energies.len()
    }

    /// Ground-state correlation matrix `G = -Psi^T Phi`.
    pub fn correlation_matrix(&self) -> CorrelationMatrix {
        let mut g = self.psi.transposed().mul(&self.phi);
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = -g[(i, j)];
            }
        }
        CorrelationMatrix { g }
    }

    /// Verify the decomposition against the quadratic form it came from.
    pub fn residuals(&self, qf: &QuadraticForm) -> ModeResiduals {
        let n = self.n();
        let eye = Mat::identity(n);
        let phi_orthogonality = self.phi.mul(&self.phi.transposed()).max_abs_diff(&eye);
        let psi_orthogonality = self.psi.mul(&self.psi.transposed()).max_abs_diff(&eye);

        let a_minus_b = qf.a_minus_b();
        let a_plus_b = qf.a_plus_b();
        let minus_lhs = self.phi.mul(&a_minus_b);
        let plus_lhs = self.psi.mul(&a_plus_b);
        let minus_rhs = lambda_rows(&self.energies, &self.psi);
        let plus_rhs = lambda_rows(&self.energies, &self.phi);
        let minus_scale = a_minus_b.max_abs().max(f64::MIN_POSITIVE);
        let plus_scale = a_plus_b.max_abs().max(f64::MIN_POSITIVE);
        ModeResiduals {
            phi_orthogonality,
            psi_orthogonality,
            minus_equation: minus_lhs.max_abs_diff(&minus_rhs) / minus_scale,
            plus_equation: plus_lhs.max_abs_diff(&plus_rhs) / plus_scale,
        }
    }
}

/// `diag(lambda) * m` done row-wise.
fn lambda_rows(lambda: &[f64], m: &Mat) -> Mat {
    let mut out = m.clone();
    for k in 0..m.rows() {
        for j in 0..m.cols() {
            out[(k, j)] *= lambda[k];
        }
    }
    out
}
