//! Two-site spin correlators from the one-body correlation matrix.
//!
//! For a pair of sites `l < m` (1-based) the ground-state expectation
//! values follow the Lieb/Schultz/Mattis determinant identities. With
//! `d = m - l` and `G` the correlation matrix:
//!
//! ```text
//! <sx_l sx_m> = (1/4) det X,   X_ab = G_{l+a, l+1+b}   (d x d, a,b = 0..d-1)
//! <sy_l sy_m> = (1/4) det Y,   Y_ab = G_{l+1+a, l+b}
//! <sz_l sz_m> = (1/4) (G_ll G_mm - G_ml G_lm)
//! <sz_i>      = (1/2) G_ii
//! ```
//!
//! where the spin operators are halves of the Pauli matrices. For adjacent
//! sites the determinants collapse to single entries of `G`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::solver::CorrelationMatrix;

/// Ground-state correlators of one site pair (spin-1/2 normalisation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCorrelators {
    /// 1-based left site.
    pub l: usize,
    /// 1-based right site, `m > l`.
    pub m: usize,
    /// `<sx_l sx_m>`
    pub sxx: f64,
    /// `<sy_l sy_m>`
    pub syy: f64,
    /// `<sz_l sz_m>`
    pub szz: f64,
    /// `<sz_l>`
    pub mz_l: f64,
    /// `<sz_m>`
    pub mz_m: f64,
}

/// Compute the correlators of sites `(l, m)`, `1 <= l < m <= n`.
pub fn pair_correlators(cm: &CorrelationMatrix, l: usize, m: usize) -> Result<PairCorrelators> {
    let n = cm.n();
    if l < 1 || m <= l || m > n {
        return Err(Error::PairOutOfRange { l, m, n_sites: n });
    }
    let li = l - 1;
    let mi = m - 1;
    let g = &cm.g;

    let rows_x: Vec<usize> = (li..mi).collect();
    let cols_x: Vec<usize> = (li + 1..=mi).collect();
    let sxx = 0.25 * g.submatrix(&rows_x, &cols_x).det_lu();

    let rows_y: Vec<usize> = (li + 1..=mi).collect();
    let cols_y: Vec<usize> = (li..mi).collect();
    let syy = 0.25 * g.submatrix(&rows_y, &cols_y).det_lu();

    let szz = 0.25 * (g[(li, li)] * g[(mi, mi)] - g[(mi, li)] * g[(li, mi)]);
    let mz_l = 0.5 * g[(li, li)];
    let mz_m = 0.5 * g[(mi, mi)];

    Ok(PairCorrelators {
        l,
        m,
        sxx,
        syy,
        szz,
        mz_l,
        mz_m,
    })
}
