//! One-sided Jacobi singular value decomposition for square matrices.
//!
//! The factorisation is `M = U diag(sigma) V^T` with orthogonal `U`, `V`
//! and `sigma` sorted in descending order. One-sided Jacobi rotates pairs
//! of columns of a working copy `W = M V` until they are mutually
//! orthogonal; the singular values are then the column norms and `U` the
//! normalised columns. The method is slow compared to bidiagonalisation
//! but is simple, dependency-free, deterministic, and computes small
//! singular values to high *relative* accuracy — which matters here
//! because near-critical chains produce nearly-zero mode energies whose
//! singular vectors still have to come out orthonormal.

use alloc::vec;
use alloc::vec::Vec;

// In builds that include test targets, feature unification links std into
// the graph and its inherent float methods shadow this trait; the plain
// no_std library build still needs it.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::mat::Mat;

/// Result of [`jacobi_svd`]: `m = u * diag(sigma) * v^T`, `sigma` descending.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Mat,
    pub sigma: Vec<f64>,
    pub v: Mat,
}

const MAX_SWEEPS: usize = 60;
/// Columns whose inner product is below `TOL * |col_p| * |col_q|` count as
/// orthogonal. Close to machine epsilon; convergence is quadratic so the
/// sweep cap is generous.
const TOL: f64 = 1e-15;

/// One-sided Jacobi SVD of a square matrix.
///
/// Deterministic: identical input bits give identical output bits.
pub fn jacobi_svd(m: &Mat) -> Result<Svd> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    // Column-major working copies: w holds M V, v accumulates the rotations.
    let mut w: Vec<Vec<f64>> = (0..n).map(|j| (0..n).map(|i| m[(i, j)]).collect()).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let mut converged = false;
    let mut last_off = 0.0f64;
    for _sweep in 0..MAX_SWEEPS {
        let mut rotated = 0usize;
        last_off = 0.0;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let (app, aqq, apq) = {
                    let (cp, cq) = column_pair(&mut w, p, q);
                    let mut app = 0.0;
                    let mut aqq = 0.0;
                    let mut apq = 0.0;
                    for i in 0..n {
                        app += cp[i] * cp[i];
                        aqq += cq[i] * cq[i];
                        apq += cp[i] * cq[i];
                    }
                    (app, aqq, apq)
                };
                let scale = (app * aqq).sqrt();
                if scale > 0.0 {
                    last_off = last_off.max(apq.abs() / scale);
                }
                if apq.abs() <= TOL * scale || scale == 0.0 {
                    continue;
                }
                rotated += 1;
                // Classic Jacobi rotation annihilating the (p, q) Gram entry.
                let zeta = (aqq - app) / (2.0 * apq);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                {
                    let (cp, cq) = column_pair(&mut w, p, q);
                    rotate(cp, cq, c, s);
                }
                {
                    let (vp, vq) = column_pair(&mut v, p, q);
                    rotate(vp, vq, c, s);
                }
            }
        }
        if rotated == 0 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::SvdNoConvergence {
            sweeps: MAX_SWEEPS,
            max_off: last_off,
        });
    }

    // Column norms are the singular values; sort descending, ties by index.
    let mut sigma: Vec<f64> = w
        .iter()
        .map(|col| col.iter().map(|&x| x * x).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| sigma[b].total_cmp(&sigma[a]).then(a.cmp(&b)));

    let mut u_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut v_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut sorted_sigma = Vec::with_capacity(n);
    for &j in &order {
        v_cols.push(v[j].clone());
        if sigma[j] > 0.0 {
            u_cols.push(w[j].iter().map(|&x| x / sigma[j]).collect());
        } else {
            u_cols.push(vec![0.0; n]); // placeholder, completed below
        }
        sorted_sigma.push(sigma[j]);
    }
    // Exactly-zero singular values leave their U columns undefined; complete
    // them to an orthonormal basis, deterministically, by projecting out the
    // established columns from the best-aligned coordinate axis.
    for j in 0..n {
        if sorted_sigma[j] > 0.0 {
            continue;
        }
        let mut best: Option<(f64, Vec<f64>)> = None;
        for k in 0..n {
            let mut r = vec![0.0; n];
            r[k] = 1.0;
            for (jj, col) in u_cols.iter().enumerate() {
                if jj == j || (sorted_sigma[jj] == 0.0 && jj > j) {
                    continue;
                }
                let proj: f64 = col.iter().zip(r.iter()).map(|(&a, &b)| a * b).sum();
                for i in 0..n {
                    r[i] -= proj * col[i];
                }
            }
            let norm = r.iter().map(|&x| x * x).sum::<f64>().sqrt();
            if best.as_ref().map_or(true, |(bn, _)| norm > *bn) {
                best = Some((norm, r));
            }
        }
        let (norm, r) = best.expect("n >= 1");
        u_cols[j] = r.iter().map(|&x| x / norm).collect();
    }

    sigma = sorted_sigma;
    let mut u = Mat::zeros(n, n);
    let mut vm = Mat::zeros(n, n);
    for j in 0..n {
        for i in 0..n {
            u[(i, j)] = u_cols[j][i];
            vm[(i, j)] = v_cols[j][i];
        }
    }
    Ok(Svd { u, sigma, v: vm })
}

/// Mutable references to two distinct columns.
fn column_pair(cols: &mut [Vec<f64>], p: usize, q: usize) -> (&mut [f64], &mut [f64]) {
    debug_assert!(p < q);
    let (lo, hi) = cols.split_at_mut(q);
    (&mut lo[p], &mut hi[0])
}

fn rotate(cp: &mut [f64], cq: &mut [f64], c: f64, s: f64) {
    for i in 0..cp.len() {
        let a = cp[i];
        let b = cq[i];
        cp[i] = c * a - s * b;
        cq[i] = s * a + c * b;
    }
}
