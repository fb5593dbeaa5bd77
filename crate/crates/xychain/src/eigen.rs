//! Symmetric eigensolvers.
//!
//! Two routines, picked for where they are used:
//!
//! * [`jacobi_eigen`] — cyclic Jacobi, full spectrum and eigenvectors.
//!   Quadratically convergent and very accurate, but O(n^3) per sweep; used
//!   only on small matrices (4x4 density-matrix work).
//! * [`lowest_pair_sym`] — ground state of a large dense symmetric matrix:
//!   Householder tridiagonalisation, Sturm-sequence bisection for the two
//!   lowest eigenvalues, inverse iteration for the ground eigenvector, and
//!   the stored reflectors to map it back. O(n^3) once, then O(n) per
//!   bisection step; this is what makes dense `2^N` brute-force
//!   diagonalisation affordable at N = 10-14.
//!
//! Both are deterministic: no randomised starting vectors, fixed sweep
//! orders, fixed tie-breaking.

use alloc::vec;
use alloc::vec::Vec;

// In builds that include test targets, feature unification links std into
// the graph and its inherent float methods shadow this trait; the plain
// no_std library build still needs it.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::mat::Mat;

/// Full spectrum of a symmetric matrix: `values` ascending, eigenvector
/// `k` in column `k` of `vectors`.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Mat,
}

/// Two lowest eigenvalues of a symmetric matrix and the eigenvector of the
/// lowest, normalised to unit length.
#[derive(Debug, Clone)]
pub struct LowestPair {
    pub e0: f64,
    pub e1: f64,
    pub vector: Vec<f64>,
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Only the symmetric part of the input is meaningful; the caller is
/// expected to pass a matrix that is symmetric to rounding error.
pub fn jacobi_eigen(a: &Mat) -> Result<SymEigen> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut v = Mat::identity(n);
    let scale = m.max_abs();
    if scale == 0.0 || n < 2 {
        return Ok(sorted_from_diagonal(&m, v));
    }
    let thresh = scale * 1e-15;

    let mut converged = false;
    let mut last_off = 0.0f64;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = 0usize;
        last_off = 0.0;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                last_off = last_off.max(apq.abs());
                if apq.abs() <= thresh {
                    continue;
                }
                rotated += 1;
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                m[(p, p)] = app - t * apq;
                m[(q, q)] = aqq + t * apq;
                m[(p, q)] = 0.0;
                m[(q, p)] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = m[(i, p)];
                    let aiq = m[(i, q)];
                    let nip = aip - s * (aiq + tau * aip);
                    let niq = aiq + s * (aip - tau * aiq);
                    m[(i, p)] = nip;
                    m[(p, i)] = nip;
                    m[(i, q)] = niq;
                    m[(q, i)] = niq;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip - s * (viq + tau * vip);
                    v[(i, q)] = viq + s * (vip - tau * viq);
                }
            }
        }
        if rotated == 0 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::EigenNoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
            max_off: last_off,
        });
    }
    Ok(sorted_from_diagonal(&m, v))
}

/// Sort the diagonal ascending and permute the eigenvector columns to match.
fn sorted_from_diagonal(m: &Mat, v: Mat) -> SymEigen {
    let n = m.rows();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| diag[a].total_cmp(&diag[b]).then(a.cmp(&b)));
    let mut values = Vec::with_capacity(n);
    let mut vectors = Mat::zeros(n, n);
    for (k, &j) in order.iter().enumerate() {
        values.push(diag[j]);
        for i in 0..n {
            vectors[(i, k)] = v[(i, j)];
        }
    }
    SymEigen { values, vectors }
}

// ---------------------------------------------------------------------------
// Large symmetric matrices: tridiagonalise, bisect, invert.
// ---------------------------------------------------------------------------

/// Householder tridiagonalisation `A = Q T Q^T` with the reflectors kept so
/// that eigenvectors of `T` can be mapped back through `Q`.
struct Tridiagonal {
    /// Diagonal of `T`.
    d: Vec<f64>,
    /// Subdiagonal of `T` (length `n - 1`).
    e: Vec<f64>,
    /// Reflector `k` acts on rows `k+1..n`; empty if that step was skipped.
    reflectors: Vec<Reflector>,
}

struct Reflector {
    v: Vec<f64>,
    vnorm2: f64,
}

fn tridiagonalize(a: &Mat) -> Tridiagonal {
    let n = a.rows();
    debug_assert!(a.is_square() && n >= 2);
    let mut m = a.clone();
    let mut e = vec![0.0f64; n - 1];
    let mut reflectors: Vec<Reflector> = Vec::with_capacity(n.saturating_sub(2));

    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let mut xnorm2 = 0.0;
        for i in (k + 1)..n {
            let x = m[(i, k)];
            xnorm2 += x * x;
        }
        let xnorm = xnorm2.sqrt();
        if xnorm == 0.0 {
            e[k] = 0.0;
            reflectors.push(Reflector { v: Vec::new(), vnorm2: 0.0 });
            continue;
        }
        let x0 = m[(k + 1, k)];
        // Sign chosen opposite to x0 so the reflector never cancels.
        let alpha = if x0 >= 0.0 { -xnorm } else { xnorm };
        let mut vv = vec![0.0f64; len];
        vv[0] = x0 - alpha;
        for i in 1..len {
            vv[i] = m[(k + 1 + i, k)];
        }
        let vnorm2: f64 = vv.iter().map(|&x| x * x).sum();
        let tau = 2.0 / vnorm2;

        // u = S v over the trailing block S = m[k+1.., k+1..].
        let mut u = vec![0.0f64; len];
        for i in 0..len {
            let row = k + 1 + i;
            let mut acc = 0.0;
            for j in 0..len {
                acc += m[(row, k + 1 + j)] * vv[j];
            }
            u[i] = acc;
        }
        let vtu: f64 = vv.iter().zip(u.iter()).map(|(&a, &b)| a * b).sum();
        // S <- H S H = S - v w^T - w v^T with w = tau*u - (tau^2 (v.u)/2) v.
        let coef = tau * tau * vtu / 2.0;
        let w: Vec<f64> = u
            .iter()
            .zip(vv.iter())
            .map(|(&ui, &vi)| tau * ui - coef * vi)
            .collect();
        for i in 0..len {
            let row = k + 1 + i;
            let vi = vv[i];
            let wi = w[i];
            for j in 0..len {
                m[(row, k + 1 + j)] -= vi * w[j] + wi * vv[j];
            }
        }
        e[k] = alpha;
        reflectors.push(Reflector { v: vv, vnorm2 });
    }
    if n >= 2 {
        e[n - 2] = m[(n - 1, n - 2)];
    }
    let d: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
    Tridiagonal { d, e, reflectors }
}

impl Tridiagonal {
    /// Apply `Q` (the product of reflectors) to a vector in tridiagonal
    /// coordinates, returning the corresponding vector for the original
    /// matrix.
    fn apply_q(&self, y: &[f64]) -> Vec<f64> {
        let mut z = y.to_vec();
        for k in (0..self.reflectors.len()).rev() {
            let r = &self.reflectors[k];
            if r.v.is_empty() {
                continue;
            }
            let mut dot = 0.0;
            for (i, &vi) in r.v.iter().enumerate() {
                dot += vi * z[k + 1 + i];
            }
            let f = 2.0 * dot / r.vnorm2;
            for (i, &vi) in r.v.iter().enumerate() {
                z[k + 1 + i] -= f * vi;
            }
        }
        z
    }
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`,
/// via the Sturm sequence of leading-principal-minor ratios.
fn sturm_count_below(d: &[f64], e: &[f64], x: f64) -> usize {
    // A pivot that lands exactly on zero means x hits an eigenvalue of a
    // leading block; it is floored to a tiny *negative* value before the
    // sign test, which counts it — the standard bisection safeguard.
    const PIVMIN: f64 = 1e-290;
    let mut count = 0usize;
    let mut q = d[0] - x;
    if q.abs() < PIVMIN {
        q = -PIVMIN;
    }
    if q < 0.0 {
        count += 1;
    }
    for i in 1..d.len() {
        q = (d[i] - x) - e[i - 1] * e[i - 1] / q;
        if q.abs() < PIVMIN {
            q = -PIVMIN;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// `k`-th smallest eigenvalue (0-based) of the tridiagonal matrix by
/// bisection on the Sturm count.
fn bisect_eigenvalue(d: &[f64], e: &[f64], k: usize) -> f64 {
    let n = d.len();
    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - left - right);
        hi = hi.max(d[i] + left + right);
    }
    if lo == hi {
        return lo;
    }
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval is one ulp wide
        }
        if sturm_count_below(d, e, mid) >= k + 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Eigenvector of the tridiagonal matrix for eigenvalue `lambda`, by inverse
/// iteration with a partially pivoted tridiagonal solve. Deterministic
/// starting vectors: all-ones first, then coordinate axes.
fn tridiag_eigenvector(d: &[f64], e: &[f64], lambda: f64) -> Result<Vec<f64>> {
    let n = d.len();
    let scale = d
        .iter()
        .map(|&x| x.abs())
        .fold(0.0f64, f64::max)
        .max(e.iter().map(|&x| x.abs()).fold(0.0f64, f64::max))
        .max(1.0);
    let tol = 1e-10 * scale;

    let mut best_residual = f64::INFINITY;
    for start in 0..=n {
        let mut b = vec![0.0f64; n];
        if start == 0 {
            let inv = 1.0 / (n as f64).sqrt();
            for x in b.iter_mut() {
                *x = inv;
            }
        } else {
            b[start - 1] = 1.0;
        }
        for _iter in 0..3 {
            let mut y = solve_shifted_tridiag(d, e, lambda, &b);
            let norm = y.iter().map(|&x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 || !norm.is_finite() {
                break;
            }
            for x in y.iter_mut() {
                *x /= norm;
            }
            b = y;
        }
        let residual = tridiag_residual(d, e, lambda, &b);
        if residual <= tol {
            return Ok(b);
        }
        best_residual = best_residual.min(residual);
    }
    Err(Error::InverseIterationStalled {
        residual: best_residual,
    })
}

/// Max-abs residual `|(T - lambda I) b|`.
fn tridiag_residual(d: &[f64], e: &[f64], lambda: f64, b: &[f64]) -> f64 {
    let n = d.len();
    let mut worst = 0.0f64;
    for i in 0..n {
        let mut r = (d[i] - lambda) * b[i];
        if i > 0 {
            r += e[i - 1] * b[i - 1];
        }
        if i < n - 1 {
            r += e[i] * b[i + 1];
        }
        worst = worst.max(r.abs());
    }
    worst
}

/// Solve `(T - lambda I) y = rhs` by Gaussian elimination with row swaps.
/// Zero pivots are floored; inverse iteration only needs the solve to blow
/// up in the eigenvector direction, which flooring preserves.
fn solve_shifted_tridiag(d: &[f64], e: &[f64], lambda: f64, rhs: &[f64]) -> Vec<f64> {
    const PIVMIN: f64 = 1e-290;
    let n = d.len();
    // Band storage: diag, upper, second upper (fill-in from row swaps).
    let mut diag: Vec<f64> = d.iter().map(|&x| x - lambda).collect();
    let mut up: Vec<f64> = e.to_vec();
    let mut up2 = vec![0.0f64; n.saturating_sub(2)];
    let mut sub: Vec<f64> = e.to_vec();
    let mut y: Vec<f64> = rhs.to_vec();

    for i in 0..n - 1 {
        if sub[i].abs() > diag[i].abs() {
            // Swap row i with row i+1.
            core::mem::swap(&mut diag[i], &mut sub[i]);
            let tmp = up[i];
            up[i] = diag[i + 1];
            diag[i + 1] = tmp;
            if i + 2 < n {
                up2[i] = up[i + 1];
                up[i + 1] = 0.0;
            }
            y.swap(i, i + 1);
        }
        let pivot = if diag[i].abs() < PIVMIN {
            if diag[i] >= 0.0 {
                PIVMIN
            } else {
                -PIVMIN
            }
        } else {
            diag[i]
        };
        let m = sub[i] / pivot;
        diag[i] = pivot;
        diag[i + 1] -= m * up[i];
        if i + 2 < n {
            up[i + 1] -= m * up2[i];
        }
        y[i + 1] -= m * y[i];
    }
    if diag[n - 1].abs() < PIVMIN {
        diag[n - 1] = if diag[n - 1] >= 0.0 { PIVMIN } else { -PIVMIN };
    }

    // Back substitution.
    y[n - 1] /= diag[n - 1];
    if n >= 2 {
        y[n - 2] = (y[n - 2] - up[n - 2] * y[n - 1]) / diag[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        y[i] = (y[i] - up[i] * y[i + 1] - up2[i] * y[i + 2]) / diag[i];
    }
    y
}

/// Two lowest eigenvalues and the ground eigenvector of a dense symmetric
/// matrix of order at least 2.
pub fn lowest_pair_sym(a: &Mat) -> Result<LowestPair> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n < 2 {
        return Err(Error::LengthMismatch {
            what: "lowest_pair_sym needs order >= 2",
            expected: 2,
            found: n,
        });
    }
    let tri = tridiagonalize(a);
    let e0 = bisect_eigenvalue(&tri.d, &tri.e, 0);
    let e1 = bisect_eigenvalue(&tri.d, &tri.e, 1);
    let y = tridiag_eigenvector(&tri.d, &tri.e, e0)?;
    let mut v = tri.apply_q(&y);
    let norm = v.iter().map(|&x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }

    // Final guard against the full matrix, not just its tridiagonal form.
    let scale = a.max_abs().max(1.0);
    let mut worst = 0.0f64;
    for i in 0..n {
        let mut r = -e0 * v[i];
        for j in 0..n {
            r += a[(i, j)] * v[j];
        }
        worst = worst.max(r.abs());
    }
    if worst > 1e-8 * scale {
        return Err(Error::InverseIterationStalled { residual: worst });
    }
    Ok(LowestPair { e0, e1, vector: v })
}
