//! Error type shared by every stage of the pipeline.

use core::fmt;

/// Everything that can go wrong while building or solving a chain.
///
/// Variants carry the offending values so that callers (and the CLI) can
/// report precisely what was rejected.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fewer than two sites: there is no pair to entangle.
    ChainTooShort { n_sites: usize },
    /// Anisotropy outside `[0, 1]`.
    GammaOutOfRange { gamma: f64 },
    /// Coupling scale `lambda` must be finite and non-negative.
    LambdaOutOfRange { lambda: f64 },
    /// Impurity profile width must be finite and strictly positive.
    NonPositiveWidth { width: f64 },
    /// Impurity mixing weight must lie in `[0, 1]`.
    WeightOutOfRange { weight: f64 },
    /// Impurity strength must be finite.
    StrengthNotFinite { strength: f64 },
    /// A profile drove `1 + value` non-positive at the reported (1-based)
    /// entry, which would flip the sign of a coupling or field.
    ProfileNotPositive { index: usize, one_plus_value: f64 },
    /// An array had the wrong length for the chain it was used with.
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// An operation that needs a square matrix got a rectangular one.
    NotSquare { rows: usize, cols: usize },
    /// Site pair must satisfy `1 <= l < m <= n_sites`.
    PairOutOfRange { l: usize, m: usize, n_sites: usize },
    /// The one-sided Jacobi SVD failed to converge.
    SvdNoConvergence { sweeps: usize, max_off: f64 },
    /// The cyclic Jacobi eigensolver failed to converge.
    EigenNoConvergence { sweeps: usize, max_off: f64 },
    /// Inverse iteration could not produce an eigenvector with a small
    /// residual from any deterministic starting vector.
    InverseIterationStalled { residual: f64 },
    /// A candidate density matrix violated a basic property; `what` names
    /// the check and `value` is the measured violation.
    DensityMatrixInvalid { what: &'static str, value: f64 },
    /// The brute-force route builds a dense `2^N x 2^N` matrix and refuses
    /// chains above its size cap.
    ChainTooLargeForOracle { n_sites: usize, max: usize },
    /// The brute-force route refuses to pick a ground state when the gap to
    /// the first excited state is numerically zero.
    DegenerateGroundState { gap: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ChainTooShort { n_sites } => {
                write!(f, "chain needs at least 2 sites, got {n_sites}")
            }
            Error::GammaOutOfRange { gamma } => {
                write!(f, "anisotropy gamma must be in [0, 1], got {gamma}")
            }
            Error::LambdaOutOfRange { lambda } => {
                write!(f, "lambda must be finite and >= 0, got {lambda}")
            }
            Error::NonPositiveWidth { width } => {
                write!(f, "profile width must be finite and > 0, got {width}")
            }
            Error::WeightOutOfRange { weight } => {
                write!(f, "profile weight must be in [0, 1], got {weight}")
            }
            Error::StrengthNotFinite { strength } => {
                write!(f, "profile strength must be finite, got {strength}")
            }
            Error::ProfileNotPositive {
                index,
                one_plus_value,
            } => write!(
                f,
                "impurity profile makes 1 + value = {one_plus_value} <= 0 at entry {index}"
            ),
            Error::LengthMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected length {expected}, got {found}"),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows} x {cols}")
            }
            Error::PairOutOfRange { l, m, n_sites } => write!(
                f,
                "site pair ({l}, {m}) must satisfy 1 <= l < m <= {n_sites}"
            ),
            Error::SvdNoConvergence { sweeps, max_off } => write!(
                f,
                "SVD did not converge after {sweeps} sweeps (max off-diagonal {max_off:e})"
            ),
            Error::EigenNoConvergence { sweeps, max_off } => write!(
                f,
                "eigensolver did not converge after {sweeps} sweeps (max off-diagonal {max_off:e})"
            ),
            Error::InverseIterationStalled { residual } => write!(
                f,
                "inverse iteration stalled with residual {residual:e}"
            ),
            Error::DensityMatrixInvalid { what, value } => {
                write!(f, "density matrix failed {what} check (violation {value:e})")
            }
            Error::ChainTooLargeForOracle { n_sites, max } => write!(
                f,
                "brute-force route is capped at {max} sites, got {n_sites}"
            ),
            Error::DegenerateGroundState { gap } => write!(
                f,
                "ground state is degenerate (gap {gap:e}); refusing to pick a representative"
            ),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
