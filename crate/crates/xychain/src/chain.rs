//! Chain description: geometry, anisotropy, coupling scale, and the
//! deterministic impurity profiles that modulate couplings and fields.
//!
//! Sites are numbered `1..=n_sites`. Bond `i` joins sites `i` and `i + 1`;
//! under periodic boundaries bond `n_sites` joins sites `n_sites` and `1`.
//!
//! An impurity profile is a sum of two Gaussians,
//!
//! ```text
//! value(i) = w * s1 * exp(-eps (i - c1)^2) + (1 - w) * s2 * exp(-eps (i - c2)^2)
//! ```
//!
//! evaluated at integer entries `i = 1..=n_entries`. Couplings become
//! `J_i = 2 lambda (1 + alpha_i)` and fields `h_i = 1 + beta_i`, where
//! `alpha` and `beta` are profiles over bonds and sites respectively. The
//! field scale is fixed at 1, so `lambda = J / (2h)` for the uniform chain.
//! Any entry with `1 + value <= 0` is rejected: it would flip the sign of a
//! coupling or field and silently change the model.

use alloc::vec::Vec;

// In builds that include test targets, feature unification links std into
// the graph and its inherent float methods shadow this trait; the plain
// no_std library build still needs it.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Boundary condition of the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Open,
    Periodic,
}

/// Parameters of a two-Gaussian impurity profile.
///
/// `center_1` / `center_2` default to the two middle entries,
/// `(n + 1) / 2` and `(n - 1) / 2` in integer arithmetic over 1-based
/// entries, when left unset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileParams {
    /// Peak strength of the first Gaussian.
    pub strength_1: f64,
    /// Peak strength of the second Gaussian.
    pub strength_2: f64,
    /// Inverse-square width `eps` shared by both Gaussians; must be > 0.
    pub width: f64,
    /// Mixing weight `w` of the first Gaussian, in `[0, 1]`.
    pub weight: f64,
    /// Centre of the first Gaussian (1-based entry index).
    pub center_1: Option<i64>,
    /// Centre of the second Gaussian (1-based entry index).
    pub center_2: Option<i64>,
}

impl ProfileParams {
    /// No impurity at all: both strengths zero.
    pub fn pure() -> Self {
        ProfileParams {
            strength_1: 0.0,
            strength_2: 0.0,
            width: 0.1,
            weight: 1.0,
            center_1: None,
            center_2: None,
        }
    }

    /// A single broad Gaussian bump (weight 1, width 0.1).
    pub fn gaussian(strength: f64) -> Self {
        ProfileParams {
            strength_1: strength,
            strength_2: 0.0,
            width: 0.1,
            weight: 1.0,
            center_1: None,
            center_2: None,
        }
    }

    /// Two overlapping broad Gaussians with equal weight (width 0.1).
    pub fn double_gaussian(strength_1: f64, strength_2: f64) -> Self {
        ProfileParams {
            strength_1,
            strength_2,
            width: 0.1,
            weight: 0.5,
            center_1: None,
            center_2: None,
        }
    }

    /// Two narrow spikes with equal weight (width 10): each Gaussian is
    /// essentially a single-entry defect.
    pub fn bimodal(strength_1: f64, strength_2: f64) -> Self {
        ProfileParams {
            strength_1,
            strength_2,
            width: 10.0,
            weight: 0.5,
            center_1: None,
            center_2: None,
        }
    }

    /// Check parameter ranges.
    pub fn validate(&self) -> Result<()> {
        if !(self.width.is_finite() && self.width > 0.0) {
            return Err(Error::NonPositiveWidth { width: self.width });
        }
        if !(self.weight.is_finite() && (0.0..=1.0).contains(&self.weight)) {
            return Err(Error::WeightOutOfRange { weight: self.weight });
        }
        for &s in &[self.strength_1, self.strength_2] {
            if !s.is_finite() {
                return Err(Error::StrengthNotFinite { strength: s });
            }
        }
        Ok(())
    }

    /// Centres with defaults resolved against the chain length.
    fn resolved_centers(&self, n_sites: usize) -> (i64, i64) {
        let n = n_sites as i64;
        (
            self.center_1.unwrap_or((n + 1) / 2),
            self.center_2.unwrap_or((n - 1) / 2),
        )
    }
}

/// Evaluate a two-Gaussian profile at entries `1..=n_entries`.
///
/// Default centres are resolved against `n_sites` (not `n_entries`), so
/// bond and site profiles of the same chain peak at the same place.
/// Rejects parameters out of range and any entry where `1 + value <= 0`.
pub fn gaussian_profile(
    params: &ProfileParams,
    n_entries: usize,
    n_sites: usize,
) -> Result<Vec<f64>> {
    params.validate()?;
    let (c1, c2) = params.resolved_centers(n_sites);
    let w = params.weight;
    let eps = params.width;
    let mut out = Vec::with_capacity(n_entries);
    for i in 1..=n_entries {
        let d1 = i as f64 - c1 as f64;
        let d2 = i as f64 - c2 as f64;
        let value = w * params.strength_1 * (-eps * d1 * d1).exp()
            + (1.0 - w) * params.strength_2 * (-eps * d2 * d2).exp();
        if 1.0 + value <= 0.0 {
            return Err(Error::ProfileNotPositive {
                index: i,
                one_plus_value: 1.0 + value,
            });
        }
        out.push(value);
    }
    Ok(out)
}

/// The two profiles of a chain evaluated on its bonds and sites.
#[derive(Debug, Clone, PartialEq)]
pub struct DisorderProfile {
    /// Coupling modulation, one entry per bond.
    pub alpha: Vec<f64>,
    /// Field modulation, one entry per site.
    pub beta: Vec<f64>,
}

/// Complete description of a chain instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    pub n_sites: usize,
    /// Anisotropy `g` in `[0, 1]`; 1 is the transverse Ising limit, 0 the
    /// isotropic XX limit.
    pub gamma: f64,
    /// Coupling scale: uniform couplings are `J = 2 lambda` against unit
    /// fields, so the uniform transverse Ising chain is critical at
    /// `lambda = 1/2`.
    pub lambda: f64,
    pub boundary: Boundary,
    /// Profile modulating the couplings (evaluated on bonds).
    pub alpha: ProfileParams,
    /// Profile modulating the fields (evaluated on sites).
    pub beta: ProfileParams,
}

impl ChainSpec {
    /// Uniform chain: no impurity on couplings or fields.
    pub fn pure(n_sites: usize, gamma: f64, lambda: f64, boundary: Boundary) -> Self {
        ChainSpec {
            n_sites,
            gamma,
            lambda,
            boundary,
            alpha: ProfileParams::pure(),
            beta: ProfileParams::pure(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_sites < 2 {
            return Err(Error::ChainTooShort {
                n_sites: self.n_sites,
            });
        }
        if !(self.gamma.is_finite() && (0.0..=1.0).contains(&self.gamma)) {
            return Err(Error::GammaOutOfRange { gamma: self.gamma });
        }
        if !(self.lambda.is_finite() && self.lambda >= 0.0) {
            return Err(Error::LambdaOutOfRange {
                lambda: self.lambda,
            });
        }
        self.alpha.validate()?;
        self.beta.validate()?;
        Ok(())
    }

    /// Number of bonds: `n - 1` open, `n` periodic.
    pub fn n_bonds(&self) -> usize {
        match self.boundary {
            Boundary::Open => self.n_sites - 1,
            Boundary::Periodic => self.n_sites,
        }
    }

    /// Coupling profile `alpha_i` on bonds.
    pub fn alpha_profile(&self) -> Result<Vec<f64>> {
        self.validate()?;
        gaussian_profile(&self.alpha, self.n_bonds(), self.n_sites)
    }

    /// Field profile `beta_i` on sites.
    pub fn beta_profile(&self) -> Result<Vec<f64>> {
        self.validate()?;
        gaussian_profile(&self.beta, self.n_sites, self.n_sites)
    }

    /// Both profiles at once.
    pub fn profile(&self) -> Result<DisorderProfile> {
        Ok(DisorderProfile {
            alpha: self.alpha_profile()?,
            beta: self.beta_profile()?,
        })
    }

    /// Couplings `J_i = 2 lambda (1 + alpha_i)`, one per bond.
    pub fn couplings(&self) -> Result<Vec<f64>> {
        let alpha = self.alpha_profile()?;
        Ok(alpha
            .iter()
            .map(|&a| 2.0 * self.lambda * (1.0 + a))
            .collect())
    }

    /// Fields `h_i = 1 + beta_i`, one per site.
    pub fn fields(&self) -> Result<Vec<f64>> {
        let beta = self.beta_profile()?;
        Ok(beta.iter().map(|&b| 1.0 + b).collect())
    }
}
