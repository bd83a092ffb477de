//! Sampling geometry for parallel-beam scans and its derived spectral constants.
//!
//! A scan takes `M` directions spread uniformly over `[0, pi)` and, per
//! direction, `N + 1 = K + K' + 1` radial samples `t_k = (k - K) * T`,
//! `k = 0..=N`. All lengths are dimensionless detector units normalized so
//! the object support is the unit disk.

use crate::error::{ModradError, Result};

/// Parallel-beam sampling grid plus bandwidth, with every derived constant
/// used by the recovery pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanGeometry {
    /// Radial sample count left of the origin.
    pub k: usize,
    /// Radial sample count right of the origin (`K' >= K`).
    pub k_prime: usize,
    /// Angular sample count over `[0, pi)`.
    pub m: usize,
    /// Radial step.
    pub t: f64,
    /// Bandwidth of the acquisition low-pass (rad per unit length).
    pub omega: f64,
}

impl ScanGeometry {
    /// Construct and validate the hard type invariants.
    pub fn new(k: usize, k_prime: usize, m: usize, t: f64, omega: f64) -> Result<Self> {
        let g = Self { k, k_prime, m, t, omega };
        g.check_invariants()?;
        Ok(g)
    }

    /// The symmetric geometry `K' = K` with `T = 1/K`, used by all the
    /// desk-scale experiments.
    pub fn symmetric(k: usize, m: usize, omega: f64) -> Result<Self> {
        Self::new(k, k, m, 1.0 / k as f64, omega)
    }

    fn check_invariants(&self) -> Result<()> {
        if self.t <= 0.0 || !self.t.is_finite() {
            return Err(ModradError::Geometry(format!("T must be positive, got {}", self.t)));
        }
        if self.omega <= 0.0 || !self.omega.is_finite() {
            return Err(ModradError::Geometry(format!(
                "Omega must be positive, got {}",
                self.omega
            )));
        }
        if self.k < 1 {
            return Err(ModradError::Geometry("K must be >= 1".into()));
        }
        if self.k_prime < self.k {
            return Err(ModradError::Geometry(format!(
                "K' must be >= K, got K'={} K={}",
                self.k_prime, self.k
            )));
        }
        if self.m < 1 {
            return Err(ModradError::Geometry("M must be >= 1".into()));
        }
        if self.t >= std::f64::consts::PI / self.omega {
            return Err(ModradError::Geometry(format!(
                "radial step too coarse: T={} must be < pi/Omega={}",
                self.t,
                std::f64::consts::PI / self.omega
            )));
        }
        if self.k < self.n_omega() + 1 {
            return Err(ModradError::Geometry(format!(
                "K={} must be >= N_Omega+1={}",
                self.k,
                self.n_omega() + 1
            )));
        }
        if self.residual_bins() < 1 {
            return Err(ModradError::Geometry(
                "empty measurement system: N - 2*N_Omega - 1 < 1".into(),
            ));
        }
        Ok(())
    }

    /// Total difference length `N = K + K'`.
    #[inline]
    pub fn n(&self) -> usize {
        self.k + self.k_prime
    }

    /// Fundamental continuous frequency `omega0 = 2*pi / ((N+1) * T)`.
    #[inline]
    pub fn omega0(&self) -> f64 {
        2.0 * std::f64::consts::PI / ((self.n() + 1) as f64 * self.t)
    }

    /// Effective bandwidth in bins: `N_Omega = ceil(Omega / omega0)`.
    #[inline]
    pub fn n_omega(&self) -> usize {
        (self.omega / self.omega0()).ceil() as usize
    }

    /// Normalized digital frequency `2*pi / N` of the difference-domain DFT.
    #[inline]
    pub fn omega_u(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.n() as f64
    }

    /// Direction angle `phi_m = m*pi/M`.
    #[inline]
    pub fn angle(&self, m: usize) -> f64 {
        m as f64 * std::f64::consts::PI / self.m as f64
    }

    /// Radial position `t_k = (k - K) * T` for `k = 0..=N`.
    #[inline]
    pub fn radial_position(&self, k: usize) -> f64 {
        (k as f64 - self.k as f64) * self.t
    }

    /// Size of the out-of-band index set `E^c`: `N - 2*N_Omega - 1`.
    #[inline]
    pub fn residual_bins(&self) -> i64 {
        self.n() as i64 - 2 * self.n_omega() as i64 - 1
    }

    /// Out-of-band DFT index range `E^c = {N_Omega+1, ..., N-N_Omega-1}`.
    pub fn out_of_band(&self) -> std::ops::RangeInclusive<usize> {
        self.n_omega() + 1..=self.n() - self.n_omega() - 1
    }
}

/// Modulo-fold parameters: threshold and exceedance radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoldSpec {
    /// Fold threshold `lambda > 0`; samples live in `[-lambda, lambda)`.
    pub lambda: f64,
    /// Radius beyond which projections stay below `lambda` in magnitude.
    pub rho: f64,
}

impl FoldSpec {
    pub fn new(lambda: f64, rho: f64) -> Result<Self> {
        if lambda <= 0.0 || !lambda.is_finite() {
            return Err(ModradError::Geometry(format!("lambda must be > 0, got {lambda}")));
        }
        if rho < 0.0 || !rho.is_finite() {
            return Err(ModradError::Geometry(format!("rho must be >= 0, got {rho}")));
        }
        Ok(Self { lambda, rho })
    }
}

/// One diagnostic from [`validate_geometry`].
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryViolation {
    /// Which condition failed.
    pub condition: &'static str,
    /// Observed value.
    pub actual: f64,
    /// Required bound.
    pub required: f64,
}

impl std::fmt::Display for GeometryViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: actual {} vs required {}",
            self.condition, self.actual, self.required
        )
    }
}

/// Check the optimal sampling conditions `T <= pi/Omega`, `K' = K >= 1/T`,
/// `M >= Omega`. Diagnostic, not fail-fast: experiments that deliberately
/// undersample still run.
pub fn validate_geometry(g: &ScanGeometry) -> Vec<GeometryViolation> {
    let mut out = Vec::new();
    let nyquist = std::f64::consts::PI / g.omega;
    if g.t > nyquist {
        out.push(GeometryViolation {
            condition: "T <= pi/Omega",
            actual: g.t,
            required: nyquist,
        });
    }
    if g.k_prime != g.k {
        out.push(GeometryViolation {
            condition: "K' = K",
            actual: g.k_prime as f64,
            required: g.k as f64,
        });
    }
    if (g.k as f64) < 1.0 / g.t {
        out.push(GeometryViolation {
            condition: "K >= 1/T",
            actual: g.k as f64,
            required: 1.0 / g.t,
        });
    }
    if (g.m as f64) < g.omega {
        out.push(GeometryViolation {
            condition: "M >= Omega",
            actual: g.m as f64,
            required: g.omega,
        });
    }
    out
}

/// Nyquist-relative oversampling factor `OF = (pi/Omega) / T`.
pub fn oversampling_factor(g: &ScanGeometry) -> f64 {
    std::f64::consts::PI / g.omega / g.t
}

/// Least `K'` making exact recovery possible for exceedance radius `rho`:
/// the smallest integer with `K' >= (pi*rho/T + (K+1)*Omega*T) / (pi - Omega*T)`.
pub fn min_asymmetric_samples(rho: f64, t: f64, omega: f64, k: usize) -> Result<usize> {
    let pi = std::f64::consts::PI;
    if t >= pi / omega {
        return Err(ModradError::Geometry(format!(
            "T={} must be < pi/Omega={} for the recovery guarantee",
            t,
            pi / omega
        )));
    }
    if (k as f64) < rho / t {
        return Err(ModradError::Geometry(format!(
            "K={} must be >= rho/T={} for the recovery guarantee",
            k,
            rho / t
        )));
    }
    let bound = (pi * rho / t + (k as f64 + 1.0) * omega * t) / (pi - omega * t);
    Ok(bound.ceil().max(0.0) as usize)
}
