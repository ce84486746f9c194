//! Problem parameters for `-Δφ - γ|x|^{-α}φ + ωφ - |φ|^{p-1}φ = 0` in `R^N`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("dimension N must be a positive integer (got {0})")]
    DimensionInvalid(i64),
    #[error("potential strength gamma must be > 0 (got {0})")]
    NonpositiveGamma(f64),
    #[error("alpha = {alpha} violates 0 < alpha < min(N,2) = {bound} for N = {dim}")]
    AlphaOutOfRange { alpha: f64, dim: usize, bound: f64 },
    #[error("p = {p} violates 1 < p < {upper} for N = {dim}")]
    ExponentOutOfRange { p: f64, dim: usize, upper: f64 },
    #[error("parameter `{0}` is not finite")]
    NonFinite(&'static str),
    #[error("omega = {omega} must exceed omega0 = {omega0}")]
    OmegaBelowThreshold { omega: f64, omega0: f64 },
    #[error("omega must be positive for this operation (got {0})")]
    NonpositiveOmega(f64),
}

/// The quintuple `(N, γ, α, ω, p)` plus the lazily computed threshold `ω₀`.
///
/// Construct with [`make_params`] (validated) or [`Params::oracle`] (the
/// `γ = 0` classical limit used by closed-form test oracles).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub dim: usize,
    pub gamma: f64,
    pub alpha: f64,
    pub omega: f64,
    pub p: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega0: Option<f64>,
}

/// Upper bound `2^* - 1` on `p`; infinite for `N = 1, 2`.
pub fn critical_exponent(dim: usize) -> f64 {
    if dim <= 2 {
        f64::INFINITY
    } else {
        let n = dim as f64;
        2.0 * n / (n - 2.0) - 1.0
    }
}

/// Validates the static part of the admissible parameter set. `ω > ω₀` is
/// deferred until `ω₀` has been computed by [`crate::spectrum::omega0`].
pub fn make_params(dim: i64, gamma: f64, alpha: f64, omega: f64, p: f64) -> Result<Params, ParamError> {
    for (name, v) in [("gamma", gamma), ("alpha", alpha), ("omega", omega), ("p", p)] {
        if !v.is_finite() {
            return Err(ParamError::NonFinite(name));
        }
    }
    if dim < 1 {
        return Err(ParamError::DimensionInvalid(dim));
    }
    let dim_u = dim as usize;
    if gamma <= 0.0 {
        return Err(ParamError::NonpositiveGamma(gamma));
    }
    let bound = (dim as f64).min(2.0);
    if !(alpha > 0.0 && alpha < bound) {
        return Err(ParamError::AlphaOutOfRange { alpha, dim: dim_u, bound });
    }
    let upper = critical_exponent(dim_u);
    if !(p > 1.0 && p < upper) {
        return Err(ParamError::ExponentOutOfRange { p, dim: dim_u, upper });
    }
    Ok(Params { dim: dim_u, gamma, alpha, omega, p, omega0: None })
}

impl Params {
    /// Unvalidated constructor for oracle paths (admits `γ = 0`).
    pub fn oracle(dim: usize, gamma: f64, alpha: f64, omega: f64, p: f64) -> Self {
        Params { dim, gamma, alpha, omega, p, omega0: None }
    }

    pub fn with_omega(&self, omega: f64) -> Self {
        Params { omega, ..*self }
    }

    pub fn with_omega0(&self, omega0: f64) -> Self {
        Params { omega0: Some(omega0), ..*self }
    }

    pub fn n(&self) -> f64 {
        self.dim as f64
    }

    /// Fails when `ω₀` is known and `ω ≤ ω₀`.
    pub fn check_above_threshold(&self) -> Result<(), ParamError> {
        match self.omega0 {
            Some(omega0) if self.omega <= omega0 => {
                Err(ParamError::OmegaBelowThreshold { omega: self.omega, omega0 })
            }
            _ => Ok(()),
        }
    }

    /// `g(r) = ω - γ r^{-α}`
    pub fn g(&self, r: f64) -> f64 {
        self.omega - self.gamma * r.powf(-self.alpha)
    }

    /// Right-hand side of the radial ODE solved for `φ''`.
    pub fn phi_second(&self, r: f64, phi: f64, dphi: f64) -> f64 {
        -(self.n() - 1.0) / r * dphi + self.g(r) * phi - phi.abs().powf(self.p - 1.0) * phi
    }

    /// Natural amplitude scale `ω^{1/(p-1)}` (the `γ = 0` constant solution).
    pub fn amplitude_scale(&self) -> f64 {
        self.omega.abs().powf(1.0 / (self.p - 1.0))
    }

    /// Length scale `1/√ω`.
    pub fn length_scale(&self) -> f64 {
        1.0 / self.omega.abs().sqrt()
    }
}

/// Maps between a solution of the original problem and the `ω = 1` problem:
/// `φ(x) = amplitude · φ̃(spatial · x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaleReport {
    pub amplitude: f64,
    pub spatial: f64,
}

impl ScaleReport {
    /// Value and radial derivative of the original-problem solution at `r`,
    /// given the rescaled solution's value and derivative at `spatial · r`.
    pub fn pull_back(&self, phi_tilde: f64, dphi_tilde: f64) -> (f64, f64) {
        (self.amplitude * phi_tilde, self.amplitude * self.spatial * dphi_tilde)
    }
}

/// Rescales to unit frequency: `γ̃ = ω^{(α-2)/2} γ`, `φ̃(x) = ω^{-1/(p-1)} φ(x/√ω)`.
pub fn rescale_to_unit_omega(params: &Params) -> Result<(Params, ScaleReport), ParamError> {
    if params.omega <= 0.0 {
        return Err(ParamError::NonpositiveOmega(params.omega));
    }
    let omega = params.omega;
    let scaled = Params {
        gamma: omega.powf((params.alpha - 2.0) / 2.0) * params.gamma,
        omega: 1.0,
        omega0: params.omega0.map(|w0| w0 / omega),
        ..*params
    };
    let report = ScaleReport { amplitude: omega.powf(1.0 / (params.p - 1.0)), spatial: omega.sqrt() };
    Ok((scaled, report))
}
