//! Action, Nehari and virial functionals of a ground state, the mass slope
//! `∂_ω‖φ_ω‖²`, and sweeps over `ω`.
//!
//! Integrals are over `R^N` (surface factor `|S^{N-1}|` included):
//! `‖∇φ‖²`, `‖φ‖²`, `∫φ²|x|^{-α}` and `‖φ‖_{p+1}^{p+1}`. Along the
//! `L²`-preserving dilation `φ^λ(x) = λ^{N/2}φ(λx)` these scale as `λ²`, `1`,
//! `λ^α` and `λ^m` with `m = N(p-1)/2`, which gives both virial derivatives
//! in closed form.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::numerics::{integrate, simpson};
use crate::params::{ParamError, Params};
use crate::profile::{RadialProfile, Sampled};
use crate::shooting::{self, find_ground_state_with, shoot, ShootConfig, ShootError, ShootKind};
use crate::spectrum::{self, SpectrumError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
    #[error(transparent)]
    Shoot(#[from] ShootError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// `|S^{N-1}| = 2π^{N/2}/Γ(N/2)`
pub fn sphere_area(dim: usize) -> f64 {
    use std::f64::consts::PI;
    // Γ(N/2) by recurrence from Γ(1/2) = √π and Γ(1) = 1
    let mut gamma = if dim % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut x = if dim % 2 == 0 { 1.0 } else { 0.5 };
    while x < dim as f64 / 2.0 - 1e-12 {
        gamma *= x;
        x += 1.0;
    }
    2.0 * PI.powf(dim as f64 / 2.0) / gamma
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StabilityRecord {
    pub omega: f64,
    pub phi0: f64,
    pub mass: f64,
    pub action: f64,
    pub nehari: f64,
    pub grad_sq: f64,
    pub pot_int: f64,
    pub lp1: f64,
    pub virial1: f64,
    pub virial2: f64,
    pub slope: Option<f64>,
    pub slope_uncertainty: Option<f64>,
}

impl StabilityRecord {
    /// Sum of the magnitudes of the terms entering `K_ω`.
    pub fn scale(&self, params: &Params) -> f64 {
        self.grad_sq + params.omega.abs() * self.mass + params.gamma * self.pot_int + self.lp1
    }

    pub fn nehari_relative(&self, params: &Params) -> f64 {
        self.nehari.abs() / self.scale(params)
    }

    pub fn virial1_relative(&self, params: &Params) -> f64 {
        self.virial1.abs() / self.scale(params)
    }

    /// Quadrature-error proxy for the virial derivatives: how far the exact
    /// critical-point identities miss zero.
    pub fn functional_uncertainty(&self) -> f64 {
        self.nehari.abs().max(self.virial1.abs())
    }
}

/// `∫_{r_M}^∞ A² e^{-2δr} r^k dr` from the tail model.
fn tail_moment(amp: f64, rate: f64, k: f64, r_m: f64, power: f64) -> f64 {
    let s = power * rate;
    let f = |r: f64| (power * amp.ln() - s * r + k * r.ln()).exp();
    integrate(&f, r_m, r_m + 80.0 / s, 1e-12)
}

fn assemble(params: &Params, grad_sq: f64, mass: f64, pot_int: f64, lp1: f64, phi0: f64) -> StabilityRecord {
    let Params { gamma, alpha, omega, p, .. } = *params;
    let m = params.n() * (p - 1.0) / 2.0;
    StabilityRecord {
        omega,
        phi0,
        mass,
        action: 0.5 * (grad_sq - gamma * pot_int + omega * mass) - lp1 / (p + 1.0),
        nehari: grad_sq + omega * mass - gamma * pot_int - lp1,
        grad_sq,
        pot_int,
        lp1,
        virial1: grad_sq - 0.5 * gamma * alpha * pot_int - m / (p + 1.0) * lp1,
        virial2: grad_sq - 0.5 * gamma * alpha * (alpha - 1.0) * pot_int - m * (m - 1.0) / (p + 1.0) * lp1,
        slope: None,
        slope_uncertainty: None,
    }
}

/// All functionals of a ground-state profile (slope left unset).
pub fn functionals(profile: &RadialProfile) -> Result<StabilityRecord, StabilityError> {
    let prm = *profile.params();
    let n = prm.n();
    let (x, y, d) = (profile.grid(), profile.values(), profile.derivs());
    let r1 = x[0];
    let phi0 = profile.phi0();
    let weight = |r: f64, e: f64| r.powf(n - 1.0 - e);
    let quad = |g: &dyn Fn(usize) -> f64| simpson(x, &(0..x.len()).map(g).collect::<Vec<_>>());
    let tail = profile.tail_model();
    let r_m = profile.r_last();
    let surface = sphere_area(prm.dim);
    let mut grad_sq = quad(&|i| d[i] * d[i] * weight(x[i], 0.0));
    let mut mass = quad(&|i| y[i] * y[i] * weight(x[i], 0.0)) + phi0 * phi0 * r1.powf(n) / n;
    let mut pot_int = quad(&|i| y[i] * y[i] * weight(x[i], prm.alpha)) + phi0 * phi0 * r1.powf(n - prm.alpha) / (n - prm.alpha);
    let mut lp1 = quad(&|i| y[i].powf(prm.p + 1.0) * weight(x[i], 0.0)) + phi0.powf(prm.p + 1.0) * r1.powf(n) / n;
    // tail: φ = Ae^{-δr}, φ' = -δφ
    let (a, dl) = (tail.amplitude, tail.rate);
    grad_sq += dl * dl * tail_moment(a, dl, n - 1.0, r_m, 2.0);
    mass += tail_moment(a, dl, n - 1.0, r_m, 2.0);
    pot_int += tail_moment(a, dl, n - 1.0 - prm.alpha, r_m, 2.0);
    lp1 += tail_moment(a, dl, n - 1.0, r_m, prm.p + 1.0);
    for (name, v) in [("grad", grad_sq), ("mass", mass), ("potential", pot_int), ("lp1", lp1)] {
        if !v.is_finite() {
            return Err(StabilityError::QuadratureFailure(format!("{name} integral is {v}")));
        }
    }
    Ok(assemble(&prm, surface * grad_sq, surface * mass, surface * pot_int, surface * lp1, phi0))
}

/// Ground state at `params`, bracketing around `hint` when given.
pub fn solve_near(params: &Params, hint: Option<f64>, cfg: &ShootConfig) -> Result<RadialProfile, ShootError> {
    if let Some(h) = hint {
        let (lo, hi) = (0.8 * h, 1.25 * h);
        let ok = shoot(params, lo, cfg, None)?.kind == ShootKind::Rebound && shoot(params, hi, cfg, None)?.kind == ShootKind::Crossing;
        if ok {
            return find_ground_state_with(params, (lo, hi), cfg);
        }
    }
    shooting::solve_ground_state(params, cfg)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeEstimate {
    pub omega: f64,
    pub h: f64,
    pub slope: f64,
    pub uncertainty: f64,
    /// Masses at `ω-2h, ω-h, ω+h, ω+2h`.
    pub masses: [f64; 4],
}

/// `∂_ω‖φ_ω‖²` by a five-point central difference; the uncertainty is the
/// gap to the three-point value (a bound on the leading truncation error).
pub fn mass_slope(params: &Params, omega: f64, h: f64, cfg: &ShootConfig) -> Result<SlopeEstimate, StabilityError> {
    mass_slope_from(params, omega, h, cfg, None)
}

fn mass_slope_from(params: &Params, omega: f64, h: f64, cfg: &ShootConfig, hint: Option<f64>) -> Result<SlopeEstimate, StabilityError> {
    let offsets = [-2.0, -1.0, 1.0, 2.0];
    let masses: Vec<f64> = offsets
        .par_iter()
        .map(|k| {
            let prm = params.with_omega(omega + k * h);
            prm.check_above_threshold()?;
            let prof = solve_near(&prm, hint, cfg)?;
            Ok(functionals(&prof)?.mass)
        })
        .collect::<Result<_, StabilityError>>()?;
    let m = [masses[0], masses[1], masses[2], masses[3]];
    let five = (m[0] - 8.0 * m[1] + 8.0 * m[2] - m[3]) / (12.0 * h);
    let three = (m[2] - m[1]) / (2.0 * h);
    Ok(SlopeEstimate { omega, h, slope: five, uncertainty: (five - three).abs(), masses: m })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Stable,
    Unstable,
    Indeterminate,
}

pub fn classify_slope(slope: f64, uncertainty: f64) -> Verdict {
    if slope - uncertainty > 0.0 {
        Verdict::Stable
    } else if slope + uncertainty < 0.0 {
        Verdict::Unstable
    } else {
        Verdict::Indeterminate
    }
}

/// Slope criterion on a record; `Indeterminate` when the slope is unset.
pub fn classify(record: &StabilityRecord) -> Verdict {
    match (record.slope, record.slope_uncertainty) {
        (Some(s), Some(u)) => classify_slope(s, u),
        _ => Verdict::Indeterminate,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub record: StabilityRecord,
    pub verdict: Verdict,
}

/// A point where `∂²_λS ≤ 0` and yet the slope is nonnegative, both beyond
/// their uncertainties.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditFlag {
    pub omega: f64,
    pub virial2: f64,
    pub slope: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub omega0: Option<f64>,
    pub rows: Vec<SweepRow>,
    pub failures: Vec<(f64, String)>,
    pub audit: Vec<AuditFlag>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    /// Relative difference step: `h = rel_step · ω`.
    pub rel_step: f64,
    pub shoot: ShootConfig,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { rel_step: 0.02, shoot: ShootConfig::default() }
    }
}

fn sweep_point(template: &Params, omega: f64, cfg: &SweepConfig) -> Result<SweepRow, StabilityError> {
    let prm = template.with_omega(omega);
    prm.check_above_threshold()?;
    let prof = solve_near(&prm, None, &cfg.shoot)?;
    let mut rec = functionals(&prof)?;
    let s = mass_slope_from(&prm, omega, cfg.rel_step * omega, &cfg.shoot, Some(prof.phi0()))?;
    rec.slope = Some(s.slope);
    rec.slope_uncertainty = Some(s.uncertainty);
    Ok(SweepRow { verdict: classify(&rec), record: rec })
}

/// Records and slope verdicts at each `ω`, with the audit of the implication
/// `∂²_λS_ω(φ^λ) ≤ 0 ⇒ ∂_ω‖φ_ω‖² < 0`. For `γ > 0` without a stored `ω₀`
/// the threshold is computed first.
pub fn sweep(template: &Params, omegas: &[f64], cfg: &SweepConfig) -> SweepResult {
    let mut template = *template;
    if template.omega0.is_none() && template.gamma > 0.0 && !omegas.is_empty() {
        match spectrum::omega0(&template, None) {
            Ok(w0) => template = template.with_omega0(w0.value),
            Err(e) => {
                return SweepResult {
                    omega0: None,
                    rows: vec![],
                    failures: omegas.iter().map(|&w| (w, format!("omega0: {e}"))).collect(),
                    audit: vec![],
                }
            }
        }
    }
    let results: Vec<(f64, Result<SweepRow, StabilityError>)> =
        omegas.par_iter().map(|&w| (w, sweep_point(&template, w, cfg))).collect();
    let mut out = SweepResult { omega0: template.omega0, rows: vec![], failures: vec![], audit: vec![] };
    for (w, r) in results {
        match r {
            Ok(row) => out.rows.push(row),
            Err(e) => out.failures.push((w, e.to_string())),
        }
    }
    for row in &out.rows {
        let rec = &row.record;
        let (s, us) = (rec.slope.unwrap(), rec.slope_uncertainty.unwrap());
        if rec.virial2 + rec.functional_uncertainty() <= 0.0 && s - us >= 0.0 {
            out.audit.push(AuditFlag { omega: rec.omega, virial2: rec.virial2, slope: s });
        }
    }
    out
}
