//! Outward shooting for the positive decaying solution of
//! `φ'' + (N-1)/r φ' - (ω - γ r^{-α}) φ + φ^p = 0`.
//!
//! A shot starts from the origin series at a small radius, integrates with
//! an embedded Runge–Kutta pair and stops at the first event:
//! `φ = 0` ([`ShootKind::Crossing`], overshoot) or `φ' = 0` with `φ > 0`
//! ([`ShootKind::Rebound`], undershoot). The ground state value `φ(0)`
//! separates the two classes and is located by bisection.
//!
//! For `N = 1` the regular start has `φ'(r) ~ r^{1-α} → 0` because `α < 1`,
//! which is the extra boundary condition at the origin in one dimension.

pub mod rk;
pub mod series;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::GridSpec;
use crate::numerics::hermite;
use crate::params::{ParamError, Params};
use crate::profile::{ProfileError, RadialProfile, Tail, Trajectory};
pub use series::{series_start, SeriesStart, StartRadiusTooLarge};

use rk::{dopri_step, error_norm, PiController, State};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShootError {
    #[error("step size underflow at r = {0}")]
    StepUnderflow(f64),
    #[error("non-finite state at r = {0}")]
    NonFiniteState(f64),
    #[error(transparent)]
    StartRadiusTooLarge(#[from] StartRadiusTooLarge),
    #[error("invalid bracket: lo = {lo} gives {lo_kind:?}, hi = {hi} gives {hi_kind:?}")]
    InvalidBracket { lo: f64, hi: f64, lo_kind: ShootKind, hi_kind: ShootKind },
    #[error("bisection did not converge in {0} iterations")]
    NoConvergence(usize),
    #[error("no Rebound/Crossing pair found after {0} doublings")]
    BracketNotFound(usize),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("ground-state profile rejected: {0}")]
    Profile(#[from] ProfileError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShootKind {
    Crossing,
    Rebound,
    Decaying,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShootOutcome {
    pub kind: ShootKind,
    pub event_radius: f64,
    /// States up to the event: on the requested sample grid, or at every
    /// accepted step when no grid is given.
    pub profile: Trajectory,
}

/// Numerical controls for shots and the bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ShootConfig {
    /// Start radius; `None` means `1e-6/√ω`.
    pub r0: Option<f64>,
    /// Integration end; `None` means `30/√ω`.
    pub r_max: Option<f64>,
    /// Relative tolerance of the Runge–Kutta error control.
    pub rtol: f64,
    /// Accepted truncation of the origin series.
    pub series_tol: f64,
    /// Decay threshold relative to `φ(0)`.
    pub decay_rel: f64,
    /// Bisection stops once `hi - lo <= bisect_tol · hi` (or at machine precision).
    pub bisect_tol: f64,
    pub max_iter: usize,
    /// The ground state is cut where the final bracket shots differ by this
    /// relative amount; the tail model takes over beyond.
    pub divergence_rel: f64,
    pub grid_ratio: f64,
    /// Uniform spacing; `None` means `0.01·min(1, 1/√ω)`.
    pub grid_spacing: Option<f64>,
}

impl Default for ShootConfig {
    fn default() -> Self {
        ShootConfig {
            r0: None,
            r_max: None,
            rtol: 1e-11,
            series_tol: 1e-10,
            decay_rel: 1e-9,
            bisect_tol: 1e-15,
            max_iter: 200,
            divergence_rel: 1e-6,
            grid_ratio: 1.01,
            grid_spacing: None,
        }
    }
}

impl ShootConfig {
    pub fn r0_for(&self, params: &Params) -> f64 {
        self.r0.unwrap_or(1e-6 * params.length_scale())
    }

    pub fn r_max_for(&self, params: &Params) -> f64 {
        self.r_max.unwrap_or(30.0 * params.length_scale())
    }

    pub fn grid_for(&self, params: &Params) -> GridSpec {
        let mut g = GridSpec::for_omega(params.omega);
        g.r0 = self.r0_for(params);
        g.r_max = self.r_max_for(params);
        g.ratio = self.grid_ratio;
        if let Some(s) = self.grid_spacing {
            g.spacing = s;
        }
        g
    }
}

fn rhs(params: &Params) -> impl Fn(f64, &State) -> State + '_ {
    move |r, y| [y[1], params.phi_second(r, y[0], y[1])]
}

/// Root of the cubic Hermite interpolant of `u` on `[t0, t1]` by bisection.
fn hermite_root(t0: f64, t1: f64, u0: f64, u1: f64, d0: f64, d1: f64) -> f64 {
    let (mut a, mut b) = (t0, t1);
    let fa = u0;
    for _ in 0..100 {
        let m = 0.5 * (a + b);
        let fm = hermite(t0, t1, u0, u1, d0, d1, m);
        if (fm <= 0.0) == (fa <= 0.0) {
            a = m;
        } else {
            b = m;
        }
        if b - a <= 1e-15 * b {
            break;
        }
    }
    0.5 * (a + b)
}

/// Integrates outward from `start` with default controls up to `r_max`.
pub fn integrate_outward(params: &Params, start: &SeriesStart, r_max: f64, tol: f64) -> Result<ShootOutcome, ShootError> {
    let cfg = ShootConfig { r_max: Some(r_max), rtol: tol, ..ShootConfig::default() };
    integrate_outward_with(params, start, &cfg, None)
}

/// Integrates outward, optionally recording states exactly at the nodes of
/// `sample` (nodes below `start.r0` are skipped).
pub fn integrate_outward_with(
    params: &Params,
    start: &SeriesStart,
    cfg: &ShootConfig,
    sample: Option<&[f64]>,
) -> Result<ShootOutcome, ShootError> {
    let f = rhs(params);
    let phi0 = start.coeffs[0][0];
    let r_max = cfg.r_max_for(params);
    let threshold = cfg.decay_rel * phi0;
    let atol = [cfg.rtol * 1e-6 * phi0, cfg.rtol * 1e-6 * phi0];

    let mut t = start.r0;
    let mut y: State = [start.phi, start.dphi];
    let mut traj = Trajectory { params: *params, phi0, grid: vec![], values: vec![], derivs: vec![] };
    let mut next_node = 0usize;
    let record = |traj: &mut Trajectory, r: f64, y: &State| {
        traj.grid.push(r);
        traj.values.push(y[0]);
        traj.derivs.push(y[1]);
    };
    match sample {
        Some(nodes) => {
            while next_node < nodes.len() && nodes[next_node] < t * (1.0 - 1e-12) {
                next_node += 1;
            }
            if next_node < nodes.len() && (nodes[next_node] - t).abs() <= 1e-12 * t {
                record(&mut traj, t, &y);
                next_node += 1;
            }
        }
        None => record(&mut traj, t, &y),
    }

    if y[1] >= 0.0 && y[0] > 0.0 {
        return Ok(ShootOutcome { kind: ShootKind::Rebound, event_radius: t, profile: traj });
    }

    let mut k = f(t, &y);
    let mut h = 0.25 * t;
    let mut pi = PiController::default();
    loop {
        if !(y[0].is_finite() && y[1].is_finite()) {
            return Err(ShootError::NonFiniteState(t));
        }
        if t >= r_max * (1.0 - 1e-14) {
            let kind = if y[0] < threshold && y[1].abs() < threshold {
                ShootKind::Decaying
            } else if y[1] + params.omega.sqrt() * y[0] > 0.0 {
                // growing mode e^{√ω r} has positive weight: undershoot
                ShootKind::Rebound
            } else {
                ShootKind::Crossing
            };
            return Ok(ShootOutcome { kind, event_radius: t, profile: traj });
        }
        let mut h_try = h.min(0.25 * t).min(r_max - t);
        let mut hits_node = false;
        if let Some(nodes) = sample {
            if next_node < nodes.len() && t + h_try >= nodes[next_node] * (1.0 - 1e-13) {
                h_try = nodes[next_node] - t;
                hits_node = true;
            }
        }
        if h_try <= 1e-14 * t {
            return Err(ShootError::StepUnderflow(t));
        }
        let (y_new, err, k_new) = dopri_step(&f, t, &y, &k, h_try);
        let e = error_norm(&err, &y, &y_new, cfg.rtol, &atol);
        if !(e <= 1.0) {
            h = h_try * if e.is_finite() { pi.factor(e, false) } else { 0.25 };
            continue;
        }
        let crossing = y_new[0] <= 0.0;
        let rebound = y[1] < 0.0 && y_new[1] >= 0.0;
        if crossing && rebound && h_try > 1e-6 * t {
            // both events inside one step: resolve with a shorter step
            h = 0.25 * h_try;
            continue;
        }
        let t_new = t + h_try;
        if crossing {
            let rc = hermite_root(t, t_new, y[0], y_new[0], y[1], y_new[1]);
            return Ok(ShootOutcome { kind: ShootKind::Crossing, event_radius: rc, profile: traj });
        }
        if rebound {
            let rc = hermite_root(t, t_new, y[1], y_new[1], k[1], k_new[1]);
            return Ok(ShootOutcome { kind: ShootKind::Rebound, event_radius: rc, profile: traj });
        }
        h = h_try * pi.factor(e, true);
        if hits_node {
            // keep the controller's proposal, not the node-truncated step
            h = h.max(h_try);
        }
        t = if hits_node { sample.unwrap()[next_node] } else { t_new };
        y = y_new;
        k = k_new;
        match sample {
            Some(_) if hits_node => {
                record(&mut traj, t, &y);
                next_node += 1;
            }
            Some(_) => {}
            None => record(&mut traj, t, &y),
        }
    }
}

/// One shot from `φ(0) = phi0` with the given controls.
pub fn shoot(params: &Params, phi0: f64, cfg: &ShootConfig, sample: Option<&[f64]>) -> Result<ShootOutcome, ShootError> {
    integrate_outward_with(params, &start_for(params, phi0, cfg)?, cfg, sample)
}

/// Series start at the configured radius. With the default radius the
/// truncation monitor may pull the start inward (slowly converging
/// `r^{2-α}` series for α near 2), down to 1e-6 of the default.
fn start_for(params: &Params, phi0: f64, cfg: &ShootConfig) -> Result<SeriesStart, ShootError> {
    let r0 = cfg.r0_for(params);
    let first = series_start(params, phi0, r0, cfg.series_tol);
    if cfg.r0.is_some() {
        return Ok(first?);
    }
    let mut last = first;
    for k in 1..=6 {
        if last.is_ok() {
            break;
        }
        last = series_start(params, phi0, r0 * 10f64.powi(-k), cfg.series_tol);
    }
    Ok(last?)
}

/// Bisection on `φ(0)` inside `bracket = (lo, hi)` with `lo` a Rebound and
/// `hi` a Crossing. `tol` is the relative bracket width at which to stop.
pub fn find_ground_state(params: &Params, bracket: (f64, f64), tol: f64) -> Result<RadialProfile, ShootError> {
    let cfg = ShootConfig { bisect_tol: tol, ..ShootConfig::default() };
    find_ground_state_with(params, bracket, &cfg)
}

/// Result of the bisection before the profile is assembled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
    pub decaying: bool,
}

pub fn bisect_phi0(params: &Params, bracket: (f64, f64), cfg: &ShootConfig) -> Result<Bisection, ShootError> {
    params.check_above_threshold()?;
    let (mut lo, mut hi) = bracket;
    let lo_kind = shoot(params, lo, cfg, None)?.kind;
    let hi_kind = shoot(params, hi, cfg, None)?.kind;
    if !(lo < hi) || lo_kind != ShootKind::Rebound || hi_kind != ShootKind::Crossing {
        return Err(ShootError::InvalidBracket { lo, hi, lo_kind, hi_kind });
    }
    for it in 0..cfg.max_iter {
        let mid = lo + 0.5 * (hi - lo);
        if hi - lo <= cfg.bisect_tol * hi || mid <= lo || mid >= hi {
            return Ok(Bisection { lo, hi, iterations: it, decaying: false });
        }
        match shoot(params, mid, cfg, None)?.kind {
            ShootKind::Rebound => lo = mid,
            ShootKind::Crossing => hi = mid,
            ShootKind::Decaying => return Ok(Bisection { lo: mid, hi: mid, iterations: it + 1, decaying: true }),
        }
    }
    Err(ShootError::NoConvergence(cfg.max_iter))
}

pub fn find_ground_state_with(params: &Params, bracket: (f64, f64), cfg: &ShootConfig) -> Result<RadialProfile, ShootError> {
    let b = bisect_phi0(params, bracket, cfg)?;
    let grid = cfg.grid_for(params).build();
    let mid = b.lo + 0.5 * (b.hi - b.lo);
    let s_mid = shoot(params, mid, cfg, Some(&grid))?.profile;
    let (s_lo, s_hi) = if b.decaying {
        (s_mid.clone(), s_mid.clone())
    } else {
        // a bracket a few ulps wide can round to one series start, which
        // would hide the divergence; measure it over a resolvable width
        let (lo, hi) = (b.lo.min(mid * (1.0 - 1e-14)), b.hi.max(mid * (1.0 + 1e-14)));
        (shoot(params, lo, cfg, Some(&grid))?.profile, shoot(params, hi, cfg, Some(&grid))?.profile)
    };
    let n = s_mid.grid.len().min(s_lo.grid.len()).min(s_hi.grid.len());
    let mut cut = 0;
    for i in 0..n {
        let v = s_mid.values[i];
        let spread = (s_hi.values[i] - s_lo.values[i]).abs();
        if !(v > 0.0 && s_mid.derivs[i] < 0.0 && spread <= cfg.divergence_rel * v) {
            break;
        }
        cut = i;
    }
    let t = s_mid;
    let grid = t.grid[..=cut].to_vec();
    let values = t.values[..=cut].to_vec();
    let derivs = t.derivs[..=cut].to_vec();
    let tail = Tail::matched(grid[cut], values[cut], derivs[cut]);
    Ok(RadialProfile::new(*params, mid, grid, values, derivs, tail)?)
}

/// Geometric scan `φ(0) = 2^k · seed` (seed `ω^{1/(p-1)}`) until adjacent
/// values give Rebound then Crossing.
pub fn auto_bracket(params: &Params) -> Result<(f64, f64), ShootError> {
    auto_bracket_with(params, &ShootConfig::default())
}

pub fn auto_bracket_with(params: &Params, cfg: &ShootConfig) -> Result<(f64, f64), ShootError> {
    params.check_above_threshold()?;
    const CAP: usize = 64;
    let mut x = params.amplitude_scale();
    let first = shoot(params, x, cfg, None)?.kind;
    if first == ShootKind::Crossing {
        for _ in 0..CAP {
            let lower = 0.5 * x;
            if shoot(params, lower, cfg, None)?.kind != ShootKind::Crossing {
                return Ok((lower, x));
            }
            x = lower;
        }
    } else {
        for _ in 0..CAP {
            let upper = 2.0 * x;
            if shoot(params, upper, cfg, None)?.kind == ShootKind::Crossing {
                return Ok((x, upper));
            }
            x = upper;
        }
    }
    Err(ShootError::BracketNotFound(CAP))
}

/// Bracket search followed by bisection.
pub fn solve_ground_state(params: &Params, cfg: &ShootConfig) -> Result<RadialProfile, ShootError> {
    let bracket = auto_bracket_with(params, cfg)?;
    find_ground_state_with(params, bracket, cfg)
}

/// Classifies shots at `n` evenly spaced `φ(0)` in `[lo, hi]`.
pub fn scan_phi0(params: &Params, lo: f64, hi: f64, n: usize, cfg: &ShootConfig) -> Result<Vec<(f64, ShootKind)>, ShootError> {
    (0..n)
        .map(|i| {
            let x = lo + (hi - lo) * i as f64 / (n - 1).max(1) as f64;
            shoot(params, x, cfg, None).map(|o| (x, o.kind))
        })
        .collect()
}

/// Number of Rebound→Crossing changes along a scan (Decaying entries skipped).
pub fn count_transitions(scan: &[(f64, ShootKind)]) -> usize {
    let kinds: Vec<ShootKind> = scan.iter().map(|s| s.1).filter(|k| *k != ShootKind::Decaying).collect();
    kinds.windows(2).filter(|w| w[0] == ShootKind::Rebound && w[1] == ShootKind::Crossing).count()
}

/// Sign changes of the classification along a scan, in either direction.
pub fn count_class_changes(scan: &[(f64, ShootKind)]) -> usize {
    let kinds: Vec<ShootKind> = scan.iter().map(|s| s.1).filter(|k| *k != ShootKind::Decaying).collect();
    kinds.windows(2).filter(|w| w[0] != w[1]).count()
}
