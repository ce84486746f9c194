//! Sampled radial solutions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::GridSpec;
use crate::numerics::{hermite, locate};
use crate::params::Params;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProfileError {
    #[error("grid is not strictly increasing and positive at index {0}")]
    GridNotIncreasing(usize),
    #[error("profile value is not positive at r = {0}")]
    NotPositive(f64),
    #[error("profile is not strictly decreasing at r = {0}")]
    NotDecreasing(f64),
    #[error("tail rate must be positive (got {0})")]
    BadTail(f64),
    #[error("tail model does not match the last sample ({0} relative mismatch)")]
    TailMismatch(f64),
    #[error("sample arrays have mismatched lengths")]
    LengthMismatch,
    #[error("r = {r} lies below the first grid point {r1}")]
    OutOfRange { r: f64, r1: f64 },
}

/// Exponential far-field model `φ(r) ≈ amplitude · e^{-rate · r}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tail {
    pub amplitude: f64,
    pub rate: f64,
}

impl Tail {
    pub fn value(&self, r: f64) -> f64 {
        self.amplitude * (-self.rate * r).exp()
    }

    /// Tail matched to value and log-slope at `r`.
    pub fn matched(r: f64, phi: f64, dphi: f64) -> Tail {
        let rate = -dphi / phi;
        Tail { amplitude: phi * (rate * r).exp(), rate }
    }
}

/// Sampled states `(φ, φ')` of an ODE trajectory; no positivity or decay
/// guarantees. Used for partial shots.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub params: Params,
    pub phi0: f64,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub derivs: Vec<f64>,
}

/// A positive, strictly decreasing radial ground-state profile with an
/// exponential tail beyond the last sample.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    params: Params,
    phi0: f64,
    grid: Vec<f64>,
    values: Vec<f64>,
    derivs: Vec<f64>,
    tail: Tail,
}

/// Read access shared by complete profiles and partial trajectories.
pub trait Sampled {
    fn params(&self) -> &Params;
    fn phi0(&self) -> f64;
    fn grid(&self) -> &[f64];
    fn values(&self) -> &[f64];
    fn derivs(&self) -> &[f64];
    fn tail(&self) -> Option<Tail> {
        None
    }

    /// `(φ(r), φ'(r))` by cubic Hermite interpolation of both `φ` (slopes
    /// `φ'`) and `φ'` (slopes `φ''` from the ODE); tail model beyond the grid.
    fn eval(&self, r: f64) -> Result<(f64, f64), ProfileError> {
        let x = self.grid();
        let r1 = x[0];
        if r < r1 * (1.0 - 1e-14) {
            return Err(ProfileError::OutOfRange { r, r1 });
        }
        let last = *x.last().unwrap();
        if r > last {
            return match self.tail() {
                Some(t) => {
                    let v = t.value(r);
                    Ok((v, -t.rate * v))
                }
                None => Err(ProfileError::OutOfRange { r, r1 }),
            };
        }
        let i = locate(x, r);
        let (y, d) = (self.values(), self.derivs());
        if r == x[i] {
            return Ok((y[i], d[i]));
        }
        let prm = self.params();
        let s0 = prm.phi_second(x[i], y[i], d[i]);
        let s1 = prm.phi_second(x[i + 1], y[i + 1], d[i + 1]);
        Ok((
            hermite(x[i], x[i + 1], y[i], y[i + 1], d[i], d[i + 1], r),
            hermite(x[i], x[i + 1], d[i], d[i + 1], s0, s1, r),
        ))
    }
}

impl Sampled for Trajectory {
    fn params(&self) -> &Params {
        &self.params
    }
    fn phi0(&self) -> f64 {
        self.phi0
    }
    fn grid(&self) -> &[f64] {
        &self.grid
    }
    fn values(&self) -> &[f64] {
        &self.values
    }
    fn derivs(&self) -> &[f64] {
        &self.derivs
    }
}

impl Sampled for RadialProfile {
    fn params(&self) -> &Params {
        &self.params
    }
    fn phi0(&self) -> f64 {
        self.phi0
    }
    fn grid(&self) -> &[f64] {
        &self.grid
    }
    fn values(&self) -> &[f64] {
        &self.values
    }
    fn derivs(&self) -> &[f64] {
        &self.derivs
    }
    fn tail(&self) -> Option<Tail> {
        Some(self.tail)
    }
}

impl RadialProfile {
    /// Builds a profile and checks its invariants: increasing positive grid,
    /// `φ > 0`, `φ' < 0`, `phi0 > 0`, positive tail rate continuous with the
    /// last sample.
    pub fn new(
        params: Params,
        phi0: f64,
        grid: Vec<f64>,
        values: Vec<f64>,
        derivs: Vec<f64>,
        tail: Tail,
    ) -> Result<Self, ProfileError> {
        if grid.len() != values.len() || grid.len() != derivs.len() || grid.len() < 2 {
            return Err(ProfileError::LengthMismatch);
        }
        if !(grid[0] > 0.0) {
            return Err(ProfileError::GridNotIncreasing(0));
        }
        if let Some(i) = grid.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(ProfileError::GridNotIncreasing(i + 1));
        }
        if !(phi0 > 0.0) {
            return Err(ProfileError::NotPositive(0.0));
        }
        if let Some(i) = values.iter().position(|v| !(*v > 0.0)) {
            return Err(ProfileError::NotPositive(grid[i]));
        }
        if let Some(i) = derivs.iter().position(|d| !(*d < 0.0)) {
            return Err(ProfileError::NotDecreasing(grid[i]));
        }
        if !(tail.rate > 0.0) || !tail.amplitude.is_finite() {
            return Err(ProfileError::BadTail(tail.rate));
        }
        let r_m = *grid.last().unwrap();
        let v_m = *values.last().unwrap();
        let mismatch = (tail.value(r_m) - v_m).abs() / v_m;
        if mismatch > 1e-6 {
            return Err(ProfileError::TailMismatch(mismatch));
        }
        Ok(RadialProfile { params, phi0, grid, values, derivs, tail })
    }

    pub fn tail_model(&self) -> Tail {
        self.tail
    }

    pub fn r_last(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    pub fn into_trajectory(self) -> Trajectory {
        Trajectory { params: self.params, phi0: self.phi0, grid: self.grid, values: self.values, derivs: self.derivs }
    }

    /// Copy with every sample (and the tail) multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> RadialProfile {
        RadialProfile {
            params: self.params,
            phi0: self.phi0 * factor,
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
            derivs: self.derivs.iter().map(|v| v * factor).collect(),
            tail: Tail { amplitude: self.tail.amplitude * factor, rate: self.tail.rate },
        }
    }
}

/// Closed-form one-dimensional soliton (`γ = 0`, `N = 1`):
/// `φ(r) = [(p+1)ω/2]^{1/(p-1)} sech^{2/(p-1)}((p-1)√ω r / 2)`.
pub fn soliton_1d_eval(omega: f64, p: f64, r: f64) -> (f64, f64) {
    let amp = ((p + 1.0) * omega / 2.0).powf(1.0 / (p - 1.0));
    let k = (p - 1.0) * omega.sqrt() / 2.0;
    let e = 2.0 / (p - 1.0);
    let x = k * r;
    // sech(x) = 2e^{-x}/(1+e^{-2x}) stays finite for large x
    let em = (-x).exp();
    let sech = 2.0 * em / (1.0 + em * em);
    let phi = amp * sech.powf(e);
    (phi, -e * k * x.tanh() * phi)
}

/// Samples the closed-form soliton on the default grid for `ω`.
pub fn soliton_1d(omega: f64, p: f64) -> RadialProfile {
    let params = Params::oracle(1, 0.0, 0.5, omega, p);
    let spec = GridSpec::for_omega(omega);
    let grid = spec.build();
    let (values, derivs): (Vec<f64>, Vec<f64>) = grid.iter().map(|&r| soliton_1d_eval(omega, p, r)).unzip();
    let r_m = *grid.last().unwrap();
    let tail = Tail::matched(r_m, *values.last().unwrap(), *derivs.last().unwrap());
    let phi0 = soliton_1d_eval(omega, p, 0.0).0;
    RadialProfile::new(params, phi0, grid, values, derivs, tail).expect("closed-form soliton satisfies invariants")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `-φ'' + ωφ - φ^p` with `φ''` differentiated by hand from the sech form:
    /// `φ'' = k²φ(e² - (e² + e) sech²(kr))`, `k = (p-1)√ω/2`, `e = 2/(p-1)`.
    fn residual(omega: f64, p: f64, r: f64) -> f64 {
        let k = (p - 1.0) * omega.sqrt() / 2.0;
        let e = 2.0 / (p - 1.0);
        let sech = 1.0 / (k * r).cosh();
        let phi = soliton_1d_eval(omega, p, r).0;
        let d2 = k * k * phi * (e * e - (e * e + e) * sech * sech);
        (-d2 + omega * phi - phi.powf(p)) / (1.0 + omega * phi)
    }

    #[test]
    fn soliton_values() {
        let s = soliton_1d(1.0, 3.0);
        assert!((s.phi0() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(soliton_1d_eval(1.0, 3.0, 0.0).1, 0.0);
        let s4 = soliton_1d(4.0, 3.0);
        assert!((s4.phi0() - 2.0 * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn soliton_residual_is_tiny() {
        for &p in &[2.0, 3.0, 5.0] {
            for &w in &[0.5, 1.0, 4.0] {
                let s = soliton_1d(w, p);
                for &r in s.grid() {
                    let res = residual(w, p, r);
                    assert!(res.abs() < 1e-10, "p={p} w={w} r={r} res={res}");
                }
            }
        }
    }

    #[test]
    fn eval_interpolates_between_nodes() {
        let s = soliton_1d(1.0, 3.0);
        for &r in &[0.0123, 0.77, 3.3333, 12.345] {
            let (v, d) = s.eval(r).unwrap();
            let (ve, de) = soliton_1d_eval(1.0, 3.0, r);
            assert!((v - ve).abs() < 1e-9 && (d - de).abs() < 1e-8, "r={r}");
        }
        assert!(s.eval(0.0).is_err());
        let (v, _) = s.eval(35.0).unwrap();
        assert!((v - soliton_1d_eval(1.0, 3.0, 35.0).0).abs() < 1e-20);
    }

    #[test]
    fn invariants_are_enforced() {
        let p = Params::oracle(1, 0.0, 0.5, 1.0, 3.0);
        let t = Tail { amplitude: 1.0, rate: 1.0 };
        let e1 = (-1.0f64).exp();
        let err = RadialProfile::new(p, 1.0, vec![1.0, 0.5], vec![1.0, 1.0], vec![-1.0, -1.0], t);
        assert!(matches!(err, Err(ProfileError::GridNotIncreasing(1))));
        let err = RadialProfile::new(p, 1.0, vec![0.5, 1.0], vec![1.0, e1], vec![-1.0, 0.0], t);
        assert!(matches!(err, Err(ProfileError::NotDecreasing(_))));
        let err = RadialProfile::new(p, 1.0, vec![0.5, 1.0], vec![1.0, 2.0 * e1], vec![-1.0, -1.0], t);
        assert!(matches!(err, Err(ProfileError::TailMismatch(_))));
        assert!(RadialProfile::new(p, 1.0, vec![0.5, 1.0], vec![1.0, e1], vec![-1.0, -e1], t).is_ok());
    }
}
