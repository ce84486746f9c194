//! Generalized power series of the regular solution at the origin.
//!
//! With `x = r^{2-α}` and `y = r²` the regular solution of
//! `(r^{N-1}φ')'/r^{N-1} = ωφ - γr^{-α}φ - φ^p`, `φ(0) = φ0`, has the formal
//! expansion `φ = Σ c_{k,m} x^k y^m`. Collecting powers gives
//!
//! `e(e+N-2) c_{k,m} = ω c_{k,m-1} - [φ^p]_{k,m-1} - γ c_{k-1,m}`, `e = k(2-α) + 2m`,
//!
//! solved degree by degree in `k + m`; `φ^p` uses Miller's power recurrence
//! in the total degree. The two leading corrections are
//! `(ωφ0 - φ0^p) r²/(2N)` and `-γφ0 r^{2-α}/((2-α)(N-α))`.

use serde::Serialize;

use crate::params::Params;

/// Default number of homogeneous degrees kept.
pub const DEFAULT_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesStart {
    pub r0: f64,
    pub phi: f64,
    pub dphi: f64,
    /// `coeffs[d][k] = c_{k, d-k}`.
    pub coeffs: Vec<Vec<f64>>,
    /// Size of the last retained degree relative to the value (and slope).
    pub truncation: f64,
    #[serde(skip)]
    alpha: f64,
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Series coefficients through total degree `order`.
pub fn series_coeffs(params: &Params, phi0: f64, order: usize) -> Vec<Vec<f64>> {
    let (n, a, w, g, p) = (params.n(), params.alpha, params.omega, params.gamma, params.p);
    let mut c: Vec<Vec<f64>> = vec![vec![phi0]];
    let mut q: Vec<Vec<f64>> = vec![vec![phi0.powf(p)]];
    for d in 1..=order {
        let mut cd = vec![0.0; d + 1];
        for (k, slot) in cd.iter_mut().enumerate() {
            let m = d - k;
            let mut rhs = 0.0;
            if m >= 1 {
                rhs += w * c[d - 1][k] - q[d - 1][k];
            }
            if k >= 1 && g != 0.0 {
                rhs -= g * c[d - 1][k - 1];
            }
            let e = k as f64 * (2.0 - a) + 2.0 * m as f64;
            *slot = rhs / (e * (e + n - 2.0));
        }
        c.push(cd);
        let mut qd = vec![0.0; d + 1];
        for j in 1..=d {
            let weight = (p + 1.0) * j as f64 - d as f64;
            for (slot, v) in qd.iter_mut().zip(poly_mul(&c[j], &q[d - j])) {
                *slot += weight * v;
            }
        }
        for v in qd.iter_mut() {
            *v /= d as f64 * phi0;
        }
        q.push(qd);
    }
    c
}

fn eval_degree(coeffs: &[f64], d: usize, alpha: f64, r: f64) -> (f64, f64) {
    let mut v = 0.0;
    let mut dv = 0.0;
    for (k, c) in coeffs.iter().enumerate() {
        let e = k as f64 * (2.0 - alpha) + 2.0 * (d - k) as f64;
        let t = c * r.powf(e);
        v += t;
        dv += e * t / r;
    }
    (v, dv)
}

impl SeriesStart {
    pub fn eval(&self, r: f64) -> (f64, f64) {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| eval_degree(c, d, self.alpha, r))
            .fold((0.0, 0.0), |acc, t| (acc.0 + t.0, acc.1 + t.1))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("start radius {r0} too large: series truncation {truncation:.3e} exceeds {tol:.3e}")]
pub struct StartRadiusTooLarge {
    pub r0: f64,
    pub truncation: f64,
    pub tol: f64,
}

/// Series start at `r0` with [`DEFAULT_ORDER`] degrees.
pub fn series_start(params: &Params, phi0: f64, r0: f64, tol: f64) -> Result<SeriesStart, StartRadiusTooLarge> {
    series_start_with_order(params, phi0, r0, tol, DEFAULT_ORDER)
}

pub fn series_start_with_order(
    params: &Params,
    phi0: f64,
    r0: f64,
    tol: f64,
    order: usize,
) -> Result<SeriesStart, StartRadiusTooLarge> {
    let coeffs = series_coeffs(params, phi0, order.max(1));
    let mut s = SeriesStart { r0, phi: 0.0, dphi: 0.0, coeffs, truncation: 0.0, alpha: params.alpha };
    let (phi, dphi) = s.eval(r0);
    let top = s.coeffs.len() - 1;
    let (tv, td) = eval_degree(&s.coeffs[top], top, params.alpha, r0);
    // slope scale: the first-degree slope, which never cancels for γ > 0
    let (_, d1) = eval_degree(&s.coeffs[1], 1, params.alpha, r0);
    let slope_scale = dphi.abs().max(d1.abs()).max(f64::MIN_POSITIVE);
    let truncation = (tv.abs() / phi.abs()).max(td.abs() / slope_scale);
    s.phi = phi;
    s.dphi = dphi;
    s.truncation = truncation;
    if truncation > tol {
        return Err(StartRadiusTooLarge { r0, truncation, tol });
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::integrate;

    #[test]
    fn leading_terms_match_two_term_formula() {
        let prm = Params::oracle(3, 0.8, 1.3, 1.7, 2.5);
        let c = series_coeffs(&prm, 1.2, 2);
        let phi0: f64 = 1.2;
        // c_{0,1} (r²) and c_{1,0} (r^{2-α})
        assert!((c[1][0] - (1.7 * phi0 - phi0.powf(2.5)) / 6.0).abs() < 1e-14);
        assert!((c[1][1] + 0.8 * phi0 / ((2.0 - 1.3) * (3.0 - 1.3))).abs() < 1e-14);
    }

    #[test]
    fn singular_slope_in_two_dimensions() {
        // N=2, α=1, γ=1, φ0=1: φ'(r) → -γφ0/(N-α) = -1
        let prm = Params::oracle(2, 1.0, 1.0, 1.0, 3.0);
        let s = series_start(&prm, 1.0, 1e-8, 1e-6).unwrap();
        assert!((s.dphi + 1.0).abs() < 1e-6, "{}", s.dphi);
    }

    #[test]
    fn one_dimensional_slope_vanishes_like_sqrt() {
        // N=1, α=1/2, γ=1, φ0=1: singular part of φ' is -2√r
        let prm = Params::oracle(1, 1.0, 0.5, 1.0, 3.0);
        for &r in &[1e-6, 1e-8, 1e-10] {
            let s = series_start(&prm, 1.0, r, 1e-6).unwrap();
            assert!((s.dphi / (-2.0 * r.sqrt()) - 1.0).abs() < 1e-4);
        }
    }

    #[test]
    fn cancellation_without_potential() {
        let prm = Params::oracle(3, 0.0, 1.0, 1.0, 3.0);
        let s = series_start(&prm, 1.0, 1e-3, 1e-6).unwrap();
        assert!(s.dphi.abs() < 1e-15);
        assert!((s.phi - 1.0).abs() < 1e-15);
    }

    #[test]
    fn series_satisfies_the_ode() {
        let prm = Params::oracle(2, 1.3, 1.5, 0.9, 3.0);
        let s = series_start_with_order(&prm, 1.1, 1e-3, 1.0, 8).unwrap();
        let r = 1e-3;
        let e = 1e-6;
        let d2 = (s.eval(r + e).1 - s.eval(r - e).1) / (2.0 * e);
        let (phi, dphi) = s.eval(r);
        let res = d2 - prm.phi_second(r, phi, dphi);
        assert!(res.abs() < 1e-6 * (prm.gamma * r.powf(-prm.alpha)), "{res}");
    }

    #[test]
    fn integral_representation_agrees() {
        // φ'(r) = r^{1-N} ∫_0^r τ^{N-1}(g φ - φ^p) dτ
        for (n, a) in [(2usize, 1.0), (3, 1.5), (1, 0.5)] {
            let prm = Params::oracle(n, 1.0, a, 1.0, 3.0);
            let r0 = 1e-4;
            let s = series_start_with_order(&prm, 1.3, r0, 1.0, 8).unwrap();
            let integrand = |t: f64| {
                let (phi, _) = s.eval(t);
                t.powi(n as i32 - 1) * (prm.g(t) * phi - phi.powi(3))
            };
            let lead = 1.3 * r0.powf(n as f64 - a) / (n as f64 - a);
            // split off the r^{N-1-α} singular piece exactly
            let smooth = |t: f64| integrand(t) + 1.3 * t.powf(n as f64 - 1.0 - a);
            let int = integrate(&smooth, 0.0, r0, 1e-13) - lead;
            let rep = int / r0.powi(n as i32 - 1);
            let bound = r0.powf((2.0f64).min(3.0 - a));
            assert!((rep - s.dphi).abs() / s.dphi.abs() < bound, "N={n}: {rep} vs {}", s.dphi);
        }
    }

    #[test]
    fn too_large_start_is_rejected() {
        let prm = Params::oracle(2, 1.0, 1.5, 1.0, 3.0);
        assert!(series_start(&prm, 1.0, 0.5, 1e-12).is_err());
    }
}
