//! Generalized Pohožaev identity for `φ'' + (f'/f)φ' - gφ + hφ^p = 0`.
//!
//! With `a = f^{2(p+1)/(p+3)} h^{-2/(p+3)}`, `b = -a'/2 + (f'/f)a`,
//! `c = -b' + (f'/f)b` and `G = bg + c'/2 - (ag)'/2`, every positive
//! solution satisfies `J'(r) = G(r)φ(r)²` for
//!
//! `J = ½aφ'² + bφ'φ + ½cφ² - ½agφ² + ahφ^{p+1}/(p+1)`.
//!
//! For the special triple (`f = r^{N-1}`, `g = ω - γr^{-α}`, `h = 1`) all
//! coefficients are powers of `r`:
//! `a = r^q`, `b = 2(N-1)/(p+3) r^{q-1}`, `c = 2(N-1)(N+2-(N-2)p)/(p+3)² r^{q-2}`,
//! `G = r^{q-3}(A + Br^{2-α} + Cr²) / (2(p+3)³)`, `q = 2(p+1)(N-1)/(p+3)`.

use serde::Serialize;
use thiserror::Error;

use crate::fgh::{FghTriple, TripleKind};
use crate::numerics::{fd_weights, integrate};
use crate::profile::{ProfileError, Sampled};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PohozaevError {
    #[error("{which} needs derivatives up to order {needed}, only {available} supplied")]
    DerivativeUnavailable { which: &'static str, needed: usize, available: usize },
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error("need at least 5 sample points, got {0}")]
    TooFewPoints(usize),
}

/// Constants of the special case.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedForm {
    pub dim: usize,
    pub gamma: f64,
    pub alpha: f64,
    pub omega: f64,
    pub q: f64,
    pub a_const: f64,
    pub b_const: f64,
    pub c_const: f64,
}

impl ClosedForm {
    pub fn new(dim: usize, gamma: f64, alpha: f64, omega: f64, p: f64) -> Self {
        let n = dim as f64;
        let q = 2.0 * (p + 1.0) * (n - 1.0) / (p + 3.0);
        let p3 = p + 3.0;
        ClosedForm {
            dim,
            gamma,
            alpha,
            omega,
            q,
            a_const: 4.0 * (n - 1.0) * (n - 4.0 + (n - 2.0) * p) * (n + 2.0 - (n - 2.0) * p),
            b_const: gamma * p3 * p3 * (2.0 * (n - 1.0) * (p - 1.0) - p3 * alpha),
            c_const: -2.0 * omega * (n - 1.0) * (p - 1.0) * p3 * p3,
        }
    }

    /// `s(r) = A + B r^{2-α} + C r²`, so that `G = r^{q-3} s(r) / (2(p+3)³)`.
    pub fn g_polynomial(&self, r: f64) -> f64 {
        self.a_const + self.b_const * r.powf(2.0 - self.alpha) + self.c_const * r * r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Mode {
    ClosedForm(ClosedForm),
    Generic,
}

/// Values of the coefficient functions at one radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoeffValues {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub big_g: f64,
    pub d: f64,
}

/// Evaluators for `a, b, c, G, D, U, V` of one triple and exponent `p`.
#[derive(Debug, Clone)]
pub struct PohozaevCoeffs {
    pub triple: FghTriple,
    pub p: f64,
    pub mode: Mode,
}

/// Builds the coefficient evaluators; the special triple uses the closed forms.
pub fn coeffs(triple: &FghTriple, p: f64) -> Result<PohozaevCoeffs, PohozaevError> {
    let mode = match triple.kind {
        TripleKind::Special { dim, gamma, alpha, omega } => Mode::ClosedForm(ClosedForm::new(dim, gamma, alpha, omega, p)),
        TripleKind::User => {
            for (which, u) in [("f", &triple.f), ("h", &triple.h)] {
                if u.order() < 3 {
                    return Err(PohozaevError::DerivativeUnavailable { which, needed: 3, available: u.order() });
                }
            }
            if triple.g.order() < 1 {
                return Err(PohozaevError::DerivativeUnavailable { which: "g", needed: 1, available: triple.g.order() });
            }
            Mode::Generic
        }
    };
    Ok(PohozaevCoeffs { triple: triple.clone(), p, mode })
}

/// Generic-mode evaluation through the chain rule, ignoring any closed form.
pub fn generic_coeffs(triple: &FghTriple, p: f64) -> Result<PohozaevCoeffs, PohozaevError> {
    let user = FghTriple::user(triple.f.clone(), triple.g.clone(), triple.h.clone());
    let mut c = coeffs(&user, p)?;
    c.triple.kind = triple.kind;
    Ok(c)
}

impl PohozaevCoeffs {
    pub fn closed_form(&self) -> Option<&ClosedForm> {
        match &self.mode {
            Mode::ClosedForm(c) => Some(c),
            Mode::Generic => None,
        }
    }

    /// `(a, a', a'', a''')` via `a = f^{κ₁}h^{κ₂}`, `L = (ln a)'`.
    fn a_jet(&self, r: f64) -> [f64; 4] {
        let p = self.p;
        let (k1, k2) = (2.0 * (p + 1.0) / (p + 3.0), -2.0 / (p + 3.0));
        let f = self.triple.f.jet(r);
        let h = self.triple.h.jet(r);
        let log_jet = |u: [f64; 4]| {
            let l = u[1] / u[0];
            let l1 = u[2] / u[0] - l * l;
            let l2 = u[3] / u[0] - 3.0 * l * u[2] / u[0] + 2.0 * l * l * l;
            [l, l1, l2]
        };
        let (lf, lh) = (log_jet(f), log_jet(h));
        let l = [k1 * lf[0] + k2 * lh[0], k1 * lf[1] + k2 * lh[1], k1 * lf[2] + k2 * lh[2]];
        let a = f[0].powf(k1) * h[0].powf(k2);
        [a, a * l[0], a * (l[0] * l[0] + l[1]), a * (l[0].powi(3) + 3.0 * l[0] * l[1] + l[2])]
    }

    fn generic(&self, r: f64) -> CoeffValues {
        let a = self.a_jet(r);
        let f = self.triple.f.jet(r);
        let g = self.triple.g.jet(r);
        let fl = f[1] / f[0];
        let fl1 = f[2] / f[0] - fl * fl;
        let fl2 = f[3] / f[0] - 3.0 * fl * f[2] / f[0] + 2.0 * fl.powi(3);
        let b = -0.5 * a[1] + fl * a[0];
        let b1 = -0.5 * a[2] + fl1 * a[0] + fl * a[1];
        let b2 = -0.5 * a[3] + fl2 * a[0] + 2.0 * fl1 * a[1] + fl * a[2];
        let c = -b1 + fl * b;
        let c1 = -b2 + fl1 * b + fl * b1;
        let big_g = b * g[0] + 0.5 * c1 - 0.5 * (a[1] * g[0] + a[0] * g[1]);
        CoeffValues { a: a[0], b, c, big_g, d: b * b - a[0] * (c - a[0] * g[0]) }
    }

    pub fn at(&self, r: f64) -> CoeffValues {
        match &self.mode {
            Mode::Generic => self.generic(r),
            Mode::ClosedForm(cf) => {
                let n = cf.dim as f64;
                let p3 = self.p + 3.0;
                let a = r.powf(cf.q);
                let b = 2.0 * (n - 1.0) / p3 * a / r;
                let c = 2.0 * (n - 1.0) * (n + 2.0 - (n - 2.0) * self.p) / (p3 * p3) * a / (r * r);
                let big_g = a / (r * r * r) * cf.g_polynomial(r) / (2.0 * p3.powi(3));
                let g = cf.omega - cf.gamma * r.powf(-cf.alpha);
                CoeffValues { a, b, c, big_g, d: b * b - a * (c - a * g) }
            }
        }
    }

    pub fn a(&self, r: f64) -> f64 {
        self.at(r).a
    }
    pub fn b(&self, r: f64) -> f64 {
        self.at(r).b
    }
    pub fn c(&self, r: f64) -> f64 {
        self.at(r).c
    }
    pub fn big_g(&self, r: f64) -> f64 {
        self.at(r).big_g
    }
    pub fn d(&self, r: f64) -> f64 {
        self.at(r).d
    }

    /// `(1/f(r)) ∫₀^r f w`, with the piece on `(0, ε)` from the local power law.
    fn averaged(&self, r: f64, w: &dyn Fn(f64) -> f64) -> f64 {
        let f = &self.triple.f;
        let integrand = |t: f64| f.value(t) * w(t);
        let eps = 1e-10 * r;
        let (y1, y2) = (integrand(eps), integrand(2.0 * eps));
        let e = (y2 / y1).abs().log2();
        let head = if e > -1.0 && y1.is_finite() { y1 * eps / (e + 1.0) } else { f64::NAN };
        (head + integrate(&integrand, eps, r, 1e-12)) / f.value(r)
    }

    /// `U(r) = (1/f)∫₀^r f(|g| + h)`.
    pub fn u(&self, r: f64) -> f64 {
        if let Some(cf) = self.closed_form() {
            return special_u(cf, r);
        }
        let (g, h) = (&self.triple.g, &self.triple.h);
        self.averaged(r, &|t| g.value(t).abs() + h.value(t))
    }

    /// `V(r) = (1/f)∫₀^r f h`.
    pub fn v(&self, r: f64) -> f64 {
        if let Some(cf) = self.closed_form() {
            return r / cf.dim as f64;
        }
        let h = &self.triple.h;
        self.averaged(r, &|t| h.value(t))
    }

    /// `J(r; φ)` from the value and slope at `r`.
    pub fn j_from(&self, r: f64, phi: f64, dphi: f64) -> f64 {
        let c = self.at(r);
        let g = self.triple.g.value(r);
        let h = self.triple.h.value(r);
        0.5 * c.a * dphi * dphi + c.b * dphi * phi + 0.5 * c.c * phi * phi - 0.5 * c.a * g * phi * phi
            + c.a * h * phi.abs().powf(self.p + 1.0) / (self.p + 1.0)
    }
}

/// `U` for the special case in closed form: `|g|` changes sign at
/// `r* = (γ/ω)^{1/α}` when `ω > 0`.
fn special_u(cf: &ClosedForm, r: f64) -> f64 {
    let n = cf.dim as f64;
    let (w, g, a) = (cf.omega, cf.gamma, cf.alpha);
    // ∫₀^s τ^{N-1}(γτ^{-α} - ω) dτ
    let inner = |s: f64| g * s.powf(n - a) / (n - a) - w * s.powf(n) / n;
    let abs_g = if g == 0.0 {
        w.abs() * r.powf(n) / n
    } else if w <= 0.0 {
        inner(r)
    } else {
        let rs = (g / w).powf(1.0 / a);
        if r <= rs {
            inner(r)
        } else {
            2.0 * inner(rs) - inner(r)
        }
    };
    (abs_g + r.powf(n) / n) / r.powf(n - 1.0)
}

/// `J(r; φ)` on a sampled profile (tail model beyond the grid, error below it).
pub fn j_value<S: Sampled + ?Sized>(coeffs: &PohozaevCoeffs, profile: &S, r: f64) -> Result<f64, PohozaevError> {
    let (phi, dphi) = profile.eval(r)?;
    Ok(coeffs.j_from(r, phi, dphi))
}

/// Derivative of sampled data at interior nodes by five-point stencils.
fn node_derivative(x: &[f64], y: &[f64], i: usize) -> f64 {
    let w = fd_weights(x[i], &x[i - 2..=i + 2], 1);
    (0..5).map(|k| w[1][k] * y[i - 2 + k]).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityReport {
    /// `max |J' - Gφ²| / (1 + |Gφ²|)` over interior nodes.
    pub max_residual: f64,
    pub at_r: f64,
    pub points: usize,
}

/// Checks `J' = Gφ²` at the interior sample nodes of `profile`. `J` is
/// formed from the stored samples alone and differentiated with five-point
/// stencils, so the check sees the data rather than the ODE.
pub fn verify_identity<S: Sampled + ?Sized>(coeffs: &PohozaevCoeffs, profile: &S) -> Result<IdentityReport, PohozaevError> {
    let x = profile.grid();
    if x.len() < 5 {
        return Err(PohozaevError::TooFewPoints(x.len()));
    }
    let (y, d) = (profile.values(), profile.derivs());
    let j: Vec<f64> = (0..x.len()).map(|i| coeffs.j_from(x[i], y[i], d[i])).collect();
    let mut rep = IdentityReport { max_residual: 0.0, at_r: x[2], points: 0 };
    for i in 2..x.len() - 2 {
        let rhs = coeffs.big_g(x[i]) * y[i] * y[i];
        let res = (node_derivative(x, &j, i) - rhs).abs() / (1.0 + rhs.abs());
        rep.points += 1;
        if res > rep.max_residual || res.is_nan() {
            rep.max_residual = res;
            rep.at_r = x[i];
        }
    }
    Ok(rep)
}

/// `η = ψ/φ` machinery for two solutions `φ` (smaller `φ(0)`) and `ψ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EtaX {
    pub r: Vec<f64>,
    pub eta: Vec<f64>,
    /// `(ψ'φ - ψφ')/φ²`
    pub eta_prime: Vec<f64>,
    /// `-1/(φ²f) ∫₀^r f h (η^{p-1} - 1) φ^p ψ`
    pub eta_prime_integral: Vec<f64>,
    /// `X = η²J(φ) - J(ψ)`
    pub x: Vec<f64>,
    /// `max |X' - 2ηη'J(φ)| / (1 + |2ηη'J(φ)|)` at interior nodes.
    pub x_residual: f64,
}

impl EtaX {
    /// Largest relative gap between the direct and integral forms of `η'`
    /// on `[r_lo, r_hi]`, scaled by the largest `|η'|` there.
    pub fn eta_prime_agreement(&self, r_lo: f64, r_hi: f64) -> f64 {
        let idx: Vec<usize> = (0..self.r.len()).filter(|&i| self.r[i] >= r_lo && self.r[i] <= r_hi).collect();
        let scale = idx.iter().map(|&i| self.eta_prime[i].abs()).fold(0.0, f64::max);
        if scale == 0.0 {
            return idx.iter().map(|&i| self.eta_prime_integral[i].abs()).fold(0.0, f64::max);
        }
        idx.iter().map(|&i| (self.eta_prime[i] - self.eta_prime_integral[i]).abs()).fold(0.0, f64::max) / scale
    }
}

/// Evaluates `η`, both forms of `η'`, and `X` on `grid` (which must start at
/// or above both profiles' first nodes and stay where both are positive).
pub fn eta_and_x<A, B>(coeffs: &PohozaevCoeffs, phi: &A, psi: &B, grid: &[f64]) -> Result<EtaX, PohozaevError>
where
    A: Sampled + ?Sized,
    B: Sampled + ?Sized,
{
    if grid.len() < 5 {
        return Err(PohozaevError::TooFewPoints(grid.len()));
    }
    let p = coeffs.p;
    let (f, h) = (&coeffs.triple.f, &coeffs.triple.h);
    let mut out = EtaX {
        r: grid.to_vec(),
        eta: vec![],
        eta_prime: vec![],
        eta_prime_integral: vec![],
        x: vec![],
        x_residual: 0.0,
    };
    let mut samples = Vec::with_capacity(grid.len());
    for &r in grid {
        let (u, du) = phi.eval(r)?;
        let (v, dv) = psi.eval(r)?;
        samples.push((u, du, v, dv));
    }
    let integrand = |r: f64, s: &(f64, f64, f64, f64)| {
        let eta = s.2 / s.0;
        f.value(r) * h.value(r) * (eta.powf(p - 1.0) - 1.0) * s.0.powf(p) * s.2
    };
    // ∫₀^{r₁}: the integrand behaves like f near the origin
    let r1 = grid[0];
    let f_exp = (f.value(2.0 * r1) / f.value(r1)).log2();
    let mut acc = integrand(r1, &samples[0]) * r1 / (f_exp + 1.0);
    let mut prev = integrand(r1, &samples[0]);
    let mut jphi = Vec::with_capacity(grid.len());
    for (i, &r) in grid.iter().enumerate() {
        let (u, du, v, dv) = samples[i];
        if i > 0 {
            // Simpson on the half-interval midpoint
            let rm = 0.5 * (grid[i - 1] + r);
            let (um, _) = phi.eval(rm)?;
            let (vm, _) = psi.eval(rm)?;
            let mid = integrand(rm, &(um, 0.0, vm, 0.0));
            let cur = integrand(r, &samples[i]);
            acc += (r - grid[i - 1]) / 6.0 * (prev + 4.0 * mid + cur);
            prev = cur;
        }
        let eta = v / u;
        out.eta.push(eta);
        out.eta_prime.push((dv * u - v * du) / (u * u));
        out.eta_prime_integral.push(-acc / (u * u * f.value(r)));
        let jp = coeffs.j_from(r, u, du);
        jphi.push(jp);
        out.x.push(eta * eta * jp - coeffs.j_from(r, v, dv));
    }
    for i in 2..grid.len() - 2 {
        let rhs = 2.0 * out.eta[i] * out.eta_prime[i] * jphi[i];
        let res = (node_derivative(grid, &out.x, i) - rhs).abs() / (1.0 + rhs.abs());
        out.x_residual = out.x_residual.max(res);
    }
    Ok(out)
}
