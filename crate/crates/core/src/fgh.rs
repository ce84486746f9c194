//! Coefficient triples `(f, g, h)` of the general radial equation
//! `φ'' + (f'/f) φ' - g φ + h φ^p = 0`.
//!
//! `f(r) = |S^{N-1}| r^{N-1} ρ(r)` for a radial weight `ρ`; the special case
//! uses the normalization `f(r) = r^{N-1}` (`ρ ≡ 1`, surface factor dropped).

use std::fmt;
use std::sync::Arc;

use crate::params::Params;

/// Value and derivatives `[u, u', u'', u''']` at a point. Orders beyond
/// [`RadialFn::order`] are `NaN`.
pub type Jet = [f64; 4];

type JetFn = dyn Fn(f64) -> Jet + Send + Sync;

/// A scalar function on `(0, ∞)` with analytic derivatives up to `order`.
#[derive(Clone)]
pub struct RadialFn {
    eval: Arc<JetFn>,
    order: usize,
}

impl fmt::Debug for RadialFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialFn").field("order", &self.order).finish()
    }
}

impl RadialFn {
    pub fn new(order: usize, eval: impl Fn(f64) -> Jet + Send + Sync + 'static) -> Self {
        RadialFn { eval: Arc::new(eval), order: order.min(3) }
    }

    /// `c · r^e`
    pub fn power(c: f64, e: f64) -> Self {
        RadialFn::new(3, move |r| {
            if c == 0.0 {
                return [0.0; 4];
            }
            let v = c * r.powf(e);
            [v, e * v / r, e * (e - 1.0) * v / (r * r), e * (e - 1.0) * (e - 2.0) * v / (r * r * r)]
        })
    }

    pub fn constant(c: f64) -> Self {
        RadialFn::new(3, move |_| [c, 0.0, 0.0, 0.0])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn jet(&self, r: f64) -> Jet {
        (self.eval)(r)
    }

    pub fn value(&self, r: f64) -> f64 {
        self.jet(r)[0]
    }

    pub fn d1(&self, r: f64) -> f64 {
        self.jet(r)[1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TripleKind {
    /// `f = r^{N-1}`, `g = ω - γ r^{-α}`, `h = 1`.
    Special { dim: usize, gamma: f64, alpha: f64, omega: f64 },
    User,
}

#[derive(Debug, Clone)]
pub struct FghTriple {
    pub f: RadialFn,
    pub g: RadialFn,
    pub h: RadialFn,
    pub kind: TripleKind,
}

/// The special-case triple with analytic derivatives. `γ = 0` is accepted
/// here for oracle use.
pub fn special_fgh(params: &Params) -> FghTriple {
    let Params { dim, gamma, alpha, omega, .. } = *params;
    let f = if dim == 1 { RadialFn::constant(1.0) } else { RadialFn::power(1.0, dim as f64 - 1.0) };
    let g = RadialFn::new(3, move |r| {
        let s = if gamma == 0.0 { [0.0; 4] } else { RadialFn::power(-gamma, -alpha).jet(r) };
        [omega + s[0], s[1], s[2], s[3]]
    });
    FghTriple { f, g, h: RadialFn::constant(1.0), kind: TripleKind::Special { dim, gamma, alpha, omega } }
}

impl FghTriple {
    pub fn user(f: RadialFn, g: RadialFn, h: RadialFn) -> Self {
        FghTriple { f, g, h, kind: TripleKind::User }
    }

    pub fn is_special(&self) -> bool {
        matches!(self.kind, TripleKind::Special { .. })
    }

    /// Checks `f > 0` and `h > 0` on the given sample points.
    pub fn positive_on(&self, samples: &[f64]) -> bool {
        samples.iter().all(|&r| self.f.value(r) > 0.0 && self.h.value(r) > 0.0)
    }

    /// `φ''` from the general ODE.
    pub fn phi_second(&self, r: f64, phi: f64, dphi: f64, p: f64) -> f64 {
        let f = self.f.jet(r);
        -f[1] / f[0] * dphi + self.g.value(r) * phi - self.h.value(r) * phi.abs().powf(p - 1.0) * phi
    }
}
