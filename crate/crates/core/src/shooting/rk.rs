//! Dormand–Prince 5(4) step with PI step-size control for a 2-state system.

pub type State = [f64; 2];

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn axpy(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for (c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

/// One trial step. Returns the fifth-order solution, the embedded error
/// estimate and the derivative at the new point (FSAL).
pub fn dopri_step(f: &dyn Fn(f64, &State) -> State, t: f64, y: &State, k1: &State, h: f64) -> (State, State, State) {
    let k2 = f(t + C2 * h, &axpy(y, h, &[(A21, k1)]));
    let k3 = f(t + C3 * h, &axpy(y, h, &[(A31, k1), (A32, &k2)]));
    let k4 = f(t + C4 * h, &axpy(y, h, &[(A41, k1), (A42, &k2), (A43, &k3)]));
    let k5 = f(t + C5 * h, &axpy(y, h, &[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
    let k6 = f(t + h, &axpy(y, h, &[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
    let y_new = axpy(y, h, &[(B1, k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
    let k7 = f(t + h, &y_new);
    let mut err = [0.0; 2];
    for i in 0..2 {
        err[i] = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
    }
    (y_new, err, k7)
}

/// Scaled RMS error norm.
pub fn error_norm(err: &State, y0: &State, y1: &State, rtol: f64, atol: &State) -> f64 {
    let mut s = 0.0;
    for i in 0..2 {
        let sc = atol[i] + rtol * y0[i].abs().max(y1[i].abs());
        s += (err[i] / sc).powi(2);
    }
    (s / 2.0).sqrt()
}

/// PI controller (Hairer's constants for order 5).
#[derive(Debug, Clone, Copy)]
pub struct PiController {
    prev_err: f64,
}

impl Default for PiController {
    fn default() -> Self {
        PiController { prev_err: 1e-4 }
    }
}

impl PiController {
    const ALPHA: f64 = 0.7 / 5.0;
    const BETA: f64 = 0.4 / 5.0;

    /// Factor for the next step given the current error norm.
    pub fn factor(&mut self, err: f64, accepted: bool) -> f64 {
        let err = err.max(1e-10);
        if accepted {
            let fac = 0.9 * err.powf(-Self::ALPHA) * self.prev_err.powf(Self::BETA);
            self.prev_err = err;
            fac.clamp(0.2, 5.0)
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.1, 0.9)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_harmonic_oscillator() {
        let f = |_t: f64, y: &State| [y[1], -y[0]];
        let mut t = 0.0;
        let mut y = [1.0, 0.0];
        let mut k = f(t, &y);
        let mut h: f64 = 0.01;
        let mut pi = PiController::default();
        while t < 10.0 {
            h = h.min(10.0 - t);
            let (yn, err, kn) = dopri_step(&f, t, &y, &k, h);
            let e = error_norm(&err, &y, &yn, 1e-12, &[1e-14, 1e-14]);
            if e <= 1.0 {
                t += h;
                y = yn;
                k = kn;
                h *= pi.factor(e, true);
            } else {
                h *= pi.factor(e, false);
            }
        }
        assert!((y[0] - 10f64.cos()).abs() < 1e-10);
        assert!((y[1] + 10f64.sin()).abs() < 1e-10);
    }
}
