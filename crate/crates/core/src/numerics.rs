//! Small numerical kernels: quadrature, finite-difference weights,
//! Hermite interpolation and log-log exponent fits.

/// Composite Simpson rule on an arbitrary strictly increasing grid.
/// Interval pairs use the three-point nonuniform formula; an odd trailing
/// interval uses the matching single-interval correction.
pub fn simpson(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    if n < 2 {
        return 0.0;
    }
    if n == 2 {
        return 0.5 * (x[1] - x[0]) * (y[0] + y[1]);
    }
    let mut sum = 0.0;
    let mut i = 0;
    while i + 2 < n {
        let h0 = x[i + 1] - x[i];
        let h1 = x[i + 2] - x[i + 1];
        let hs = h0 + h1;
        sum += hs / 6.0
            * ((2.0 - h1 / h0) * y[i] + hs * hs / (h0 * h1) * y[i + 1] + (2.0 - h0 / h1) * y[i + 2]);
        i += 2;
    }
    if i + 1 < n {
        // last interval [x_{n-2}, x_{n-1}] from the quadratic through the last three points
        let h0 = x[n - 2] - x[n - 3];
        let h1 = x[n - 1] - x[n - 2];
        let alpha = (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1));
        let beta = (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0);
        let eta = h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
        sum += alpha * y[n - 1] + beta * y[n - 2] - eta * y[n - 3];
    }
    sum
}

/// Fornberg's algorithm: weights `w[k][j]` such that
/// `u^{(k)}(z) ≈ Σ_j w[k][j] u(x_j)` for `k ≤ m`.
pub fn fd_weights(z: f64, x: &[f64], m: usize) -> Vec<Vec<f64>> {
    let n = x.len();
    let mut c = vec![vec![0.0; n]; m + 1];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

/// First derivative of sampled data at every node from a five-point
/// stencil (one-sided near the ends); fourth order on smooth data.
pub fn derivative_5pt(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    assert!(n >= 5);
    (0..n)
        .map(|i| {
            let lo = i.saturating_sub(2).min(n - 5);
            let w = fd_weights(x[i], &x[lo..lo + 5], 1);
            (0..5).map(|j| w[1][j] * y[lo + j]).sum()
        })
        .collect()
}

/// Cubic Hermite interpolant on `[x0, x1]` from values and slopes.
pub fn hermite(x0: f64, x1: f64, y0: f64, y1: f64, d0: f64, d1: f64, x: f64) -> f64 {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * h * d0 + (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * h * d1
}

/// Index `i` with `x[i] <= r < x[i+1]` (clamped to the last interval).
pub fn locate(x: &[f64], r: f64) -> usize {
    match x.binary_search_by(|v| v.partial_cmp(&r).unwrap()) {
        Ok(i) => i.min(x.len() - 2),
        Err(i) => i.saturating_sub(1).min(x.len() - 2),
    }
}

const GK_X: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const GK_WK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const GK_WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * GK_WK[7];
    let mut g = fc * GK_WG[3];
    for i in 0..7 {
        let dx = h * GK_X[i];
        let s = f(c - dx) + f(c + dx);
        k += GK_WK[i] * s;
        if i % 2 == 1 {
            g += GK_WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Adaptive Gauss–Kronrod (7/15) quadrature on `[a, b]`.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let mut stack = vec![(a, b, 0usize)];
    let (total, _) = gk15(f, a, b);
    let mut sum = 0.0;
    while let Some((lo, hi, depth)) = stack.pop() {
        let (v, err) = gk15(f, lo, hi);
        if depth >= 40 || err <= rel_tol * total.abs().max(1e-300) * (hi - lo) / (b - a) || err < 1e-300 {
            sum += v;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    sum
}

/// Least-squares slope of `log|y|` against `log r`.
pub fn fit_exponent(r: &[f64], y: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = r
        .iter()
        .zip(y)
        .filter(|(_, v)| v.abs() > 0.0 && v.is_finite())
        .map(|(r, v)| (r.ln(), v.abs().ln()))
        .collect();
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return f64::NAN;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}
