//! Symmetric tridiagonal eigenproblems: Sturm-sequence bisection for the
//! eigenvalues and inverse iteration for the vectors.

/// Number of eigenvalues strictly below `x` (`d` diagonal, `e` off-diagonal).
pub fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut count = 0;
    let mut q = d[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..d.len() {
        if q.abs() < tiny {
            q = -tiny;
        }
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin(d: &[f64], e: &[f64]) -> (f64, f64) {
    let n = d.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { e[i - 1].abs() } else { 0.0 } + if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    (lo, hi)
}

/// Index-`k` eigenvalue (0-based, ascending) by bisection to machine precision.
pub fn kth_eigenvalue(d: &[f64], e: &[f64], k: usize) -> f64 {
    let (mut lo, mut hi) = gershgorin(d, e);
    let pad = 1e-12 * (hi - lo).max(1.0);
    lo -= pad;
    hi += pad;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(d, e, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves `(T - shift) x = b` by Gaussian elimination with partial pivoting
/// (the LU of a tridiagonal matrix has one extra super-diagonal).
fn shifted_solve(d: &[f64], e: &[f64], shift: f64, b: &mut [f64], floor: f64) {
    let n = d.len();
    let mut diag: Vec<f64> = d.iter().map(|v| v - shift).collect();
    let mut sup: Vec<f64> = e.to_vec();
    sup.push(0.0);
    let mut sup2 = vec![0.0; n];
    let mut sub: Vec<f64> = e.to_vec();
    for i in 0..n.saturating_sub(1) {
        if sub[i].abs() > diag[i].abs() {
            // swap rows i and i+1
            let fact = diag[i] / sub[i];
            diag[i] = sub[i];
            let t = diag[i + 1];
            diag[i + 1] = sup[i] - fact * t;
            sup2[i] = sup[i + 1];
            sup[i + 1] = -fact * sup[i + 1];
            sup[i] = t;
            b.swap(i, i + 1);
            sub[i] = fact;
            b[i + 1] -= fact * b[i];
        } else {
            if diag[i] == 0.0 {
                diag[i] = floor;
            }
            let fact = sub[i] / diag[i];
            sub[i] = fact;
            diag[i + 1] -= fact * sup[i];
            b[i + 1] -= fact * b[i];
        }
    }
    for v in diag.iter_mut() {
        if v.abs() < floor {
            *v = if *v < 0.0 { -floor } else { floor };
        }
    }
    b[n - 1] /= diag[n - 1];
    if n > 1 {
        b[n - 2] = (b[n - 2] - sup[n - 2] * b[n - 1]) / diag[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        b[i] = (b[i] - sup[i] * b[i + 1] - sup2[i] * b[i + 2]) / diag[i];
    }
}

fn normalize(v: &mut [f64]) {
    let s = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= s);
}

/// `T v`
pub fn apply(d: &[f64], e: &[f64], v: &[f64]) -> Vec<f64> {
    let n = d.len();
    (0..n)
        .map(|i| {
            let mut s = d[i] * v[i];
            if i > 0 {
                s += e[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                s += e[i] * v[i + 1];
            }
            s
        })
        .collect()
}

/// Unit eigenvector for the eigenvalue `lambda` by inverse iteration.
/// The sign is fixed so the largest-magnitude entry is positive.
pub fn inverse_iteration(d: &[f64], e: &[f64], lambda: f64) -> Vec<f64> {
    let n = d.len();
    let (lo, hi) = gershgorin(d, e);
    let norm = lo.abs().max(hi.abs());
    let floor = f64::EPSILON * norm;
    // deterministic, non-degenerate start
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i as f64) * 0.618).sin()).collect();
    normalize(&mut v);
    for _ in 0..4 {
        shifted_solve(d, e, lambda, &mut v, floor);
        normalize(&mut v);
    }
    let imax = (0..n).max_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs())).unwrap();
    if v[imax] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dirichlet Laplacian `tridiag(-1, 2, -1)`: λ_k = 2 - 2cos(kπ/(n+1)).
    #[test]
    fn discrete_laplacian_spectrum() {
        let n = 50;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        for k in 0..5 {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            let lam = kth_eigenvalue(&d, &e, k);
            assert!((lam - exact).abs() < 1e-13, "{k}: {lam} vs {exact}");
            let v = inverse_iteration(&d, &e, lam);
            let tv = apply(&d, &e, &v);
            let res: f64 = tv.iter().zip(&v).map(|(a, b)| (a - lam * b).powi(2)).sum::<f64>().sqrt();
            assert!(res < 1e-10, "{res}");
        }
    }

    #[test]
    fn sturm_count_brackets() {
        let d = [1.0, 5.0, 9.0];
        let e = [0.0, 0.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 6.0), 2);
        assert_eq!(sturm_count(&d, &e, 10.0), 3);
    }

    #[test]
    fn pivoting_solver_matches_dense() {
        let d = [0.1, -3.0, 2.0, 0.5];
        let e = [4.0, 0.2, -1.5];
        let mut b = [1.0, 2.0, -1.0, 0.3];
        let orig = b;
        shifted_solve(&d, &e, 0.7, &mut b, 1e-300);
        let dd: Vec<f64> = d.iter().map(|x| x - 0.7).collect();
        let back = apply(&dd, &e, &b);
        for i in 0..4 {
            assert!((back[i] - orig[i]).abs() < 1e-12);
        }
    }
}
