//! The threshold `ω₀`: minus the ground energy of `-Δ - γ|x|^{-α}`.
//! Coulomb cases have closed forms (`γ²/4` in 3D, `γ²` in 2D).

use gslab::params::Params;
use gslab::spectrum::omega0;

fn main() {
    let cases = [
        (3, 1.0, 1.0, Some(0.25)),
        (3, 2.0, 1.0, Some(1.0)),
        (2, 1.0, 1.0, Some(1.0)),
        (1, 1.0, 0.5, None),
        (3, 0.5, 1.5, None),
        (2, 1.0, 1.5, None),
    ];
    for (n, gamma, alpha, exact) in cases {
        let w = omega0(&Params::oracle(n, gamma, alpha, 1.0, 3.0), None).expect("omega0");
        let cmp = exact.map(|e| format!("  exact {e}  err {:.1e}", (w.value - e).abs())).unwrap_or_default();
        println!("N={n} gamma={gamma} alpha={alpha}: omega0 = {:.8} ± {:.1e} (R = {:.1}){cmp}", w.value, w.uncertainty, w.r_max);
    }
}
