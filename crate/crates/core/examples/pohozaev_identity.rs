//! The Pohožaev function `J(r; φ)` along a ground state: `J' = Gφ²` holds
//! to roundoff, `J ≥ 0`, `J → 0` at infinity, and a 1% rescaled profile
//! (not a solution) breaks the identity by orders of magnitude.

use gslab::fgh::special_fgh;
use gslab::pohozaev::{coeffs, j_value, verify_identity};
use gslab::params::Params;
use gslab::profile::Sampled;
use gslab::shooting::{solve_ground_state, ShootConfig};

fn main() {
    let params = Params::oracle(3, 1.0, 1.0, 1.0, 3.0);
    let prof = solve_ground_state(&params, &ShootConfig::default()).unwrap();
    let c = coeffs(&special_fgh(&params), params.p).unwrap();

    let id = verify_identity(&c, &prof).unwrap();
    let bad = verify_identity(&c, &prof.scaled(1.01)).unwrap();
    println!("identity residual      {:.3e} (worst at r = {:.3})", id.max_residual, id.at_r);
    println!("perturbed profile      {:.3e}  ({:.0}x)", bad.max_residual, bad.max_residual / id.max_residual);

    let js: Vec<f64> = prof.grid().iter().map(|&r| j_value(&c, &prof, r).unwrap()).collect();
    let max = js.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    println!("min J / max |J|        {:.3e}", js.iter().copied().fold(f64::INFINITY, f64::min) / max);
    println!("J(r_last) / max |J|    {:.3e}", js.last().unwrap() / max);
    for r in [0.01, 0.1, 1.0, 5.0] {
        let v = c.at(r);
        println!("r = {r:5}: a = {:.4e} b = {:.4e} c = {:.4e} G = {:.4e} D = {:.4e}", v.a, v.b, v.c, v.big_g, v.d);
    }
}
