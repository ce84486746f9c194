//! The comparison function `η = ψ/φ` between the ground state and a
//! neighboring shot, and the auxiliary `X`, as used in the uniqueness
//! argument.

use gslab::fgh::special_fgh;
use gslab::params::Params;
use gslab::pohozaev::{coeffs, eta_and_x};
use gslab::profile::Sampled;
use gslab::shooting::{bisect_phi0, auto_bracket, shoot, ShootConfig};

fn main() {
    let params = Params::oracle(3, 1.0, 1.0, 1.0, 3.0);
    let cfg = ShootConfig { bisect_tol: 1e-6, ..ShootConfig::default() };
    let b = bisect_phi0(&params, auto_bracket(&params).unwrap(), &cfg).unwrap();
    let grid = cfg.grid_for(&params).build();
    let lo = shoot(&params, b.lo, &cfg, Some(&grid)).unwrap().profile;
    let hi = shoot(&params, b.hi, &cfg, Some(&grid)).unwrap().profile;
    let n = lo.grid.len().min(hi.grid.len());
    let c = coeffs(&special_fgh(&params), params.p).unwrap();
    let ex = eta_and_x(&c, &lo, &hi, &lo.grid()[..n]).unwrap();

    println!("phi0 bracket [{:.8}, {:.8}], {} common samples", b.lo, b.hi, n);
    println!("max eta'                    {:.3e}", ex.eta_prime.iter().copied().fold(f64::NEG_INFINITY, f64::max));
    println!("eta' direct vs integral     {:.3e} on [r1, 5]", ex.eta_prime_agreement(ex.r[0], 5.0));
    println!("X residual                  {:.3e}", ex.x_residual);
}
