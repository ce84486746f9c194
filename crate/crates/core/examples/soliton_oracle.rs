//! Without the potential (`γ = 0`) the one-dimensional cubic ground state is
//! `√2 sech(x)`; the shooting solver should reproduce it.

use gslab::params::Params;
use gslab::profile::{soliton_1d_eval, Sampled};
use gslab::shooting::{solve_ground_state, ShootConfig};

fn main() {
    let params = Params::oracle(1, 0.0, 0.5, 1.0, 3.0);
    let prof = solve_ground_state(&params, &ShootConfig::default()).expect("soliton");
    println!("phi(0) = {:.15}  (sqrt 2 = {:.15})", prof.phi0(), 2f64.sqrt());

    let mut worst: f64 = 0.0;
    for i in 0..=1000 {
        let r = (i as f64 * 0.01).max(prof.grid()[0]);
        let exact = soliton_1d_eval(1.0, 3.0, r).0;
        worst = worst.max((prof.eval(r).unwrap().0 - exact).abs());
    }
    println!("sup |phi - sqrt2 sech| on [0, 10] = {worst:.3e}");
}
