//! Classify shots over a range of `φ(0)`: below the ground state the
//! solution turns back up (Rebound), above it crosses zero (Crossing).
//! A single transition is what uniqueness predicts.

use gslab::params::Params;
use gslab::profile::Sampled;
use gslab::shooting::{count_transitions, scan_phi0, solve_ground_state, ShootConfig};

fn main() {
    let cfg = ShootConfig::default();
    for params in [Params::oracle(3, 1.0, 1.0, 1.0, 3.0), Params::oracle(3, 0.5, 1.5, 2.0, 2.0), Params::oracle(1, 1.0, 0.5, 3.3, 3.0)] {
        let phi0 = solve_ground_state(&params, &cfg).unwrap().phi0();
        let scan = scan_phi0(&params, 0.05 * phi0, 3.0 * phi0, 40, &cfg).unwrap();
        let line: String = scan.iter().map(|s| format!("{:?}", s.1).chars().next().unwrap()).collect();
        println!("N={} phi0={:.6}: {line}  transitions = {}", params.dim, phi0, count_transitions(&scan));
    }
}
