//! Spectra of the linearized operators `L1`, `L2` sector by sector, and the
//! nondegeneracy verdict. With `γ = 0` translations put `φ'` in the kernel
//! of `L1` in sector 1, which the check must detect.

use gslab::params::Params;
use gslab::shooting::{solve_ground_state, ShootConfig};
use gslab::spectrum::{linearized_report, nondegeneracy_check};

fn run(params: Params) {
    let prof = solve_ground_state(&params, &ShootConfig::default()).unwrap();
    let rep = linearized_report(&prof, params.dim + 2, 3, None).unwrap();
    println!("N={} gamma={} omega={} p={}  (eps0 = {:.1e})", params.dim, params.gamma, params.omega, params.p, rep.l1.eps0);
    for s in &rep.l1.sectors {
        let ev: Vec<String> = s.eigenvalues.iter().map(|e| format!("{:+.6}", e.value)).collect();
        println!("  L1 j={} (degree {}, mu {}): {}", s.j, s.degree, s.mu, ev.join(" "));
    }
    let s0 = &rep.l2.sectors[0];
    println!("  L2 j=0 lowest {:+.2e}, correlation with phi {:.6}", s0.eigenvalues[0].value, s0.overlap_with_profile);
    let nd = nondegeneracy_check(&rep).unwrap();
    println!("  nondegenerate: {}  {:?}", nd.pass, nd.failures);
}

fn main() {
    run(Params::oracle(3, 1.0, 1.0, 1.0, 3.0));
    run(Params::oracle(2, 1.0, 1.0, 2.0, 3.0));
    run(Params::oracle(3, 0.0, 1.0, 1.0, 3.0));
}
