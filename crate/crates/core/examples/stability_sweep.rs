//! Action, Nehari and virial functionals along a branch of ground states,
//! the mass slope `∂_ω‖φ_ω‖²`, and the audit that `∂²_λ S ≤ 0` never
//! coexists with a positive slope.

use gslab::params::Params;
use gslab::stability::{sweep, SweepConfig};

fn main() {
    for p in [2.0, 3.0, 4.0] {
        let res = sweep(&Params::oracle(3, 0.5, 1.0, 1.0, p), &[0.5, 1.0, 2.0, 4.0], &SweepConfig::default());
        println!("N=3 gamma=0.5 alpha=1 p={p}  (omega0 = {:.6})", res.omega0.unwrap());
        for row in &res.rows {
            let r = &row.record;
            println!(
                "  omega {:4}: mass {:9.5} action {:9.5} virial2 {:+10.4} slope {:+10.5} ± {:.1e}  {:?}",
                r.omega, r.mass, r.action, r.virial2, r.slope.unwrap(), r.slope_uncertainty.unwrap(), row.verdict
            );
        }
        println!("  audit flags: {}  failures: {}", res.audit.len(), res.failures.len());
    }
}
