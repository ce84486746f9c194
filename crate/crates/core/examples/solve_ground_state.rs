//! Solve for the positive radial ground state of
//! `-Δφ - γ|x|^{-α}φ + ωφ = φ^p` and print a few samples.
//!
//! ```bash
//! cargo run --release --example solve_ground_state -- 3 1 1 2 3
//! ```

use gslab::params::make_params;
use gslab::profile::Sampled;
use gslab::shooting::{solve_ground_state, ShootConfig};
use gslab::spectrum::with_threshold;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let [n, gamma, alpha, omega, p] = match args[..] {
        [a, b, c, d, e] => [a, b, c, d, e],
        _ => [3.0, 1.0, 1.0, 2.0, 3.0],
    };
    let params = make_params(n as i64, gamma, alpha, omega, p)?;
    // ω must exceed ω₀ = -inf spec(-Δ - γ|x|^{-α})
    let (params, w0) = with_threshold(&params)?;
    println!("omega0 = {:.10} (± {:.1e})", w0.value, w0.uncertainty);

    let prof = solve_ground_state(&params, &ShootConfig::default())?;
    let tail = prof.tail_model();
    println!("phi(0) = {:.12}", prof.phi0());
    println!("tail   = {:.6} e^(-{:.6} r) beyond r = {:.3}", tail.amplitude, tail.rate, prof.r_last());
    for r in [0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 12.0] {
        let (phi, dphi) = prof.eval(r)?;
        println!("r = {r:5.1}  phi = {phi:.6e}  phi' = {dphi:.6e}");
    }
    Ok(())
}
