//! Certify hypotheses (I)–(V) of the uniqueness theorem for one parameter
//! set, then over the whole standard grid.

use gslab::assumptions::{certification_sweep, check_all, Verdict};
use gslab::params::Params;

fn main() {
    let rep = check_all(&Params::oracle(3, 1.0, 1.0, 1.0, 3.0));
    for c in &rep.parts {
        println!("{:6} {:?}  {}", c.label, c.verdict, c.detail);
    }
    for l in &rep.limits {
        println!("  {:5} fitted exponent {:+.4} (exact {:?}) -> {:?}", l.name, l.exponent, l.expected, l.verdict);
    }
    println!("routes: IV {:?}, V {:?}; G sign structure {:?}", rep.route_iv, rep.route_v, rep.sign_structure);

    let all = certification_sweep().unwrap();
    let holds = all.iter().filter(|e| e.report.verdict == Verdict::Holds).count();
    println!("standard grid: {holds}/{} parameter sets certified", all.len());
}
