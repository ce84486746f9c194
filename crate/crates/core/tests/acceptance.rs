//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Two of the listed parameter sets, (N,α,γ,ω,p) = (1,0.5,1,1,3) and
//! (2,1,1,1,3), have ω ≤ ω₀, where no ground state exists. They are run as
//! given; criteria that depend on them print FAIL with the precondition as
//! reason, followed by `info` lines repeating the checks at ω = 2ω₀. The
//! process exits non-zero only on failures with any other cause.

use std::process::Command;

use gslab::assumptions::{self, Verdict};
use gslab::fgh::special_fgh;
use gslab::params::Params;
use gslab::pohozaev::{coeffs, generic_coeffs, j_value, verify_identity, Mode};
use gslab::profile::{soliton_1d_eval, RadialProfile, Sampled};
use gslab::shooting::{count_transitions, find_ground_state, scan_phi0, solve_ground_state, ShootConfig};
use gslab::spectrum::{self, linearized_report, nondegeneracy_check};
use gslab::stability::{functionals, mass_slope, sweep, SweepConfig};

type Set = (usize, f64, f64, f64, f64);

/// Parameter sets named by the pohozaev and uniqueness criteria.
const TEST_SETS: [Set; 4] = [(1, 0.5, 1.0, 1.0, 3.0), (2, 1.0, 1.0, 1.0, 3.0), (3, 1.0, 1.0, 1.0, 3.0), (3, 1.5, 0.5, 2.0, 2.0)];
const SPECTRAL_SETS: [Set; 2] = [(2, 1.0, 1.0, 1.0, 3.0), (3, 1.0, 1.0, 1.0, 3.0)];

fn params(s: Set) -> Params {
    let (n, alpha, gamma, omega, p) = s;
    Params::oracle(n, gamma, alpha, omega, p)
}

/// Outcome for one parameter set within a criterion.
#[derive(Debug)]
enum Check {
    Pass(String),
    Fail(String),
    /// ω ≤ ω₀: no ground state exists.
    Precondition(String),
}

struct Report {
    unexpected: usize,
}

impl Report {
    fn line(&mut self, id: u32, title: &str, checks: Vec<(String, Check)>) {
        let fails: Vec<&(String, Check)> = checks.iter().filter(|c| !matches!(c.1, Check::Pass(_))).collect();
        let status = if fails.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {id:2} {status}  {title}");
        for (label, c) in &checks {
            let (tag, msg) = match c {
                Check::Pass(m) => ("ok  ", m),
                Check::Fail(m) => ("FAIL", m),
                Check::Precondition(m) => ("FAIL", m),
            };
            println!("    {tag} {label}: {msg}");
        }
        if fails.iter().any(|c| matches!(c.1, Check::Fail(_))) {
            self.unexpected += 1;
        }
    }
}

fn label(s: Set) -> String {
    format!("(N={}, a={}, g={}, w={}, p={})", s.0, s.1, s.2, s.3, s.4)
}

/// Ground state, or the reason none exists.
fn ground_state(s: Set) -> Result<RadialProfile, Check> {
    let prm = params(s);
    let prm = if prm.gamma > 0.0 {
        let w0 = spectrum::omega0(&prm, None).map_err(|e| Check::Fail(format!("omega0: {e}")))?;
        if prm.omega <= w0.value {
            return Err(Check::Precondition(format!("omega = {} <= omega0 = {:.8}: no ground state exists", prm.omega, w0.value)));
        }
        prm.with_omega0(w0.value)
    } else {
        prm
    };
    solve_ground_state(&prm, &ShootConfig::default()).map_err(|e| Check::Fail(e.to_string()))
}

/// The same set moved to ω = 2ω₀ (informational substitute).
fn shifted(s: Set) -> Set {
    let w0 = spectrum::omega0(&params(s), None).unwrap().value;
    (s.0, s.1, s.2, 2.0 * w0, s.4)
}

fn inadmissible(s: Set) -> bool {
    let prm = params(s);
    prm.gamma > 0.0 && spectrum::omega0(&prm, None).map(|w| prm.omega <= w.value).unwrap_or(false)
}

fn info(text: String) {
    println!("    info {text}");
}

fn c1() -> Vec<(String, Check)> {
    let prm = Params::oracle(1, 0.0, 0.5, 1.0, 3.0);
    let prof = find_ground_state(&prm, (1.0, 2.0), 1e-15).unwrap();
    let e0 = (prof.phi0() - 2f64.sqrt()).abs();
    let mut sup: f64 = 0.0;
    for i in 0..=2000 {
        let r = (i as f64 * 0.005).max(prof.grid()[0]);
        sup = sup.max((prof.eval(r).unwrap().0 - soliton_1d_eval(1.0, 3.0, r).0).abs());
    }
    let ok = |b: bool, m: String| if b { Check::Pass(m) } else { Check::Fail(m) };
    vec![
        ("phi(0)".into(), ok(e0 <= 1e-8, format!("|phi(0) - sqrt2| = {e0:.2e} (tol 1e-8)"))),
        ("sup-norm on [0,10]".into(), ok(sup <= 1e-6, format!("{sup:.2e} (tol 1e-6)"))),
    ]
}

fn c2() -> Vec<(String, Check)> {
    [(1.0, 0.25, 1e-3), (2.0, 1.0, 5e-3)]
        .iter()
        .map(|&(gamma, exact, tol)| {
            let w = spectrum::omega0(&Params::oracle(3, gamma, 1.0, 1.0, 3.0), None).unwrap();
            let err = (w.value - exact).abs();
            let m = format!("omega0 = {:.10} ± {:.1e}, |err| = {err:.1e} (tol {tol})", w.value, w.uncertainty);
            (format!("gamma = {gamma}"), if err <= tol { Check::Pass(m) } else { Check::Fail(m) })
        })
        .collect()
}

fn pohozaev_check(s: Set) -> Check {
    let prof = match ground_state(s) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let prm = *prof.params();
    let c = coeffs(&special_fgh(&prm), prm.p).unwrap();
    let id = verify_identity(&c, &prof).unwrap();
    let bad = verify_identity(&c, &prof.scaled(1.01)).unwrap();
    let ratio = bad.max_residual / id.max_residual;
    let m = format!("residual {:.2e} (tol 1e-5), perturbed control {:.1e}x (need >= 10)", id.max_residual, ratio);
    if id.max_residual <= 1e-5 && ratio >= 10.0 {
        Check::Pass(m)
    } else {
        Check::Fail(m)
    }
}

fn j_check(s: Set) -> Check {
    let prof = match ground_state(s) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let prm = *prof.params();
    let c = coeffs(&special_fgh(&prm), prm.p).unwrap();
    let js: Vec<f64> = prof.grid().iter().map(|&r| j_value(&c, &prof, r).unwrap()).collect();
    let max = js.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let min = js.iter().copied().fold(f64::INFINITY, f64::min);
    let last = js.last().unwrap().abs();
    let m = format!("min J = {:.2e}·max|J|, |J(r_max)| = {:.2e}·max|J| (tol 1e-6)", min / max, last / max);
    if min >= -1e-6 * max && last <= 1e-6 * max {
        Check::Pass(m)
    } else {
        Check::Fail(m)
    }
}

fn per_set(sets: &[Set], f: fn(Set) -> Check) -> Vec<(String, Check)> {
    sets.iter().map(|&s| (label(s), f(s))).collect()
}

fn shifted_info(sets: &[Set], f: fn(Set) -> Check) {
    for &s in sets.iter().filter(|s| inadmissible(**s)) {
        let t = shifted(s);
        let verdict = match f(t) {
            Check::Pass(m) => format!("passes: {m}"),
            Check::Fail(m) | Check::Precondition(m) => format!("fails: {m}"),
        };
        info(format!("{} at omega = 2 omega0 = {:.6} {verdict}", label(s), t.3));
    }
}

fn c5() -> Vec<(String, Check)> {
    let mut sets: Vec<Set> = TEST_SETS.to_vec();
    sets.extend([(2, 1.5, 2.0, 3.0, 4.0), (3, 0.25, 1.0, 1.0, 4.0), (1, 0.25, 0.5, 2.0, 2.0)]);
    let mut out = vec![];
    for s in sets {
        let t = special_fgh(&params(s));
        let cf = coeffs(&t, s.4).unwrap();
        let gen = generic_coeffs(&t, s.4).unwrap();
        assert!(matches!(cf.mode, Mode::ClosedForm(_)) && matches!(gen.mode, Mode::Generic));
        let mut worst: f64 = 0.0;
        for k in 0..=400 {
            let r = 1e-3 * 10f64.powf(4.0 * k as f64 / 400.0);
            let (x, y) = (cf.at(r), gen.at(r));
            for (u, v) in [(x.a, y.a), (x.b, y.b), (x.c, y.c), (x.big_g, y.big_g), (x.d, y.d)] {
                let scale = u.abs().max(v.abs());
                if scale > 0.0 {
                    worst = worst.max((u - v).abs() / scale);
                }
            }
        }
        let mut m = format!("max relative difference {worst:.2e} (tol 1e-10)");
        let mut ok = worst <= 1e-10;
        if s.0 == 1 {
            let exact = (0..=400).all(|k| {
                let v = cf.at(1e-3 * 10f64.powf(4.0 * k as f64 / 400.0));
                v.a == 1.0 && v.b == 0.0 && v.c == 0.0
            });
            m.push_str(&format!("; a = 1, b = c = 0 exactly: {exact}"));
            ok &= exact;
        }
        out.push((label(s), if ok { Check::Pass(m) } else { Check::Fail(m) }));
    }
    out
}

fn c6() -> Vec<(String, Check)> {
    let all = assumptions::certification_sweep().unwrap();
    let bad: Vec<String> = all.iter().filter(|e| e.report.verdict != Verdict::Holds).map(|e| format!("{:?}", e.report.params)).collect();
    let n2: Vec<&(f64, f64)> = all.iter().filter(|e| e.report.params.dim == 2).flat_map(|e| e.report.g_zeros.iter()).collect();
    let n2_bad = n2.iter().filter(|z| !(z.1 < 0.0)).count();
    // small-ω probe where N = 2 zeros of G do occur
    let probe = assumptions::check_all(&Params::oracle(2, 2.0, 0.25, 1e-4, 4.0));
    let probe_ok = !probe.g_zeros.is_empty() && probe.g_zeros.iter().all(|z| z.1 < 0.0);
    let m1 = format!("{}/{} grid points Holds on (I)-(V){}", all.len() - bad.len(), all.len(), if bad.is_empty() { String::new() } else { format!("; failing: {}", bad.join(", ")) });
    let m2 = format!("{} G-zeros located on the N=2 grid, {} with D >= 0; probe at omega = 1e-4: {} zeros, all D < 0: {probe_ok}", n2.len(), n2_bad, probe.g_zeros.len());
    vec![
        ("certification grid".into(), if bad.is_empty() { Check::Pass(m1) } else { Check::Fail(m1) }),
        ("N=2 zeros of G".into(), if n2_bad == 0 && probe_ok { Check::Pass(m2) } else { Check::Fail(m2) }),
    ]
}

fn spectral_check(s: Set) -> Check {
    let prof = match ground_state(s) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let n = s.0;
    let rep = linearized_report(&prof, n + 2, 3, None).unwrap();
    let eps = rep.l1.eps0;
    let s0 = &rep.l1.sectors[0];
    let below = s0.eigenvalues.iter().filter(|e| e.value < -eps).count();
    let near = rep.l1.sectors.iter().flat_map(|s| s.eigenvalues.iter()).filter(|e| e.value.abs() < eps).count();
    let min_nonradial = rep.l1.sectors[1..].iter().map(|s| s.eigenvalues[0].value).fold(f64::INFINITY, f64::min);
    let l2 = &rep.l2.sectors[0];
    let l2_ok = l2.eigenvalues[0].value.abs() < rep.l2.eps0 && l2.overlap_with_profile >= 0.999;
    let nd = nondegeneracy_check(&rep).unwrap();
    let m = format!(
        "L1 j=0: {below} below -eps0 (eps0 {eps:.1e}), {near} within eps0 anywhere; min over j=1..{} = {min_nonradial:.5}; L2 j=0 lowest {:.2e}, corr {:.6}; verdict {}",
        n + 2,
        l2.eigenvalues[0].value,
        l2.overlap_with_profile,
        if nd.pass { "nondegenerate" } else { "degenerate" }
    );
    if below == 1 && near == 0 && min_nonradial > 0.0 && l2_ok && nd.pass {
        Check::Pass(m)
    } else {
        Check::Fail(m)
    }
}

fn c7() -> Vec<(String, Check)> {
    let mut out = per_set(&SPECTRAL_SETS, spectral_check);
    // harness sensitivity: translations give a sector-1 zero mode when γ = 0
    let prm = Params::oracle(3, 0.0, 1.0, 1.0, 3.0);
    let prof = solve_ground_state(&prm, &ShootConfig::default()).unwrap();
    let rep = linearized_report(&prof, 5, 3, None).unwrap();
    let s1 = &rep.l1.sectors[1];
    let detected = s1.eigenvalues[0].value.abs() < rep.l1.eps0 && s1.overlap_with_derivative > 0.999;
    let verdict = nondegeneracy_check(&rep).unwrap();
    let m = format!(
        "sector-1 eigenvalue {:.2e} (eps0 {:.1e}), overlap with phi' {:.6}; check reports degenerate: {}",
        s1.eigenvalues[0].value, rep.l1.eps0, s1.overlap_with_derivative, !verdict.pass
    );
    out.push(("gamma = 0 control".into(), if detected && !verdict.pass { Check::Pass(m) } else { Check::Fail(m) }));
    out
}

fn c8() -> Vec<(String, Check)> {
    let mut sets: Vec<Set> = TEST_SETS.iter().copied().filter(|s| !inadmissible(*s)).collect();
    sets.extend(TEST_SETS.iter().copied().filter(|s| inadmissible(*s)).map(shifted));
    sets.extend([(1, 0.5, 0.0, 1.0, 3.0), (3, 1.0, 0.0, 1.0, 3.0), (2, 1.0, 1.0, 2.0, 3.0), (3, 1.0, 0.5, 2.0, 4.0)]);
    let mut out = vec![];
    for s in sets {
        let prof = ground_state(s).unwrap_or_else(|_| panic!("{s:?} should converge"));
        let prm = *prof.params();
        let r = functionals(&prof).unwrap();
        let (k, v) = (r.nehari_relative(&prm), r.virial1_relative(&prm));
        let m = format!("|K| {k:.1e}, |virial1| {v:.1e} relative (tol 1e-5)");
        out.push((label(s), if k <= 1e-5 && v <= 1e-5 { Check::Pass(m) } else { Check::Fail(m) }));
    }
    for n in 1..=3usize {
        let p = 1.0 + 4.0 / n as f64;
        let s = (n, 0.5, 0.0, 1.0, p);
        let prof = ground_state(s).unwrap();
        let prm = *prof.params();
        let r = functionals(&prof).unwrap();
        let rel = r.virial2.abs() / r.scale(&prm);
        let m = format!("virial2 = {:.2e} ({rel:.1e} relative, tol 1e-5)", r.virial2);
        out.push((format!("mass-critical N={n}, p={p:.4}"), if rel <= 1e-5 { Check::Pass(m) } else { Check::Fail(m) }));
    }
    out
}

fn c9() -> Vec<(String, Check)> {
    let cfg = ShootConfig::default();
    let mut out = vec![];
    for (n, expo) in [(1usize, 0.5), (3usize, -0.5)] {
        for w in [0.5, 1.0, 2.0, 4.0] {
            let prm = Params::oracle(n, 0.0, 0.5, w, 3.0);
            let s = mass_slope(&prm, w, 0.02 * w, &cfg).unwrap();
            let mass = functionals(&solve_ground_state(&prm, &cfg).unwrap()).unwrap().mass;
            let expected = expo * mass / w;
            let rel = (s.slope - expected).abs() / expected.abs();
            let sign_ok = if expo > 0.0 { s.slope > 0.0 } else { s.slope < 0.0 };
            let m = format!("slope {:+.8} ± {:.1e}, law {expected:+.8}, rel err {rel:.1e} (tol 1e-2)", s.slope, s.uncertainty);
            out.push((format!("N={n} p=3 omega={w}"), if sign_ok && rel <= 1e-2 { Check::Pass(m) } else { Check::Fail(m) }));
        }
        let base = functionals(&solve_ground_state(&Params::oracle(n, 0.0, 0.5, 1.0, 3.0), &cfg).unwrap()).unwrap().mass;
        let mut worst: f64 = 0.0;
        for k in 0..=14 {
            let w = 0.5 + 0.25 * k as f64;
            let m = functionals(&solve_ground_state(&Params::oracle(n, 0.0, 0.5, w, 3.0), &cfg).unwrap()).unwrap().mass;
            worst = worst.max((m / base / w.powf(expo) - 1.0).abs());
        }
        let m = format!("mass(w)/mass(1) vs w^{expo} on [0.5, 4]: max rel err {worst:.1e} (tol 1e-4)");
        out.push((format!("N={n} scaling law"), if worst <= 1e-4 { Check::Pass(m) } else { Check::Fail(m) }));
    }
    out
}

fn c10() -> Vec<(String, Check)> {
    let mut rows = 0;
    let mut flags = vec![];
    let mut failures = vec![];
    for p in [2.0, 3.0, 4.0] {
        let res = sweep(&Params::oracle(3, 0.5, 1.0, 1.0, p), &[0.5, 1.0, 2.0, 4.0], &SweepConfig::default());
        rows += res.rows.len();
        flags.extend(res.audit.iter().map(|a| format!("p={p} omega={}", a.omega)));
        failures.extend(res.failures.iter().map(|f| format!("p={p} omega={}: {}", f.0, f.1)));
    }
    let m = format!("{rows}/12 points computed, {} audit flags, {} failures {:?}", flags.len(), failures.len(), [flags, failures].concat());
    vec![("N=3 gamma=0.5 alpha=1".into(), if rows == 12 && m.contains(", 0 audit flags, 0 failures") { Check::Pass(m) } else { Check::Fail(m) })]
}

fn scan_check(s: Set) -> Check {
    let prm = params(s);
    if inadmissible(s) {
        // still run the scan literally: the transition count is the evidence
        let a = prm.amplitude_scale();
        let scan = scan_phi0(&prm, 0.1 * a, 10.0 * a, 40, &ShootConfig::default()).unwrap();
        return Check::Precondition(format!(
            "omega <= omega0; {} Rebound->Crossing transitions in a 40-point scan (no ground state exists)",
            count_transitions(&scan)
        ));
    }
    let a = prm.amplitude_scale();
    let scan = scan_phi0(&prm, 0.1 * a, 10.0 * a, 40, &ShootConfig::default()).unwrap();
    let t = count_transitions(&scan);
    let m = format!("{t} Rebound->Crossing transitions in 40 points over phi(0) in [{:.3}, {:.3}]", 0.1 * a, 10.0 * a);
    if t == 1 {
        Check::Pass(m)
    } else {
        Check::Fail(m)
    }
}

fn c12() -> Vec<(String, Check)> {
    let bin = env!("CARGO_BIN_EXE_gslab");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let runs: [(&str, Vec<&str>); 2] = [
        ("solve.json", vec!["solve", "--N", "3", "--gamma", "1", "--alpha", "1", "--omega", "1", "--p", "3"]),
        ("sweep.json", vec!["sweep", "--N", "3", "--gamma", "0.5", "--alpha", "1", "--omega", "1", "--p", "3", "--omegas", "0.5,1,2"]),
    ];
    let mut checks = vec![];
    for (file, args) in runs {
        let mut bytes = vec![];
        for _ in 0..2 {
            let st = Command::new(bin).args(&args).args(["--out", out, "--format", "json"]).output().unwrap();
            assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
            bytes.push(std::fs::read(dir.path().join(file)).unwrap());
        }
        let same = bytes[0] == bytes[1];
        let m = format!("{} bytes, identical: {same}", bytes[0].len());
        checks.push((format!("gslab {}", args[0]), if same { Check::Pass(m) } else { Check::Fail(m) }));
    }
    checks
}

fn main() {
    let mut rep = Report { unexpected: 0 };
    rep.line(1, "1D soliton oracle", c1());
    rep.line(2, "Coulomb omega0 oracle", c2());
    rep.line(3, "Pohozaev identity J' = G phi^2", per_set(&TEST_SETS, pohozaev_check));
    shifted_info(&TEST_SETS, pohozaev_check);
    rep.line(4, "J >= 0 and J -> 0", per_set(&TEST_SETS, j_check));
    shifted_info(&TEST_SETS, j_check);
    rep.line(5, "closed-form vs generic coefficients", c5());
    rep.line(6, "condition certification (I)-(V)", c6());
    rep.line(7, "spectral structure of L1, L2", c7());
    shifted_info(&SPECTRAL_SETS, spectral_check);
    rep.line(8, "Nehari and virial identities", c8());
    rep.line(9, "slope criterion and scaling laws", c9());
    rep.line(10, "virial2 <= 0 implies negative slope (audit)", c10());
    rep.line(11, "single Rebound->Crossing transition", per_set(&TEST_SETS, scan_check));
    shifted_info(&TEST_SETS, scan_check);
    rep.line(12, "byte-identical CLI reports", c12());
    if rep.unexpected > 0 {
        eprintln!("{} criteria failed for reasons other than the omega <= omega0 precondition", rep.unexpected);
        std::process::exit(1);
    }
}
