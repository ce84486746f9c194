//! Certification of the hypotheses (I)–(V) behind the uniqueness theorem.
//!
//! For the special triple the limits and integrability questions reduce to
//! exponent arithmetic, and the sign of `G` to the roots of
//! `s(r) = A + Br^{2-α} + Cr²`; the sampled sequences are kept as witnesses
//! and cross-checked against the exact exponents. User triples go through
//! sampling and exponent fitting only.

use rayon::prelude::*;
use serde::Serialize;

use crate::fgh::{special_fgh, FghTriple, TripleKind};
use crate::numerics::{fit_exponent, integrate};
use crate::params::Params;
use crate::pohozaev::{coeffs, ClosedForm, PohozaevCoeffs};
use crate::spectrum::{self, SpectrumError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    fn all(vs: &[Verdict]) -> Verdict {
        if vs.iter().all(|v| *v == Verdict::Holds) {
            Verdict::Holds
        } else if vs.contains(&Verdict::Fails) {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        }
    }

    fn any(vs: &[Verdict]) -> Verdict {
        if vs.contains(&Verdict::Holds) {
            Verdict::Holds
        } else if vs.iter().all(|v| *v == Verdict::Fails) {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    A,
    B,
}

/// Near-origin behavior wanted of a sampled quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LimitKind {
    /// `→ 0`
    Vanishes,
    /// `liminf ≥ 0` (limit in `[0, ∞]`)
    LiminfNonnegative,
    /// `limsup ≤ 0`
    LimsupNonpositive,
}

/// A quantity sampled at `r = 2^{-k}`, `k = 4..=40`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitSample {
    pub name: &'static str,
    pub kind: LimitKind,
    pub r: Vec<f64>,
    pub values: Vec<f64>,
    /// Leading exponent fitted on the deeper half of the samples.
    pub exponent: f64,
    /// Exact leading exponent (special case); `None` when identically zero
    /// or for user triples.
    pub expected: Option<f64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum SignStructure {
    /// `G ≥ 0` on `(0, κ)`, `G ≤ 0` on `(κ, ∞)`; `κ = 0` when `G < 0`
    /// throughout and `∞` when `G > 0` throughout.
    SingleSignChange { kappa: f64 },
    /// Several sign changes, none at a point with `D > 0`.
    NoPositiveZeroWithDPositive { zeros: Vec<(f64, f64)> },
    Other { zeros: Vec<(f64, f64)> },
    /// Root polishing failed.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub label: &'static str,
    pub verdict: Verdict,
    pub detail: String,
}

fn cond(label: &'static str, verdict: Verdict, detail: impl Into<String>) -> Condition {
    Condition { label, verdict, detail: detail.into() }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub params: Params,
    /// Sub-conditions: I, II(a), II(b), II(c), III, IV(a), IV(b), V(G⁻), V(a), V(b).
    pub parts: Vec<Condition>,
    /// Aggregated verdicts for (I)–(V).
    pub summary: [Verdict; 5],
    pub verdict: Verdict,
    pub route_iv: Option<Branch>,
    pub route_v: Option<Branch>,
    pub sign_structure: SignStructure,
    /// `(r₀, D(r₀))` at every located zero of `G`.
    pub g_zeros: Vec<(f64, f64)>,
    pub limits: Vec<LimitSample>,
    /// `1/f ∈ L¹` near 0 (`N = 1`): the variant of the theorem without
    /// (II)(c) is the one certified.
    pub without_ii_c: bool,
    pub notes: Vec<String>,
}

impl ConditionReport {
    pub fn part(&self, label: &str) -> Option<&Condition> {
        self.parts.iter().find(|c| c.label == label)
    }
}

/// Safeguarded Newton on a sign-change bracket `[lo, hi]`.
pub fn polish_root(f: &dyn Fn(f64) -> f64, df: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Option<f64> {
    let mut flo = f(lo);
    if flo == 0.0 {
        return Some(lo);
    }
    if flo * f(hi) > 0.0 {
        return None;
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = f(x);
        if fx == 0.0 {
            return Some(x);
        }
        if (fx < 0.0) == (flo < 0.0) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            return Some(0.5 * (lo + hi));
        }
        let step = x - fx / df(x);
        x = if step > lo && step < hi && step.is_finite() { step } else { 0.5 * (lo + hi) };
    }
    None
}

/// Log-spaced sign scan of `f` on `[lo, hi]` followed by root polishing.
fn scan_roots(f: &dyn Fn(f64) -> f64, df: &dyn Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> Option<Vec<f64>> {
    let ratio = (hi / lo).powf(1.0 / n as f64);
    let mut roots = vec![];
    let mut a = lo;
    let mut fa = f(a);
    for _ in 0..n {
        let b = a * ratio;
        let fb = f(b);
        if fa == 0.0 {
            roots.push(a);
        } else if fa * fb < 0.0 {
            roots.push(polish_root(f, df, a, b)?);
        }
        a = b;
        fa = fb;
    }
    Some(roots)
}

/// Sign structure of `G` and the value of `D` at each of its zeros.
pub fn g_sign_structure(coeffs: &PohozaevCoeffs, params: &Params) -> SignStructure {
    let (roots, lo, hi) = match coeffs.closed_form() {
        Some(cf) => {
            let (lo, hi) = special_root_bounds(cf);
            let s = |r: f64| cf.g_polynomial(r);
            let ds = |r: f64| cf.b_const * (2.0 - cf.alpha) * r.powf(1.0 - cf.alpha) + 2.0 * cf.c_const * r;
            (scan_roots(&s, &ds, lo, hi, 4000), lo, hi)
        }
        None => {
            let l = params.length_scale();
            let (lo, hi) = (1e-6 * l, 1e3 * l);
            let g = |r: f64| coeffs.big_g(r);
            let dg = |r: f64| {
                let e = 1e-6 * r;
                (coeffs.big_g(r + e) - coeffs.big_g(r - e)) / (2.0 * e)
            };
            (scan_roots(&g, &dg, lo, hi, 8000), lo, hi)
        }
    };
    let Some(roots) = roots else { return SignStructure::Unresolved };
    let zeros: Vec<(f64, f64)> = roots.iter().map(|&r| (r, coeffs.d(r))).collect();
    let sign_at = |r: f64| coeffs.big_g(r).signum();
    match roots.len() {
        0 if sign_at(hi) < 0.0 => SignStructure::SingleSignChange { kappa: 0.0 },
        0 => SignStructure::SingleSignChange { kappa: f64::INFINITY },
        1 if sign_at(lo) > 0.0 => SignStructure::SingleSignChange { kappa: roots[0] },
        _ if zeros.iter().all(|z| z.1 <= 0.0) => SignStructure::NoPositiveZeroWithDPositive { zeros },
        _ => SignStructure::Other { zeros },
    }
}

/// Interval outside which `s(r) = A + Br^{2-α} + Cr²` has the sign of its
/// dominant term; padded by a decade on each side.
fn special_root_bounds(cf: &ClosedForm) -> (f64, f64) {
    let (a, b, c, al) = (cf.a_const.abs(), cf.b_const.abs(), cf.c_const.abs(), cf.alpha);
    let mut lo: f64 = 1.0;
    let mut hi: f64 = 1.0;
    if a > 0.0 {
        if b > 0.0 {
            lo = lo.min((a / (2.0 * b)).powf(1.0 / (2.0 - al)));
        }
        if c > 0.0 {
            lo = lo.min((a / (2.0 * c)).sqrt());
        }
    } else if b > 0.0 && c > 0.0 {
        // s = r^{2-α}(B + Cr^α)
        lo = lo.min((b / (2.0 * c)).powf(1.0 / al));
    }
    if c > 0.0 {
        hi = hi.max((2.0 * a / c).sqrt());
        if b > 0.0 {
            hi = hi.max((2.0 * b / c).powf(1.0 / al));
        }
    } else if b > 0.0 {
        hi = hi.max((2.0 * a / b).powf(1.0 / (2.0 - al)));
    }
    (0.1 * lo, 10.0 * hi)
}

const K_RANGE: std::ops::RangeInclusive<i32> = 4..=40;

fn sample_points(k: std::ops::RangeInclusive<i32>) -> Vec<f64> {
    k.map(|k| 2f64.powi(-k)).collect()
}

/// Exponent fitted on the deeper half of a sampled sequence.
pub fn tail_exponent(r: &[f64], v: &[f64]) -> f64 {
    let h = r.len() / 2;
    fit_exponent(&r[h..], &v[h..])
}

fn limit_verdict(kind: LimitKind, values: &[f64], exponent: f64, expected: Option<f64>, special: bool) -> Verdict {
    let deep = &values[values.len() / 2..];
    if deep.iter().all(|v| *v == 0.0) {
        return Verdict::Holds;
    }
    if deep.iter().any(|v| !v.is_finite()) {
        return Verdict::Inconclusive;
    }
    let e = match (special, expected) {
        (true, Some(e)) => {
            if (exponent - e).abs() > 0.05 {
                return Verdict::Inconclusive;
            }
            e
        }
        _ => exponent,
    };
    let margin = if special { 0.0 } else { 0.1 };
    let pos = deep.iter().all(|v| *v > 0.0);
    let neg = deep.iter().all(|v| *v < 0.0);
    match kind {
        LimitKind::Vanishes if e > margin => Verdict::Holds,
        LimitKind::Vanishes if e < -margin => Verdict::Fails,
        LimitKind::LiminfNonnegative | LimitKind::LimsupNonpositive if e > margin => Verdict::Holds,
        LimitKind::LiminfNonnegative if pos => Verdict::Holds,
        LimitKind::LiminfNonnegative if neg && e < -margin => Verdict::Fails,
        LimitKind::LimsupNonpositive if neg => Verdict::Holds,
        LimitKind::LimsupNonpositive if pos && e < -margin => Verdict::Fails,
        _ => Verdict::Inconclusive,
    }
}

fn sample_limit(
    name: &'static str,
    kind: LimitKind,
    k: std::ops::RangeInclusive<i32>,
    f: &dyn Fn(f64) -> f64,
    expected: Option<f64>,
    special: bool,
) -> LimitSample {
    let r = sample_points(k);
    let values: Vec<f64> = r.iter().map(|&x| f(x)).collect();
    let exponent = tail_exponent(&r, &values);
    let verdict = limit_verdict(kind, &values, exponent, expected, special);
    LimitSample { name, kind, r, values, exponent, expected, verdict }
}

/// Exact leading exponents of `aUV`, `bV`, `bU`, `c - ag`, `D/a` near 0 for
/// the special case (`None`: identically zero).
fn special_exponents(cf: &ClosedForm) -> [Option<f64>; 5] {
    let (q, al) = (cf.q, cf.alpha);
    if cf.dim == 1 {
        return [Some(q + 2.0 - al), None, None, Some(-al), Some(-al)];
    }
    let dd = if cf.dim == 2 { (q - 2.0).min(q - al) } else { q - 2.0 };
    [Some(q + 2.0 - al), Some(q), Some(q - al), Some((q - 2.0).min(q - al)), Some(dd)]
}

/// Sampled verdicts for (III), (IV)(a) and (IV)(b) on `r = 2^{-k}`.
pub fn limit_conditions(coeffs: &PohozaevCoeffs) -> Vec<LimitSample> {
    limit_conditions_on(coeffs, K_RANGE)
}

pub fn limit_conditions_on(coeffs: &PohozaevCoeffs, k: std::ops::RangeInclusive<i32>) -> Vec<LimitSample> {
    let cf = coeffs.closed_form();
    let special = cf.is_some();
    let ex = cf.map(special_exponents).unwrap_or([None; 5]);
    let g = &coeffs.triple.g;
    let c_minus_ag = |r: f64| {
        let c = coeffs.at(r);
        c.c - c.a * g.value(r)
    };
    vec![
        sample_limit("aUV", LimitKind::Vanishes, k.clone(), &|r| coeffs.a(r) * coeffs.u(r) * coeffs.v(r), ex[0], special),
        sample_limit("bV", LimitKind::Vanishes, k.clone(), &|r| coeffs.b(r) * coeffs.v(r), ex[1], special),
        sample_limit("bU", LimitKind::Vanishes, k.clone(), &|r| coeffs.b(r) * coeffs.u(r), ex[2], special),
        sample_limit("c-ag", LimitKind::LiminfNonnegative, k.clone(), &c_minus_ag, ex[3], special),
        sample_limit("D/a", LimitKind::LimsupNonpositive, k, &|r| coeffs.d(r) / coeffs.a(r), ex[4], special),
    ]
}

/// (II)(a)–(c) by exponent arithmetic for the special case.
fn special_integrability(dim: usize, alpha: f64) -> [Condition; 3] {
    let n = dim as f64;
    let e_a = n - 1.0 - alpha;
    // ∫_τ^R f^{-1} ~ τ^{2-N} (N ≥ 3), log τ (N = 2), bounded (N = 1)
    let e_b = e_a + if dim >= 3 { 2.0 - n } else { 0.0 };
    let v = |ok: bool| if ok { Verdict::Holds } else { Verdict::Fails };
    [
        cond("II(a)", v(e_a > -1.0), format!("f(|g|+h) ~ r^{e_a}")),
        cond("II(b)", v(e_b > -1.0), format!("integrand ~ r^{e_b}{}", if dim == 2 { "·log r" } else { "" })),
        cond("II(c)", v(dim >= 2), format!("1/f ~ r^{}", 1.0 - n)),
    ]
}

/// (II)(a)–(c) for user triples by fitting exponents near 0 (`R = 1`);
/// within 0.1 of the critical exponent the verdict is Inconclusive.
fn generic_integrability(t: &FghTriple) -> [Condition; 3] {
    let r = sample_points(K_RANGE);
    let w = |x: f64| t.f.value(x) * (t.g.value(x).abs() + t.h.value(x));
    let ea = tail_exponent(&r, &r.iter().map(|&x| w(x)).collect::<Vec<_>>());
    let inv_f = |x: f64| 1.0 / t.f.value(x);
    let eb = tail_exponent(&r, &r.iter().map(|&x| w(x) * integrate(&inv_f, x, 1.0, 1e-10)).collect::<Vec<_>>());
    let ef = tail_exponent(&r, &r.iter().map(|&x| t.f.value(x)).collect::<Vec<_>>());
    let above = |e: f64, crit: f64| {
        if e > crit + 0.1 {
            Verdict::Holds
        } else if e < crit - 0.1 {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        }
    };
    [
        cond("II(a)", above(ea, -1.0), format!("fitted exponent {ea:.4}")),
        cond("II(b)", above(eb, -1.0), format!("fitted exponent {eb:.4}")),
        // 1/f ∉ L¹ iff e_f ≥ 1; e_f = 1 itself (f ~ r) is the log case
        cond("II(c)", if (ef - 1.0).abs() < 1e-9 { Verdict::Holds } else { above(ef, 1.0) }, format!("f ~ r^{ef:.4}")),
    ]
}

/// Runs every check on the special triple of `params`.
pub fn check_all(params: &Params) -> ConditionReport {
    let t = special_fgh(params);
    check_triple(&t, params)
}

/// Runs every check on an arbitrary triple; `params` supplies `p` and the
/// length scale for sampling.
pub fn check_triple(t: &FghTriple, params: &Params) -> ConditionReport {
    let mut notes = vec![];
    let c = match coeffs(t, params.p) {
        Ok(c) => c,
        Err(e) => {
            let part = cond("I", Verdict::Fails, e.to_string());
            return ConditionReport {
                params: *params,
                parts: vec![part],
                summary: [Verdict::Fails, Verdict::Inconclusive, Verdict::Inconclusive, Verdict::Inconclusive, Verdict::Inconclusive],
                verdict: Verdict::Fails,
                route_iv: None,
                route_v: None,
                sign_structure: SignStructure::Unresolved,
                g_zeros: vec![],
                limits: vec![],
                without_ii_c: false,
                notes,
            };
        }
    };
    let special = t.is_special();
    let l = params.length_scale();
    let probe: Vec<f64> = (0..=90).map(|i| l * 10f64.powf(-8.0 + 0.1 * i as f64)).collect();

    // (I)
    let smooth = t.f.order() >= 3 && t.h.order() >= 3 && t.g.order() >= 1;
    let positive = t.positive_on(&probe);
    let v1 = if smooth && positive { Verdict::Holds } else { Verdict::Fails };
    let p1 = cond("I", v1, format!("f, h > 0 on samples: {positive}; derivative orders f {} g {} h {}", t.f.order(), t.g.order(), t.h.order()));

    // (II)
    let [p2a, p2b, p2c] = match t.kind {
        TripleKind::Special { dim, alpha, .. } => special_integrability(dim, alpha),
        TripleKind::User => generic_integrability(t),
    };
    let without_ii_c = p2c.verdict == Verdict::Fails && p2a.verdict == Verdict::Holds && p2b.verdict == Verdict::Holds;
    let v2 = if without_ii_c {
        notes.push("II(c) fails (1/f integrable at 0); certified for the variant requiring f φ' → 0 at the origin".into());
        Verdict::Holds
    } else {
        Verdict::all(&[p2a.verdict, p2b.verdict, p2c.verdict])
    };

    // (III), (IV)
    let limits = limit_conditions(&c);
    let lv = |name: &str| limits.iter().find(|s| s.name == name).unwrap().verdict;
    let v3 = Verdict::all(&[lv("aUV"), lv("bV")]);
    let p3 = cond("III", v3, "a U V → 0 and b V → 0");
    let v4a = Verdict::all(&[lv("bU"), lv("c-ag")]);
    let v4b = lv("D/a");
    let p4a = cond("IV(a)", v4a, "b U → 0 and liminf (c - a g) ≥ 0");
    let p4b = cond("IV(b)", v4b, "limsup D/a ≤ 0");
    let prefer_b = params.dim == 2;
    let route_iv = pick_route(v4a, v4b, prefer_b);
    let v4 = Verdict::any(&[v4a, v4b]);

    // (V)
    let structure = g_sign_structure(&c, params);
    let g_neg = probe.iter().any(|&r| c.big_g(r) < 0.0);
    let pg = cond("V(G-)", if g_neg { Verdict::Holds } else { Verdict::Fails }, "G takes negative values");
    let (v5a, v5b, zeros) = match &structure {
        SignStructure::SingleSignChange { kappa } => {
            let zeros: Vec<(f64, f64)> = if kappa.is_finite() && *kappa > 0.0 { vec![(*kappa, c.d(*kappa))] } else { vec![] };
            let vb = if zeros.iter().all(|z| z.1 <= 0.0) { Verdict::Holds } else { Verdict::Fails };
            (Verdict::Holds, vb, zeros)
        }
        SignStructure::NoPositiveZeroWithDPositive { zeros } => (Verdict::Fails, Verdict::Holds, zeros.clone()),
        SignStructure::Other { zeros } => (Verdict::Fails, Verdict::Fails, zeros.clone()),
        SignStructure::Unresolved => (Verdict::Inconclusive, Verdict::Inconclusive, vec![]),
    };
    let kappa_txt = match &structure {
        SignStructure::SingleSignChange { kappa } => format!("kappa = {kappa}"),
        _ => "no single sign change".into(),
    };
    let p5a = cond("V(a)", v5a, kappa_txt);
    let p5b = cond("V(b)", v5b, format!("{} zero(s) of G, max D there {:?}", zeros.len(), zeros.iter().map(|z| z.1).reduce(f64::max)));
    let route_v = pick_route(v5a, v5b, prefer_b);
    let v5 = Verdict::all(&[pg.verdict, Verdict::any(&[v5a, v5b])]);
    if !special {
        notes.push("user triple: limits and integrability from fitted exponents".into());
    }

    let summary = [v1, v2, v3, v4, v5];
    let verdict = Verdict::all(&summary);
    ConditionReport {
        params: *params,
        parts: vec![p1, p2a, p2b, p2c, p3, p4a, p4b, pg, p5a, p5b],
        summary,
        verdict,
        route_iv: if verdict == Verdict::Holds { route_iv } else { None },
        route_v: if verdict == Verdict::Holds { route_v } else { None },
        sign_structure: structure,
        g_zeros: zeros,
        limits,
        without_ii_c,
        notes,
    }
}

fn pick_route(a: Verdict, b: Verdict, prefer_b: bool) -> Option<Branch> {
    match (a == Verdict::Holds, b == Verdict::Holds) {
        (true, true) => Some(if prefer_b { Branch::B } else { Branch::A }),
        (true, false) => Some(Branch::A),
        (false, true) => Some(Branch::B),
        _ => None,
    }
}

/// The certification grid: `N ∈ {1,2,3}`, `p ∈ {2,3,4}`,
/// `α ∈ {0.25,0.5,1,1.5} ∩ (0, min(N,2))`, `γ ∈ {0.5,1,2}`, `ω ∈ {2ω₀, 4ω₀}`.
pub fn standard_grid() -> Vec<(usize, f64, f64, f64)> {
    let mut out = vec![];
    for dim in 1..=3usize {
        for p in [2.0, 3.0, 4.0] {
            for alpha in [0.25, 0.5, 1.0, 1.5] {
                if alpha >= (dim as f64).min(2.0) {
                    continue;
                }
                for gamma in [0.5, 1.0, 2.0] {
                    out.push((dim, p, alpha, gamma));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEntry {
    pub report: ConditionReport,
    pub omega0: f64,
}

/// `check_all` over the certification grid; `ω₀` is computed once per
/// `(N, α, γ)`.
pub fn certification_sweep() -> Result<Vec<SweepEntry>, SpectrumError> {
    let mut keys: Vec<(usize, u64, u64)> = standard_grid().iter().map(|g| (g.0, g.2.to_bits(), g.3.to_bits())).collect();
    keys.sort();
    keys.dedup();
    let w0: Vec<((usize, u64, u64), f64)> = keys
        .par_iter()
        .map(|&k| {
            let prm = Params::oracle(k.0, f64::from_bits(k.2), f64::from_bits(k.1), 1.0, 2.0);
            spectrum::omega0(&prm, None).map(|w| (k, w.value))
        })
        .collect::<Result<_, _>>()?;
    let lookup = |k: (usize, u64, u64)| w0.iter().find(|e| e.0 == k).unwrap().1;
    Ok(standard_grid()
        .par_iter()
        .flat_map_iter(|&(dim, p, alpha, gamma)| {
            let omega0 = lookup((dim, alpha.to_bits(), gamma.to_bits()));
            [2.0, 4.0].into_iter().map(move |m| {
                let prm = Params::oracle(dim, gamma, alpha, m * omega0, p).with_omega0(omega0);
                SweepEntry { report: check_all(&prm), omega0 }
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgh::RadialFn;

    fn holds_everywhere(r: &ConditionReport) {
        assert_eq!(r.verdict, Verdict::Holds, "{:#?}", r.parts);
        assert!(r.route_iv.is_some() && r.route_v.is_some());
    }

    #[test]
    fn one_dimensional_case() {
        let r = check_all(&Params::oracle(1, 1.0, 0.5, 2.0, 3.0));
        holds_everywhere(&r);
        assert_eq!(r.sign_structure, SignStructure::SingleSignChange { kappa: 0.0 });
        assert!(r.without_ii_c);
        assert_eq!(r.part("II(c)").unwrap().verdict, Verdict::Fails);
        let bv = r.limits.iter().find(|s| s.name == "bV").unwrap();
        assert!(bv.values.iter().all(|v| *v == 0.0));
        assert_eq!(r.route_v, Some(Branch::A));
    }

    #[test]
    fn three_dimensional_kappa_is_quadratic_root() {
        let prm = Params::oracle(3, 1.0, 1.0, 1.0, 3.0);
        let r = check_all(&prm);
        holds_everywhere(&r);
        let cf = ClosedForm::new(3, 1.0, 1.0, 1.0, 3.0);
        // A + B r + C r² = 0, positive root
        let (a, b, c) = (cf.a_const, cf.b_const, cf.c_const);
        let exact = (-b - (b * b - 4.0 * a * c).sqrt()) / (2.0 * c);
        match r.sign_structure {
            SignStructure::SingleSignChange { kappa } => assert!((kappa - exact).abs() < 1e-12 * exact, "{kappa} {exact}"),
            ref s => panic!("{s:?}"),
        }
        assert_eq!(r.route_iv, Some(Branch::A));
    }

    #[test]
    fn two_dimensional_route_b() {
        for (alpha, gamma, p) in [(1.0, 1.0, 3.0), (0.25, 2.0, 2.0), (1.5, 0.5, 4.0)] {
            let r = check_all(&Params::oracle(2, gamma, alpha, 3.0, p));
            holds_everywhere(&r);
            assert_eq!(r.route_iv, Some(Branch::B));
            assert!(r.g_zeros.iter().all(|z| z.1 < 0.0));
        }
        // small ω: G changes sign twice, and D < 0 at both zeros
        let r = check_all(&Params::oracle(2, 2.0, 0.25, 1e-4, 4.0));
        assert_eq!(r.g_zeros.len(), 2, "{:?}", r.sign_structure);
        assert!(matches!(r.sign_structure, SignStructure::NoPositiveZeroWithDPositive { .. }));
        assert!(r.g_zeros.iter().all(|z| z.1 < 0.0));
        assert_eq!(r.route_v, Some(Branch::B));
    }

    #[test]
    fn fitted_exponents_match_exact_ones() {
        let prm = Params::oracle(3, 0.5, 0.5, 1.0, 2.0);
        let c = coeffs(&special_fgh(&prm), prm.p).unwrap();
        let cf = *c.closed_form().unwrap();
        for s in limit_conditions(&c) {
            let e = s.expected.unwrap();
            assert!((s.exponent - e).abs() < 0.05, "{} {} {}", s.name, s.exponent, e);
        }
        assert!((special_exponents(&cf)[0].unwrap() - (cf.q + 1.5)).abs() < 1e-15);
        // stable under a deeper sample range
        let deep = limit_conditions_on(&c, 4..=76);
        for (a, b) in limit_conditions(&c).iter().zip(&deep) {
            assert!((a.exponent - b.exponent).abs() < 0.05);
        }
    }

    #[test]
    fn polishing_finds_roots() {
        let f = |x: f64| x * x - 2.0;
        let df = |x: f64| 2.0 * x;
        let r = polish_root(&f, &df, 0.0, 5.0).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
        assert!(polish_root(&f, &df, 2.0, 5.0).is_none());
    }

    #[test]
    fn user_triple_matches_special_verdict() {
        let prm = Params::oracle(3, 1.0, 1.0, 1.0, 3.0);
        let s = special_fgh(&prm);
        let u = FghTriple::user(s.f.clone(), s.g.clone(), RadialFn::constant(1.0));
        let r = check_triple(&u, &prm);
        assert_eq!(r.verdict, Verdict::Holds, "{:#?}", r.parts);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn positive_g_fails_v() {
        // γ < 0 is a repulsive potential; G stays positive for N = 1
        let r = check_all(&Params::oracle(1, -1.0, 0.5, 1.0, 3.0));
        assert_eq!(r.summary[4], Verdict::Fails);
    }
}
