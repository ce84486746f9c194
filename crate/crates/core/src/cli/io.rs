//! Profile CSV: `# key=value` metadata lines, a `r,phi,dphi` header, then one
//! row per sample. Numbers use the shortest round-trip representation, so a
//! save/load cycle is bit-exact.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::params::Params;
use crate::profile::{ProfileError, RadialProfile, Sampled, Tail};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("profile invariant violated: {0}")]
    InvariantViolation(#[from] ProfileError),
}

const REQUIRED: [&str; 8] = ["N", "gamma", "alpha", "omega", "p", "phi0", "tail_rate", "tail_amp"];

pub fn profile_csv(profile: &RadialProfile) -> String {
    let prm = profile.params();
    let tail = profile.tail_model();
    let mut s = String::new();
    let meta: [(&str, String); 8] = [
        ("N", prm.dim.to_string()),
        ("gamma", prm.gamma.to_string()),
        ("alpha", prm.alpha.to_string()),
        ("omega", prm.omega.to_string()),
        ("p", prm.p.to_string()),
        ("phi0", profile.phi0().to_string()),
        ("tail_rate", tail.rate.to_string()),
        ("tail_amp", tail.amplitude.to_string()),
    ];
    for (k, v) in meta {
        let _ = writeln!(s, "# {k}={v}");
    }
    if let Some(w0) = prm.omega0 {
        let _ = writeln!(s, "# omega0={w0}");
    }
    s.push_str("r,phi,dphi\n");
    for i in 0..profile.grid().len() {
        let _ = writeln!(s, "{:e},{:e},{:e}", profile.grid()[i], profile.values()[i], profile.derivs()[i]);
    }
    s
}

pub fn parse_profile(text: &str) -> Result<RadialProfile, LoadError> {
    let mut meta: Vec<(String, String)> = vec![];
    let mut lines = text.lines().peekable();
    while let Some(l) = lines.peek() {
        let Some(rest) = l.strip_prefix('#') else { break };
        let (k, v) = rest
            .trim()
            .split_once('=')
            .ok_or_else(|| LoadError::SchemaMismatch(format!("metadata line without '=': {l}")))?;
        meta.push((k.trim().to_string(), v.trim().to_string()));
        lines.next();
    }
    let get = |key: &str| -> Result<&str, LoadError> {
        meta.iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| LoadError::SchemaMismatch(format!("missing header `{key}`")))
    };
    let num = |key: &str| -> Result<f64, LoadError> {
        let v = get(key)?;
        v.parse().map_err(|_| LoadError::SchemaMismatch(format!("header `{key}` is not a number: {v}")))
    };
    for k in REQUIRED {
        get(k)?;
    }
    let dim: usize = get("N")?.parse().map_err(|_| LoadError::SchemaMismatch("header `N` is not an integer".into()))?;
    let mut params = Params::oracle(dim, num("gamma")?, num("alpha")?, num("omega")?, num("p")?);
    if meta.iter().any(|(k, _)| k == "omega0") {
        params = params.with_omega0(num("omega0")?);
    }
    let tail = Tail { rate: num("tail_rate")?, amplitude: num("tail_amp")? };
    match lines.next().map(|h| h.split(',').map(str::trim).collect::<Vec<_>>()) {
        Some(cols) if cols == ["r", "phi", "dphi"] => {}
        other => return Err(LoadError::SchemaMismatch(format!("expected column header r,phi,dphi, got {other:?}"))),
    }
    let (mut r, mut phi, mut dphi) = (vec![], vec![], vec![]);
    for (n, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        let parsed: Vec<f64> = cols.iter().filter_map(|c| c.trim().parse().ok()).collect();
        if cols.len() != 3 || parsed.len() != 3 {
            return Err(LoadError::SchemaMismatch(format!("row {} is not three numbers: {line}", n + 1)));
        }
        r.push(parsed[0]);
        phi.push(parsed[1]);
        dphi.push(parsed[2]);
    }
    Ok(RadialProfile::new(params, num("phi0")?, r, phi, dphi, tail)?)
}

pub fn load_profile(path: &Path) -> Result<RadialProfile, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_profile(&text)
}
