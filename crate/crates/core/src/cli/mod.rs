//! Command-line front end. Every run resolves flags over an optional JSON
//! config, validates everything up front, computes, and only then writes its
//! artifacts: `<command>.json` (schema `gslab/1`, embedding the resolved
//! config), CSV tables and optional SVG plots.
//!
//! Exit status: 0 success, 2 invalid input, 3 numerical failure.

pub mod io;
pub mod svg;

use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::assumptions;
use crate::fgh::special_fgh;
use crate::params::{make_params, Params};
use crate::pohozaev::{self, coeffs};
use crate::profile::{RadialProfile, Sampled};
use crate::shooting::{solve_ground_state, ShootConfig};
use crate::spectrum::{self, SpectralGrid};
use crate::stability::{self, SweepConfig};

pub const SCHEMA: &str = "gslab/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numeric(_) | CliError::Output(_) => 3,
        }
    }
}

fn numeric(e: impl std::fmt::Display) -> CliError {
    CliError::Numeric(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Solve,
    Pohozaev,
    Spectrum,
    Stability,
    Assumptions,
    Sweep,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Solve => "solve",
            Command::Pohozaev => "pohozaev",
            Command::Spectrum => "spectrum",
            Command::Stability => "stability",
            Command::Assumptions => "assumptions",
            Command::Sweep => "sweep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamInput {
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Numeric {
    pub shoot: ShootConfig,
    /// Spectral grid for the linearized operators; `None` picks one from `ω`.
    pub spectral: Option<SpectralGrid>,
    pub jmax: Option<usize>,
    /// Eigenvalues per sector.
    pub eigen_k: usize,
    /// Mass-slope step relative to `ω`.
    pub rel_step: f64,
    /// Frequencies for `sweep`; empty means `ω·{1, 1.5, 2, 3, 4}`.
    pub omegas: Vec<f64>,
}

impl Default for Numeric {
    fn default() -> Self {
        Numeric { shoot: ShootConfig::default(), spectral: None, jmax: None, eigen_k: 3, rel_step: 0.02, omegas: vec![] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSpec {
    pub dir: PathBuf,
    pub formats: Vec<Format>,
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec { dir: PathBuf::from("."), formats: vec![Format::Csv, Format::Json] }
    }
}

/// Fully resolved run description; embedded verbatim in every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    #[serde(default)]
    pub params: ParamInput,
    #[serde(default)]
    pub numeric: Numeric,
    #[serde(default)]
    pub output: OutputSpec,
    /// Profile CSV to analyze instead of solving.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "gslab", version, about = "Ground states of NLS with an attractive inverse-power potential")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long = "N")]
    pub dim: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<f64>,
    /// JSON config; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub format: Option<Vec<Format>>,
    #[arg(long)]
    pub with_profile: Option<PathBuf>,
    #[arg(long)]
    pub jmax: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub omegas: Option<Vec<f64>>,
    #[arg(long)]
    pub cells: Option<usize>,
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub rel_step: Option<f64>,
    #[arg(long)]
    pub rtol: Option<f64>,
}

impl Cli {
    /// Merges the flags over the config file (if any).
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Validation(format!("cannot read config {}: {e}", path.display())))?;
                serde_json::from_str::<RunConfig>(&text).map_err(|e| CliError::Validation(format!("config {}: {e}", path.display())))?
            }
            None => RunConfig { command: None, params: ParamInput::default(), numeric: Numeric::default(), output: OutputSpec::default(), profile: None },
        };
        if let Some(c) = cfg.command {
            if c != self.command {
                return Err(CliError::Validation(format!("config is for `{}`, command line asks for `{}`", c.name(), self.command.name())));
            }
        }
        cfg.command = Some(self.command);
        let p = &mut cfg.params;
        p.dim = self.dim.or(p.dim);
        p.gamma = self.gamma.or(p.gamma);
        p.alpha = self.alpha.or(p.alpha);
        p.omega = self.omega.or(p.omega);
        p.p = self.p.or(p.p);
        let n = &mut cfg.numeric;
        n.jmax = self.jmax.or(n.jmax);
        if let Some(o) = &self.omegas {
            n.omegas = o.clone();
        }
        if let Some(h) = self.rel_step {
            n.rel_step = h;
        }
        if let Some(t) = self.rtol {
            n.shoot.rtol = t;
        }
        if self.cells.is_some() || self.r_max.is_some() {
            let base = n.spectral.unwrap_or(SpectralGrid::new(1500, 0.0));
            n.spectral = Some(SpectralGrid { cells: self.cells.unwrap_or(base.cells), r_max: self.r_max.unwrap_or(base.r_max), levels: base.levels });
        }
        if let Some(d) = &self.out {
            cfg.output.dir = d.clone();
        }
        if let Some(f) = &self.format {
            cfg.output.formats = f.clone();
        }
        if let Some(pr) = &self.with_profile {
            cfg.profile = Some(pr.clone());
        }
        Ok(cfg)
    }
}

/// One file produced by a run.
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

pub struct RunOutput {
    pub artifacts: Vec<Artifact>,
    pub summary: String,
}

fn validate_numeric(n: &Numeric) -> Result<(), CliError> {
    let bad = |m: &str| Err(CliError::Validation(m.into()));
    if !(n.rel_step > 0.0 && n.rel_step < 0.25) {
        return bad("rel_step must lie in (0, 0.25)");
    }
    if !(n.shoot.rtol > 0.0 && n.shoot.rtol < 1e-3) {
        return bad("rtol must lie in (0, 1e-3)");
    }
    if n.eigen_k == 0 {
        return bad("eigen_k must be at least 1");
    }
    if let Some(g) = n.spectral {
        if g.cells < 16 || !(g.r_max > 0.0) || g.levels == 0 {
            return bad("spectral grid needs cells >= 16, r_max > 0, levels >= 1");
        }
    }
    if n.omegas.iter().any(|w| !w.is_finite()) {
        return bad("omegas must be finite");
    }
    Ok(())
}

fn params_from(input: &ParamInput) -> Result<Params, CliError> {
    let need = |v: Option<f64>, name: &str| v.ok_or_else(|| CliError::Validation(format!("missing parameter --{name}")));
    let dim = input.dim.ok_or_else(|| CliError::Validation("missing parameter --N".into()))?;
    make_params(dim, need(input.gamma, "gamma")?, need(input.alpha, "alpha")?, need(input.omega, "omega")?, need(input.p, "p")?)
        .map_err(|e| CliError::Validation(e.to_string()))
}

/// Attaches `ω₀` and enforces `ω > ω₀`.
fn with_threshold(params: &Params) -> Result<(Params, spectrum::Omega0), CliError> {
    let (prm, w0) = spectrum::with_threshold(params).map_err(numeric)?;
    prm.check_above_threshold().map_err(|e| CliError::Validation(e.to_string()))?;
    Ok((prm, w0))
}

/// Profile from `--with-profile` (header parameters must agree with any
/// given on the command line) or from a fresh solve.
fn obtain_profile(cfg: &RunConfig) -> Result<(RadialProfile, Option<spectrum::Omega0>), CliError> {
    match &cfg.profile {
        Some(path) => {
            let prof = io::load_profile(path).map_err(|e| CliError::Validation(e.to_string()))?;
            let hp = *prof.params();
            let given = &cfg.params;
            let clash = given.dim.is_some_and(|d| d != hp.dim as i64)
                || [(given.gamma, hp.gamma), (given.alpha, hp.alpha), (given.omega, hp.omega), (given.p, hp.p)]
                    .iter()
                    .any(|(g, h)| g.is_some_and(|g| g != *h));
            if clash {
                return Err(CliError::Validation("parameters on the command line differ from the profile header".into()));
            }
            make_params(hp.dim as i64, hp.gamma, hp.alpha, hp.omega, hp.p).map_err(|e| CliError::Validation(e.to_string()))?;
            Ok((prof, None))
        }
        None => {
            let (prm, w0) = with_threshold(&params_from(&cfg.params)?)?;
            let prof = solve_ground_state(&prm, &cfg.numeric.shoot).map_err(numeric)?;
            Ok((prof, Some(w0)))
        }
    }
}

fn report(cfg: &RunConfig, result: serde_json::Value) -> Result<String, CliError> {
    let v = json!({ "schema": SCHEMA, "command": cfg.command.map(Command::name), "config": cfg, "result": result });
    serde_json::to_string_pretty(&v).map(|s| s + "\n").map_err(|e| CliError::Output(e.to_string()))
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

/// Runs a resolved config and returns its artifacts without touching disk.
pub fn execute(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    validate_numeric(&cfg.numeric)?;
    let command = cfg.command.ok_or_else(|| CliError::Validation("no command".into()))?;
    let fmt = |f: Format| cfg.output.formats.contains(&f);
    let mut arts: Vec<Artifact> = vec![];
    let mut push = |name: &str, contents: String| arts.push(Artifact { name: name.into(), contents });
    let json_result;
    let summary;
    match command {
        Command::Solve => {
            let (prof, w0) = obtain_profile(cfg)?;
            let rec = stability::functionals(&prof).map_err(numeric)?;
            let prm = *prof.params();
            let id = pohozaev::verify_identity(&coeffs(&special_fgh(&prm), prm.p).map_err(numeric)?, &prof).map_err(numeric)?;
            json_result = json!({
                "params": prm,
                "omega0": w0,
                "phi0": prof.phi0(),
                "tail": prof.tail_model(),
                "r_last": prof.r_last(),
                "points": prof.grid().len(),
                "residuals": {
                    "nehari_relative": rec.nehari_relative(&prm),
                    "virial1_relative": rec.virial1_relative(&prm),
                    "pohozaev_identity": id.max_residual,
                },
            });
            summary = format!("phi0 = {}", prof.phi0());
            if fmt(Format::Csv) {
                push("profile.csv", io::profile_csv(&prof));
            }
            if fmt(Format::Svg) {
                let pts = prof.grid().iter().zip(prof.values()).map(|(r, v)| (*r, *v)).collect();
                push("profile.svg", svg::line_plot("ground state", "r", "phi", &[svg::Series::new("phi", pts)], svg::Axes::default()));
            }
        }
        Command::Pohozaev => {
            let (prof, w0) = obtain_profile(cfg)?;
            let prm = *prof.params();
            let c = coeffs(&special_fgh(&prm), prm.p).map_err(numeric)?;
            let id = pohozaev::verify_identity(&c, &prof).map_err(numeric)?;
            let js: Vec<f64> = prof.grid().iter().map(|&r| pohozaev::j_value(&c, &prof, r)).collect::<Result<_, _>>().map_err(numeric)?;
            let jmax = js.iter().fold(0.0f64, |a, b| a.max(b.abs()));
            let jmin = js.iter().copied().fold(f64::INFINITY, f64::min);
            let structure = assumptions::g_sign_structure(&c, &prm);
            let rs = log_grid(prof.grid()[0], prof.r_last(), 200);
            let g_samples: Vec<(f64, f64)> = rs.iter().map(|&r| (r, c.big_g(r))).collect();
            json_result = json!({
                "params": prm,
                "omega0": w0,
                "identity": id,
                "j_min": jmin,
                "j_max_abs": jmax,
                "j_at_r_last": js.last(),
                "g_sign_structure": structure,
                "g_samples": g_samples,
            });
            summary = format!("max identity residual {:e}", id.max_residual);
            if fmt(Format::Svg) {
                let gp: Vec<(f64, f64)> = g_samples.iter().map(|(r, g)| (*r, g.abs())).collect();
                push("g.svg", svg::line_plot("|G(r)|", "r", "|G|", &[svg::Series::new("|G|", gp)], svg::Axes { log_x: true, log_y: true, markers: false }));
                let jp = prof.grid().iter().copied().zip(js.iter().copied()).collect();
                push("j.svg", svg::line_plot("J(r)", "r", "J", &[svg::Series::new("J", jp)], svg::Axes { log_x: true, ..svg::Axes::default() }));
            }
            if fmt(Format::Csv) {
                let mut s = String::from("r,J\n");
                for (r, j) in prof.grid().iter().zip(&js) {
                    s.push_str(&format!("{r:e},{j:e}\n"));
                }
                push("j.csv", s);
            }
        }
        Command::Spectrum => {
            let (prof, w0) = obtain_profile(cfg)?;
            let prm = *prof.params();
            let jmax = cfg.numeric.jmax.unwrap_or(if prm.dim == 1 { 1 } else { prm.dim + 2 });
            let rep = spectrum::linearized_report(&prof, jmax, cfg.numeric.eigen_k, cfg.numeric.spectral).map_err(numeric)?;
            let nd = spectrum::nondegeneracy_check(&rep);
            let verdict = match &nd {
                Ok(n) if n.pass => "nondegenerate".to_string(),
                Ok(n) => format!("not certified: {}", n.failures.join("; ")),
                Err(e) => e.to_string(),
            };
            json_result = json!({
                "params": prm,
                "omega0": w0,
                "report": rep,
                "nondegeneracy": nd.as_ref().ok(),
                "verdict": verdict,
            });
            summary = verdict;
            if fmt(Format::Svg) {
                let series: Vec<svg::Series> = [(&rep.l1, "L1"), (&rep.l2, "L2")]
                    .iter()
                    .map(|(op, name)| {
                        let pts = op.sectors.iter().flat_map(|s| s.eigenvalues.iter().map(move |e| (s.j as f64, e.value))).collect();
                        svg::Series::new(*name, pts)
                    })
                    .collect();
                push("ladder.svg", svg::line_plot("eigenvalue ladder", "sector j", "eigenvalue", &series, svg::Axes { markers: true, ..svg::Axes::default() }));
            }
        }
        Command::Stability => {
            let (prof, w0) = obtain_profile(cfg)?;
            let prm = *prof.params();
            let mut rec = stability::functionals(&prof).map_err(numeric)?;
            let prm_t = match &w0 {
                Some(w) => prm.with_omega0(w.value),
                None => with_threshold(&prm)?.0,
            };
            let s = stability::mass_slope(&prm_t, prm.omega, cfg.numeric.rel_step * prm.omega, &cfg.numeric.shoot).map_err(numeric)?;
            rec.slope = Some(s.slope);
            rec.slope_uncertainty = Some(s.uncertainty);
            let verdict = stability::classify(&rec);
            json_result = json!({ "params": prm_t, "omega0": w0, "record": rec, "slope": s, "verdict": verdict });
            summary = format!("{verdict:?}: slope {} ± {:e}", s.slope, s.uncertainty);
        }
        Command::Assumptions => {
            let (prm, w0) = with_threshold(&params_from(&cfg.params)?)?;
            let rep = assumptions::check_all(&prm);
            summary = format!("{:?}", rep.verdict);
            json_result = json!({ "params": prm, "omega0": w0, "report": rep });
        }
        Command::Sweep => {
            let (prm, w0) = with_threshold(&params_from(&cfg.params)?)?;
            let omegas = if cfg.numeric.omegas.is_empty() {
                [1.0, 1.5, 2.0, 3.0, 4.0].iter().map(|m| m * prm.omega).collect()
            } else {
                cfg.numeric.omegas.clone()
            };
            if let Some(w) = omegas.iter().find(|w| **w <= w0.value) {
                return Err(CliError::Validation(format!("sweep frequency {w} does not exceed omega0 = {}", w0.value)));
            }
            let sc = SweepConfig { rel_step: cfg.numeric.rel_step, shoot: cfg.numeric.shoot };
            let res = stability::sweep(&prm, &omegas, &sc);
            if res.rows.is_empty() && !res.failures.is_empty() {
                return Err(CliError::Numeric(format!("every sweep point failed: {}", res.failures[0].1)));
            }
            summary = format!("{} rows, {} failures, {} audit flags", res.rows.len(), res.failures.len(), res.audit.len());
            if fmt(Format::Csv) {
                let mut s = String::from("omega,mass,action,nehari,virial1,virial2,slope,slope_uncertainty,verdict\n");
                for r in &res.rows {
                    let x = &r.record;
                    s.push_str(&format!(
                        "{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:?}\n",
                        x.omega, x.mass, x.action, x.nehari, x.virial1, x.virial2, x.slope.unwrap_or(f64::NAN), x.slope_uncertainty.unwrap_or(f64::NAN), r.verdict
                    ));
                }
                push("sweep.csv", s);
            }
            if fmt(Format::Svg) {
                let pts = res.rows.iter().map(|r| (r.record.omega, r.record.mass)).collect();
                push("mass.svg", svg::line_plot("mass along the branch", "omega", "mass", &[svg::Series::new("mass", pts)], svg::Axes::default()));
            }
            json_result = json!({ "params": prm, "omega0": w0, "sweep": res });
        }
    }
    if fmt(Format::Json) {
        let text = report(cfg, json_result)?;
        arts.push(Artifact { name: format!("{}.json", command.name()), contents: text });
    }
    Ok(RunOutput { artifacts: arts, summary })
}

/// Writes the artifacts (single writer, after all computation).
pub fn write_artifacts(dir: &Path, arts: &[Artifact]) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Output(format!("{}: {e}", dir.display())))?;
    for a in arts {
        let path = dir.join(&a.name);
        std::fs::write(&path, &a.contents).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

/// Caps rayon's global pool from `GSLAB_THREADS`; ignored when unset or invalid.
pub fn init_threads() {
    if let Some(n) = std::env::var("GSLAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|n| *n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Entry point behind the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    init_threads();
    let started = std::time::Instant::now();
    let outcome = cli.resolve().and_then(|cfg| {
        let out = execute(&cfg)?;
        write_artifacts(&cfg.output.dir, &out.artifacts)?;
        let stamp = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let log = format!("unix_time={stamp}\nelapsed_ms={}\nsummary={}\n", started.elapsed().as_millis(), out.summary);
        write_artifacts(&cfg.output.dir, &[Artifact { name: "gslab.log".into(), contents: log }])?;
        Ok(out.summary)
    });
    match outcome {
        Ok(s) => {
            println!("{s}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("gslab").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn flags_override_config() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        std::fs::write(&path, r#"{"params": {"N": 3, "gamma": 1, "alpha": 1, "omega": 2, "p": 3}, "numeric": {"rel_step": 0.01}}"#).unwrap();
        let cfg = parse(&["solve", "--config", path.to_str().unwrap(), "--omega", "5"]).resolve().unwrap();
        assert_eq!(cfg.params.omega, Some(5.0));
        assert_eq!(cfg.params.gamma, Some(1.0));
        assert_eq!(cfg.numeric.rel_step, 0.01);
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        std::fs::write(&path, r#"{"params": {"N": 3, "gama": 1}}"#).unwrap();
        let err = parse(&["solve", "--config", path.to_str().unwrap()]).resolve().unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn alpha_out_of_range_is_a_validation_error() {
        let cfg = parse(&["solve", "--N", "3", "--gamma", "1", "--alpha", "3", "--omega", "1", "--p", "3"]).resolve().unwrap();
        let err = execute(&cfg).err().unwrap();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("min(N,2)"), "{err}");
    }

    #[test]
    fn omega_below_threshold_is_rejected() {
        let cfg = parse(&["solve", "--N", "3", "--gamma", "1", "--alpha", "1", "--omega", "0.2", "--p", "3"]).resolve().unwrap();
        assert_eq!(execute(&cfg).err().unwrap().exit_code(), 2);
    }

    #[test]
    fn mismatched_command_in_config() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        std::fs::write(&path, r#"{"command": "sweep"}"#).unwrap();
        assert!(parse(&["solve", "--config", path.to_str().unwrap()]).resolve().is_err());
    }
}
