//! Radial sector operators `-Δ_ℓ + W(r)` and their low-lying spectra.
//!
//! For a spherical harmonic of degree `ℓ` with Laplace–Beltrami eigenvalue
//! `μ = ℓ(ℓ+N-2)`, the operator `-(r^{N-1}ψ')'/r^{N-1} + (W + μ/r²)ψ` on
//! `(0, R)` is discretized by cell-centred finite volumes with `M` cells of
//! width `h`: fluxes carry the face weight `r^{N-1}`, the potential is
//! integrated exactly against `r^{N-1}` for its power-law part and by
//! three-point Gauss–Legendre for the rest. Symmetrizing with the square
//! roots of the cell volumes (`u = √V ψ`, the discrete analogue of
//! `u = r^{(N-1)/2}ψ`) gives a symmetric tridiagonal matrix.
//!
//! In one dimension the two sectors are the even (`ℓ = 0`, zero flux at the
//! origin) and odd (`ℓ = 1`, Dirichlet at the origin) parts; `μ = 0` in both.
//! Every sector uses Dirichlet at `R`.
//!
//! Eigenvalues are extrapolated over three nested resolutions with the
//! observed convergence order.

pub mod tridiag;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::Params;
use crate::profile::{ProfileError, Sampled};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("grid too coarse: {0} cells (need at least 100)")]
    GridTooCoarse(usize),
    #[error("first-cell average {average} of the smooth potential differs from its midpoint value {midpoint} by more than 50%")]
    SingularityUnresolved { average: f64, midpoint: f64 },
    #[error("eigensolver failed: {0}")]
    ConvergenceFailure(String),
    #[error("no negative eigenvalue found (lowest {0}); enlarge r_max or refine the grid")]
    NoNegativeEigenvalue(f64),
    #[error("sector {j} does not exist in dimension {dim}")]
    SectorUnavailable { dim: usize, j: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

/// Number of independent spherical harmonics of degree `ℓ` on `S^{N-1}`.
pub fn harmonic_multiplicity(dim: usize, l: usize) -> usize {
    if dim == 1 {
        return usize::from(l <= 1);
    }
    let binom = |n: i64, k: i64| -> i64 {
        if n < k || n < 0 {
            return 0;
        }
        (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
    };
    let (l, k) = (l as i64, dim as i64 - 1);
    (binom(l + k, k) - binom(l + k - 2, k)) as usize
}

/// Degree of the `j`-th harmonic when harmonics are listed with multiplicity
/// by increasing degree (`j = 0` is the constant).
pub fn sector_degree(dim: usize, j: usize) -> Result<usize, SpectrumError> {
    let mut seen = 0;
    for l in 0.. {
        let m = harmonic_multiplicity(dim, l);
        if m == 0 {
            break;
        }
        seen += m;
        if j < seen {
            return Ok(l);
        }
    }
    Err(SpectrumError::SectorUnavailable { dim, j })
}

/// `μ_j = ℓ(ℓ+N-2)` for the degree of sector `j`.
pub fn sector_mu(dim: usize, j: usize) -> Result<f64, SpectrumError> {
    let l = sector_degree(dim, j)? as f64;
    Ok(l * (l + dim as f64 - 2.0))
}

type SmoothFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// `W(r) = constant + coeff · r^{-power} + smooth(r)`.
#[derive(Clone)]
pub struct Potential {
    pub constant: f64,
    pub coeff: f64,
    pub power: f64,
    pub smooth: Option<SmoothFn>,
}

impl std::fmt::Debug for Potential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Potential")
            .field("constant", &self.constant)
            .field("coeff", &self.coeff)
            .field("power", &self.power)
            .field("smooth", &self.smooth.is_some())
            .finish()
    }
}

impl Potential {
    pub fn constant(c: f64) -> Self {
        Potential { constant: c, coeff: 0.0, power: 0.0, smooth: None }
    }

    /// `-γ r^{-α}`
    pub fn inverse_power(gamma: f64, alpha: f64) -> Self {
        Potential { constant: 0.0, coeff: -gamma, power: alpha, smooth: None }
    }

    pub fn with_constant(mut self, c: f64) -> Self {
        self.constant = c;
        self
    }

    pub fn with_smooth(mut self, s: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.smooth = Some(Arc::new(s));
        self
    }

    pub fn value(&self, r: f64) -> f64 {
        let mut v = self.constant;
        if self.coeff != 0.0 {
            v += self.coeff * r.powf(-self.power);
        }
        if let Some(s) = &self.smooth {
            v += s(r);
        }
        v
    }
}

/// Uniform cell grid on `(0, r_max)`; `cells` is the coarsest resolution and
/// each further level halves the width.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectralGrid {
    pub cells: usize,
    pub r_max: f64,
    pub levels: usize,
}

impl SpectralGrid {
    pub fn new(cells: usize, r_max: f64) -> Self {
        SpectralGrid { cells, r_max, levels: 3 }
    }

    /// Default for profiles at frequency `ω`: `R = 30/√ω`, 1500 coarse cells.
    pub fn for_omega(omega: f64) -> Self {
        SpectralGrid::new(1500, 30.0 / omega.sqrt())
    }

    pub fn resolutions(&self) -> Vec<usize> {
        (0..self.levels.max(1)).map(|k| self.cells << k).collect()
    }
}

/// `∫_a^b r^e dr` (infinite when divergent at `a = 0`).
fn power_integral(a: f64, b: f64, e: f64) -> f64 {
    if (e + 1.0).abs() < 1e-14 {
        if a == 0.0 {
            return f64::INFINITY;
        }
        return (b / a).ln();
    }
    if a == 0.0 && e + 1.0 < 0.0 {
        return f64::INFINITY;
    }
    (b.powf(e + 1.0) - a.powf(e + 1.0)) / (e + 1.0)
}

const GL3_X: [f64; 3] = [-0.774_596_669_241_483_4, 0.0, 0.774_596_669_241_483_4];
const GL3_W: [f64; 3] = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];

/// Discretized operator of one angular sector.
#[derive(Debug, Clone)]
pub struct SectorOperator {
    pub sector_j: usize,
    pub degree: usize,
    pub mu_j: f64,
    pub dim: usize,
    pub h: f64,
    /// Cell centres `(i - 1/2) h`.
    pub centers: Vec<f64>,
    /// Cell volumes `∫ r^{N-1} dr`.
    pub volumes: Vec<f64>,
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SectorOperator {
    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// Liouville-form effective potential `W + (μ + (N-1)(N-3)/4)/r²` of
    /// the continuous sector operator.
    pub fn effective_potential(&self, w: &Potential, r: f64) -> f64 {
        let n = self.dim as f64;
        w.value(r) + (self.mu_j + (n - 1.0) * (n - 3.0) / 4.0) / (r * r)
    }

    /// Converts a matrix eigenvector `u` to nodal values `ψ = u/√V`.
    pub fn to_nodal(&self, u: &[f64]) -> Vec<f64> {
        u.iter().zip(&self.volumes).map(|(x, v)| x / v.sqrt()).collect()
    }

    /// Upper bound on the matrix norm (Gershgorin).
    pub fn norm_bound(&self) -> f64 {
        let (lo, hi) = tridiag::gershgorin(&self.diag, &self.off);
        lo.abs().max(hi.abs())
    }
}

/// Assembles the sector-`j` operator for `-Δ + W` on `cells` cells of `(0, r_max)`.
pub fn build_sector(dim: usize, w: &Potential, j: usize, cells: usize, r_max: f64) -> Result<SectorOperator, SpectrumError> {
    if cells < 100 {
        return Err(SpectrumError::GridTooCoarse(cells));
    }
    let degree = sector_degree(dim, j)?;
    let mu = sector_mu(dim, j)?;
    let n = dim as f64;
    let h = r_max / cells as f64;
    let face = |i: usize| (i as f64 * h).powf(n - 1.0);
    let centers: Vec<f64> = (0..cells).map(|i| (i as f64 + 0.5) * h).collect();
    let volumes: Vec<f64> = (0..cells).map(|i| power_integral(i as f64 * h, (i + 1) as f64 * h, n - 1.0)).collect();

    if let Some(s) = &w.smooth {
        let r = &centers[0];
        let avg = (0..3).map(|k| GL3_W[k] * 0.5 * s(0.5 * h * (1.0 + GL3_X[k]))).sum::<f64>();
        let mid = s(*r);
        if (avg - mid).abs() > 0.5 * mid.abs().max(avg.abs()) && (avg - mid).abs() > 1e-12 {
            return Err(SpectrumError::SingularityUnresolved { average: avg, midpoint: mid });
        }
    }

    let mut diag = vec![0.0; cells];
    let mut off = vec![0.0; cells - 1];
    for i in 0..cells {
        let (a, b) = (i as f64 * h, (i + 1) as f64 * h);
        // potential integrated against r^{N-1}
        let mut pot = w.constant * volumes[i];
        if w.coeff != 0.0 {
            pot += w.coeff * power_integral(a, b, n - 1.0 - w.power);
        }
        if let Some(s) = &w.smooth {
            pot += (0..3)
                .map(|k| {
                    let r = 0.5 * (a + b) + 0.5 * h * GL3_X[k];
                    GL3_W[k] * 0.5 * h * r.powf(n - 1.0) * s(r)
                })
                .sum::<f64>();
        }
        if mu != 0.0 {
            let c = power_integral(a, b, n - 3.0);
            pot += mu * if c.is_finite() { c } else { volumes[i] / (centers[i] * centers[i]) };
        }
        let mut flux = 0.0;
        if i > 0 {
            flux += face(i) / h;
        } else if dim == 1 && degree == 1 {
            // odd sector: ghost value -ψ_1 at -h/2
            flux += 2.0 / h;
        }
        if i + 1 < cells {
            flux += face(i + 1) / h;
        } else {
            flux += 2.0 * face(cells) / h;
        }
        diag[i] = (flux + pot) / volumes[i];
        if i + 1 < cells {
            off[i] = -face(i + 1) / h / (volumes[i] * volumes[i + 1]).sqrt();
        }
    }
    Ok(SectorOperator { sector_j: j, degree, mu_j: mu, dim, h, centers, volumes, diag, off })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub value: f64,
    /// Unit vector in symmetrized variables `u = √V ψ`.
    pub vector: Vec<f64>,
    /// `‖Hu - λu‖`
    pub residual: f64,
}

/// The `k` smallest eigenpairs with orthonormal vectors.
pub fn lowest_eigenpairs(op: &SectorOperator, k: usize) -> Result<Vec<Eigenpair>, SpectrumError> {
    let n = op.size();
    if k == 0 || k > n {
        return Err(SpectrumError::ConvergenceFailure(format!("requested {k} eigenpairs of a {n}x{n} matrix")));
    }
    let bound = op.norm_bound();
    (0..k)
        .map(|i| {
            let value = tridiag::kth_eigenvalue(&op.diag, &op.off, i);
            let vector = tridiag::inverse_iteration(&op.diag, &op.off, value);
            let hv = tridiag::apply(&op.diag, &op.off, &vector);
            let residual = hv.iter().zip(&vector).map(|(a, b)| (a - value * b).powi(2)).sum::<f64>().sqrt();
            if !(residual <= 1e-8 * bound) {
                return Err(SpectrumError::ConvergenceFailure(format!(
                    "eigenpair {i}: residual {residual:e} exceeds 1e-8·‖H‖ = {:e}",
                    1e-8 * bound
                )));
            }
            Ok(Eigenpair { value, vector, residual })
        })
        .collect()
}

/// An eigenvalue extrapolated to zero cell width.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extrapolated {
    pub value: f64,
    pub uncertainty: f64,
    /// Raw values, coarsest first.
    pub raw: Vec<f64>,
    /// Observed convergence order (2 is assumed with only two levels).
    pub order: f64,
}

/// Richardson extrapolation of a sequence computed at widths `h, h/2, h/4, …`.
pub fn richardson(raw: &[f64]) -> Extrapolated {
    let n = raw.len();
    if n == 1 {
        return Extrapolated { value: raw[0], uncertainty: f64::INFINITY, raw: raw.to_vec(), order: f64::NAN };
    }
    let mut order = 2.0;
    if n >= 3 {
        let (a, b, c) = (raw[n - 3], raw[n - 2], raw[n - 1]);
        let ratio = (a - b) / (b - c);
        if ratio.is_finite() && ratio > 1.0 {
            order = ratio.log2().clamp(1.0, 4.0);
        }
    }
    let f = 2f64.powf(order);
    let (b, c) = (raw[n - 2], raw[n - 1]);
    let value = c + (c - b) / (f - 1.0);
    // consistency: the same extrapolation one level coarser
    let uncertainty = if n >= 3 {
        let prev = b + (b - raw[n - 3]) / (f - 1.0);
        (value - prev).abs().max((c - b).abs() / (f - 1.0) * 1e-3)
    } else {
        (c - b).abs() / (f - 1.0)
    };
    Extrapolated { value, uncertainty, raw: raw.to_vec(), order }
}

/// Per-level operators and eigenpairs, plus the extrapolated eigenvalues.
#[derive(Debug, Clone)]
pub struct SectorSolve {
    pub eigen: Vec<Extrapolated>,
    /// Finest operator and its eigenpairs.
    pub operator: SectorOperator,
    pub pairs: Vec<Eigenpair>,
}

/// Lowest `k` eigenvalues of sector `j`, extrapolated over the grid levels.
pub fn solve_sector(dim: usize, w: &Potential, j: usize, grid: &SpectralGrid, k: usize) -> Result<SectorSolve, SpectrumError> {
    let mut raws: Vec<Vec<f64>> = vec![Vec::new(); k];
    let mut last = None;
    for cells in grid.resolutions() {
        let op = build_sector(dim, w, j, cells, grid.r_max)?;
        let pairs = lowest_eigenpairs(&op, k)?;
        for (i, p) in pairs.iter().enumerate() {
            raws[i].push(p.value);
        }
        last = Some((op, pairs));
    }
    let (operator, pairs) = last.expect("at least one level");
    Ok(SectorSolve { eigen: raws.iter().map(|r| richardson(r)).collect(), operator, pairs })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Omega0 {
    pub value: f64,
    pub uncertainty: f64,
    pub r_max: f64,
    pub resolutions: Vec<usize>,
}

/// `ω₀ = -λ₀(-Δ - γ r^{-α})` from the radial sector. With `grid = None` the
/// domain is sized from a first estimate of the decay rate `√ω₀`.
pub fn omega0(params: &Params, grid: Option<SpectralGrid>) -> Result<Omega0, SpectrumError> {
    if !(params.gamma > 0.0) || !(params.alpha > 0.0 && params.alpha < params.n().min(2.0)) {
        return Err(SpectrumError::Precondition("omega0 needs gamma > 0 and 0 < alpha < min(N,2)".into()));
    }
    let w = Potential::inverse_power(params.gamma, params.alpha);
    let grid = match grid {
        Some(g) => g,
        None => {
            // natural length of -Δ - γr^{-α}: γ^{-1/(2-α)}
            let l = params.gamma.powf(-1.0 / (2.0 - params.alpha));
            let mut r_max = 60.0 * l;
            // resize until the domain settles; when α is near 2 each pass
            // uncovers a deeper, more concentrated state
            for pass in 0..40 {
                let trial = SpectralGrid { levels: 1, ..SpectralGrid::new(2000, r_max) };
                let lam = solve_sector(params.dim, &w, 0, &trial, 1)?.eigen[0].value;
                if !(lam < 0.0) {
                    return Err(SpectrumError::NoNegativeEigenvalue(lam));
                }
                let next = 40.0 / (-lam).sqrt();
                let settled = pass >= 1 && (next - r_max).abs() <= 0.02 * r_max;
                r_max = next;
                if settled {
                    break;
                }
            }
            SpectralGrid::new(2000, r_max)
        }
    };
    let s = solve_sector(params.dim, &w, 0, &grid, 1)?;
    let e = &s.eigen[0];
    if !(e.value < 0.0) {
        return Err(SpectrumError::NoNegativeEigenvalue(e.value));
    }
    Ok(Omega0 { value: -e.value, uncertainty: e.uncertainty, r_max: grid.r_max, resolutions: grid.resolutions() })
}

/// Computes `ω₀` and stores it in the returned parameters.
pub fn with_threshold(params: &Params) -> Result<(Params, Omega0), SpectrumError> {
    let w0 = omega0(params, None)?;
    Ok((params.with_omega0(w0.value), w0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Linearization {
    /// `-Δ - γr^{-α} + ω - pφ^{p-1}`
    L1,
    /// `-Δ - γr^{-α} + ω - φ^{p-1}`
    L2,
}

#[derive(Debug, Clone, Serialize)]
pub struct SectorReport {
    pub j: usize,
    pub degree: usize,
    pub mu: f64,
    pub eigenvalues: Vec<Extrapolated>,
    pub negatives: usize,
    /// `|⟨ψ, φ⟩| / (‖ψ‖‖φ‖)` of the lowest eigenvector against the profile
    /// (volume-weighted inner product).
    pub overlap_with_profile: f64,
    /// Same against `φ'`.
    pub overlap_with_derivative: f64,
    /// Sign changes of the lowest eigenvector (entries above 1e-8 of max).
    pub lowest_nodes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OperatorReport {
    pub operator: Linearization,
    pub sectors: Vec<SectorReport>,
    /// `(j, index, value)` with `|λ| < ε₀`.
    pub kernel_candidates: Vec<(usize, usize, f64)>,
    pub eps0: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub dim: usize,
    pub j_max: usize,
    pub grid: SpectralGrid,
    pub resolutions: Vec<usize>,
    pub l1: OperatorReport,
    pub l2: OperatorReport,
}

/// Kernel threshold: ten times the extrapolation uncertainty, at least 1e-6.
pub fn kernel_threshold(e: &Extrapolated) -> f64 {
    (10.0 * e.uncertainty).max(1e-6)
}

fn overlap(op: &SectorOperator, u: &[f64], f: &dyn Fn(f64) -> f64) -> f64 {
    let (mut uv, mut vv) = (0.0, 0.0);
    for i in 0..u.len() {
        let v = f(op.centers[i]) * op.volumes[i].sqrt();
        uv += u[i] * v;
        vv += v * v;
    }
    uv.abs() / vv.sqrt()
}

fn sign_changes(u: &[f64]) -> usize {
    let m = u.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let signs: Vec<bool> = u.iter().filter(|x| x.abs() > 1e-8 * m).map(|x| *x > 0.0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Eigen-data of the linearized operators around `profile` for sectors
/// `0..=j_max` (capped at the sectors that exist in dimension one).
pub fn linearized_report<S: Sampled + Sync>(
    profile: &S,
    j_max: usize,
    k: usize,
    grid: Option<SpectralGrid>,
) -> Result<SpectrumReport, SpectrumError> {
    let prm = *profile.params();
    let grid = grid.unwrap_or_else(|| SpectralGrid::for_omega(prm.omega));
    let r1 = profile.grid()[0];
    let phi = |r: f64| profile.eval(r.max(r1)).map(|v| v.0).unwrap_or(0.0);
    let dphi = |r: f64| profile.eval(r.max(r1)).map(|v| v.1).unwrap_or(0.0);
    let sectors: Vec<usize> = (0..=j_max).filter(|&j| sector_degree(prm.dim, j).is_ok()).collect();

    let build = |which: Linearization| -> Result<OperatorReport, SpectrumError> {
        let coef = match which {
            Linearization::L1 => prm.p,
            Linearization::L2 => 1.0,
        };
        let (p, r_last) = (prm.p, profile.grid()[profile.grid().len() - 1]);
        let tail = profile.tail();
        let grid_x = profile.grid().to_vec();
        let grid_y = profile.values().to_vec();
        let grid_d = profile.derivs().to_vec();
        let params = prm;
        let sampled = crate::profile::Trajectory { params, phi0: profile.phi0(), grid: grid_x, values: grid_y, derivs: grid_d };
        let smooth = move |r: f64| {
            let v = if r > r_last {
                tail.map(|t| t.value(r)).unwrap_or(0.0)
            } else {
                sampled.eval(r.max(r1)).map(|v| v.0).unwrap_or(0.0)
            };
            -coef * v.abs().powf(p - 1.0)
        };
        let w = Potential::inverse_power(prm.gamma, prm.alpha).with_constant(prm.omega).with_smooth(smooth);
        // sectors sharing a degree share an operator
        let mut by_degree: Vec<(usize, SectorSolve)> = Vec::new();
        let degrees: Vec<usize> = {
            let mut d: Vec<usize> = sectors.iter().map(|&j| sector_degree(prm.dim, j).unwrap()).collect();
            d.dedup();
            d
        };
        let solved: Vec<Result<(usize, SectorSolve), SpectrumError>> = degrees
            .par_iter()
            .map(|&l| {
                let j = sectors.iter().copied().find(|&j| sector_degree(prm.dim, j).unwrap() == l).unwrap();
                solve_sector(prm.dim, &w, j, &grid, k).map(|s| (l, s))
            })
            .collect();
        for s in solved {
            by_degree.push(s?);
        }
        let mut reports = Vec::new();
        let mut kernel = Vec::new();
        let mut eps0: f64 = 1e-6;
        for &j in &sectors {
            let l = sector_degree(prm.dim, j)?;
            let s = &by_degree.iter().find(|(d, _)| *d == l).unwrap().1;
            for (i, e) in s.eigen.iter().enumerate() {
                let t = kernel_threshold(e);
                eps0 = eps0.max(t);
                if e.value.abs() < t {
                    kernel.push((j, i, e.value));
                }
            }
            let u = &s.pairs[0].vector;
            reports.push(SectorReport {
                j,
                degree: l,
                mu: s.operator.mu_j,
                negatives: s.eigen.iter().filter(|e| e.value < -kernel_threshold(e)).count(),
                overlap_with_profile: overlap(&s.operator, u, &phi),
                overlap_with_derivative: overlap(&s.operator, u, &dphi),
                lowest_nodes: sign_changes(u),
                eigenvalues: s.eigen.clone(),
            });
        }
        Ok(OperatorReport { operator: which, sectors: reports, kernel_candidates: kernel, eps0 })
    };
    Ok(SpectrumReport {
        dim: prm.dim,
        j_max,
        grid,
        resolutions: grid.resolutions(),
        l1: build(Linearization::L1)?,
        l2: build(Linearization::L2)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Nondegeneracy {
    pub pass: bool,
    /// Number of `L1` sector-0 eigenvalues below `-ε₀`.
    pub negative_count: usize,
    /// Smallest `|λ|/ε₀` over all reported `L1` eigenvalues.
    pub kernel_margin: f64,
    /// Smallest lowest eigenvalue over sectors `j ≥ 1`.
    pub min_nonradial: f64,
    pub failures: Vec<String>,
}

/// Kernel triviality of `L1`: exactly one negative eigenvalue in sector 0,
/// nothing within `ε₀` of zero anywhere, positive minima for `j ≥ 1`.
pub fn nondegeneracy_check(report: &SpectrumReport) -> Result<Nondegeneracy, SpectrumError> {
    // one dimension has only the even and odd sectors
    let needed = if report.dim == 1 { 1 } else { report.dim + 1 };
    if report.j_max < needed {
        return Err(SpectrumError::Precondition(format!(
            "report covers sectors up to {} but N+1 = {} are required",
            report.j_max,
            report.dim + 1
        )));
    }
    let l1 = &report.l1;
    let mut failures = Vec::new();
    let s0 = &l1.sectors[0];
    let negative_count = s0.negatives;
    if negative_count != 1 {
        failures.push(format!("sector 0 has {negative_count} negative eigenvalues"));
    }
    let mut kernel_margin = f64::INFINITY;
    let mut min_nonradial = f64::INFINITY;
    for s in &l1.sectors {
        for (i, e) in s.eigenvalues.iter().enumerate() {
            let eps = kernel_threshold(e);
            let ratio = e.value.abs() / eps;
            kernel_margin = kernel_margin.min(ratio);
            if ratio < 1.0 {
                failures.push(format!("sector {} eigenvalue {i} = {:e} lies within ε₀ = {eps:e}", s.j, e.value));
            } else if ratio < 2.0 {
                return Err(SpectrumError::Inconclusive(format!(
                    "sector {} eigenvalue {i} = {:e} is within 2ε₀ of zero (uncertainty {:e})",
                    s.j, e.value, e.uncertainty
                )));
            }
        }
        if s.j >= 1 {
            let lo = s.eigenvalues[0].value;
            min_nonradial = min_nonradial.min(lo);
            if !(lo > 0.0) {
                failures.push(format!("sector {} minimum {lo:e} is not positive", s.j));
            }
        }
    }
    failures.dedup();
    Ok(Nondegeneracy { pass: failures.is_empty(), negative_count, kernel_margin, min_nonradial, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicities_and_ladder() {
        assert_eq!(harmonic_multiplicity(3, 2), 5);
        assert_eq!(harmonic_multiplicity(2, 4), 2);
        assert_eq!(harmonic_multiplicity(1, 2), 0);
        assert_eq!(harmonic_multiplicity(4, 1), 4);
        for n in 2..6usize {
            assert_eq!(sector_mu(n, 0).unwrap(), 0.0);
            for j in 1..=n {
                assert_eq!(sector_mu(n, j).unwrap(), n as f64 - 1.0);
            }
            assert!(sector_mu(n, n + 1).unwrap() > n as f64 - 1.0);
        }
        assert_eq!(sector_mu(3, 1).unwrap(), 2.0);
        assert!(matches!(sector_degree(1, 2), Err(SpectrumError::SectorUnavailable { .. })));
    }

    #[test]
    fn operator_is_symmetric_with_documented_liouville_term() {
        let w = Potential::inverse_power(1.0, 1.0);
        let op = build_sector(3, &w, 0, 200, 20.0).unwrap();
        assert_eq!(op.off.len(), 199);
        assert_eq!(op.effective_potential(&w, 2.0), -0.5);
        let op1 = build_sector(3, &w, 1, 200, 20.0).unwrap();
        assert_eq!(op1.mu_j, 2.0);
        assert!(matches!(build_sector(3, &w, 0, 50, 20.0), Err(SpectrumError::GridTooCoarse(50))));
    }

    #[test]
    fn constant_potential_bottom_is_near_one() {
        let grid = SpectralGrid::new(400, 400.0);
        let s = solve_sector(3, &Potential::constant(1.0), 0, &grid, 1).unwrap();
        // Dirichlet box: 1 + (π/R)²
        let exact = 1.0 + (std::f64::consts::PI / 400.0).powi(2);
        assert!((s.eigen[0].value - exact).abs() < 1e-7, "{:?}", s.eigen[0]);
    }

    #[test]
    fn hydrogen_levels() {
        let grid = SpectralGrid::new(2000, 80.0);
        let s = solve_sector(3, &Potential::inverse_power(1.0, 1.0), 0, &grid, 3).unwrap();
        for (n, e) in s.eigen.iter().enumerate() {
            let exact = -0.25 / ((n + 1) * (n + 1)) as f64;
            assert!((e.value - exact).abs() < 1e-5, "n={n}: {e:?}");
        }
        // 2p level of sector 1 equals 2s
        let p = solve_sector(3, &Potential::inverse_power(1.0, 1.0), 1, &grid, 1).unwrap();
        assert!((p.eigen[0].value + 0.0625).abs() < 1e-5, "{:?}", p.eigen[0]);
    }

    #[test]
    fn two_dimensional_coulomb() {
        // -Δ - 1/r in the plane: E_n = -1/(2n+1)², ground state -1
        let grid = SpectralGrid::new(2000, 40.0);
        let s = solve_sector(2, &Potential::inverse_power(1.0, 1.0), 0, &grid, 2).unwrap();
        assert!((s.eigen[0].value + 1.0).abs() < 1e-4, "{:?}", s.eigen[0]);
        assert!((s.eigen[1].value + 1.0 / 9.0).abs() < 1e-4, "{:?}", s.eigen[1]);
    }

    #[test]
    fn one_dimensional_harmonic_parity() {
        // -u'' + r²u: even levels 1, 5; odd levels 3, 7
        let w = Potential::constant(0.0).with_smooth(|r| r * r);
        let grid = SpectralGrid::new(1000, 10.0);
        let even = solve_sector(1, &w, 0, &grid, 2).unwrap();
        let odd = solve_sector(1, &w, 1, &grid, 2).unwrap();
        for (e, x) in even.eigen.iter().chain(&odd.eigen).zip([1.0, 5.0, 3.0, 7.0]) {
            assert!((e.value - x).abs() < 1e-7, "{e:?} vs {x}");
        }
    }

    #[test]
    fn coulomb_omega0() {
        let w = omega0(&Params::oracle(3, 1.0, 1.0, 1.0, 3.0), None).unwrap();
        assert!((w.value - 0.25).abs() < 1e-3, "{w:?}");
        let w2 = omega0(&Params::oracle(3, 2.0, 1.0, 1.0, 3.0), None).unwrap();
        assert!((w2.value - 1.0).abs() < 5e-3, "{w2:?}");
    }

    #[test]
    fn too_many_pairs_is_an_error() {
        let op = build_sector(3, &Potential::constant(1.0), 0, 100, 10.0).unwrap();
        assert!(matches!(lowest_eigenpairs(&op, 101), Err(SpectrumError::ConvergenceFailure(_))));
    }

    #[test]
    fn richardson_recovers_quadratic_error() {
        let raw: Vec<f64> = [1.0, 0.5, 0.25].iter().map(|h: &f64| 3.0 + 0.7 * h * h).collect();
        let e = richardson(&raw);
        assert!((e.value - 3.0).abs() < 1e-12);
        assert!((e.order - 2.0).abs() < 1e-9);
    }
}
