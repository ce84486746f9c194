//! Graded radial grids: geometric on `[r0, 1]`, uniform on `[1, r_max]`.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    /// First abscissa.
    pub r0: f64,
    /// Ratio between adjacent points on the geometric part.
    pub ratio: f64,
    /// Spacing on the uniform part.
    pub spacing: f64,
    pub r_max: f64,
}

impl GridSpec {
    /// Defaults scaled to the frequency: `r0 = 1e-6/√ω`, `r_max = 30/√ω`.
    pub fn for_omega(omega: f64) -> Self {
        let l = 1.0 / omega.sqrt();
        GridSpec { r0: 1e-6 * l, ratio: 1.01, spacing: 0.01 * l.min(1.0), r_max: 30.0 * l }
    }

    pub fn build(&self) -> Vec<f64> {
        graded_grid(self.r0, self.ratio, self.spacing, self.r_max)
    }
}

/// Step `min(r·(ratio-1), spacing)`: geometric near the origin, uniform
/// once the geometric spacing reaches `spacing`. Always ends at `r_max`.
pub fn graded_grid(r0: f64, ratio: f64, spacing: f64, r_max: f64) -> Vec<f64> {
    assert!(r0 > 0.0 && ratio > 1.0 && spacing > 0.0 && r_max > r0);
    let mut out = Vec::new();
    let mut r = r0;
    while r < r_max - 0.5 * spacing.min(r * (ratio - 1.0)) {
        out.push(r);
        r += (r * (ratio - 1.0)).min(spacing);
    }
    out.push(r_max);
    out
}
