//! Sampling grids for disk scans.

use num_complex::Complex64;

/// Polar sampling plan: a geometric radius ladder accumulating toward the
/// boundary crossed with equally spaced directions, plus local refinement
/// rounds around the best cell found by a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskGrid {
    /// Largest radius sampled; must lie in (0, 1).
    pub r_max: f64,
    /// Number of radii in the ladder.
    pub radii: usize,
    /// Number of equally spaced angles over a full turn.
    pub angles: usize,
    /// Local refinement rounds applied around a scan's argmax.
    pub refine: usize,
}

impl Default for DiskGrid {
    fn default() -> Self {
        DiskGrid { r_max: 0.9995, radii: 60, angles: 720, refine: 3 }
    }
}

impl DiskGrid {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.r_max > 0.0 && self.r_max < 1.0) {
            return Err(format!("r_max must lie in (0, 1), got {}", self.r_max));
        }
        if self.radii == 0 || self.angles == 0 {
            return Err("radii and angles must be positive".into());
        }
        Ok(())
    }

    /// Radii `r_j = 1 - q^j` with `q = (1 - r_max)^(1/radii)`, so spacing
    /// tightens geometrically toward the boundary and `r_radii = r_max`.
    pub fn radius_ladder(&self) -> Vec<f64> {
        let q = (1.0 - self.r_max).powf(1.0 / self.radii as f64);
        (1..=self.radii).map(|j| 1.0 - q.powi(j as i32)).collect()
    }

    /// Directions `exp(2 pi i k / angles)`.
    pub fn directions(&self) -> Vec<Complex64> {
        (0..self.angles)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / self.angles as f64))
            .collect()
    }
}
