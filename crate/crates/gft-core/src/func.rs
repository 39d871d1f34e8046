//! Common evaluator interface for analytic functions of the unit disk.
//!
//! Everything downstream (transforms, norm scans, membership margins) works
//! against [`DiskFunction`]: pointwise value/derivative evaluation, the
//! pre-Schwarzian ratio `f''/f'`, a truncated Taylor realization, and bulk
//! evaluation along a radial ray. Ray methods exist so implementations with
//! path-dependent state (quadrature values, tracked logarithms) can reuse
//! work across a radius ladder; the defaults just loop.

use num_complex::Complex64;
use thiserror::Error;

use crate::series::{SeriesError, TaylorPoly};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("singular sample at z = {z}: {what}")]
    SingularSample { z: Complex64, what: &'static str },
    #[error("branch tracking failed near z = {z}: {what}")]
    BranchTracking { z: Complex64, what: &'static str },
    #[error("quadrature did not converge near w = {w} (depth {depth}, last delta {last_delta:.3e})")]
    Quadrature { w: Complex64, depth: usize, last_delta: f64 },
    #[error("source is not normalized: f(0) = {value0}, f'(0) = {deriv0}")]
    NotNormalized { value0: Complex64, deriv0: Complex64 },
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type EvalResult<T> = Result<T, EvalError>;

/// An analytic function on the unit disk with two derivatives and an
/// optional coefficient realization.
pub trait DiskFunction: Send + Sync {
    fn value(&self, z: Complex64) -> EvalResult<Complex64>;
    fn deriv(&self, z: Complex64) -> EvalResult<Complex64>;
    fn deriv2(&self, z: Complex64) -> EvalResult<Complex64>;

    /// The ratio `f''(z)/f'(z)`.
    fn pre_schwarzian(&self, z: Complex64) -> EvalResult<Complex64> {
        let d = self.deriv(z)?;
        if d == Complex64::ZERO {
            return Err(EvalError::SingularSample { z, what: "f'(z) = 0" });
        }
        Ok(self.deriv2(z)? / d)
    }

    /// Taylor coefficients through `z^degree`.
    fn taylor(&self, degree: usize) -> EvalResult<TaylorPoly>;

    /// Values at `r * dir` for each radius in `radii` (ascending, `|dir| = 1`).
    fn ray_values(&self, dir: Complex64, radii: &[f64]) -> EvalResult<Vec<Complex64>> {
        radii.iter().map(|&r| self.value(r * dir)).collect()
    }

    /// First derivatives at `r * dir` for each radius in `radii`.
    fn ray_derivs(&self, dir: Complex64, radii: &[f64]) -> EvalResult<Vec<Complex64>> {
        radii.iter().map(|&r| self.deriv(r * dir)).collect()
    }

    /// Human-readable description for reports.
    fn describe(&self) -> String;
}

impl DiskFunction for TaylorPoly {
    fn value(&self, z: Complex64) -> EvalResult<Complex64> {
        Ok(self.evaluate(z))
    }

    fn deriv(&self, z: Complex64) -> EvalResult<Complex64> {
        Ok(self.differentiate().evaluate(z))
    }

    fn deriv2(&self, z: Complex64) -> EvalResult<Complex64> {
        Ok(self.differentiate().differentiate().evaluate(z))
    }

    fn taylor(&self, degree: usize) -> EvalResult<TaylorPoly> {
        if degree != self.degree() {
            return Err(SeriesError::DegreeMismatch { left: self.degree(), right: degree }.into());
        }
        Ok(self.clone())
    }

    fn describe(&self) -> String {
        format!("series[degree {}]", self.degree())
    }
}

/// `(z f'(z)/f(z), 1 + z f''(z)/f'(z))` for membership tests; errors on
/// singular samples where `f` or `f'` vanishes at `z`.
pub fn log_derivative_pair(f: &dyn DiskFunction, z: Complex64) -> EvalResult<(Complex64, Complex64)> {
    let v = f.value(z)?;
    let d = f.deriv(z)?;
    if v == Complex64::ZERO || !v.is_finite() {
        return Err(EvalError::SingularSample { z, what: "f(z) = 0" });
    }
    if d == Complex64::ZERO || !d.is_finite() {
        return Err(EvalError::SingularSample { z, what: "f'(z) = 0" });
    }
    let dd = f.deriv2(z)?;
    Ok((z * d / v, Complex64::ONE + z * dd / d))
}
