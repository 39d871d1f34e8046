//! Integral transform operators on normalized analytic functions.
//!
//! Each transform is realized two ways and the test suite holds the routes
//! together: coefficient-level series arithmetic through [`TaylorPoly`], and
//! closed-form derivative evaluators whose values come from adaptive path
//! integration along `[0, z]`. Complex powers of derivatives are continued
//! along the path (never taken pointwise), anchored so the derivative at the
//! origin is exactly 1.

use std::sync::Arc;

use num_complex::Complex64;

use crate::func::{DiskFunction, EvalError, EvalResult};
use crate::quadrature::{integrate_segment, LogTracker, QuadratureOpts};
use crate::series::TaylorPoly;

const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
enum Operator {
    /// `J[f](z) = int_0^z f(w)/w dw`
    Alexander,
    /// `I_gamma[f](z) = int_0^z (f'(w))^gamma dw`
    HornichScale { gamma: Complex64 },
    /// `(f (+) g)(z) = int_0^z f'(w) g'(w) dw`
    HornichAdd,
    /// `J_gamma[f](z) = int_0^z (f(w)/w)^gamma dw`
    JGamma { gamma: Complex64 },
    /// `C_beta[f](z) = int_0^z f(w) / (w (1-w)^beta) dw`
    CesaroBeta { beta: f64 },
}

/// A transformed function: derivatives in closed form over the source
/// evaluators, values by quadrature, coefficients by series arithmetic.
#[derive(Clone)]
pub struct TransformedFn {
    source: Arc<dyn DiskFunction>,
    other: Option<Arc<dyn DiskFunction>>,
    op: Operator,
    quad: QuadratureOpts,
}

fn check_unit_deriv(f: &dyn DiskFunction) -> EvalResult<()> {
    let deriv0 = f.deriv(Complex64::ZERO)?;
    if (deriv0 - Complex64::ONE).norm() > NORMALIZATION_TOL {
        return Err(EvalError::NotNormalized { value0: f.value(Complex64::ZERO)?, deriv0 });
    }
    Ok(())
}

fn check_normalized(f: &dyn DiskFunction) -> EvalResult<()> {
    let value0 = f.value(Complex64::ZERO)?;
    let deriv0 = f.deriv(Complex64::ZERO)?;
    if value0.norm() > NORMALIZATION_TOL || (deriv0 - Complex64::ONE).norm() > NORMALIZATION_TOL {
        return Err(EvalError::NotNormalized { value0, deriv0 });
    }
    Ok(())
}

/// `J[f](z) = int_0^z f(w)/w dw`; requires `f(0) = 0`, `f'(0) = 1`.
pub fn alexander(f: Arc<dyn DiskFunction>) -> EvalResult<TransformedFn> {
    check_normalized(f.as_ref())?;
    Ok(TransformedFn { source: f, other: None, op: Operator::Alexander, quad: QuadratureOpts::default() })
}

/// `I_gamma[f](z) = int_0^z (f'(w))^gamma dw` with the power branch anchored
/// at `(f'(0))^gamma = 1`; requires `f'(0) = 1`.
pub fn hornich_scale(gamma: Complex64, f: Arc<dyn DiskFunction>) -> EvalResult<TransformedFn> {
    check_unit_deriv(f.as_ref())?;
    Ok(TransformedFn { source: f, other: None, op: Operator::HornichScale { gamma }, quad: QuadratureOpts::default() })
}

/// `(f (+) g)(z) = int_0^z f'(w) g'(w) dw`; requires `f'(0) = g'(0) = 1`.
pub fn hornich_add(f: Arc<dyn DiskFunction>, g: Arc<dyn DiskFunction>) -> EvalResult<TransformedFn> {
    check_unit_deriv(f.as_ref())?;
    check_unit_deriv(g.as_ref())?;
    Ok(TransformedFn { source: f, other: Some(g), op: Operator::HornichAdd, quad: QuadratureOpts::default() })
}

/// `J_gamma[f](z) = int_0^z (f(w)/w)^gamma dw`, branch anchored at
/// `(f/w)(0) = f'(0) = 1`; requires `f` normalized.
pub fn j_gamma(gamma: Complex64, f: Arc<dyn DiskFunction>) -> EvalResult<TransformedFn> {
    check_normalized(f.as_ref())?;
    Ok(TransformedFn { source: f, other: None, op: Operator::JGamma { gamma }, quad: QuadratureOpts::default() })
}

/// `C_beta[f](z) = int_0^z f(w)/(w (1-w)^beta) dw` for `beta >= 0`;
/// requires `f` normalized.
pub fn cesaro_beta(beta: f64, f: Arc<dyn DiskFunction>) -> EvalResult<TransformedFn> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(EvalError::Domain(format!("cesaro order beta must be finite and >= 0, got {beta}")));
    }
    cesaro_beta_unchecked(beta, f)
}

/// [`cesaro_beta`] without the sign restriction, for exploration.
pub fn cesaro_beta_unchecked(beta: f64, f: Arc<dyn DiskFunction>) -> EvalResult<TransformedFn> {
    if !beta.is_finite() {
        return Err(EvalError::Domain("cesaro order beta must be finite".into()));
    }
    check_normalized(f.as_ref())?;
    Ok(TransformedFn { source: f, other: None, op: Operator::CesaroBeta { beta }, quad: QuadratureOpts::default() })
}

impl TransformedFn {
    pub fn with_quadrature(mut self, quad: QuadratureOpts) -> Self {
        self.quad = quad;
        self
    }

    /// Exponent of the branch-tracked power, when the operator has one.
    fn tracked_gamma(&self) -> Option<Complex64> {
        match self.op {
            Operator::HornichScale { gamma } | Operator::JGamma { gamma } => Some(gamma),
            _ => None,
        }
    }

    /// The function whose continued logarithm feeds the tracked power:
    /// `f'` for the scalar action, `f(w)/w` for the ratio power.
    fn tracked_base(&self, w: Complex64) -> EvalResult<Complex64> {
        match self.op {
            Operator::HornichScale { .. } => self.source.deriv(w),
            Operator::JGamma { .. } => {
                if w == Complex64::ZERO {
                    self.source.deriv(w)
                } else {
                    Ok(self.source.value(w)? / w)
                }
            }
            _ => unreachable!("tracked_base is only used by tracked operators"),
        }
    }

    /// Derivative for the operators that need no branch tracking.
    fn direct_deriv(&self, w: Complex64) -> EvalResult<Complex64> {
        match self.op {
            Operator::Alexander => {
                if w == Complex64::ZERO {
                    return Ok(Complex64::ONE);
                }
                Ok(self.source.value(w)? / w)
            }
            Operator::HornichAdd => {
                let g = self.other.as_ref().expect("second operand present");
                Ok(self.source.deriv(w)? * g.deriv(w)?)
            }
            Operator::CesaroBeta { beta } => {
                if w == Complex64::ZERO {
                    return Ok(Complex64::ONE);
                }
                let u = Complex64::ONE - w;
                Ok(self.source.value(w)? / (w * u.powf(beta)))
            }
            _ => unreachable!("tracked operators handled separately"),
        }
    }
}

impl DiskFunction for TransformedFn {
    fn value(&self, z: Complex64) -> EvalResult<Complex64> {
        if z == Complex64::ZERO {
            return Ok(Complex64::ZERO);
        }
        if let Some(gamma) = self.tracked_gamma() {
            let mut tracker = LogTracker::new(|w| self.tracked_base(w), z)?;
            let integral = integrate_segment(
                &mut |t| Ok((gamma * tracker.log_at(t.re)?).exp()),
                Complex64::ZERO,
                Complex64::ONE,
                self.quad,
            )?;
            Ok(z * integral)
        } else {
            integrate_segment(&mut |w| self.direct_deriv(w), Complex64::ZERO, z, self.quad)
        }
    }

    fn deriv(&self, z: Complex64) -> EvalResult<Complex64> {
        if z == Complex64::ZERO {
            return Ok(Complex64::ONE);
        }
        if let Some(gamma) = self.tracked_gamma() {
            let mut tracker = LogTracker::new(|w| self.tracked_base(w), z)?;
            Ok((gamma * tracker.log_at(1.0)?).exp())
        } else {
            self.direct_deriv(z)
        }
    }

    fn deriv2(&self, z: Complex64) -> EvalResult<Complex64> {
        match self.op {
            Operator::Alexander => {
                if z == Complex64::ZERO {
                    return Ok(0.5 * self.source.deriv2(z)?);
                }
                Ok((z * self.source.deriv(z)? - self.source.value(z)?) / (z * z))
            }
            Operator::HornichAdd => {
                let g = self.other.as_ref().expect("second operand present");
                Ok(self.source.deriv2(z)? * g.deriv(z)?
                    + self.source.deriv(z)? * g.deriv2(z)?)
            }
            _ => Ok(self.pre_schwarzian(z)? * self.deriv(z)?),
        }
    }

    fn pre_schwarzian(&self, z: Complex64) -> EvalResult<Complex64> {
        // J''/J' = f'/f - 1/z extended by J''/J'(0) = f''(0)/2
        let ratio_minus_pole = |f: &dyn DiskFunction| -> EvalResult<Complex64> {
            if z == Complex64::ZERO {
                return Ok(0.5 * f.deriv2(z)?);
            }
            let v = f.value(z)?;
            if v == Complex64::ZERO {
                return Err(EvalError::SingularSample { z, what: "f(z) = 0" });
            }
            Ok(f.deriv(z)? / v - z.inv())
        };
        match self.op {
            Operator::Alexander => ratio_minus_pole(self.source.as_ref()),
            Operator::HornichScale { gamma } => Ok(gamma * self.source.pre_schwarzian(z)?),
            Operator::HornichAdd => {
                let g = self.other.as_ref().expect("second operand present");
                Ok(self.source.pre_schwarzian(z)? + g.pre_schwarzian(z)?)
            }
            Operator::JGamma { gamma } => Ok(gamma * ratio_minus_pole(self.source.as_ref())?),
            Operator::CesaroBeta { beta } => {
                let base = ratio_minus_pole(self.source.as_ref())?;
                Ok(base + Complex64::new(beta, 0.0) / (Complex64::ONE - z))
            }
        }
    }

    fn taylor(&self, degree: usize) -> EvalResult<TaylorPoly> {
        let s = self.source.taylor(degree)?;
        let z = TaylorPoly::identity(degree);
        let deriv_series = match self.op {
            Operator::Alexander => s.div(&z)?,
            Operator::HornichScale { gamma } => s.differentiate().cpow(gamma)?,
            Operator::HornichAdd => {
                let g = self.other.as_ref().expect("second operand present");
                s.differentiate().mul(&g.taylor(degree)?.differentiate())?
            }
            Operator::JGamma { gamma } => s.div(&z)?.cpow(gamma)?,
            Operator::CesaroBeta { beta } => {
                let mut one_minus_z = TaylorPoly::zero(degree);
                one_minus_z = one_minus_z
                    .add(&TaylorPoly::one(degree))?
                    .add(&TaylorPoly::identity(degree).scale(Complex64::new(-1.0, 0.0)))?;
                s.div(&z)?.mul(&one_minus_z.cpow(Complex64::new(-beta, 0.0))?)?
            }
        };
        Ok(deriv_series.integrate())
    }

    fn ray_values(&self, dir: Complex64, radii: &[f64]) -> EvalResult<Vec<Complex64>> {
        if radii.is_empty() {
            return Ok(Vec::new());
        }
        let dir = dir / dir.norm();
        let r_last = *radii.last().expect("nonempty");
        debug_assert!(radii.windows(2).all(|w| w[0] < w[1]), "radii must ascend");
        let mut out = Vec::with_capacity(radii.len());
        let mut acc = Complex64::ZERO;
        let mut prev = 0.0;
        if let Some(gamma) = self.tracked_gamma() {
            let mut tracker = LogTracker::new(|w| self.tracked_base(w), r_last * dir)?;
            for &r in radii {
                let seg = integrate_segment(
                    &mut |w| {
                        let t = (w * dir.conj()).re / r_last;
                        Ok((gamma * tracker.log_at(t)?).exp())
                    },
                    prev * dir,
                    r * dir,
                    self.quad,
                )?;
                acc += seg;
                out.push(acc);
                prev = r;
            }
        } else {
            for &r in radii {
                acc += integrate_segment(&mut |w| self.direct_deriv(w), prev * dir, r * dir, self.quad)?;
                out.push(acc);
                prev = r;
            }
        }
        Ok(out)
    }

    fn ray_derivs(&self, dir: Complex64, radii: &[f64]) -> EvalResult<Vec<Complex64>> {
        if radii.is_empty() {
            return Ok(Vec::new());
        }
        let dir = dir / dir.norm();
        if let Some(gamma) = self.tracked_gamma() {
            let r_last = *radii.last().expect("nonempty");
            let mut tracker = LogTracker::new(|w| self.tracked_base(w), r_last * dir)?;
            radii
                .iter()
                .map(|&r| Ok((gamma * tracker.log_at(r / r_last)?).exp()))
                .collect()
        } else {
            radii.iter().map(|&r| self.direct_deriv(r * dir)).collect()
        }
    }

    fn describe(&self) -> String {
        let src = self.source.describe();
        match &self.op {
            Operator::Alexander => format!("alexander({src})"),
            Operator::HornichScale { gamma } => format!("hornich_scale({gamma}, {src})"),
            Operator::HornichAdd => format!(
                "hornich_add({src}, {})",
                self.other.as_ref().expect("second operand present").describe()
            ),
            Operator::JGamma { gamma } => format!("j_gamma({gamma}, {src})"),
            Operator::CesaroBeta { beta } => format!("cesaro_beta({beta}, {src})"),
        }
    }
}
