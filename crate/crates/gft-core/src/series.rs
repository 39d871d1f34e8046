//! Truncated Taylor series over complex coefficients.
//!
//! A [`TaylorPoly`] of degree `n` stores coefficients `c[0..=n]` of
//! `sum c[k] z^k` and supports the ring/analytic operations needed to
//! realize integral transforms at the coefficient level. Binary
//! operations require equal degrees; nothing is promoted silently.

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

/// Default truncation degree used across the crate.
pub const DEFAULT_DEGREE: usize = 64;

const ANCHOR_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("singular division: divisor has zero constant term and is not the monomial z")]
    SingularDivision,
    #[error("branch anchor requires constant term 1, found {found}")]
    BranchAnchor { found: Complex64 },
    #[error("exp requires zero constant term, found {found}")]
    NotCentered { found: Complex64 },
    #[error("non-finite coefficient at index {index}")]
    NonFinite { index: usize },
}

/// Truncated power series `c[0] + c[1] z + ... + c[degree] z^degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorPoly {
    coeffs: Vec<Complex64>,
}

impl TaylorPoly {
    /// Wraps a coefficient vector; index = power. Rejects empty or non-finite input.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::NonFinite { index: 0 });
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(SeriesError::NonFinite { index });
            }
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self, SeriesError> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![Complex64::ZERO; degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(degree, 0)
    }

    /// The identity map `z` truncated at `degree`.
    pub fn identity(degree: usize) -> Self {
        Self::monomial(degree.max(1), 1)
    }

    /// `z^k` truncated at `degree` (requires `k <= degree`).
    pub fn monomial(degree: usize, k: usize) -> Self {
        assert!(k <= degree, "monomial power {k} exceeds degree {degree}");
        let mut coeffs = vec![Complex64::ZERO; degree + 1];
        coeffs[k] = Complex64::ONE;
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// True when `c[0] = 0` and `c[1] = 1` exactly.
    pub fn is_normalized(&self) -> bool {
        self.coeff(0) == Complex64::ZERO && self.coeff(1) == Complex64::ONE
    }

    /// Explicit re-truncation (or zero-padding) to a new degree.
    pub fn resized(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, Complex64::ZERO);
        Self { coeffs }
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&c| k * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product `c[k] = sum_{j=0..k} a[j] b[k-j]`, truncated at the common degree.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_degree(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; n];
        for k in 0..n {
            let mut acc = Complex64::ZERO;
            for j in 0..=k {
                acc += self.coeffs[j] * other.coeffs[k - j];
            }
            coeffs[k] = acc;
        }
        Ok(Self { coeffs })
    }

    /// Recursive division `c[k] = (a[k] - sum_{j=1..k} b[j] c[k-j]) / b[0]`.
    ///
    /// When the divisor is exactly the monomial `z` and `a[0] = 0`, indices
    /// shift down instead (`c[k] = a[k+1]`, top coefficient zero).
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_degree(other)?;
        if other.coeffs[0] == Complex64::ZERO {
            if other.is_monomial_z() && self.coeffs[0] == Complex64::ZERO {
                return Ok(self.shift_down());
            }
            return Err(SeriesError::SingularDivision);
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / other.coeffs[0];
        }
        Ok(Self { coeffs })
    }

    /// Principal log via `c[k] = a[k] - (1/k) sum_{j=1..k-1} (k-j) a[j] c[k-j]` for `a[0] = 1`.
    pub fn log_series(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0];
        if (a0 - Complex64::ONE).norm() > ANCHOR_TOL {
            return Err(SeriesError::BranchAnchor { found: a0 });
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; n];
        coeffs[0] = a0.ln();
        for k in 1..n {
            let mut acc = (k as f64) * self.coeffs[k];
            for j in 1..k {
                acc -= ((k - j) as f64) * self.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / ((k as f64) * a0);
        }
        Ok(Self { coeffs })
    }

    /// Exponential via `c[k] = (1/k) sum_{j=1..k} j a[j] c[k-j]` for `a[0] = 0`.
    pub fn exp_series(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0];
        if a0.norm() > ANCHOR_TOL {
            return Err(SeriesError::NotCentered { found: a0 });
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; n];
        coeffs[0] = a0.exp();
        for k in 1..n {
            let mut acc = Complex64::ZERO;
            for j in 1..=k {
                acc += (j as f64) * self.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / (k as f64);
        }
        Ok(Self { coeffs })
    }

    /// Complex power `a^gamma = exp(gamma log a)`, branch anchored at `a[0] = 1`.
    pub fn cpow(&self, gamma: Complex64) -> Result<Self, SeriesError> {
        Ok(self.log_series()?.scale(gamma).exp_series()?)
    }

    /// Term-wise derivative; degree kept, top coefficient becomes zero.
    pub fn differentiate(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; n];
        for k in 1..n {
            coeffs[k - 1] = (k as f64) * self.coeffs[k];
        }
        Self { coeffs }
    }

    /// Term-wise antiderivative vanishing at 0; degree kept, the input's top
    /// coefficient is dropped by the truncation cap.
    pub fn integrate(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; n];
        for k in 1..n {
            coeffs[k] = self.coeffs[k - 1] / (k as f64);
        }
        Self { coeffs }
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    fn check_degree(&self, other: &Self) -> Result<(), SeriesError> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(SeriesError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    fn is_monomial_z(&self) -> bool {
        self.coeffs.len() >= 2
            && self.coeffs[0] == Complex64::ZERO
            && self.coeffs[1] == Complex64::ONE
            && self.coeffs[2..].iter().all(|&c| c == Complex64::ZERO)
    }

    fn shift_down(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n);
        coeffs.extend_from_slice(&self.coeffs[1..]);
        coeffs.push(Complex64::ZERO);
        Self { coeffs }
    }
}

impl Serialize for TaylorPoly {
    /// Serializes as an array of `[re, im]` pairs, index = power.
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[c.re, c.im])?;
        }
        seq.end()
    }
}
