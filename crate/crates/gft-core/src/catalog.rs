//! Closed-form catalog of analytic functions on the unit disk.
//!
//! Each entry carries exact evaluators for `f`, `f'`, `f''` and an exact
//! Taylor coefficient generator. All powers of `1 - z` use the principal
//! branch, which is the analytic one on the disk since `1 - z` stays in the
//! right half-plane there.

use num_complex::Complex64;
use thiserror::Error;

use crate::func::{DiskFunction, EvalError, EvalResult};
use crate::series::TaylorPoly;

const LIMIT_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum CatalogError {
    #[error("unknown catalog function `{0}`")]
    UnknownName(String),
    #[error("missing parameter `{param}` for `{name}`")]
    MissingParam { name: &'static str, param: &'static str },
    #[error("parameter out of range for `{name}`: {detail}")]
    ParamOutOfRange { name: &'static str, detail: String },
}

/// Families exposed by name to the CLI and scenario registry.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogSpec {
    /// `z / (1-z)^(2-2 lambda)`, starlike of order `lambda`.
    KoebeOrder { lambda: f64 },
    /// `z / (1-z)`, the half-plane map.
    HalfPlane,
    /// `-log(1-z)`.
    NegLog,
    /// `((1-z)^(2 lambda - 1) - 1)/(1 - 2 lambda)`, convex of order `lambda`;
    /// degenerates to `-log(1-z)` at `lambda = 1/2`.
    ConvexExtremal { lambda: f64 },
    /// `z (1-z)^(2 (lambda-1) e^{-i alpha} cos alpha)`, spirallike extremal.
    SpiralExtremal { alpha: f64, lambda: f64 },
    /// `z (1-z)^(i-1)`, univalent but with unbounded pre-Schwarzian norm.
    RoysterExample,
    /// `(1-z)^mu`, the unnormalized pure power map.
    PowerMap { mu: Complex64 },
}

#[derive(Debug, Clone)]
enum Form {
    /// `z (1-z)^nu`
    ZTimesPow { nu: Complex64 },
    /// `((1-z)^(-c) - 1)/c` with `|c|` bounded away from 0
    PowRatio { c: f64 },
    /// `-log(1-z)`
    NegLog,
    /// `(1-z)^mu`
    PowerMap { mu: Complex64 },
}

/// A catalog function with closed-form evaluators.
#[derive(Debug, Clone)]
pub struct AnalyticFn {
    name: String,
    spec: CatalogSpec,
    form: Form,
}

fn require_order(name: &'static str, lambda: f64) -> Result<(), CatalogError> {
    if !lambda.is_finite() || lambda >= 1.0 {
        return Err(CatalogError::ParamOutOfRange {
            name,
            detail: format!("order lambda must be finite and < 1, got {lambda}"),
        });
    }
    Ok(())
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

impl AnalyticFn {
    pub fn build(spec: &CatalogSpec) -> Result<Self, CatalogError> {
        match *spec {
            CatalogSpec::KoebeOrder { lambda } => {
                require_order("koebe_order", lambda)?;
                Ok(Self {
                    name: format!("koebe_order({lambda})"),
                    spec: spec.clone(),
                    form: Form::ZTimesPow { nu: Complex64::new(2.0 * lambda - 2.0, 0.0) },
                })
            }
            CatalogSpec::HalfPlane => Ok(Self {
                name: "half_plane".into(),
                spec: spec.clone(),
                form: Form::ZTimesPow { nu: Complex64::new(-1.0, 0.0) },
            }),
            CatalogSpec::NegLog => Ok(Self {
                name: "neg_log".into(),
                spec: spec.clone(),
                form: Form::NegLog,
            }),
            CatalogSpec::ConvexExtremal { lambda } => {
                require_order("convex_extremal", lambda)?;
                let c = 1.0 - 2.0 * lambda;
                let form = if c.abs() < LIMIT_TOL { Form::NegLog } else { Form::PowRatio { c } };
                Ok(Self { name: format!("convex_extremal({lambda})"), spec: spec.clone(), form })
            }
            CatalogSpec::SpiralExtremal { alpha, lambda } => {
                require_order("spiral_extremal", lambda)?;
                if !alpha.is_finite() || alpha.abs() >= std::f64::consts::FRAC_PI_2 {
                    return Err(CatalogError::ParamOutOfRange {
                        name: "spiral_extremal",
                        detail: format!("spiral angle alpha must satisfy |alpha| < pi/2, got {alpha}"),
                    });
                }
                let nu = 2.0 * (lambda - 1.0) * alpha.cos() * Complex64::new(0.0, -alpha).exp();
                Ok(Self {
                    name: format!("spiral_extremal({alpha}, {lambda})"),
                    spec: spec.clone(),
                    form: Form::ZTimesPow { nu },
                })
            }
            CatalogSpec::RoysterExample => Ok(Self {
                name: "royster_example".into(),
                spec: spec.clone(),
                form: Form::ZTimesPow { nu: Complex64::new(-1.0, 1.0) },
            }),
            CatalogSpec::PowerMap { mu } => {
                if mu == Complex64::ZERO || !mu.is_finite() {
                    return Err(CatalogError::ParamOutOfRange {
                        name: "power_map",
                        detail: "exponent mu must be finite and nonzero".into(),
                    });
                }
                Ok(Self {
                    name: format!("power_map({})", format_complex(mu)),
                    spec: spec.clone(),
                    form: Form::PowerMap { mu },
                })
            }
        }
    }

    /// Builder keyed by CLI name, pulling whichever parameters the family needs.
    pub fn build_named(
        name: &str,
        lambda: Option<f64>,
        alpha: Option<f64>,
        mu: Option<Complex64>,
    ) -> Result<Self, CatalogError> {
        let lam = |n| lambda.ok_or(CatalogError::MissingParam { name: n, param: "lambda" });
        let spec = match name {
            "koebe_order" => CatalogSpec::KoebeOrder { lambda: lam("koebe_order")? },
            "half_plane" => CatalogSpec::HalfPlane,
            "neg_log" => CatalogSpec::NegLog,
            "convex_extremal" => CatalogSpec::ConvexExtremal { lambda: lam("convex_extremal")? },
            "spiral_extremal" => CatalogSpec::SpiralExtremal {
                alpha: alpha.ok_or(CatalogError::MissingParam {
                    name: "spiral_extremal",
                    param: "alpha",
                })?,
                lambda: lam("spiral_extremal")?,
            },
            "royster_example" => CatalogSpec::RoysterExample,
            "power_map" => CatalogSpec::PowerMap {
                mu: mu.ok_or(CatalogError::MissingParam { name: "power_map", param: "mu" })?,
            },
            other => return Err(CatalogError::UnknownName(other.to_string())),
        };
        Self::build(&spec)
    }

    pub fn koebe_order(lambda: f64) -> Result<Self, CatalogError> {
        Self::build(&CatalogSpec::KoebeOrder { lambda })
    }

    pub fn half_plane() -> Self {
        Self::build(&CatalogSpec::HalfPlane).expect("parameter-free")
    }

    pub fn neg_log() -> Self {
        Self::build(&CatalogSpec::NegLog).expect("parameter-free")
    }

    pub fn convex_extremal(lambda: f64) -> Result<Self, CatalogError> {
        Self::build(&CatalogSpec::ConvexExtremal { lambda })
    }

    pub fn spiral_extremal(alpha: f64, lambda: f64) -> Result<Self, CatalogError> {
        Self::build(&CatalogSpec::SpiralExtremal { alpha, lambda })
    }

    pub fn royster_example() -> Self {
        Self::build(&CatalogSpec::RoysterExample).expect("parameter-free")
    }

    pub fn power_map(mu: Complex64) -> Result<Self, CatalogError> {
        Self::build(&CatalogSpec::PowerMap { mu })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spec(&self) -> &CatalogSpec {
        &self.spec
    }

    /// True for entries with `f(0) = 0` and `f'(0) = 1`.
    pub fn is_normalized(&self) -> bool {
        !matches!(self.form, Form::PowerMap { .. })
    }

    /// `z f'(z)/f(z)` in closed form.
    pub fn log_deriv(&self, z: Complex64) -> EvalResult<Complex64> {
        let u = Complex64::ONE - z;
        let out = match self.form {
            Form::ZTimesPow { nu } => Complex64::ONE - nu * z / u,
            _ => {
                let v = self.value(z)?;
                if v == Complex64::ZERO {
                    return Err(EvalError::SingularSample { z, what: "f(z) = 0" });
                }
                z * self.deriv(z)? / v
            }
        };
        finite(out, z)
    }
}

fn finite(out: Complex64, z: Complex64) -> EvalResult<Complex64> {
    if out.is_finite() {
        Ok(out)
    } else {
        Err(EvalError::SingularSample { z, what: "non-finite closed-form evaluation" })
    }
}

impl DiskFunction for AnalyticFn {
    fn value(&self, z: Complex64) -> EvalResult<Complex64> {
        let u = Complex64::ONE - z;
        let out = match self.form {
            Form::ZTimesPow { nu } => z * u.powc(nu),
            Form::PowRatio { c } => {
                let c = Complex64::new(c, 0.0);
                (u.powc(-c) - Complex64::ONE) / c
            }
            Form::NegLog => -u.ln(),
            Form::PowerMap { mu } => u.powc(mu),
        };
        finite(out, z)
    }

    fn deriv(&self, z: Complex64) -> EvalResult<Complex64> {
        let u = Complex64::ONE - z;
        let out = match self.form {
            Form::ZTimesPow { nu } => {
                u.powc(nu - Complex64::ONE) * (Complex64::ONE - (Complex64::ONE + nu) * z)
            }
            Form::PowRatio { c } => u.powc(Complex64::new(-c - 1.0, 0.0)),
            Form::NegLog => u.inv(),
            Form::PowerMap { mu } => -mu * u.powc(mu - Complex64::ONE),
        };
        finite(out, z)
    }

    fn deriv2(&self, z: Complex64) -> EvalResult<Complex64> {
        let u = Complex64::ONE - z;
        let two = Complex64::new(2.0, 0.0);
        let out = match self.form {
            Form::ZTimesPow { nu } => {
                nu * u.powc(nu - two) * ((Complex64::ONE + nu) * z - two)
            }
            Form::PowRatio { c } => {
                Complex64::new(c + 1.0, 0.0) * u.powc(Complex64::new(-c - 2.0, 0.0))
            }
            Form::NegLog => (u * u).inv(),
            Form::PowerMap { mu } => mu * (mu - Complex64::ONE) * u.powc(mu - two),
        };
        finite(out, z)
    }

    fn pre_schwarzian(&self, z: Complex64) -> EvalResult<Complex64> {
        let u = Complex64::ONE - z;
        let out = match self.form {
            Form::ZTimesPow { nu } => {
                let w = Complex64::ONE + nu;
                nu * (w * z - Complex64::new(2.0, 0.0)) / (u * (Complex64::ONE - w * z))
            }
            Form::PowRatio { c } => Complex64::new(c + 1.0, 0.0) / u,
            Form::NegLog => u.inv(),
            Form::PowerMap { mu } => (Complex64::ONE - mu) / u,
        };
        finite(out, z)
    }

    fn taylor(&self, degree: usize) -> EvalResult<TaylorPoly> {
        let n = degree + 1;
        let coeffs = match self.form {
            Form::ZTimesPow { nu } => {
                // binomial coefficients of (1-z)^nu, shifted up one power
                let mut cs = vec![Complex64::ZERO; n];
                let mut b = Complex64::ONE;
                for k in 0..degree {
                    if k + 1 < n {
                        cs[k + 1] = b;
                    }
                    b = b * (Complex64::new(k as f64, 0.0) - nu) / (k as f64 + 1.0);
                }
                cs
            }
            Form::PowRatio { c } => {
                // ((1-z)^(-c) - 1)/c = sum_{k>=1} [(c+1)(c+2)...(c+k-1)/k!] z^k
                let mut cs = vec![Complex64::ZERO; n];
                let mut a = Complex64::ONE;
                for k in 1..n {
                    cs[k] = a;
                    a = a * Complex64::new(c + k as f64, 0.0) / (k as f64 + 1.0);
                }
                cs
            }
            Form::NegLog => {
                let mut cs = vec![Complex64::ZERO; n];
                for (k, slot) in cs.iter_mut().enumerate().skip(1) {
                    *slot = Complex64::new(1.0 / k as f64, 0.0);
                }
                cs
            }
            Form::PowerMap { mu } => {
                let mut cs = vec![Complex64::ZERO; n];
                let mut b = Complex64::ONE;
                for k in 0..n {
                    cs[k] = b;
                    b = b * (Complex64::new(k as f64, 0.0) - mu) / (k as f64 + 1.0);
                }
                cs
            }
        };
        Ok(TaylorPoly::new(coeffs)?)
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::func::log_derivative_pair;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn entries() -> Vec<AnalyticFn> {
        vec![
            AnalyticFn::koebe_order(0.25).unwrap(),
            AnalyticFn::koebe_order(-0.5).unwrap(),
            AnalyticFn::half_plane(),
            AnalyticFn::neg_log(),
            AnalyticFn::convex_extremal(0.25).unwrap(),
            AnalyticFn::convex_extremal(-1.0).unwrap(),
            AnalyticFn::spiral_extremal(0.5, 0.25).unwrap(),
            AnalyticFn::royster_example(),
            AnalyticFn::power_map(c(-1.0, 1.0)).unwrap(),
        ]
    }

    fn random_points(n: usize, r_max: f64, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let r = r_max * rng.gen::<f64>().sqrt();
                let th = rng.gen::<f64>() * std::f64::consts::TAU;
                Complex64::from_polar(r, th)
            })
            .collect()
    }

    #[test]
    fn derivatives_match_finite_differences_on_real_and_imaginary_steps() {
        let h = 1e-5;
        for f in entries() {
            for &z in &random_points(100, 0.7, 11) {
                let d = f.deriv(z).unwrap();
                let dd = f.deriv2(z).unwrap();
                for step in [c(h, 0.0), c(0.0, h)] {
                    let fp = f.value(z + step).unwrap();
                    let fm = f.value(z - step).unwrap();
                    let fd = (fp - fm) / (2.0 * step);
                    assert!(
                        (fd - d).norm() < 1e-6 * d.norm().max(1.0),
                        "{}: f' vs central difference at {z}: {d} vs {fd}",
                        f.name()
                    );
                    let f0 = f.value(z).unwrap();
                    let fdd = (fp - 2.0 * f0 + fm) / (step * step);
                    assert!(
                        (fdd - dd).norm() < 1e-4 * dd.norm().max(1.0),
                        "{}: f'' vs central difference at {z}: {dd} vs {fdd}",
                        f.name()
                    );
                }
            }
        }
    }

    #[test]
    fn pre_schwarzian_closed_form_matches_derivative_ratio() {
        for f in entries() {
            for &z in &random_points(50, 0.8, 23) {
                let want = f.deriv2(z).unwrap() / f.deriv(z).unwrap();
                let got = f.pre_schwarzian(z).unwrap();
                assert!(
                    (got - want).norm() < 1e-9 * want.norm().max(1.0),
                    "{} at {z}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn truncated_series_agrees_with_closed_form_inside_radius_07() {
        // degree 96 pushes the truncation tail of the steepest entries
        // (coefficient growth ~ k^2) below the 1e-8 bar at |z| = 0.7
        for f in entries() {
            let series = f.taylor(96).unwrap();
            for &z in &random_points(60, 0.7, 37) {
                let want = f.value(z).unwrap();
                let got = series.evaluate(z);
                assert!(
                    (got - want).norm() < 1e-8,
                    "{} at {z}: series {got} vs closed form {want}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn normalized_entries_fix_the_origin_with_unit_derivative() {
        for f in entries() {
            if f.is_normalized() {
                assert_eq!(f.value(Complex64::ZERO).unwrap(), Complex64::ZERO, "{}", f.name());
                assert_eq!(f.deriv(Complex64::ZERO).unwrap(), Complex64::ONE, "{}", f.name());
                let s = f.taylor(8).unwrap();
                assert!(s.is_normalized(), "{}", f.name());
            }
        }
        assert!(!AnalyticFn::power_map(c(0.0, 1.0)).unwrap().is_normalized());
    }

    #[test]
    fn principal_power_matches_polar_decomposition() {
        // independent route: (1-z)^nu = r^a e^{-b t} (cos(a t + b ln r) + i sin(...))
        let nu = c(-1.0, 1.0);
        let z = c(0.3, -0.55);
        let u = Complex64::ONE - z;
        let (r, t) = u.to_polar();
        let (a, b) = (nu.re, nu.im);
        let mag = r.powf(a) * (-b * t).exp();
        let ang = a * t + b * r.ln();
        let want = z * Complex64::from_polar(mag, ang);
        let got = AnalyticFn::royster_example().value(z).unwrap();
        assert!((got - want).norm() < 1e-14 * want.norm());
    }

    #[test]
    fn convex_extremal_degenerates_to_neg_log_at_half() {
        let f = AnalyticFn::convex_extremal(0.5).unwrap();
        let g = AnalyticFn::neg_log();
        let z = c(0.4, 0.3);
        assert_eq!(f.value(z).unwrap(), g.value(z).unwrap());
        // and approaching the limit the closed form converges to it
        let near = AnalyticFn::convex_extremal(0.5 - 1e-9).unwrap();
        assert!((near.value(z).unwrap() - g.value(z).unwrap()).norm() < 1e-8);
    }

    #[test]
    fn koebe_order_satisfies_its_starlike_inequality_on_a_dense_grid() {
        for lambda in [-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75] {
            let f = AnalyticFn::koebe_order(lambda).unwrap();
            let mut worst = f64::INFINITY;
            for jr in 1..=200 {
                let r = 0.999 * jr as f64 / 200.0;
                for ja in 0..200 {
                    let th = std::f64::consts::TAU * ja as f64 / 200.0;
                    let q = f.log_deriv(Complex64::from_polar(r, th)).unwrap();
                    worst = worst.min(q.re - lambda);
                }
            }
            assert!(worst >= -1e-9, "lambda {lambda}: starlike margin {worst}");
        }
    }

    #[test]
    fn spiral_extremal_satisfies_its_spirallike_inequality_on_a_dense_grid() {
        for (alpha, lambda) in [(0.5, 0.25), (-0.5, 0.0), (1.2, -0.5), (0.0, 0.5)] {
            let f = AnalyticFn::spiral_extremal(alpha, lambda).unwrap();
            let rot = Complex64::new(0.0, alpha).exp();
            let mut worst = f64::INFINITY;
            for jr in 1..=200 {
                let r = 0.999 * jr as f64 / 200.0;
                for ja in 0..200 {
                    let th = std::f64::consts::TAU * ja as f64 / 200.0;
                    let q = f.log_deriv(Complex64::from_polar(r, th)).unwrap();
                    worst = worst.min((rot * q).re - lambda * alpha.cos());
                }
            }
            assert!(worst >= -1e-9, "(alpha, lambda) = ({alpha}, {lambda}): margin {worst}");
        }
    }

    #[test]
    fn log_derivative_pair_reports_singular_samples() {
        // koebe_order(-1) has f'(-1/3) = 0
        let f = AnalyticFn::koebe_order(-1.0).unwrap();
        let z = c(-1.0 / 3.0, 0.0);
        assert!((f.deriv(z).unwrap()).norm() < 1e-15);
        assert!(matches!(
            log_derivative_pair(&f, z),
            Err(EvalError::SingularSample { .. })
        ));
        // a regular point works and the two components are consistent
        let z = c(0.2, 0.1);
        let (s, k) = log_derivative_pair(&f, z).unwrap();
        assert!((s - f.log_deriv(z).unwrap()).norm() < 1e-12);
        assert!((k - (Complex64::ONE + z * f.pre_schwarzian(z).unwrap())).norm() < 1e-12);
    }

    #[test]
    fn builders_reject_out_of_range_parameters() {
        assert!(matches!(
            AnalyticFn::koebe_order(1.0),
            Err(CatalogError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            AnalyticFn::spiral_extremal(std::f64::consts::FRAC_PI_2, 0.0),
            Err(CatalogError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            AnalyticFn::power_map(Complex64::ZERO),
            Err(CatalogError::ParamOutOfRange { .. })
        ));
        match AnalyticFn::build_named("mystery", None, None, None) {
            Err(CatalogError::UnknownName(n)) => assert_eq!(n, "mystery"),
            other => panic!("expected unknown-name error, got {other:?}"),
        }
    }

    #[test]
    fn named_builder_requires_family_parameters() {
        assert!(matches!(
            AnalyticFn::build_named("koebe_order", None, None, None),
            Err(CatalogError::MissingParam { param: "lambda", .. })
        ));
        assert!(matches!(
            AnalyticFn::build_named("spiral_extremal", Some(0.0), None, None),
            Err(CatalogError::MissingParam { param: "alpha", .. })
        ));
        let f = AnalyticFn::build_named("spiral_extremal", Some(0.25), Some(0.5), None).unwrap();
        assert_eq!(f.name(), "spiral_extremal(0.5, 0.25)");
    }
}
