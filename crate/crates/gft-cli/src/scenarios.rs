//! Compiled-in verification scenarios. Each one turns a theorem, sharpness
//! claim, or counterexample into named checks with explicit tolerances, so a
//! report is reproducible from its id and config alone.

use std::sync::Arc;

use gft_core::{
    alexander, alexander_spiral_univalence, cesaro_beta, hornich_add, hornich_scale, j_gamma,
    membership_margin, norm_estimate, radial_norm_limit, royster_segment_univalent,
    royster_univalent, set_membership, univalence_falsify, AnalyticFn, ClassSpec, Complex64,
    DiskFunction, EvalError, EvalResult, TransformedFn, UnivalenceSet,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{collision_value, complex_value, CheckOutcome, ScenarioReport};
use crate::settings::Settings;

pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    pub claim: &'static str,
    pub run: fn(&mut Ctx) -> EvalResult<()>,
}

pub struct Ctx<'a> {
    pub settings: &'a Settings,
    scenario: &'static str,
    checks: Vec<CheckOutcome>,
}

impl<'a> Ctx<'a> {
    fn new(settings: &'a Settings, scenario: &'static str) -> Self {
        Ctx { settings, scenario, checks: Vec::new() }
    }

    /// Tolerance for a check, after `--tol-overrides` keyed by
    /// "scenario-id/check-id".
    fn tol(&self, id: &str, base: f64) -> f64 {
        let key = format!("{}/{}", self.scenario, id);
        self.settings.tol.get(&key).copied().unwrap_or(base)
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        id: &str,
        comparator: &'static str,
        measured: Value,
        expected: Value,
        tolerance: Option<f64>,
        pass: bool,
        witness: Option<Value>,
    ) {
        self.checks.push(CheckOutcome {
            id: id.to_string(),
            comparator,
            measured,
            expected,
            tolerance,
            pass,
            witness,
            error: None,
        });
    }

    fn le(&mut self, id: &str, measured: f64, bound: f64, tol: f64, witness: Option<Value>) {
        let tol = self.tol(id, tol);
        let pass = measured.is_finite() && measured <= bound + tol;
        self.push(id, "le", json!(measured), json!(bound), Some(tol), pass, witness);
    }

    fn ge(&mut self, id: &str, measured: f64, bound: f64, tol: f64, witness: Option<Value>) {
        let tol = self.tol(id, tol);
        let pass = measured.is_finite() && measured >= bound - tol;
        self.push(id, "ge", json!(measured), json!(bound), Some(tol), pass, witness);
    }

    fn within(&mut self, id: &str, measured: f64, expected: f64, tol: f64, witness: Option<Value>) {
        let tol = self.tol(id, tol);
        let pass = measured.is_finite() && (measured - expected).abs() <= tol;
        self.push(id, "within", json!(measured), json!(expected), Some(tol), pass, witness);
    }

    fn expect_bool(&mut self, id: &str, measured: bool, expected: bool, witness: Option<Value>) {
        let cmp = if expected { "is-true" } else { "is-false" };
        self.push(id, cmp, json!(measured), json!(expected), None, measured == expected, witness);
    }

    fn engine_error(&mut self, e: &EvalError) {
        self.checks.push(CheckOutcome {
            id: "engine".into(),
            comparator: "ran",
            measured: Value::Null,
            expected: Value::Null,
            tolerance: None,
            pass: false,
            witness: None,
            error: Some(e.to_string()),
        });
    }
}

pub fn run_scenario(sc: &Scenario, settings: &Settings) -> ScenarioReport {
    let start = std::time::Instant::now();
    let mut ctx = Ctx::new(settings, sc.id);
    if let Err(e) = (sc.run)(&mut ctx) {
        ctx.engine_error(&e);
    }
    ScenarioReport {
        id: sc.id,
        description: sc.description,
        claim: sc.claim,
        checks: ctx.checks,
        runtime_ms: start.elapsed().as_millis(),
    }
}

pub fn find(id: &str) -> Option<&'static Scenario> {
    REGISTRY.iter().find(|s| s.id == id)
}

fn arc(f: AnalyticFn) -> Arc<dyn DiskFunction> {
    Arc::new(f)
}

fn disk_points(n: usize, r_max: f64, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = r_max * rng.gen::<f64>().sqrt();
            let th = rng.gen::<f64>() * std::f64::consts::TAU;
            Complex64::from_polar(r, th)
        })
        .collect()
}

fn norm_convex_order(ctx: &mut Ctx) -> EvalResult<()> {
    for lambda in [-1.0, -0.5, 0.0, 0.5] {
        let f = AnalyticFn::convex_extremal(lambda).expect("order below one");
        let est = norm_estimate(&f, &ctx.settings.grid)?;
        let bound = 4.0 * (1.0 - lambda);
        let w = Some(complex_value(est.argmax));
        ctx.le(&format!("upper(lambda={lambda})"), est.value, bound, 1e-6, w.clone());
        ctx.ge(&format!("sharp(lambda={lambda})"), est.value, bound, 0.02, w);
    }
    Ok(())
}

fn norm_alexander_spiral(ctx: &mut Ctx) -> EvalResult<()> {
    let alphas = ctx.settings.alphas.clone();
    for alpha in alphas {
        for lambda in [0.0, 0.5] {
            let f = arc(AnalyticFn::spiral_extremal(alpha, lambda).map_err(to_domain)?);
            let t = alexander(f)?;
            let est = norm_estimate(&t, &ctx.settings.grid)?;
            let bound = 4.0 * (1.0 - lambda) * alpha.cos();
            let w = Some(complex_value(est.argmax));
            ctx.le(&format!("upper(alpha={alpha},lambda={lambda})"), est.value, bound, 1e-6, w.clone());
            ctx.ge(&format!("sharp(alpha={alpha},lambda={lambda})"), est.value, bound, 0.02, w);
        }
    }
    Ok(())
}

fn norm_cesaro_sharp(ctx: &mut Ctx) -> EvalResult<()> {
    for beta in [0.0, 0.5, 1.0, 2.0] {
        let t = cesaro_beta(beta, arc(AnalyticFn::koebe_order(0.0).expect("order zero")))?;
        let est = norm_estimate(&t, &ctx.settings.grid)?;
        let bound = 4.0 + 2.0 * beta;
        let w = Some(complex_value(est.argmax));
        ctx.le(&format!("upper(beta={beta})"), est.value, bound, 1e-6, w.clone());
        ctx.ge(&format!("sharp(beta={beta})"), est.value, bound, 0.02, w);
    }
    Ok(())
}

fn norm_cesaro_subordinate(ctx: &mut Ctx) -> EvalResult<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.settings.seed);
    let grid = ctx.settings.grid;
    for pick in 0..8 {
        let beta = rng.gen_range(0.0..3.0);
        let f: Arc<dyn DiskFunction> = match pick % 5 {
            0 => arc(AnalyticFn::koebe_order(rng.gen_range(-1.0..0.75)).map_err(to_domain)?),
            1 => arc(AnalyticFn::convex_extremal(rng.gen_range(-1.0..0.75)).map_err(to_domain)?),
            2 => arc(
                AnalyticFn::spiral_extremal(rng.gen_range(-1.2..1.2), rng.gen_range(-0.5..0.75))
                    .map_err(to_domain)?,
            ),
            3 => arc(AnalyticFn::half_plane()),
            _ => arc(AnalyticFn::neg_log()),
        };
        let j_norm = norm_estimate(&alexander(f.clone())?, &grid)?.value;
        let c = cesaro_beta(beta, f)?;
        let est = norm_estimate(&c, &grid)?;
        let w = json!({"transform": c.describe(), "argmax": complex_value(est.argmax)});
        ctx.le(
            &format!("subordinate(pick={pick})"),
            est.value,
            j_norm + 2.0 * beta,
            1e-6,
            Some(w),
        );
    }
    Ok(())
}

fn radial_limit_cesaro(ctx: &mut Ctx) -> EvalResult<()> {
    let alphas = ctx.settings.alphas.clone();
    for alpha in alphas {
        for lambda in [0.0, 0.5] {
            for beta in [0.0, 1.0, 2.0] {
                let f = arc(AnalyticFn::spiral_extremal(alpha, lambda).map_err(to_domain)?);
                let t = cesaro_beta(beta, f)?;
                let lim = radial_norm_limit(&t, Complex64::ONE)?;
                let nu = 2.0 * (lambda - 1.0) * alpha.cos() * Complex64::from_polar(1.0, -alpha);
                let derived = 2.0 * (Complex64::new(beta, 0.0) - nu).norm();
                let tag = format!("alpha={alpha},lambda={lambda},beta={beta}");
                let w = json!({"last_sample": lim.last, "diverged": lim.diverged});
                ctx.within(&format!("derived({tag})"), lim.limit, derived, 1e-2, Some(w));
                if alpha == 0.0 || beta == 0.0 {
                    let aligned = 4.0 * (1.0 - lambda) * alpha.cos() + 2.0 * beta;
                    ctx.within(&format!("aligned({tag})"), lim.limit, aligned, 1e-2, None);
                }
            }
        }
    }
    Ok(())
}

fn preserve_kaplan(ctx: &mut Ctx) -> EvalResult<()> {
    let (lambdas, betas) = (ctx.settings.lambdas.clone(), ctx.settings.betas.clone());
    for &lambda in &lambdas {
        for &beta in &betas {
            if beta > 2.0 * lambda + 1.0 + 1e-12 {
                continue;
            }
            let t = cesaro_beta(beta, arc(AnalyticFn::koebe_order(lambda).map_err(to_domain)?))?;
            let rep = membership_margin(&t, &ClassSpec::Kaplan, &ctx.settings.grid)?;
            ctx.ge(
                &format!("kaplan(lambda={lambda},beta={beta})"),
                rep.margin,
                0.0,
                1e-9,
                Some(complex_value(rep.witness)),
            );
        }
    }
    Ok(())
}

fn preserve_starlike_order(ctx: &mut Ctx) -> EvalResult<()> {
    let lambdas = ctx.settings.lambdas.clone();
    for lambda in lambdas {
        let t = alexander(arc(AnalyticFn::koebe_order(lambda).map_err(to_domain)?))?;
        let rep = membership_margin(&t, &ClassSpec::Convex { lambda }, &ctx.settings.grid)?;
        ctx.ge(
            &format!("convex(lambda={lambda})"),
            rep.margin,
            0.0,
            1e-9,
            Some(complex_value(rep.witness)),
        );
    }
    Ok(())
}

fn preserve_convex(ctx: &mut Ctx) -> EvalResult<()> {
    for beta in [0.0, 0.5, 1.0] {
        let t = cesaro_beta(beta, arc(AnalyticFn::half_plane()))?;
        let order = (1.0 - beta) / 2.0;
        let rep = membership_margin(&t, &ClassSpec::Convex { lambda: order }, &ctx.settings.grid)?;
        ctx.ge(
            &format!("half-plane(beta={beta})"),
            rep.margin,
            0.0,
            1e-9,
            Some(complex_value(rep.witness)),
        );
    }
    for (lambda, beta) in [(0.25, 0.5), (0.5, 1.0), (0.75, 1.5)] {
        let t = cesaro_beta(beta, arc(AnalyticFn::koebe_order(lambda).map_err(to_domain)?))?;
        let order = lambda - beta / 2.0;
        let rep = membership_margin(&t, &ClassSpec::Convex { lambda: order }, &ctx.settings.grid)?;
        ctx.ge(
            &format!("koebe(lambda={lambda},beta={beta})"),
            rep.margin,
            0.0,
            1e-9,
            Some(complex_value(rep.witness)),
        );
    }
    Ok(())
}

fn cesaro_convexity_failure(ctx: &mut Ctx) -> EvalResult<()> {
    let beta = 3.0;
    let t = cesaro_beta(beta, arc(AnalyticFn::half_plane()))?;
    for n in [2u32, 3, 4] {
        let nf = f64::from(n);
        let z = Complex64::new(-1.0 + 1.0 / nf, 0.0);
        let q = (Complex64::ONE + z * t.pre_schwarzian(z)?).re;
        let formula = (nf * (1.0 - beta) + beta) / (2.0 * nf - 1.0);
        ctx.within(&format!("value(n={n})"), q, formula, 1e-9, Some(complex_value(z)));
        if n == 2 {
            ctx.le("negative(n=2)", q, 0.0, 0.0, Some(complex_value(z)));
        }
    }
    Ok(())
}

fn cesaro_univalence_failure(ctx: &mut Ctx) -> EvalResult<()> {
    let t = cesaro_beta(2.0, arc(AnalyticFn::koebe_order(0.0).expect("order zero")))?;
    let found = univalence_falsify(&t, &ctx.settings.grid, 0.05, 0.05)?;
    match found {
        Some(w) => {
            let wv = Some(collision_value(&w));
            ctx.expect_bool("found", true, true, wv.clone());
            ctx.expect_bool("polished", w.polished, true, wv.clone());
            ctx.le("residual", w.residual, 0.0, 1e-12, wv.clone());
            ctx.ge("separation", w.separation, 0.05, 0.0, wv);
        }
        None => ctx.expect_bool("found", false, true, None),
    }
    Ok(())
}

fn cesaro_starlike_failure(ctx: &mut Ctx) -> EvalResult<()> {
    let lambda = 0.25;
    let beta = 2.0 * lambda + 0.5;
    let t = cesaro_beta(beta, arc(AnalyticFn::koebe_order(lambda).map_err(to_domain)?))?;
    let spec = ClassSpec::Spirallike { alpha: 0.0, lambda: 0.0 };
    let rep = membership_margin(&t, &spec, &ctx.settings.grid)?;
    ctx.le("negative-margin", rep.margin, 0.0, 0.0, Some(complex_value(rep.witness)));
    Ok(())
}

fn royster_nonunivalent(ctx: &mut Ctx) -> EvalResult<()> {
    for beta in [0.0, 0.5, 2.0] {
        let mu = Complex64::new(-beta, 1.0);
        let inj = royster_univalent(mu)?;
        ctx.expect_bool(&format!("noninjective(beta={beta})"), inj, false, Some(complex_value(mu)));
    }
    let mu = Complex64::new(-1.0, 1.0);
    ctx.expect_bool("injective(beta=1)", royster_univalent(mu)?, true, Some(complex_value(mu)));
    Ok(())
}

fn set_predicates(ctx: &mut Ctx) -> EvalResult<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.settings.seed);
    let zero = UnivalenceSet::AKLambda { lambda: 0.0 };
    let mut mismatches = 0usize;
    let mut first: Option<Complex64> = None;
    for _ in 0..500 {
        let g = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if set_membership(&UnivalenceSet::AK, g)? != set_membership(&zero, g)? {
            mismatches += 1;
            first.get_or_insert(g);
        }
    }
    ctx.le("order-zero-agreement", mismatches as f64, 0.0, 0.0, first.map(complex_value));
    let base_probes = [
        ("base(gamma=0.5)", Complex64::new(0.5, 0.0), true),
        ("base(gamma=1.5)", Complex64::new(1.5, 0.0), true),
        ("base(gamma=1.5+eps)", Complex64::new(1.5 + 1e-9, 0.0), false),
    ];
    for (id, g, want) in base_probes {
        ctx.expect_bool(id, set_membership(&UnivalenceSet::AK, g)?, want, Some(complex_value(g)));
    }
    let half = UnivalenceSet::AKLambda { lambda: -0.5 };
    let half_probes = [
        ("order(-1/2,gamma=1/3)", Complex64::new(1.0 / 3.0, 0.0), true),
        ("order(-1/2,gamma=1)", Complex64::new(1.0, 0.0), true),
        ("order(-1/2,gamma=1+eps)", Complex64::new(1.0 + 1e-9, 0.0), false),
    ];
    for (id, g, want) in half_probes {
        ctx.expect_bool(id, set_membership(&half, g)?, want, Some(complex_value(g)));
    }
    let spiral_probes = [
        ("spiral(alpha=0,lambda=0)", 0.0, 0.0, true),
        ("spiral(alpha=0.5,lambda=0)", 0.5, 0.0, false),
        ("spiral(alpha=0.5,lambda=0.45)", 0.5, 0.45, true),
    ];
    for (id, alpha, lambda, want) in spiral_probes {
        ctx.expect_bool(id, alexander_spiral_univalence(alpha, lambda)?, want, None);
    }
    let segment_probes = [
        ("segment(lambda=0.5,beta=-2)", -2.0, true),
        ("segment(lambda=0.5,beta=2)", 2.0, true),
        ("segment(lambda=0.5,beta=2+eps)", 2.0 + 1e-9, false),
    ];
    for (id, beta, want) in segment_probes {
        ctx.expect_bool(id, royster_segment_univalent(0.5, beta)?, want, None);
    }
    Ok(())
}

fn engine_duality(ctx: &mut Ctx) -> EvalResult<()> {
    let sources: Vec<(&str, Arc<dyn DiskFunction>)> = vec![
        ("koebe_order(0.25)", arc(AnalyticFn::koebe_order(0.25).expect("order below one"))),
        ("half_plane", arc(AnalyticFn::half_plane())),
        ("royster_example", arc(AnalyticFn::royster_example())),
    ];
    let pts = disk_points(10, 0.7, ctx.settings.seed);
    let degree = ctx.settings.degree;
    for (name, f) in sources {
        let partner = arc(AnalyticFn::neg_log());
        let ops: Vec<(&str, TransformedFn)> = vec![
            ("alexander", alexander(f.clone())?),
            ("hornich-scale", hornich_scale(Complex64::new(0.7, 0.3), f.clone())?),
            ("hornich-add", hornich_add(f.clone(), partner)?),
            ("j-gamma", j_gamma(Complex64::new(0.6, -0.2), f.clone())?),
            ("cesaro", cesaro_beta(1.0, f.clone())?),
        ];
        for (op, t) in ops {
            let series = t.taylor(degree)?;
            let mut worst = 0.0f64;
            let mut at = Complex64::ZERO;
            for &z in &pts {
                let dev = (series.evaluate(z) - t.value(z)?).norm();
                if dev > worst {
                    worst = dev;
                    at = z;
                }
            }
            ctx.le(&format!("duality(fn={name},op={op})"), worst, 0.0, 1e-8, Some(complex_value(at)));
        }
    }
    Ok(())
}

fn operator_identities(ctx: &mut Ctx) -> EvalResult<()> {
    let pts = disk_points(100, 0.85, ctx.settings.seed.wrapping_add(1));
    let f = arc(AnalyticFn::koebe_order(0.25).expect("order below one"));
    let g1 = Complex64::new(0.8, -0.3);
    let g2 = Complex64::new(-0.4, 0.6);
    let nested = hornich_scale(g1, Arc::new(hornich_scale(g2, f.clone())?))?;
    let flat = hornich_scale(g1 * g2, f.clone())?;
    let jg = j_gamma(g1, f.clone())?;
    let jg_composed = hornich_scale(g1, Arc::new(alexander(f.clone())?))?;
    let ces = cesaro_beta(1.5, f.clone())?;
    let ces_composed = hornich_add(
        Arc::new(alexander(f.clone())?),
        Arc::new(hornich_scale(Complex64::new(1.5, 0.0), arc(AnalyticFn::neg_log()))?),
    )?;
    let c0 = cesaro_beta(0.0, f.clone())?;
    let j = alexander(f)?;
    let pairs: Vec<(&str, &TransformedFn, &TransformedFn)> = vec![
        ("scalar-composition", &nested, &flat),
        ("ratio-power-through-alexander", &jg, &jg_composed),
        ("average-decomposition", &ces, &ces_composed),
        ("order-zero-collapse", &c0, &j),
    ];
    for (id, a, b) in pairs {
        let mut worst = 0.0f64;
        let mut at = Complex64::ZERO;
        for &z in &pts {
            let (da, db) = (a.deriv(z)?, b.deriv(z)?);
            let dev = (da - db).norm() / db.norm().max(1.0);
            if dev > worst {
                worst = dev;
                at = z;
            }
        }
        ctx.le(id, worst, 0.0, 1e-10, Some(complex_value(at)));
    }
    Ok(())
}

fn derivative_consistency(ctx: &mut Ctx) -> EvalResult<()> {
    let entries = vec![
        AnalyticFn::koebe_order(0.25).expect("order below one"),
        AnalyticFn::koebe_order(-0.5).expect("order below one"),
        AnalyticFn::half_plane(),
        AnalyticFn::neg_log(),
        AnalyticFn::convex_extremal(0.25).expect("order below one"),
        AnalyticFn::convex_extremal(0.5).expect("order below one"),
        AnalyticFn::spiral_extremal(0.5, 0.25).expect("tilt below pi/2"),
        AnalyticFn::royster_example(),
        AnalyticFn::power_map(Complex64::new(-1.0, 1.0)).expect("nonzero exponent"),
    ];
    let pts = disk_points(30, 0.7, ctx.settings.seed.wrapping_add(2));
    let h = 1e-5;
    for f in &entries {
        let mut worst = 0.0f64;
        let mut at = Complex64::ZERO;
        for &z in &pts {
            let d = f.deriv(z)?;
            let fd = (f.value(z + Complex64::new(h, 0.0))? - f.value(z - Complex64::new(h, 0.0))?)
                / Complex64::new(2.0 * h, 0.0);
            let dev = (fd - d).norm() / d.norm().max(1.0);
            if dev > worst {
                worst = dev;
                at = z;
            }
        }
        ctx.le(&format!("fd({})", f.name()), worst, 0.0, 1e-6, Some(complex_value(at)));
    }
    Ok(())
}

fn spiral_negative_order(ctx: &mut Ctx) -> EvalResult<()> {
    let t = alexander(arc(AnalyticFn::spiral_extremal(0.0, -0.25).expect("order below one")))?;
    let est = norm_estimate(&t, &ctx.settings.grid)?;
    ctx.ge("norm-escape", est.value, 4.5, 0.0, Some(complex_value(est.argmax)));
    let g0 = AnalyticFn::spiral_extremal(0.0, -1.0).expect("order below one");
    match univalence_falsify(&g0, &ctx.settings.grid, 0.05, 0.05)? {
        Some(w) => {
            let wv = Some(collision_value(&w));
            ctx.expect_bool("collision-found", true, true, wv.clone());
            ctx.expect_bool("collision-polished", w.polished, true, wv.clone());
            ctx.ge("collision-separation", w.separation, 0.05, 0.0, wv);
        }
        None => ctx.expect_bool("collision-found", false, true, None),
    }
    Ok(())
}

fn to_domain(e: gft_core::CatalogError) -> EvalError {
    EvalError::Domain(e.to_string())
}

pub const REGISTRY: &[Scenario] = &[
    Scenario {
        id: "norm-convex-order",
        description: "sharp norm bound for the convex-order extremal family",
        claim: "a function convex of order lambda has pre-Schwarzian norm at most 4(1-lambda), and the catalog extremal attains it",
        run: norm_convex_order,
    },
    Scenario {
        id: "norm-alexander-spiral",
        description: "norm of the alexander transform of tilted extremals",
        claim: "the alexander transform of the order-lambda, tilt-alpha spiral extremal has norm 4(1-lambda)cos(alpha)",
        run: norm_alexander_spiral,
    },
    Scenario {
        id: "norm-cesaro-sharp",
        description: "sharp norm of the averaged koebe map",
        claim: "the order-beta average of the zero-order koebe map has norm exactly 4 + 2 beta",
        run: norm_cesaro_sharp,
    },
    Scenario {
        id: "norm-cesaro-subordinate",
        description: "averaging adds at most 2 beta to the alexander norm",
        claim: "for every source f and beta >= 0, the norm of the order-beta average is at most the norm of the alexander transform plus 2 beta",
        run: norm_cesaro_subordinate,
    },
    Scenario {
        id: "radial-limit-cesaro",
        description: "boundary limit of the averaged tilted extremal",
        claim: "the derivative of the order-beta average of the tilt-alpha extremal is (1-z)^(nu-beta) with nu = 2(lambda-1)cos(alpha)e^(-i alpha), so the weighted norm integrand tends to 2|beta-nu| along the positive radius; the aligned sum 4(1-lambda)cos(alpha) + 2 beta agrees exactly when alpha = 0 or beta = 0",
        run: radial_limit_cesaro,
    },
    Scenario {
        id: "preserve-kaplan",
        description: "averages of the koebe extremal stay close-to-convex up to beta = 2 lambda + 1",
        claim: "for 0 <= beta <= 2 lambda + 1 the order-beta average of the order-lambda koebe map keeps every arc integral of the convexity quantity above -pi",
        run: preserve_kaplan,
    },
    Scenario {
        id: "preserve-starlike-order",
        description: "the alexander transform turns starlike order into convex order",
        claim: "the alexander transform of the order-lambda starlike extremal is convex of order lambda",
        run: preserve_starlike_order,
    },
    Scenario {
        id: "preserve-convex",
        description: "convex order survives averaging with a half-order loss",
        claim: "averaging the half-plane map by beta <= 1 leaves it convex of order (1-beta)/2, and averaging the order-lambda koebe map by beta <= 2 lambda leaves it convex of order lambda - beta/2",
        run: preserve_convex,
    },
    Scenario {
        id: "cesaro-convexity-failure",
        description: "order-3 averaging breaks convexity of the half-plane map",
        claim: "the convexity quantity of the order-beta average of the half-plane map at z = -1 + 1/n equals (n(1-beta)+beta)/(2n-1), which is negative at n = 2, beta = 3",
        run: cesaro_convexity_failure,
    },
    Scenario {
        id: "cesaro-univalence-failure",
        description: "order-2 averaging of the koebe map breaks injectivity",
        claim: "the order-2 average of the zero-order koebe map takes one value at two points separated by more than 0.05",
        run: cesaro_univalence_failure,
    },
    Scenario {
        id: "cesaro-starlike-failure",
        description: "averaging past 2 lambda breaks starlikeness",
        claim: "at beta = 2 lambda + 1/2 the order-beta average of the order-lambda koebe map has negative starlike quantity somewhere in the disk",
        run: cesaro_starlike_failure,
    },
    Scenario {
        id: "royster-nonunivalent",
        description: "injectivity of the power-map family (1-z)^(i-beta)",
        claim: "among beta >= 0 the map (1-z)^(i-beta) is injective on the disk only at beta = 1",
        run: royster_nonunivalent,
    },
    Scenario {
        id: "set-predicates",
        description: "exact parameter-set predicates for the scalar action",
        claim: "the injectivity-preserving parameter set is the closed disk of radius 1/2 united with the real segment [1/2, 3/2]; at order lambda the radius becomes 1/(2(1-lambda)); the order-zero set equals the base set; the tilted criterion holds exactly when cos(alpha) <= 1/(2(1-lambda)); the segment exponent 2 lambda - 1 - beta is injective exactly when 2 lambda - 3 <= beta <= 2 lambda + 1",
        run: set_predicates,
    },
    Scenario {
        id: "engine-duality",
        description: "coefficient and quadrature realizations agree",
        claim: "for every transform and catalog source, evaluating the truncated series and integrating along the radius give the same values inside radius 0.7",
        run: engine_duality,
    },
    Scenario {
        id: "operator-identities",
        description: "algebraic identities between the transforms",
        claim: "scalar actions compose multiplicatively; the ratio power factors through the alexander integral; the order-beta average splits into alexander plus a beta-scaled logarithm addition; order zero collapses to alexander",
        run: operator_identities,
    },
    Scenario {
        id: "derivative-consistency",
        description: "closed-form derivatives match finite differences",
        claim: "the closed-form first derivative of every catalog entry matches a centered finite difference at interior points",
        run: derivative_consistency,
    },
    Scenario {
        id: "spiral-negative-order",
        description: "negative order escapes the injective class",
        claim: "below order zero the alexander transform of the untilted extremal leaves the injective class: the norm exceeds 4.5 at order -1/4 and the order -1 extremal takes one value twice",
        run: spiral_negative_order,
    },
];
