//! End-to-end acceptance gate. Each test prints one `ACCEPTANCE <name>:
//! PASS/FAIL` line for its criterion before asserting, so a test run doubles
//! as a checklist. The radial-limit criterion reports its honest outcome:
//! the claimed aligned-sum bound is provably off target for tilted sources
//! with positive averaging order, and the test pins the measured limits to
//! the derived value instead of forcing agreement.

use std::sync::Arc;

use gft_core::{
    alexander, cesaro_beta, hornich_add, hornich_scale, j_gamma, membership_margin, norm_estimate,
    radial_norm_limit, royster_univalent, set_membership, univalence_falsify, AnalyticFn,
    ClassSpec, Complex64, DiskFunction, DiskGrid, UnivalenceSet,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid() -> DiskGrid {
    DiskGrid::default()
}

fn report(name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("ACCEPTANCE {name}: PASS");
    } else {
        println!("ACCEPTANCE {name}: FAIL ({} violation(s))", failures.len());
        for f in failures {
            println!("  - {f}");
        }
    }
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

#[test]
fn norm_sharpness_convex_order() {
    let mut failures = Vec::new();
    for lambda in [-1.0, -0.5, 0.0, 0.5] {
        let f = AnalyticFn::convex_extremal(lambda).unwrap();
        let est = norm_estimate(&f, &grid()).unwrap().value;
        let bound = 4.0 * (1.0 - lambda);
        if !(est >= bound - 0.02 && est <= bound + 1e-6) {
            failures.push(format!("lambda {lambda}: estimate {est} vs bound {bound}"));
        }
    }
    report("norm_sharpness_convex_order", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn norm_sharpness_alexander_spiral() {
    let mut failures = Vec::new();
    for alpha in [0.0, 0.5, -0.5, 1.2, -1.2] {
        for lambda in [-0.5, 0.0, 0.5] {
            let f = Arc::new(AnalyticFn::spiral_extremal(alpha, lambda).unwrap());
            let t = alexander(f).unwrap();
            let est = norm_estimate(&t, &grid()).unwrap().value;
            let bound = 4.0 * (1.0 - lambda) * alpha.cos();
            if !(est >= bound - 0.02 && est <= bound + 1e-6) {
                failures.push(format!("alpha {alpha} lambda {lambda}: estimate {est} vs bound {bound}"));
            }
        }
    }
    report("norm_sharpness_alexander_spiral", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn radial_limit_cesaro_bound() {
    // Claimed: the limit along +1 equals 4(1-lambda)cos(alpha) + 2 beta.
    // The transform's derivative is (1-z)^(nu - beta) with
    // nu = 2(lambda-1)cos(alpha)e^{-i alpha}, so the limit is 2|beta - nu|,
    // which matches the claim only when alpha = 0 or beta = 0. The criterion
    // line reports the honest outcome against the claimed bound; the
    // assertions pin every measured limit to the derived value and require
    // the claim to fail exactly on the tilted positive-order cases.
    let mut claim_failures = Vec::new();
    let mut engine_failures = Vec::new();
    let mut partition_errors = Vec::new();
    for alpha in [0.0f64, 0.5, -0.5, 1.2, -1.2] {
        for lambda in [-0.5, 0.0, 0.5] {
            for beta in [0.0, 1.0, 2.0] {
                let src = Arc::new(AnalyticFn::spiral_extremal(alpha, lambda).unwrap());
                let t = cesaro_beta(beta, src).unwrap();
                let lim = radial_norm_limit(&t, Complex64::ONE).unwrap();
                let claimed = 4.0 * (1.0 - lambda) * alpha.cos() + 2.0 * beta;
                let nu = 2.0 * (lambda - 1.0) * alpha.cos() * Complex64::from_polar(1.0, -alpha);
                let derived = 2.0 * (Complex64::new(beta, 0.0) - nu).norm();
                let case = format!("alpha {alpha} lambda {lambda} beta {beta}");
                if lim.diverged || (lim.limit - derived).abs() > 1e-2 {
                    engine_failures.push(format!("{case}: measured {} vs derived {derived}", lim.limit));
                }
                let claim_holds = (lim.limit - claimed).abs() <= 1e-2;
                if !claim_holds {
                    claim_failures.push(format!(
                        "{case}: measured {} vs claimed {claimed} (derived {derived})",
                        lim.limit
                    ));
                }
                let claim_should_hold = alpha == 0.0 || beta == 0.0;
                if claim_holds != claim_should_hold {
                    partition_errors.push(case);
                }
            }
        }
    }
    report("radial_limit_cesaro_bound", &claim_failures);
    assert!(engine_failures.is_empty(), "{engine_failures:?}");
    assert!(
        partition_errors.is_empty(),
        "claim pass/fail split must follow alpha = 0 or beta = 0 exactly: {partition_errors:?}"
    );
}

#[test]
fn norm_subordination_cesaro() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for pick in 0..20 {
        let beta = rng.gen_range(0.0..3.0);
        let f: Arc<dyn DiskFunction> = match pick % 5 {
            0 => Arc::new(AnalyticFn::koebe_order(rng.gen_range(-1.0..0.75)).unwrap()),
            1 => Arc::new(AnalyticFn::convex_extremal(rng.gen_range(-1.0..0.75)).unwrap()),
            2 => Arc::new(
                AnalyticFn::spiral_extremal(rng.gen_range(-1.2..1.2), rng.gen_range(-0.5..0.75))
                    .unwrap(),
            ),
            3 => Arc::new(AnalyticFn::half_plane()),
            _ => Arc::new(AnalyticFn::neg_log()),
        };
        let j_norm = norm_estimate(&alexander(f.clone()).unwrap(), &grid()).unwrap().value;
        let c = cesaro_beta(beta, f).unwrap();
        let c_norm = norm_estimate(&c, &grid()).unwrap().value;
        if c_norm > j_norm + 2.0 * beta + 1e-6 {
            failures.push(format!("{}: {c_norm} vs {j_norm} + 2*{beta}", c.describe()));
        }
    }
    // injective catalog entries: the averaged transform stays under 4 + 2 beta
    let in_s: Vec<Arc<dyn DiskFunction>> = vec![
        Arc::new(AnalyticFn::half_plane()),
        Arc::new(AnalyticFn::neg_log()),
        Arc::new(AnalyticFn::koebe_order(0.0).unwrap()),
        Arc::new(AnalyticFn::koebe_order(0.25).unwrap()),
        Arc::new(AnalyticFn::convex_extremal(0.25).unwrap()),
        Arc::new(AnalyticFn::spiral_extremal(0.5, 0.25).unwrap()),
    ];
    for f in in_s {
        for beta in [0.0, 0.5, 1.0, 2.0] {
            let c = cesaro_beta(beta, f.clone()).unwrap();
            let c_norm = norm_estimate(&c, &grid()).unwrap().value;
            if c_norm > 4.0 + 2.0 * beta + 0.02 {
                failures.push(format!("{}: {c_norm} exceeds 4 + 2*{beta}", c.describe()));
            }
        }
    }
    report("norm_subordination_cesaro", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn preservation_positive_margins() {
    let mut failures = Vec::new();
    let lambdas = [-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75];
    let betas = [0.0, 0.5, 1.0, 1.5, 2.0, 3.0];
    // (a) close-to-convexity up to beta = 2 lambda + 1
    for &lambda in &lambdas {
        for &beta in &betas {
            if beta > 2.0 * lambda + 1.0 {
                continue;
            }
            let t = cesaro_beta(beta, Arc::new(AnalyticFn::koebe_order(lambda).unwrap())).unwrap();
            let rep = membership_margin(&t, &ClassSpec::Kaplan, &grid()).unwrap();
            if rep.margin <= -1e-9 {
                failures.push(format!("kaplan {}: margin {}", t.describe(), rep.margin));
            }
        }
    }
    // (b) convex order lambda - beta/2 up to beta = 2 lambda
    for &lambda in &lambdas {
        for &beta in &betas {
            if beta > 2.0 * lambda {
                continue;
            }
            let t = cesaro_beta(beta, Arc::new(AnalyticFn::koebe_order(lambda).unwrap())).unwrap();
            let order = lambda - beta / 2.0;
            let rep = membership_margin(&t, &ClassSpec::Convex { lambda: order }, &grid()).unwrap();
            if rep.margin <= -1e-9 {
                failures.push(format!("convex({order}) {}: margin {}", t.describe(), rep.margin));
            }
        }
    }
    // (c) the half-plane map under low averaging orders stays convex of
    // order (1 - beta)/2
    for beta in [0.0, 0.5, 1.0] {
        let t = cesaro_beta(beta, Arc::new(AnalyticFn::half_plane())).unwrap();
        let order = (1.0 - beta) / 2.0;
        let rep = membership_margin(&t, &ClassSpec::Convex { lambda: order }, &grid()).unwrap();
        if rep.margin <= -1e-9 {
            failures.push(format!("convex({order}) {}: margin {}", t.describe(), rep.margin));
        }
    }
    report("preservation_positive_margins", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn counterexample_negatives() {
    let mut failures = Vec::new();

    // (a) averaging order 2 past the starlike threshold: a genuine collision
    let t = cesaro_beta(2.0, Arc::new(AnalyticFn::koebe_order(0.0).unwrap())).unwrap();
    match univalence_falsify(&t, &grid(), 0.05, 0.05).unwrap() {
        Some(w) => {
            if !w.polished || w.residual >= 1e-12 || w.separation <= 0.05 {
                failures.push(format!(
                    "collision witness not polished enough: residual {} separation {} polished {}",
                    w.residual, w.separation, w.polished
                ));
            }
        }
        None => failures.push("no collision found for the order-2 average of the koebe map".into()),
    }

    // (b) convexity quantity of the order-3 average of the half-plane map at
    // z = -1/2 equals -1/3
    let t = cesaro_beta(3.0, Arc::new(AnalyticFn::half_plane())).unwrap();
    let z = Complex64::new(-0.5, 0.0);
    let q = (Complex64::ONE + z * t.pre_schwarzian(z).unwrap()).re;
    if (q + 1.0 / 3.0).abs() > 1e-9 {
        failures.push(format!("convexity quantity at -1/2: {q} vs -1/3"));
    }

    // (c) beta = 2 lambda + 0.5 breaks starlikeness somewhere on the grid
    let lambda = 0.25;
    let t = cesaro_beta(2.0 * lambda + 0.5, Arc::new(AnalyticFn::koebe_order(lambda).unwrap())).unwrap();
    let rep = membership_margin(&t, &ClassSpec::Spirallike { alpha: 0.0, lambda: 0.0 }, &grid()).unwrap();
    if rep.margin >= 0.0 {
        failures.push(format!("starlike margin stayed nonnegative: {}", rep.margin));
    }

    // (d) the power-map exponent i - beta is injective only at beta = 1
    for beta in [0.0, 0.5, 2.0] {
        if royster_univalent(Complex64::new(-beta, 1.0)).unwrap() {
            failures.push(format!("i - {beta} misclassified as injective"));
        }
    }
    if !royster_univalent(Complex64::new(-1.0, 1.0)).unwrap() {
        failures.push("i - 1 misclassified as non-injective".into());
    }

    report("counterexample_negatives", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn membership_set_predicates() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let zero = UnivalenceSet::AKLambda { lambda: 0.0 };
    for _ in 0..500 {
        let gamma = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let a = set_membership(&UnivalenceSet::AK, gamma).unwrap();
        let b = set_membership(&zero, gamma).unwrap();
        if a != b {
            failures.push(format!("order-zero set disagrees at {gamma}"));
        }
    }
    let probes = [
        (Complex64::new(0.5, 0.0), true),
        (Complex64::new(1.5, 0.0), true),
        (Complex64::new(1.5 + 1e-9, 0.0), false),
    ];
    for (gamma, want) in probes {
        if set_membership(&UnivalenceSet::AK, gamma).unwrap() != want {
            failures.push(format!("base set probe {gamma}: expected {want}"));
        }
    }
    let half = UnivalenceSet::AKLambda { lambda: -0.5 };
    let probes = [
        (Complex64::new(1.0 / 3.0, 0.0), true),
        (Complex64::new(1.0, 0.0), true),
        (Complex64::new(1.0 + 1e-9, 0.0), false),
    ];
    for (gamma, want) in probes {
        if set_membership(&half, gamma).unwrap() != want {
            failures.push(format!("order -1/2 set probe {gamma}: expected {want}"));
        }
    }
    report("membership_set_predicates", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn engine_oracle_consistency() {
    let mut failures = Vec::new();
    let sources: Vec<Arc<dyn DiskFunction>> = vec![
        Arc::new(AnalyticFn::koebe_order(0.25).unwrap()),
        Arc::new(AnalyticFn::half_plane()),
        Arc::new(AnalyticFn::neg_log()),
        Arc::new(AnalyticFn::convex_extremal(0.25).unwrap()),
        Arc::new(AnalyticFn::spiral_extremal(0.5, 0.25).unwrap()),
        Arc::new(AnalyticFn::royster_example()),
    ];

    // series route vs quadrature route, every operator over the catalog
    let pts = disk_points(10, 0.7, 88);
    for f in &sources {
        let partner: Arc<dyn DiskFunction> = Arc::new(AnalyticFn::neg_log());
        let ops = vec![
            alexander(f.clone()).unwrap(),
            hornich_scale(Complex64::new(0.7, 0.3), f.clone()).unwrap(),
            hornich_add(f.clone(), partner).unwrap(),
            j_gamma(Complex64::new(0.6, -0.2), f.clone()).unwrap(),
            cesaro_beta(1.0, f.clone()).unwrap(),
        ];
        for t in ops {
            let series = t.taylor(128).unwrap();
            for &z in &pts {
                let a = series.evaluate(z);
                let b = t.value(z).unwrap();
                if (a - b).norm() >= 1e-8 {
                    failures.push(format!("duality {} at {z}: {a} vs {b}", t.describe()));
                }
            }
        }
    }

    // operator identities at 100 points each
    let pts = disk_points(100, 0.85, 89);
    let f = Arc::new(AnalyticFn::koebe_order(0.25).unwrap());
    let g1 = Complex64::new(0.8, -0.3);
    let g2 = Complex64::new(-0.4, 0.6);
    let nested = hornich_scale(g1, Arc::new(hornich_scale(g2, f.clone()).unwrap())).unwrap();
    let flat = hornich_scale(g1 * g2, f.clone()).unwrap();
    let jg = j_gamma(g1, f.clone()).unwrap();
    let jg_composed = hornich_scale(g1, Arc::new(alexander(f.clone()).unwrap())).unwrap();
    let ces = cesaro_beta(1.5, f.clone()).unwrap();
    let ces_composed = hornich_add(
        Arc::new(alexander(f.clone()).unwrap()),
        Arc::new(hornich_scale(Complex64::new(1.5, 0.0), Arc::new(AnalyticFn::neg_log())).unwrap()),
    )
    .unwrap();
    let c0 = cesaro_beta(0.0, f.clone()).unwrap();
    let j = alexander(f.clone()).unwrap();
    for &z in &pts {
        let checks = [
            ("scalar composition", nested.deriv(z).unwrap(), flat.deriv(z).unwrap()),
            ("ratio power via integral", jg.deriv(z).unwrap(), jg_composed.deriv(z).unwrap()),
            ("average decomposition", ces.deriv(z).unwrap(), ces_composed.deriv(z).unwrap()),
            ("order-zero average", c0.deriv(z).unwrap(), j.deriv(z).unwrap()),
        ];
        for (what, a, b) in checks {
            if (a - b).norm() >= 1e-10 * b.norm().max(1.0) {
                failures.push(format!("{what} at {z}: {a} vs {b}"));
            }
        }
    }

    // finite differences on every catalog entry
    let entries = vec![
        AnalyticFn::koebe_order(0.25).unwrap(),
        AnalyticFn::koebe_order(-0.5).unwrap(),
        AnalyticFn::half_plane(),
        AnalyticFn::neg_log(),
        AnalyticFn::convex_extremal(0.25).unwrap(),
        AnalyticFn::convex_extremal(0.5).unwrap(),
        AnalyticFn::spiral_extremal(0.5, 0.25).unwrap(),
        AnalyticFn::royster_example(),
        AnalyticFn::power_map(Complex64::new(-1.0, 1.0)).unwrap(),
    ];
    let h = 1e-5;
    for f in &entries {
        for &z in &disk_points(30, 0.7, 90) {
            let d = f.deriv(z).unwrap();
            let fd = (f.value(z + Complex64::new(h, 0.0)).unwrap()
                - f.value(z - Complex64::new(h, 0.0)).unwrap())
                / Complex64::new(2.0 * h, 0.0);
            if (fd - d).norm() >= 1e-6 * d.norm().max(1.0) {
                failures.push(format!("finite difference {} at {z}", f.name()));
            }
        }
    }

    report("engine_oracle_consistency", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn negative_order_escape_from_s() {
    let mut failures = Vec::new();
    let t = alexander(Arc::new(AnalyticFn::spiral_extremal(0.0, -0.25).unwrap())).unwrap();
    let est = norm_estimate(&t, &grid()).unwrap().value;
    if est <= 4.5 {
        failures.push(format!("norm estimate {est} did not exceed 4.5"));
    }
    let g0 = AnalyticFn::spiral_extremal(0.0, -1.0).unwrap();
    match univalence_falsify(&g0, &grid(), 0.05, 0.05).unwrap() {
        Some(w) => {
            if !w.polished || w.separation <= 0.05 {
                failures.push(format!(
                    "collision for the order -1 extremal not polished: separation {}",
                    w.separation
                ));
            }
        }
        None => failures.push("no collision found for the order -1 extremal".into()),
    }
    report("negative_order_escape_from_s", &failures);
    assert!(failures.is_empty(), "{failures:?}");
}
