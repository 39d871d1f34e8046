//! Scaling and consistency laws tying the norm scans, margins, and set
//! predicates together across modules.

use std::sync::Arc;

use gft_core::{
    alexander, cesaro_beta, hornich_scale, membership_margin, norm_estimate, set_membership,
    AnalyticFn, ClassSpec, Complex64, DiskFunction, DiskGrid, UnivalenceSet,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid() -> DiskGrid {
    DiskGrid::default()
}

#[test]
fn scalar_action_scales_the_norm_by_its_modulus() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let fns: Vec<Arc<dyn DiskFunction>> = vec![
        Arc::new(AnalyticFn::koebe_order(0.25).unwrap()),
        Arc::new(AnalyticFn::convex_extremal(-0.5).unwrap()),
    ];
    for f in fns {
        let base = norm_estimate(f.as_ref(), &grid()).unwrap().value;
        for _ in 0..4 {
            let gamma = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            if gamma.norm() < 1e-3 {
                continue;
            }
            let scaled = hornich_scale(gamma, f.clone()).unwrap();
            let got = norm_estimate(&scaled, &grid()).unwrap().value;
            let want = gamma.norm() * base;
            assert!(
                (got - want).abs() <= 1e-6 * want.max(1.0),
                "{}: {got} vs {want}",
                scaled.describe()
            );
        }
    }
}

#[test]
fn convex_order_rescaling_tracks_the_base_norm() {
    // scaling a convex function's derivative by the power 1-lambda scales
    // its norm by 1-lambda; the half-plane map attains the 4(1-lambda) cap
    for g in [AnalyticFn::neg_log(), AnalyticFn::half_plane()] {
        let g: Arc<dyn DiskFunction> = Arc::new(g);
        let base = norm_estimate(g.as_ref(), &grid()).unwrap().value;
        for lambda in [-1.0, -0.25, 0.5] {
            let scaled = hornich_scale(Complex64::new(1.0 - lambda, 0.0), g.clone()).unwrap();
            let got = norm_estimate(&scaled, &grid()).unwrap().value;
            assert!(((got) - (1.0 - lambda) * base).abs() < 1e-9 * got.max(1.0));
            assert!(got <= 4.0 * (1.0 - lambda) + 1e-9, "lambda {lambda}: {got}");
        }
    }
    let sharp = norm_estimate(
        &hornich_scale(Complex64::new(1.5, 0.0), Arc::new(AnalyticFn::half_plane())).unwrap(),
        &grid(),
    )
    .unwrap()
    .value;
    assert!((sharp - 6.0).abs() < 0.02, "half-plane at lambda = -1/2: {sharp}");
}

#[test]
fn cesaro_norm_stays_within_2beta_of_the_alexander_norm() {
    let fns: Vec<Arc<dyn DiskFunction>> = vec![
        Arc::new(AnalyticFn::koebe_order(0.25).unwrap()),
        Arc::new(AnalyticFn::half_plane()),
        Arc::new(AnalyticFn::neg_log()),
        Arc::new(AnalyticFn::convex_extremal(0.25).unwrap()),
        Arc::new(AnalyticFn::spiral_extremal(0.5, 0.25).unwrap()),
        Arc::new(AnalyticFn::royster_example()),
    ];
    for f in fns {
        let j_norm = norm_estimate(&alexander(f.clone()).unwrap(), &grid()).unwrap().value;
        for beta in [0.0, 0.5, 1.0, 2.0] {
            let c = cesaro_beta(beta, f.clone()).unwrap();
            let c_norm = norm_estimate(&c, &grid()).unwrap().value;
            let slack = j_norm + 2.0 * beta - c_norm;
            assert!(slack >= -1e-6, "{}: slack {slack}", c.describe());
        }
    }
}

#[test]
fn order_zero_set_coincides_with_the_base_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    let zero = UnivalenceSet::AKLambda { lambda: 0.0 };
    for _ in 0..500 {
        let gamma = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        assert_eq!(
            set_membership(&UnivalenceSet::AK, gamma).unwrap(),
            set_membership(&zero, gamma).unwrap(),
            "gamma {gamma}"
        );
    }
}

#[test]
fn kaplan_arc_integrals_respect_the_restricted_lower_bound() {
    // For the order-lambda extremal under the averaging transform with
    // 2 lambda <= beta <= 2 lambda + 1, every sampled arc integral stays
    // above -(beta - 2 lambda) pi; margin = min integral + pi.
    for lambda in [0.25, 0.5, 0.75] {
        for beta in [2.0 * lambda, 2.0 * lambda + 0.5, 2.0 * lambda + 1.0] {
            let t = cesaro_beta(beta, Arc::new(AnalyticFn::koebe_order(lambda).unwrap())).unwrap();
            let rep = membership_margin(&t, &ClassSpec::Kaplan, &grid()).unwrap();
            let bound = (1.0 - (beta - 2.0 * lambda)) * std::f64::consts::PI;
            assert!(
                rep.margin >= bound - 1e-6,
                "lambda {lambda} beta {beta}: margin {} vs bound {bound}",
                rep.margin
            );
        }
    }
}

#[test]
fn spirallike_margin_matches_closed_form_profile_for_koebe() {
    // z f'/f = 1 + (2 - 2 lambda) z/(1-z): infimum over the disk is
    // 1 - (1 - lambda)(1 + r)... evaluated at z = -r, approaching lambda
    let lambda = 0.25;
    let f = AnalyticFn::koebe_order(lambda).unwrap();
    let rep = membership_margin(&f, &ClassSpec::Spirallike { alpha: 0.0, lambda }, &grid()).unwrap();
    let r = grid().r_max;
    let oracle = (1.0 - (2.0 - 2.0 * lambda) * r / (1.0 + r)) - lambda;
    assert!(rep.margin >= -1e-12);
    assert!((rep.margin - oracle).abs() < 1e-3, "margin {} oracle {oracle}", rep.margin);
    assert!((rep.witness + r).norm() < 0.05, "witness near -r_max, got {}", rep.witness);
}

#[test]
fn margins_are_monotone_in_the_tilt_free_order() {
    let f = AnalyticFn::koebe_order(0.5).unwrap();
    let hi = membership_margin(&f, &ClassSpec::Spirallike { alpha: 0.0, lambda: 0.5 }, &grid()).unwrap();
    let lo = membership_margin(&f, &ClassSpec::Spirallike { alpha: 0.0, lambda: 0.25 }, &grid()).unwrap();
    assert!(((lo.margin - hi.margin) - 0.25).abs() < 1e-12);
}
