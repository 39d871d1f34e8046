//! Numerical certificates over disk functions: pre-Schwarzian norm
//! estimation, family-membership margins, univalence falsification, and the
//! exact parameter-set predicates for the scalar action.

use num_complex::Complex64;
use std::collections::HashMap;

use crate::func::{DiskFunction, EvalError, EvalResult};
use crate::grid::DiskGrid;

/// Simpson node count per full turn in the close-to-convexity scan.
const KAPLAN_NODES: usize = 1440;
/// Collinearity tolerance for the closed-segment tests.
const SEGMENT_TOL: f64 = 1e-12;
/// Default minimum separation for collision candidates.
pub const DEFAULT_SEPARATION: f64 = 0.05;

/// Sampled lower bound on `sup (1-|z|^2) |f''(z)/f'(z)|`.
#[derive(Debug, Clone, Copy)]
pub struct NormEstimate {
    pub value: f64,
    pub argmax: Complex64,
    pub samples: usize,
    pub skipped: usize,
}

/// Richardson-extrapolated boundary limit of the norm integrand along a ray.
#[derive(Debug, Clone, Copy)]
pub struct RadialLimit {
    pub limit: f64,
    /// Set when the sequence grows without settling; `limit` then echoes the
    /// last finite sample rather than an extrapolation.
    pub diverged: bool,
    pub last: f64,
}

/// Geometric function family, by its defining inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassSpec {
    /// `Re(e^{i alpha} z f'/f) > lambda cos(alpha)`
    Spirallike { alpha: f64, lambda: f64 },
    /// `Re(1 + z f''/f') > lambda`
    Convex { lambda: f64 },
    /// `int_{t1}^{t2} Re(1 + z f''/f') dtheta > -pi` over all arcs up to a
    /// full turn, scanned on the radius ladder.
    Kaplan,
}

/// Sampled infimum of a family's defining quantity minus its threshold.
#[derive(Debug, Clone, Copy)]
pub struct MembershipReport {
    pub family: ClassSpec,
    pub margin: f64,
    pub witness: Complex64,
    pub samples: usize,
    pub skipped: usize,
}

/// A (near-)equal pair of function values at separated points.
#[derive(Debug, Clone, Copy)]
pub struct CollisionWitness {
    pub z1: Complex64,
    pub z2: Complex64,
    pub value: Complex64,
    pub residual: f64,
    pub separation: f64,
    /// False when Newton polishing diverged and the pair is only a grid-level
    /// candidate.
    pub polished: bool,
}

/// Parameter sets for which the scalar action preserves univalence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UnivalenceSet {
    /// Disk of radius 1/2 united with the real segment [1/2, 3/2].
    AK,
    /// Disk of radius `1/(2(1-lambda))` united with `[r, 3r]` on the reals.
    AKLambda { lambda: f64 },
    /// Disk of radius `r = 1/(2(1-lambda) cos alpha)` united with the rotated
    /// segment `[r e^{i alpha}, 3 r e^{i alpha}]`.
    AJSpiral { alpha: f64, lambda: f64 },
    /// Disk of radius `1/(2(1-lambda))` alone.
    AJSLambda { lambda: f64 },
}

fn require_order(lambda: f64) -> EvalResult<()> {
    if !lambda.is_finite() || lambda >= 1.0 {
        return Err(EvalError::Domain(format!("order lambda must be finite and < 1, got {lambda}")));
    }
    Ok(())
}

fn require_tilt(alpha: f64) -> EvalResult<()> {
    if !alpha.is_finite() || alpha.abs() >= std::f64::consts::FRAC_PI_2 {
        return Err(EvalError::Domain(format!("tilt alpha must satisfy |alpha| < pi/2, got {alpha}")));
    }
    Ok(())
}

/// Maps singular/untracked samples to `None` (skipped); real failures pass
/// through.
fn soft(res: EvalResult<Complex64>) -> EvalResult<Option<Complex64>> {
    match res {
        Ok(v) if v.is_finite() => Ok(Some(v)),
        Ok(_) => Ok(None),
        Err(EvalError::SingularSample { .. }) | Err(EvalError::BranchTracking { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

struct ScanOutcome {
    score: f64,
    witness: Complex64,
    samples: usize,
    skipped: usize,
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.5 * (a + b)];
    }
    (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect()
}

/// Local refinement: repeatedly re-sample an 11x11 polar patch around the
/// best point, shrinking the patch 3x per round.
#[allow(clippy::too_many_arguments)]
fn refine_polar(
    eval: &mut dyn FnMut(Complex64) -> EvalResult<Option<f64>>,
    out: &mut ScanOutcome,
    mut r_lo: f64,
    mut r_hi: f64,
    mut th_lo: f64,
    mut th_hi: f64,
    seed: (f64, f64),
    rounds: usize,
    r_cap: f64,
) -> EvalResult<()> {
    let (mut best_r, mut best_th) = seed;
    for _ in 0..rounds {
        for &r in &linspace(r_lo, r_hi, 11) {
            for &th in &linspace(th_lo, th_hi, 11) {
                let z = Complex64::from_polar(r, th);
                out.samples += 1;
                match eval(z)? {
                    Some(s) if s > out.score => {
                        out.score = s;
                        out.witness = z;
                        best_r = r;
                        best_th = th;
                    }
                    Some(_) => {}
                    None => out.skipped += 1,
                }
            }
        }
        let rw = (r_hi - r_lo) / 3.0;
        let tw = (th_hi - th_lo) / 3.0;
        r_lo = (best_r - 0.5 * rw).max(r_lo);
        r_hi = (best_r + 0.5 * rw).min(r_hi).min(r_cap);
        th_lo = (best_th - 0.5 * tw).max(th_lo);
        th_hi = (best_th + 0.5 * tw).min(th_hi);
    }
    Ok(())
}

/// Coarse ladder-by-angle maximization of `eval` followed by local
/// refinement. Scores are maximized; margin scans negate.
fn scan_polar(
    eval: &mut dyn FnMut(Complex64) -> EvalResult<Option<f64>>,
    grid: &DiskGrid,
) -> EvalResult<ScanOutcome> {
    grid.validate().map_err(EvalError::Domain)?;
    let ladder = grid.radius_ladder();
    let dirs = grid.directions();
    let mut out = ScanOutcome {
        score: f64::NEG_INFINITY,
        witness: Complex64::ZERO,
        samples: 0,
        skipped: 0,
    };
    let mut best = (0usize, 0usize);
    for (i, &r) in ladder.iter().enumerate() {
        for (j, d) in dirs.iter().enumerate() {
            let z = r * d;
            out.samples += 1;
            match eval(z)? {
                Some(s) if s > out.score => {
                    out.score = s;
                    out.witness = z;
                    best = (i, j);
                }
                Some(_) => {}
                None => out.skipped += 1,
            }
        }
    }
    if !out.score.is_finite() {
        return Err(EvalError::Domain("every grid sample was skipped".into()));
    }
    let (r_lo, r_hi) = bracket_radius(&ladder, best.0);
    let th = 2.0 * std::f64::consts::PI * best.1 as f64 / grid.angles as f64;
    let dth = 2.0 * std::f64::consts::PI / grid.angles as f64;
    refine_polar(eval, &mut out, r_lo, r_hi, th - dth, th + dth, (ladder[best.0], th), grid.refine, grid.r_max)?;
    Ok(out)
}

fn bracket_radius(ladder: &[f64], i: usize) -> (f64, f64) {
    let lo = if i == 0 { 0.5 * ladder[0] } else { ladder[i - 1] };
    let hi = if i + 1 < ladder.len() { ladder[i + 1] } else { ladder[i] };
    (lo, hi)
}

/// Grid maximum of `(1-|z|^2) |f''(z)/f'(z)|` with a refinement pass around
/// the best cell. The result is a lower bound on the true supremum; the
/// witness is a sampled point attaining it.
pub fn norm_estimate(f: &dyn DiskFunction, grid: &DiskGrid) -> EvalResult<NormEstimate> {
    let mut eval = |z: Complex64| -> EvalResult<Option<f64>> {
        Ok(soft(f.pre_schwarzian(z))?.map(|p| (1.0 - z.norm_sqr()) * p.norm()))
    };
    let out = scan_polar(&mut eval, grid)?;
    Ok(NormEstimate { value: out.score, argmax: out.witness, samples: out.samples, skipped: out.skipped })
}

/// Limit of `(1-t^2) |f''(t d)/f'(t d)|` as `t -> 1^-` along the unit
/// direction `d`, sampled at `t = 1 - 2^-k` and Richardson-extrapolated.
pub fn radial_norm_limit(f: &dyn DiskFunction, direction: Complex64) -> EvalResult<RadialLimit> {
    if direction.norm() == 0.0 || !direction.is_finite() {
        return Err(EvalError::Domain("direction must be a nonzero finite complex number".into()));
    }
    let dir = direction / direction.norm();
    let mut phis: Vec<f64> = Vec::new();
    let mut diverged = false;
    for k in 3..=40u32 {
        let eps = 2f64.powi(-(k as i32));
        let z = (1.0 - eps) * dir;
        let phi = match soft(f.pre_schwarzian(z))? {
            Some(p) => eps * (2.0 - eps) * p.norm(),
            None => {
                diverged = true;
                break;
            }
        };
        if !phi.is_finite() || phi > 1e10 {
            diverged = true;
            break;
        }
        phis.push(phi);
    }
    if phis.is_empty() {
        return Err(EvalError::Domain("no finite samples along the ray".into()));
    }
    let last = *phis.last().expect("nonempty");
    // Sustained non-decaying growth in the increments marks divergence; a
    // convergent profile here has increments shrinking geometrically.
    if !diverged && phis.len() >= 8 {
        let d: Vec<f64> = phis.windows(2).map(|w| w[1] - w[0]).collect();
        let n = d.len();
        let growing = (n - 3..n).all(|i| d[i] > 1e-8) && (n - 2..n).all(|i| d[i] > 0.9 * d[i - 1]);
        if growing {
            diverged = true;
        }
    }
    if diverged {
        return Ok(RadialLimit { limit: last, diverged: true, last });
    }
    // Trim the trailing noise floor: keep entries while the increment
    // magnitudes still shrink.
    let mut keep = phis.len();
    for i in 2..phis.len() {
        let prev = (phis[i - 1] - phis[i - 2]).abs();
        let cur = (phis[i] - phis[i - 1]).abs();
        if i >= 8 && cur > prev.max(1e-14) {
            keep = i;
            break;
        }
    }
    let tail: Vec<f64> = phis[..keep].iter().rev().take(10).rev().copied().collect();
    let mut table = tail;
    let mut limit = *table.last().expect("nonempty");
    for m in 1..=3usize {
        if table.len() < 2 {
            break;
        }
        let w = 2f64.powi(m as i32);
        table = table.windows(2).map(|p| (w * p[1] - p[0]) / (w - 1.0)).collect();
        limit = *table.last().expect("nonempty");
    }
    Ok(RadialLimit { limit, diverged: false, last })
}

/// Sampled infimum of the family's defining quantity minus its threshold,
/// over the grid (with refinement for the pointwise families).
pub fn membership_margin(
    f: &dyn DiskFunction,
    family: &ClassSpec,
    grid: &DiskGrid,
) -> EvalResult<MembershipReport> {
    match *family {
        ClassSpec::Convex { lambda } => {
            if !lambda.is_finite() {
                return Err(EvalError::Domain("convex order must be finite".into()));
            }
            let mut eval = |z: Complex64| -> EvalResult<Option<f64>> {
                Ok(soft(f.pre_schwarzian(z))?.map(|p| -((Complex64::ONE + z * p).re - lambda)))
            };
            let out = scan_polar(&mut eval, grid)?;
            Ok(MembershipReport {
                family: *family,
                margin: -out.score,
                witness: out.witness,
                samples: out.samples,
                skipped: out.skipped,
            })
        }
        ClassSpec::Spirallike { alpha, lambda } => {
            require_order(lambda)?;
            require_tilt(alpha)?;
            spirallike_margin(f, alpha, lambda, grid)
        }
        ClassSpec::Kaplan => kaplan_margin(f, grid),
    }
}

fn spirallike_quantity(
    z: Complex64,
    v: Complex64,
    d: Complex64,
    tilt: Complex64,
    threshold: f64,
) -> Option<f64> {
    if v == Complex64::ZERO {
        return None;
    }
    let q = (tilt * z * d / v).re - threshold;
    q.is_finite().then_some(q)
}

fn spirallike_margin(
    f: &dyn DiskFunction,
    alpha: f64,
    lambda: f64,
    grid: &DiskGrid,
) -> EvalResult<MembershipReport> {
    grid.validate().map_err(EvalError::Domain)?;
    let tilt = Complex64::from_polar(1.0, alpha);
    let threshold = lambda * alpha.cos();
    let ladder = grid.radius_ladder();
    let dirs = grid.directions();
    let mut out = ScanOutcome {
        score: f64::NEG_INFINITY,
        witness: Complex64::ZERO,
        samples: 0,
        skipped: 0,
    };
    let mut best = (0usize, 0usize);
    // Values and derivatives arrive one ray at a time so transforms can
    // reuse cumulative path integrals and branch tracking per direction.
    for (j, d) in dirs.iter().enumerate() {
        let (vals, dvs) = match (f.ray_values(*d, &ladder), f.ray_derivs(*d, &ladder)) {
            (Ok(v), Ok(dv)) => (v, dv),
            (Err(EvalError::SingularSample { .. }), _) | (_, Err(EvalError::SingularSample { .. })) => {
                out.skipped += ladder.len();
                out.samples += ladder.len();
                continue;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        for (i, &r) in ladder.iter().enumerate() {
            let z = r * d;
            out.samples += 1;
            match spirallike_quantity(z, vals[i], dvs[i], tilt, threshold) {
                Some(q) if -q > out.score => {
                    out.score = -q;
                    out.witness = z;
                    best = (i, j);
                }
                Some(_) => {}
                None => out.skipped += 1,
            }
        }
    }
    if !out.score.is_finite() {
        return Err(EvalError::Domain("every grid sample was skipped".into()));
    }
    let mut eval = |z: Complex64| -> EvalResult<Option<f64>> {
        let v = match soft(f.value(z))? {
            Some(v) => v,
            None => return Ok(None),
        };
        let d = match soft(f.deriv(z))? {
            Some(d) => d,
            None => return Ok(None),
        };
        Ok(spirallike_quantity(z, v, d, tilt, threshold).map(|q| -q))
    };
    let (r_lo, r_hi) = bracket_radius(&ladder, best.0);
    let th = 2.0 * std::f64::consts::PI * best.1 as f64 / grid.angles as f64;
    let dth = 2.0 * std::f64::consts::PI / grid.angles as f64;
    refine_polar(&mut eval, &mut out, r_lo, r_hi, th - dth, th + dth, (ladder[best.0], th), grid.refine, grid.r_max)?;
    Ok(MembershipReport {
        family: ClassSpec::Spirallike { alpha, lambda },
        margin: -out.score,
        witness: out.witness,
        samples: out.samples,
        skipped: out.skipped,
    })
}

/// Close-to-convexity margin: minimum over radii and arcs `t2 - t1 <= 2 pi`
/// of `int Re(1 + z f''/f') dtheta + pi`, the arc integral by composite
/// Simpson prefix sums on a doubled circle.
fn kaplan_margin(f: &dyn DiskFunction, grid: &DiskGrid) -> EvalResult<MembershipReport> {
    grid.validate().map_err(EvalError::Domain)?;
    let m = KAPLAN_NODES;
    let dth = 2.0 * std::f64::consts::PI / m as f64;
    let mut margin = f64::INFINITY;
    let mut witness = Complex64::ZERO;
    let mut samples = 0usize;
    let mut skipped = 0usize;
    let mut usable_radii = 0usize;
    for &r in &grid.radius_ladder() {
        let mut h = Vec::with_capacity(m);
        let mut bad = false;
        for j in 0..m {
            let z = Complex64::from_polar(r, j as f64 * dth);
            samples += 1;
            match soft(f.pre_schwarzian(z))? {
                Some(p) => h.push((Complex64::ONE + z * p).re),
                None => {
                    bad = true;
                    break;
                }
            }
        }
        if bad {
            // A singular node poisons every arc through it; drop the radius.
            skipped += 1;
            continue;
        }
        usable_radii += 1;
        // Simpson prefix integrals at even nodes over two turns.
        let mut prefix = vec![0.0f64; m + 1];
        for e in (2..=2 * m).step_by(2) {
            let a = h[(e - 2) % m];
            let b = h[(e - 1) % m];
            let c = h[e % m];
            prefix[e / 2] = prefix[e / 2 - 1] + dth / 3.0 * (a + 4.0 * b + c);
        }
        // Minimize prefix[e] - prefix[s] over windows of at most one turn
        // (m/2 Simpson panels) using a monotone deque of window maxima.
        let mut deque: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
        for e in 1..=m {
            let lo = e.saturating_sub(m / 2);
            while let Some(&front) = deque.front() {
                if front < lo {
                    deque.pop_front();
                } else {
                    break;
                }
            }
            let s_new = e - 1;
            while let Some(&back) = deque.back() {
                if prefix[back] <= prefix[s_new] {
                    deque.pop_back();
                } else {
                    break;
                }
            }
            deque.push_back(s_new);
            let s = *deque.front().expect("window nonempty");
            let arc = prefix[e] - prefix[s] + std::f64::consts::PI;
            if arc < margin {
                margin = arc;
                witness = Complex64::from_polar(r, (2 * s) as f64 * dth);
            }
        }
    }
    if usable_radii == 0 {
        return Err(EvalError::Domain("every radius was skipped".into()));
    }
    Ok(MembershipReport { family: ClassSpec::Kaplan, margin, witness, samples, skipped })
}

/// Scale used for the default collision tolerance: the median sampled |f|.
pub fn value_scale(f: &dyn DiskFunction, grid: &DiskGrid) -> EvalResult<f64> {
    let samples = collect_samples(f, grid)?;
    let mut mags: Vec<f64> = samples.iter().map(|(_, v)| v.norm()).collect();
    if mags.is_empty() {
        return Err(EvalError::Domain("no finite samples".into()));
    }
    mags.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    Ok(mags[mags.len() / 2])
}

fn collect_samples(f: &dyn DiskFunction, grid: &DiskGrid) -> EvalResult<Vec<(Complex64, Complex64)>> {
    grid.validate().map_err(EvalError::Domain)?;
    let ladder = grid.radius_ladder();
    let mut samples = Vec::with_capacity(grid.radii * grid.angles);
    for d in grid.directions() {
        match f.ray_values(d, &ladder) {
            Ok(vals) => {
                for (&r, v) in ladder.iter().zip(vals) {
                    if v.is_finite() {
                        samples.push((r * d, v));
                    }
                }
            }
            Err(EvalError::SingularSample { .. }) | Err(EvalError::BranchTracking { .. }) => {
                for &r in &ladder {
                    if let Some(v) = soft(f.value(r * d))? {
                        samples.push((r * d, v));
                    }
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(samples)
}

/// Searches grid samples for pairs mapping near one value from separated
/// points, then Newton-polishes `f(z1) - f(z2) = 0` in both variables.
/// `None` proves nothing; a polished witness refutes injectivity directly.
pub fn univalence_falsify(
    f: &dyn DiskFunction,
    grid: &DiskGrid,
    eps_value: f64,
    delta_sep: f64,
) -> EvalResult<Option<CollisionWitness>> {
    if !(eps_value > 0.0) || !(delta_sep > 0.0) {
        return Err(EvalError::Domain("eps_value and delta_sep must be positive".into()));
    }
    let samples = collect_samples(f, grid)?;
    // Value-plane buckets of side eps: near-equal values land in the same or
    // an adjacent cell.
    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (idx, (_, v)) in samples.iter().enumerate() {
        let key = ((v.re / eps_value).floor() as i64, (v.im / eps_value).floor() as i64);
        buckets.entry(key).or_default().push(idx);
    }
    // Distinct-region dedup happens during enumeration: a heavily folded map
    // produces millions of near-equal grid pairs, but only the best candidate
    // per pair of coarse z-cells is worth polishing.
    let cell = |z: Complex64| ((z.re / 0.02).round() as i64, (z.im / 0.02).round() as i64);
    let mut best: HashMap<(i64, i64, i64, i64), (f64, usize, usize)> = HashMap::new();
    for (&(bx, by), members) in &buckets {
        for dx in 0..=1i64 {
            for dy in -1..=1i64 {
                if dx == 0 && dy < 0 {
                    continue;
                }
                let other = if dx == 0 && dy == 0 {
                    members
                } else {
                    match buckets.get(&(bx + dx, by + dy)) {
                        Some(m) => m,
                        None => continue,
                    }
                };
                for (a_pos, &a) in members.iter().enumerate() {
                    let start = if dx == 0 && dy == 0 { a_pos + 1 } else { 0 };
                    for &b in &other[start..] {
                        let (za, va) = samples[a];
                        let (zb, vb) = samples[b];
                        let dv = (va - vb).norm();
                        if dv < eps_value && (za - zb).norm() > delta_sep {
                            let (c1, c2) = (cell(za), cell(zb));
                            let key = if (c1.0, c1.1) <= (c2.0, c2.1) {
                                (c1.0, c1.1, c2.0, c2.1)
                            } else {
                                (c2.0, c2.1, c1.0, c1.1)
                            };
                            // Tuple order breaks exact-tie races (conjugate
                            // pairs) independently of map iteration order.
                            let cand = (dv, a, b);
                            let entry = best.entry(key).or_insert(cand);
                            if cand < *entry {
                                *entry = cand;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut candidates: Vec<(f64, usize, usize)> = best.into_values().collect();
    candidates.sort_by(|x, y| {
        x.0.partial_cmp(&y.0).expect("finite").then_with(|| (x.1, x.2).cmp(&(y.1, y.2)))
    });
    let mut fallback: Option<CollisionWitness> = None;
    for &(_, a, b) in candidates.iter().take(64) {
        let (mut z1, _) = samples[a];
        let (mut z2, _) = samples[b];
        match newton_collision(f, &mut z1, &mut z2, delta_sep)? {
            PolishOutcome::Polished(w) => return Ok(Some(w)),
            PolishOutcome::Trivial => {}
            PolishOutcome::Diverged => {
                if fallback.is_none() {
                    let v1 = f.value(samples[a].0)?;
                    let v2 = f.value(samples[b].0)?;
                    fallback = Some(CollisionWitness {
                        z1: samples[a].0,
                        z2: samples[b].0,
                        value: 0.5 * (v1 + v2),
                        residual: (v1 - v2).norm(),
                        separation: (samples[a].0 - samples[b].0).norm(),
                        polished: false,
                    });
                }
            }
        }
    }
    Ok(fallback)
}

enum PolishOutcome {
    Polished(CollisionWitness),
    /// Converged onto a single point: no injectivity violation here.
    Trivial,
    Diverged,
}

/// Least-norm Newton for the single equation `f(z1) - f(z2) = 0` in two
/// complex unknowns, with step damping and a disk guard.
fn newton_collision(
    f: &dyn DiskFunction,
    z1: &mut Complex64,
    z2: &mut Complex64,
    delta_sep: f64,
) -> EvalResult<PolishOutcome> {
    let eval_r = |w1: Complex64, w2: Complex64| -> EvalResult<Option<Complex64>> {
        let v1 = match soft(f.value(w1))? {
            Some(v) => v,
            None => return Ok(None),
        };
        let v2 = match soft(f.value(w2))? {
            Some(v) => v,
            None => return Ok(None),
        };
        Ok(Some(v1 - v2))
    };
    let mut r = match eval_r(*z1, *z2)? {
        Some(r) => r,
        None => return Ok(PolishOutcome::Diverged),
    };
    let tol = |v: f64| 1e-12 * v.max(1.0);
    for _ in 0..60 {
        let v1 = f.value(*z1)?;
        if r.norm() <= tol(v1.norm()) {
            let sep = (*z1 - *z2).norm();
            if sep <= delta_sep {
                return Ok(PolishOutcome::Trivial);
            }
            return Ok(PolishOutcome::Polished(CollisionWitness {
                z1: *z1,
                z2: *z2,
                value: 0.5 * (v1 + f.value(*z2)?),
                residual: r.norm(),
                separation: sep,
                polished: true,
            }));
        }
        let a1 = match soft(f.deriv(*z1))? {
            Some(d) => d,
            None => return Ok(PolishOutcome::Diverged),
        };
        let a2 = match soft(f.deriv(*z2))? {
            Some(d) => -d,
            None => return Ok(PolishOutcome::Diverged),
        };
        let s = a1.norm_sqr() + a2.norm_sqr();
        if s < 1e-30 {
            return Ok(PolishOutcome::Diverged);
        }
        let d1 = -a1.conj() * r / s;
        let d2 = -a2.conj() * r / s;
        let mut step = 1.0;
        let mut accepted = false;
        for _ in 0..8 {
            let mut w1 = *z1 + step * d1;
            let mut w2 = *z2 + step * d2;
            if w1.norm() > 0.999_999 {
                w1 = w1 / w1.norm() * 0.999_999;
            }
            if w2.norm() > 0.999_999 {
                w2 = w2 / w2.norm() * 0.999_999;
            }
            if let Some(rn) = eval_r(w1, w2)? {
                if rn.norm() < r.norm() {
                    *z1 = w1;
                    *z2 = w2;
                    r = rn;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            return Ok(PolishOutcome::Diverged);
        }
    }
    Ok(PolishOutcome::Diverged)
}

/// Whether `(1-z)^mu` is injective on the disk: `mu` nonzero and inside one
/// of the closed unit disks centered at -1 or +1.
pub fn royster_univalent(mu: Complex64) -> EvalResult<bool> {
    if !mu.is_finite() {
        return Err(EvalError::Domain("exponent mu must be finite".into()));
    }
    if mu == Complex64::ZERO {
        return Err(EvalError::Domain("exponent mu = 0 is degenerate (constant map)".into()));
    }
    Ok((mu + Complex64::ONE).norm() <= 1.0 || (mu - Complex64::ONE).norm() <= 1.0)
}

/// Injectivity of the power-map factor arising from the Cesaro transform of
/// the extremal starlike function: exponent `mu = 2 lambda - 1 - beta`,
/// equivalent to `2 lambda - 3 <= beta <= 2 lambda + 1`. `mu = 0`
/// degenerates to the logarithm, which is injective.
pub fn royster_segment_univalent(lambda: f64, beta: f64) -> EvalResult<bool> {
    require_order(lambda)?;
    if !beta.is_finite() {
        return Err(EvalError::Domain("beta must be finite".into()));
    }
    let mu = 2.0 * lambda - 1.0 - beta;
    if mu.abs() < 1e-12 {
        return Ok(true);
    }
    royster_univalent(Complex64::new(mu, 0.0))
}

/// Closed-segment membership: collinear within 1e-12 and affine parameter in
/// [0, 1], endpoints included.
fn on_segment(gamma: Complex64, a: Complex64, b: Complex64) -> bool {
    let ab = b - a;
    let ag = gamma - a;
    let cross = ab.re * ag.im - ab.im * ag.re;
    if cross.abs() > SEGMENT_TOL {
        return false;
    }
    let t = (ag.re * ab.re + ag.im * ab.im) / ab.norm_sqr();
    (0.0..=1.0).contains(&t)
}

/// Exact disk-union-segment predicates for the parameter sets under which
/// the scalar action preserves injectivity.
pub fn set_membership(set: &UnivalenceSet, gamma: Complex64) -> EvalResult<bool> {
    if !gamma.is_finite() {
        return Err(EvalError::Domain("gamma must be finite".into()));
    }
    match *set {
        UnivalenceSet::AK => {
            let r = 0.5;
            Ok(gamma.norm() <= r || on_segment(gamma, Complex64::new(r, 0.0), Complex64::new(3.0 * r, 0.0)))
        }
        UnivalenceSet::AKLambda { lambda } => {
            require_order(lambda)?;
            let r = 1.0 / (2.0 * (1.0 - lambda));
            Ok(gamma.norm() <= r || on_segment(gamma, Complex64::new(r, 0.0), Complex64::new(3.0 * r, 0.0)))
        }
        UnivalenceSet::AJSpiral { alpha, lambda } => {
            require_order(lambda)?;
            require_tilt(alpha)?;
            let r = 1.0 / (2.0 * (1.0 - lambda) * alpha.cos());
            let e = Complex64::from_polar(1.0, alpha);
            Ok(gamma.norm() <= r || on_segment(gamma, r * e, 3.0 * r * e))
        }
        UnivalenceSet::AJSLambda { lambda } => {
            require_order(lambda)?;
            Ok(gamma.norm() <= 1.0 / (2.0 * (1.0 - lambda)))
        }
    }
}

/// Whether the Alexander integral of every spirallike function of tilt
/// `alpha` and order `lambda` is injective: unit scalar inside the
/// corresponding parameter set.
pub fn alexander_spiral_univalence(alpha: f64, lambda: f64) -> EvalResult<bool> {
    set_membership(&UnivalenceSet::AJSpiral { alpha, lambda }, Complex64::ONE)
}
