//! Panel quadrature on complex segments and branch-tracked logarithms.
//!
//! Integration uses 16-point Gauss-Legendre panels with adaptive bisection:
//! a panel is accepted once splitting it changes the estimate by less than
//! its share of the total error budget. Nodes and weights are computed once
//! by Newton iteration on the Legendre polynomial rather than transcribed.

use num_complex::Complex64;
use std::sync::OnceLock;

use crate::func::{EvalError, EvalResult};

const PANEL_POINTS: usize = 16;

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOpts {
    /// Error budget relative to the magnitude of the whole integral.
    pub rel_tol: f64,
    /// Maximum bisection depth before giving up.
    pub max_depth: usize,
}

impl Default for QuadratureOpts {
    fn default() -> Self {
        Self { rel_tol: 1e-11, max_depth: 24 }
    }
}

fn gl_nodes() -> &'static ([f64; PANEL_POINTS], [f64; PANEL_POINTS]) {
    static NODES: OnceLock<([f64; PANEL_POINTS], [f64; PANEL_POINTS])> = OnceLock::new();
    NODES.get_or_init(|| {
        let n = PANEL_POINTS;
        let mut xs = [0.0; PANEL_POINTS];
        let mut ws = [0.0; PANEL_POINTS];
        for i in 0..n {
            // root of P_n, seeded by the Chebyshev-like estimate
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let step = p / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            xs[i] = x;
            ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (xs, ws)
    })
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn panel(
    f: &mut dyn FnMut(Complex64) -> EvalResult<Complex64>,
    a: Complex64,
    b: Complex64,
) -> EvalResult<Complex64> {
    let (xs, ws) = gl_nodes();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = Complex64::ZERO;
    // xs descend from +1 to -1, so ascending i walks the panel from a to b,
    // which keeps stateful integrands on locally monotone progress
    for i in 0..PANEL_POINTS {
        acc += ws[i] * f(mid - half * xs[i])?;
    }
    Ok(acc * half)
}

/// Integral of `f` along the straight segment `[a, b]`.
pub fn integrate_segment(
    f: &mut dyn FnMut(Complex64) -> EvalResult<Complex64>,
    a: Complex64,
    b: Complex64,
    opts: QuadratureOpts,
) -> EvalResult<Complex64> {
    if a == b {
        return Ok(Complex64::ZERO);
    }
    let whole = panel(f, a, b)?;
    let budget = opts.rel_tol * whole.norm().max(1e-3);
    refine(f, a, b, whole, budget, 0, opts.max_depth)
}

fn refine(
    f: &mut dyn FnMut(Complex64) -> EvalResult<Complex64>,
    a: Complex64,
    b: Complex64,
    coarse: Complex64,
    budget: f64,
    depth: usize,
    max_depth: usize,
) -> EvalResult<Complex64> {
    let mid = 0.5 * (a + b);
    let left = panel(f, a, mid)?;
    let right = panel(f, mid, b)?;
    let fine = left + right;
    let delta = (fine - coarse).norm();
    if delta <= budget {
        return Ok(fine);
    }
    if depth >= max_depth {
        return Err(EvalError::Quadrature { w: mid, depth, last_delta: delta });
    }
    let l = refine(f, a, mid, left, 0.5 * budget, depth + 1, max_depth)?;
    let r = refine(f, mid, b, right, 0.5 * budget, depth + 1, max_depth)?;
    Ok(l + r)
}

/// Continuous logarithm of `t -> g(t * z_end)` along `[0, z_end]`.
///
/// The branch is anchored at `t = 0` with the principal `Log g(0)` and
/// continued by accumulating principal logs of consecutive ratios, each
/// step kept small enough (`|ratio - 1| <= 1/2`) that no winding can hide
/// inside it. Queries may come in any order; checkpoints make nearby
/// queries cheap.
pub struct LogTracker<F: FnMut(Complex64) -> EvalResult<Complex64>> {
    g: F,
    z_end: Complex64,
    /// `(t, log g(t z_end), g(t z_end))`, sorted by `t`.
    checkpoints: Vec<(f64, Complex64, Complex64)>,
}

const MIN_STEP: f64 = 1e-12;
/// Largest fraction of the path taken per continuation step; combined with
/// the midpoint check below it keeps a full hidden turn from aliasing to a
/// small ratio.
const MAX_TRACK_STEP: f64 = 1.0 / 16.0;
const MAX_CHECKPOINTS: usize = 8192;

impl<F: FnMut(Complex64) -> EvalResult<Complex64>> LogTracker<F> {
    pub fn new(mut g: F, z_end: Complex64) -> EvalResult<Self> {
        let g0 = g(Complex64::ZERO)?;
        if g0 == Complex64::ZERO || !g0.is_finite() {
            return Err(EvalError::BranchTracking {
                z: Complex64::ZERO,
                what: "tracked function vanishes at the anchor",
            });
        }
        Ok(Self { g, z_end, checkpoints: vec![(0.0, g0.ln(), g0)] })
    }

    /// `log g(t * z_end)`, continuous along the segment from the anchor.
    pub fn log_at(&mut self, t: f64) -> EvalResult<Complex64> {
        let idx = match self
            .checkpoints
            .binary_search_by(|probe| probe.0.partial_cmp(&t).unwrap())
        {
            Ok(i) => return Ok(self.checkpoints[i].1),
            Err(i) => i - 1, // i >= 1 because t >= 0 and checkpoint 0 is at t = 0
        };
        let (mut t_cur, mut log_cur, mut g_cur) = self.checkpoints[idx];
        while t_cur < t {
            let mut h = (t - t_cur).min(MAX_TRACK_STEP);
            loop {
                let w = (t_cur + h) * self.z_end;
                let g_mid = (self.g)((t_cur + 0.5 * h) * self.z_end)?;
                let g_next = (self.g)(w)?;
                if g_mid.is_finite()
                    && g_mid != Complex64::ZERO
                    && g_next.is_finite()
                    && g_next != Complex64::ZERO
                {
                    // Both half-step ratios must be small rotations; the log
                    // advances by their principal logs, so a winding hidden
                    // inside a single probe cannot alias away.
                    let r1 = g_mid / g_cur;
                    let r2 = g_next / g_mid;
                    if (r1 - Complex64::ONE).norm() <= 0.5 && (r2 - Complex64::ONE).norm() <= 0.5 {
                        t_cur += h;
                        log_cur += r1.ln() + r2.ln();
                        g_cur = g_next;
                        break;
                    }
                }
                h *= 0.5;
                if h < MIN_STEP {
                    return Err(EvalError::BranchTracking {
                        z: w,
                        what: "step underflow, tracked function has a zero on the path",
                    });
                }
            }
        }
        if self.checkpoints.len() < MAX_CHECKPOINTS {
            let pos = self
                .checkpoints
                .binary_search_by(|probe| probe.0.partial_cmp(&t_cur).unwrap())
                .unwrap_or_else(|e| e);
            self.checkpoints.insert(pos, (t_cur, log_cur, g_cur));
        }
        Ok(log_cur)
    }
}
