//! Young-function calculus.
//!
//! A Young function is a nonzero convex `Φ : [0, ∞) → [0, ∞]` with
//! `Φ(0) = 0` and `Φ(x) → ∞`. This module provides an evaluable
//! representation with right-derivative access, numerical convex
//! conjugation `Ψ(y) = sup{xy − Φ(x) : x ≥ 0}`, normalization of a
//! complementary pair to `Φ(1) + Ψ(1) = 1`, detection of the Δ₂ growth
//! condition, and the two-sided asymptotic order `≺`.

mod builtins;

pub use builtins::{
    builtin, builtin_specs, cosh_minus, cosh_minus_conjugate, exp_minus, exp_minus_conjugate,
    pair, power, riordan, riordan_conjugate_form, xp_log,
};

use std::fmt;
use std::sync::Arc;

use crate::numerics::{bisect_root, golden_max, log_grid, BRACKET_CAP};

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Errors from the Young-function layer.
#[derive(Debug, thiserror::Error)]
pub enum YoungError {
    #[error("convexity sampling failed for '{label}' near x = {at}")]
    NonConvexInput { label: String, at: f64 },
    #[error("maximizer bracket for the conjugate at y = {y} exceeded {cap:e} without the objective turning down")]
    BracketOverflow { y: f64, cap: f64 },
    #[error("no normalization scale: {0}")]
    NoRoot(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
}

/// An evaluable convex gauge with right-derivative access.
///
/// Values are extended reals: evaluation may return `f64::INFINITY` (for
/// example past `domain_hint`, or for conjugates of functions with linear
/// growth). Instances are immutable and cheap to clone; the closures are
/// shared behind `Arc` and safe to use from concurrent tasks.
#[derive(Clone)]
pub struct YoungFunction {
    label: String,
    eval: ScalarFn,
    deriv: ScalarFn,
    domain_hint: Option<f64>,
    growth_c0: Option<f64>,
    growth_p: Option<f64>,
}

impl fmt::Debug for YoungFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("YoungFunction")
            .field("label", &self.label)
            .field("domain_hint", &self.domain_hint)
            .finish()
    }
}

impl YoungFunction {
    /// Build a Young function from closures. `eval` and `deriv` must be
    /// defined on `[0, ∞)` with the Young-function properties; they are
    /// trusted here and validated by [`YoungFunction::validate`].
    pub fn from_parts(
        label: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        deriv: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain_hint: Option<f64>,
    ) -> Self {
        Self {
            label: label.into(),
            eval: Arc::new(eval),
            deriv: Arc::new(deriv),
            domain_hint,
            growth_c0: None,
            growth_p: None,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Threshold beyond which evaluation is `+∞`, when finite.
    pub fn domain_hint(&self) -> Option<f64> {
        self.domain_hint
    }

    /// Evaluate `Φ(x)` for `x ≥ 0` (negative arguments use `|x|`).
    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x.abs())
    }

    /// Right derivative `Φ'(x)`.
    pub fn deriv(&self, x: f64) -> f64 {
        (self.deriv)(x.abs())
    }

    /// `Φ(1)`, the gauge threshold used throughout the dual norms.
    pub fn at_one(&self) -> f64 {
        self.eval(1.0)
    }

    /// Recorded polynomial-growth fit for the derivative, if any.
    pub fn growth(&self) -> Option<(f64, f64)> {
        match (self.growth_c0, self.growth_p) {
            (Some(c0), Some(p)) => Some((c0, p)),
            _ => None,
        }
    }

    /// Copy with growth metadata `Φ'(t) ≤ c0·t^p` attached.
    pub fn with_growth(&self, c0: f64, p: f64) -> Self {
        let mut out = self.clone();
        out.growth_c0 = Some(c0);
        out.growth_p = Some(p);
        out
    }

    /// The rescaled gauge `x ↦ Φ(s·x)`.
    pub fn scaled(&self, s: f64) -> Self {
        assert!(s > 0.0 && s.is_finite());
        if (s - 1.0).abs() < 1e-15 {
            return self.clone();
        }
        let eval = self.eval.clone();
        let deriv = self.deriv.clone();
        Self {
            label: format!("{}@s={:.12}", self.label, s),
            eval: Arc::new(move |x| eval(s * x)),
            deriv: Arc::new(move |x| s * deriv(s * x)),
            domain_hint: self.domain_hint.map(|t| t / s),
            growth_c0: None,
            growth_p: None,
        }
    }

    /// Sample the defining invariants: `Φ(0) = 0`, monotonicity, midpoint
    /// convexity, and monotone derivative, over a log grid.
    pub fn validate(&self, x_max: f64, tol: f64) -> Result<(), YoungError> {
        if self.eval(0.0).abs() > tol {
            return Err(YoungError::NonConvexInput {
                label: self.label.clone(),
                at: 0.0,
            });
        }
        let grid = log_grid(1e-8, x_max, 256);
        let mut prev_x = 0.0;
        let mut prev_v = 0.0;
        let mut prev_d = self.deriv(0.0);
        for &x in &grid {
            let v = self.eval(x);
            if !v.is_finite() {
                break; // +inf tail is fine; nothing more to sample
            }
            if v < prev_v - tol {
                return Err(YoungError::NonConvexInput {
                    label: self.label.clone(),
                    at: x,
                });
            }
            let d = self.deriv(x);
            if d.is_finite() && prev_d.is_finite() && d < prev_d - tol {
                return Err(YoungError::NonConvexInput {
                    label: self.label.clone(),
                    at: x,
                });
            }
            // midpoint convexity on [prev_x, x]
            let m = 0.5 * (prev_x + x);
            let vm = self.eval(m);
            if vm > 0.5 * (prev_v + v) + tol * (1.0 + v.abs()) {
                return Err(YoungError::NonConvexInput {
                    label: self.label.clone(),
                    at: m,
                });
            }
            prev_x = x;
            prev_v = v;
            prev_d = d;
        }
        Ok(())
    }

    /// Numerical convex conjugate `Ψ(y) = sup{x|y| − Φ(x) : x ≥ 0}`.
    ///
    /// The input is checked for convexity by sampling first. Per-query
    /// evaluation inverts the derivative by bisection where it is finite
    /// and increasing, and falls back to golden-section maximization over
    /// a doubling bracket otherwise; queries whose bracket exceeds the cap
    /// without the objective turning down evaluate to `+∞` (see
    /// [`conjugate_at`] for the checked variant).
    pub fn conjugate(&self) -> Result<YoungFunction, YoungError> {
        self.validate(1e6, 1e-7)?;
        let phi_e = self.clone();
        let phi_d = self.clone();
        Ok(YoungFunction {
            label: format!("conj({})", self.label),
            eval: Arc::new(move |y| conjugate_at(&phi_e, y).unwrap_or(f64::INFINITY)),
            deriv: Arc::new(move |y| conjugate_argmax(&phi_d, y).unwrap_or(f64::INFINITY)),
            domain_hint: None,
            growth_c0: None,
            growth_p: None,
        })
    }
}

/// Maximizer `x*(y)` of `x ↦ x|y| − Φ(x)`; this is the right derivative of
/// the conjugate at `y`.
pub fn conjugate_argmax(phi: &YoungFunction, y: f64) -> Result<f64, YoungError> {
    let y = y.abs();
    if y == 0.0 {
        return Ok(0.0);
    }
    let cap = phi.domain_hint().unwrap_or(BRACKET_CAP);
    if phi.deriv(0.0) >= y {
        return Ok(0.0);
    }
    // Expand until the slope reaches y (objective turns down past there).
    let mut hi = 1.0_f64.min(cap);
    let mut expansions = 0;
    while phi.deriv(hi) < y {
        if hi >= cap {
            if phi.domain_hint().is_some() {
                // finite domain: the sup sits at the boundary
                return Ok(cap);
            }
            return Err(YoungError::BracketOverflow { y, cap });
        }
        hi = (hi * 2.0).min(cap);
        expansions += 1;
        if expansions > 1200 {
            return Err(YoungError::BracketOverflow { y, cap });
        }
    }
    let d_hi = phi.deriv(hi);
    if !d_hi.is_finite() || !phi.deriv(hi * 0.5).is_finite() {
        // derivative unusable: maximize the objective directly
        let (x, _, _) = golden_max(|x| x * y - phi.eval(x), 0.0, hi, 1e-12, 400);
        return Ok(x);
    }
    let mut lo = hi * 0.5;
    while lo > 1e-300 && phi.deriv(lo) > y {
        lo *= 0.5;
    }
    if lo <= 1e-300 {
        // the slope exceeds y arbitrarily close to the origin (a jump of
        // the right derivative at 0): the supremum sits at x = 0
        return Ok(0.0);
    }
    let (x, _) = bisect_root(|x| phi.deriv(x) - y, lo, hi, 1e-13);
    Ok(x)
}

/// Checked conjugate query: `sup{x|y| − Φ(x)}` with `BracketOverflow` when
/// the expanding bracket hits the cap while the objective is still rising.
pub fn conjugate_at(phi: &YoungFunction, y: f64) -> Result<f64, YoungError> {
    let y = y.abs();
    if y == 0.0 {
        return Ok(0.0);
    }
    let x = conjugate_argmax(phi, y)?;
    Ok(x * y - phi.eval(x))
}

/// A complementary pair `(Φ, Ψ)` linked by convex conjugation.
#[derive(Clone, Debug)]
pub struct ComplementaryPair {
    pub phi: YoungFunction,
    pub psi: YoungFunction,
    /// Whether `Φ(1) + Ψ(1) = 1` holds within `1e-10`.
    pub normalized: bool,
}

impl ComplementaryPair {
    /// Assemble a pair from both halves, computing the `normalized` flag.
    pub fn new(phi: YoungFunction, psi: YoungFunction) -> Self {
        let normalized = (phi.at_one() + psi.at_one() - 1.0).abs() <= 1e-10;
        Self { phi, psi, normalized }
    }

    /// Pair `(Φ, conj Φ)` with the conjugate computed numerically.
    pub fn from_phi(phi: &YoungFunction) -> Result<Self, YoungError> {
        let psi = phi.conjugate()?;
        Ok(Self::new(phi.clone(), psi))
    }

    /// Sample Young's inequality `xy ≤ Φ(x) + Ψ(y)` on a grid; returns the
    /// largest violation found (nonpositive when the pair is consistent).
    pub fn youngs_gap(&self, n: usize) -> f64 {
        let grid = log_grid(1e-4, 1e2, n);
        let mut worst = f64::NEG_INFINITY;
        for &x in &grid {
            let fx = self.phi.eval(x);
            if !fx.is_finite() {
                continue;
            }
            for &y in &grid {
                let fy = self.psi.eval(y);
                if !fy.is_finite() {
                    continue;
                }
                worst = worst.max(x * y - fx - fy);
            }
        }
        worst
    }
}

/// Find `s > 0` such that `Φ_s(x) = Φ(s·x)` and its conjugate
/// `Ψ_s(y) = Ψ(y/s)` form a normalized pair, `Φ_s(1) + Ψ_s(1) = 1`.
///
/// Young's inequality makes `g(s) = Φ(s) + Ψ(1/s) − 1` nonnegative with a
/// tangential root, so the root is located through the equality case
/// instead: `s·Φ'(s) = 1`, a monotone sign change suitable for bisection
/// on a doubling bracket. The result is verified against `|g(s)| ≤ 1e-10`
/// and reported as `NoRoot` otherwise.
pub fn normalize_pair(phi: &YoungFunction) -> Result<ComplementaryPair, YoungError> {
    let psi = phi.conjugate()?;
    normalize_with(phi, &psi)
}

/// [`normalize_pair`] with a caller-supplied conjugate (for closed forms).
pub fn normalize_with(
    phi: &YoungFunction,
    psi: &YoungFunction,
) -> Result<ComplementaryPair, YoungError> {
    let defect = |s: f64| phi.eval(s) + psi.eval(1.0 / s) - 1.0;
    // already normalized?
    if defect(1.0).abs() <= 1e-10 {
        return Ok(ComplementaryPair {
            phi: phi.clone(),
            psi: psi.clone(),
            normalized: true,
        });
    }
    let h = |s: f64| s * phi.deriv(s) - 1.0;
    let mut lo = 1.0_f64;
    let mut hi = 1.0_f64;
    let mut n = 0;
    while h(lo) > 0.0 {
        lo *= 0.5;
        n += 1;
        if lo < 1e-12 || n > 100 {
            return Err(YoungError::NoRoot(format!(
                "s·Φ'(s) = 1 has no admissible bracket below s = 1 for '{}'",
                phi.label()
            )));
        }
    }
    n = 0;
    while h(hi) < 0.0 {
        hi *= 2.0;
        n += 1;
        if hi > 1e12 || n > 100 {
            return Err(YoungError::NoRoot(format!(
                "s·Φ'(s) = 1 has no admissible bracket above s = 1 for '{}'",
                phi.label()
            )));
        }
    }
    let (s, _) = bisect_root(h, lo, hi, 1e-13);
    let g = defect(s);
    if g.abs() > 1e-10 {
        return Err(YoungError::NoRoot(format!(
            "pair for '{}' is not normalizable by scaling: residual {:.3e} at s = {:.6e}",
            phi.label(),
            g,
            s
        )));
    }
    Ok(ComplementaryPair {
        phi: phi.scaled(s),
        psi: psi.scaled(1.0 / s),
        normalized: true,
    })
}

/// A sampled Δ₂ witness: `Φ(2x) ≤ C·Φ(x)` for grid points `x ≥ x0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Delta2Witness {
    pub c: f64,
    pub x0: f64,
}

/// Scan `Φ(2x)/Φ(x)` over `x_grid` and return the smallest sampled `C`
/// (with its threshold `x0`) for which the Δ₂ bound holds beyond `x0`,
/// or `None` when the ratio grows monotonically off the top of the grid.
pub fn check_delta2(phi: &YoungFunction, x_grid: &[f64]) -> Option<Delta2Witness> {
    let ratios: Vec<f64> = x_grid
        .iter()
        .map(|&x| {
            let lo = phi.eval(x);
            let hi = phi.eval(2.0 * x);
            if lo == 0.0 {
                if hi == 0.0 {
                    1.0
                } else {
                    f64::INFINITY
                }
            } else {
                hi / lo
            }
        })
        .collect();
    let m = ratios.len();
    if m == 0 {
        return None;
    }
    // diverging when the tail is still climbing and dwarfs the bulk
    let tail = m.saturating_sub((m / 10).max(5)).min(m - 1);
    let tail_monotone = ratios[tail..].windows(2).all(|w| w[1] >= w[0] - 1e-12);
    let mut bulk = ratios[..tail.max(1)].to_vec();
    bulk.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let bulk_median = bulk[bulk.len() / 2];
    if tail_monotone && ratios[m - 1] > 1e3 * bulk_median.max(1.0) {
        return None;
    }
    // suffix maxima: C(x0) = sup of the ratio beyond each candidate x0
    let mut suffix = vec![0.0; m];
    let mut acc = f64::NEG_INFINITY;
    for i in (0..m).rev() {
        acc = acc.max(ratios[i]);
        suffix[i] = acc;
    }
    let (best, _) = suffix
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())?;
    if !suffix[best].is_finite() {
        return None;
    }
    Some(Delta2Witness {
        c: suffix[best],
        x0: x_grid[best],
    })
}

/// Constants witnessing `Φ₁ ≺ Φ₂`: `Φ₁(a·x) ≤ b·Φ₂(x)` for `x ≥ x0` and
/// `Φ₂(c·x) ≤ d·Φ₁(x)` for `0 < x ≤ x1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrderingWitness {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub x0: f64,
    pub x1: f64,
}

impl OrderingWitness {
    /// Re-check both halves on grids `mult` times finer than the search grid.
    pub fn holds_for(&self, phi1: &YoungFunction, phi2: &YoungFunction, mult: usize) -> bool {
        let n = 400 * mult;
        let tol = 1e-9;
        log_grid(self.x0, TAIL_X_MAX, n).iter().all(|&x| {
            let lhs = phi1.eval(self.a * x);
            let rhs = self.b * phi2.eval(x);
            lhs <= rhs * (1.0 + tol) + tol
        }) && log_grid(ORIGIN_X_MIN, self.x1, n).iter().all(|&x| {
            let lhs = phi2.eval(self.c * x);
            let rhs = self.d * phi1.eval(x);
            lhs <= rhs * (1.0 + tol) + tol
        })
    }
}

const TAIL_X_MAX: f64 = 1e6;
const ORIGIN_X_MIN: f64 = 1e-8;

/// Ratio scan with a divergence trend test. Returns the sup of
/// `num(x)/den(x)` over the grid, or `None` when the per-decade maxima are
/// strictly climbing into the top of the range (unbounded trend).
fn bounded_ratio_sup(
    num: impl Fn(f64) -> f64,
    den: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    n: usize,
    toward_hi: bool,
) -> Option<f64> {
    let grid = log_grid(lo, hi, n);
    let ratios: Vec<f64> = grid
        .iter()
        .map(|&x| {
            let d = den(x);
            let nx = num(x);
            if d == 0.0 {
                if nx == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                nx / d
            }
        })
        .collect();
    if ratios.iter().any(|r| !r.is_finite()) {
        return None;
    }
    let decades = (hi / lo).log10().ceil().max(1.0) as usize;
    let per = (n / decades).max(2);
    let chunk_max = |c: &[f64]| c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut maxima: Vec<f64> = ratios.chunks(per).map(chunk_max).collect();
    if !toward_hi {
        maxima.reverse(); // judge the trend toward x → 0 instead
    }
    let k = maxima.len();
    if k >= 3 {
        let last = maxima[k - 1];
        let prev = maxima[k - 2];
        let third = maxima[k - 3];
        let growing = last > prev * 1.05 && prev > third * 1.05;
        let global = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if growing && last >= global * (1.0 - 1e-12) {
            return None;
        }
    }
    Some(ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max))
}

/// Search for an ordering witness `Φ₁ ≺ Φ₂` over logarithmic grids in the
/// scale factors and thresholds; candidates are validated on a 10× finer
/// grid before being returned.
pub fn check_order(phi1: &YoungFunction, phi2: &YoungFunction) -> Option<OrderingWitness> {
    let scales = [1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125, 2.0, 4.0];
    let x0_grid = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 128.0, 1024.0];
    let x1_grid = [1.0, 0.5, 0.25, 0.125, 0.0625, 1.0 / 64.0, 1.0 / 1024.0];

    // unit constants first: they witness the pure-power orderings exactly
    let mut tail: Option<(f64, f64, f64)> = None; // (a, b, x0)
    'unit_tail: for &x0 in &x0_grid {
        if let Some(sup) =
            bounded_ratio_sup(|x| phi1.eval(x), |x| phi2.eval(x), x0, TAIL_X_MAX, 4000, true)
        {
            if sup <= 1.0 {
                tail = Some((1.0, 1.0, x0));
                break 'unit_tail;
            }
        }
    }
    if tail.is_none() {
        'outer: for &a in &scales {
            for &x0 in &x0_grid {
                if let Some(sup) = bounded_ratio_sup(
                    |x| phi1.eval(a * x),
                    |x| phi2.eval(x),
                    x0,
                    TAIL_X_MAX,
                    4000,
                    true,
                ) {
                    tail = Some((a, sup * (1.0 + 1e-12) + 1e-300, x0));
                    break 'outer;
                }
            }
        }
    }
    let (a, b, x0) = tail?;

    let mut origin: Option<(f64, f64, f64)> = None; // (c, d, x1)
    'unit_origin: for &x1 in &x1_grid {
        if let Some(sup) = bounded_ratio_sup(
            |x| phi2.eval(x),
            |x| phi1.eval(x),
            ORIGIN_X_MIN,
            x1,
            4000,
            false,
        ) {
            if sup <= 1.0 {
                origin = Some((1.0, 1.0, x1));
                break 'unit_origin;
            }
        }
    }
    if origin.is_none() {
        'outer2: for &c in &scales {
            for &x1 in &x1_grid {
                if let Some(sup) = bounded_ratio_sup(
                    |x| phi2.eval(c * x),
                    |x| phi1.eval(x),
                    ORIGIN_X_MIN,
                    x1,
                    4000,
                    false,
                ) {
                    origin = Some((c, sup * (1.0 + 1e-12) + 1e-300, x1));
                    break 'outer2;
                }
            }
        }
    }
    let (c, d, x1) = origin?;

    let witness = OrderingWitness { a, b, c, d, x0, x1 };
    if witness.holds_for(phi1, phi2, 10) {
        Some(witness)
    } else {
        None
    }
}
