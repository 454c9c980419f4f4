//! Scalar numerical kernels shared across the crate: bracketed bisection,
//! golden-section maximization, monotone inversion and sampling grids.
//!
//! All routines work on extended reals: `f64::INFINITY` propagates through
//! evaluations and comparisons against it are total.

/// Default relative tolerance for scalar root finds.
pub const REL_TOL: f64 = 1e-11;
/// Default absolute tolerance for scalar root finds near zero.
pub const ABS_TOL: f64 = 1e-300;
/// Bracket expansion cap: beyond this the objective is treated as unbounded.
pub const BRACKET_CAP: f64 = 1e12;

const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

/// Bisection for a root of `f` on `[lo, hi]`, assuming `f(lo)` and `f(hi)`
/// have opposite signs. Returns `(root, iterations)`.
pub fn bisect_root(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, rel_tol: f64) -> (f64, usize) {
    let mut flo = f(lo);
    if flo == 0.0 {
        return (lo, 0);
    }
    if f(hi) == 0.0 {
        return (hi, 0);
    }
    let mut iters = 0;
    while (hi - lo).abs() > rel_tol * hi.abs().max(lo.abs()).max(ABS_TOL) && iters < 400 {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return (mid, iters);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        iters += 1;
    }
    (0.5 * (lo + hi), iters)
}

/// Golden-section search for the maximum of `f` on `[a, b]`.
///
/// Returns `(x_max, f_max, evals)`.
pub fn golden_max(
    mut f: impl FnMut(f64) -> f64,
    mut a: f64,
    mut b: f64,
    tol: f64,
    max_evals: usize,
) -> (f64, f64, usize) {
    let resp = 2.0 - GOLDEN_RATIO;
    let mut x1 = a + resp * (b - a);
    let mut x2 = b - resp * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;
    while evals < max_evals && (b - a).abs() > tol * (1.0 + a.abs() + b.abs()) {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + resp * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - resp * (b - a);
            f2 = f(x2);
        }
        evals += 1;
    }
    if f1 > f2 {
        (x1, f1, evals)
    } else {
        (x2, f2, evals)
    }
}

/// Solve `f(x) = y` for a nondecreasing `f` by doubling/halving the bracket
/// from `guess` and then bisecting. Returns `None` when no bracket exists
/// below `cap` (the level `y` is never reached).
pub fn invert_monotone(
    mut f: impl FnMut(f64) -> f64,
    y: f64,
    guess: f64,
    cap: f64,
    rel_tol: f64,
) -> Option<f64> {
    let mut hi = guess.max(1e-12);
    let mut n = 0;
    while f(hi) < y {
        hi *= 2.0;
        n += 1;
        if hi > cap || n > 1200 {
            return None;
        }
    }
    let mut lo = hi * 0.5;
    while lo > ABS_TOL && f(lo) > y {
        lo *= 0.5;
    }
    if lo <= ABS_TOL {
        return Some(0.0);
    }
    let (root, _) = bisect_root(|x| f(x) - y, lo, hi, rel_tol);
    Some(root)
}

/// `n` points spaced logarithmically on `[a, b]` (both positive), inclusive.
pub fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(a > 0.0 && b > a && n >= 2);
    let (la, lb) = (a.ln(), b.ln());
    (0..n)
        .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// `n` points spaced linearly on `[a, b]`, inclusive.
pub fn lin_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Gauss–Legendre nodes (ascending, on `(-1, 1)`) and weights for degree
/// `n`, by Newton iteration from the Chebyshev initial guess. Exact for
/// polynomials of degree `2n − 1`; weights sum to 2.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x) by the three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 1 { x } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let (x, _) = bisect_root(|x| x * x - 2.0, 0.0, 2.0, 1e-13);
        assert!((x - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, fx, _) = golden_max(|x| -(x - 0.3) * (x - 0.3), -4.0, 5.0, 1e-12, 200);
        assert!((x - 0.3).abs() < 1e-9);
        assert!(fx.abs() < 1e-17);
    }

    #[test]
    fn invert_monotone_cube() {
        let x = invert_monotone(|x| x * x * x, 27.0, 1.0, 1e9, 1e-13).unwrap();
        assert!((x - 3.0).abs() < 1e-11);
    }

    #[test]
    fn invert_monotone_unreachable_level() {
        // bounded function never reaches the level
        assert!(invert_monotone(|x| x / (1.0 + x), 2.0, 1.0, 1e9, 1e-12).is_none());
    }

    #[test]
    fn gauss_legendre_5_matches_reference() {
        let (x, w) = gauss_legendre(5);
        let x_ref = [
            -0.906_179_845_938_664,
            -0.538_469_310_105_683_1,
            0.0,
            0.538_469_310_105_683_1,
            0.906_179_845_938_664,
        ];
        let w_ref = [
            0.236_926_885_056_189_08,
            0.478_628_670_499_366_47,
            0.568_888_888_888_888_9,
            0.478_628_670_499_366_47,
            0.236_926_885_056_189_08,
        ];
        for i in 0..5 {
            assert!((x[i] - x_ref[i]).abs() < 1e-14);
            assert!((w[i] - w_ref[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn gauss_legendre_integrates_high_degree_monomials() {
        let (x, w) = gauss_legendre(16);
        // degree 30 is within the exactness band of GL-16
        let approx: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(30)).sum();
        assert!((approx - 2.0 / 31.0).abs() < 1e-14);
    }
}
