//! Built-in Young functions and their string registry.
//!
//! Specs are `power:p`, `exp`, `cosh`, `xplog:p` and `riordan:p` (plus
//! `riordan-psi:p` for the closed companion form of the Riordan conjugate,
//! which is only equivalent to, not equal to, the true conjugate).

use super::{normalize_with, ComplementaryPair, YoungError, YoungFunction};

/// `Φ(x) = x^p / p`, `p ≥ 1`. Its conjugate is `y^q/q` with `q = p/(p−1)`.
pub fn power(p: f64) -> Result<YoungFunction, YoungError> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(YoungError::BadParam(format!(
            "power exponent must satisfy p >= 1, got {p}"
        )));
    }
    Ok(YoungFunction::from_parts(
        format!("power:{p}"),
        move |x: f64| x.powf(p) / p,
        move |x: f64| x.powf(p - 1.0),
        None,
    ))
}

/// `Φ(x) = e^x − x − 1`.
pub fn exp_minus() -> YoungFunction {
    YoungFunction::from_parts("exp", |x: f64| x.exp() - x - 1.0, |x: f64| x.exp_m1(), None)
}

/// `Φ(x) = cosh x − 1`.
pub fn cosh_minus() -> YoungFunction {
    YoungFunction::from_parts("cosh", |x: f64| x.cosh() - 1.0, |x: f64| x.sinh(), None)
}

/// `Φ(x) = x^p ln x` on `[1, ∞)`, clamped to `0` on `[0, 1]`, `p ≥ 1`.
///
/// The raw form is negative on `(0, 1)`; the clamp restores positivity and
/// the assembled function is convex outright — the derivative jumps up
/// from `0` to `1` at `x = 1` and keeps increasing — so no chord repair
/// is required. This is asserted at construction.
pub fn xp_log(p: f64) -> Result<YoungFunction, YoungError> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(YoungError::BadParam(format!(
            "xplog exponent must satisfy p >= 1, got {p}"
        )));
    }
    let f = YoungFunction::from_parts(
        format!("xplog:{p}"),
        move |x: f64| if x <= 1.0 { 0.0 } else { x.powf(p) * x.ln() },
        move |x: f64| {
            if x <= 1.0 {
                0.0
            } else {
                x.powf(p - 1.0) * (p * x.ln() + 1.0)
            }
        },
        None,
    );
    f.validate(1e6, 1e-9)?;
    Ok(f)
}

/// Slowly-varying factor `L(x) = ln(x)·ln(ln x)` used by the Riordan gauge.
fn sv_factor(x: f64) -> f64 {
    let l = x.ln();
    l * l.ln()
}

/// `d/dx [x^p/p · L(x)] = x^(p−1)·[L(x) + (ln ln x + 1)/p]`.
fn riordan_outer_deriv(x: f64, p: f64) -> f64 {
    let l = x.ln();
    x.powf(p - 1.0) * (l * l.ln() + (l.ln() + 1.0) / p)
}

/// Mirrored branch for small arguments: `x^p/p · L(1/x)`.
fn riordan_mirror_deriv(x: f64, p: f64) -> f64 {
    let l = (1.0 / x).ln();
    x.powf(p - 1.0) * (l * l.ln() - (l.ln() + 1.0) / p)
}

/// Pieces of an assembled two-branch gauge with a chord join.
struct ChordJoin {
    x0: f64,
    x1: f64,
    slope: f64,
    left_at_x1: f64,
}

/// Pick thresholds by doubling until both outer branches have increasing,
/// positive derivatives on a sampled neighbourhood and the joining chord
/// slope sits between the one-sided derivatives at the endpoints (which
/// guarantees convexity of the assembly).
fn chord_join(
    outer: impl Fn(f64) -> f64,
    outer_d: impl Fn(f64) -> f64,
    mirror: impl Fn(f64) -> f64,
    mirror_d: impl Fn(f64) -> f64,
    label: &str,
) -> Result<ChordJoin, YoungError> {
    let branch_ok = |d: &dyn Fn(f64) -> f64, lo: f64, hi: f64| -> bool {
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=64 {
            let x = lo + (hi - lo) * i as f64 / 64.0;
            let v = d(x);
            if !(v > 0.0) || v < prev - 1e-13 {
                return false;
            }
            prev = v;
        }
        true
    };
    // smallest power of two at or above e^2 for the upper threshold
    let mut k: i32 = 3;
    let mut m: i32 = 3;
    for _ in 0..80 {
        let x0 = 2f64.powi(k);
        let x1 = 2f64.powi(-m);
        if !branch_ok(&|x| outer_d(x), x0, 4.0 * x0) {
            k += 1;
            continue;
        }
        if !branch_ok(&|x| mirror_d(x), x1 / 4.0, x1) {
            m += 1;
            continue;
        }
        let slope = (outer(x0) - mirror(x1)) / (x0 - x1);
        if slope < mirror_d(x1) {
            m += 1;
            continue;
        }
        if slope > outer_d(x0) {
            k += 1;
            continue;
        }
        return Ok(ChordJoin {
            x0,
            x1,
            slope,
            left_at_x1: mirror(x1),
        });
    }
    Err(YoungError::BadParam(format!(
        "no convex chord join found for {label}"
    )))
}

/// The Riordan gauge for `1 < p < 2`:
/// `x^p/p·ln(x)ln(ln x)` above `x0`, the mirrored form
/// `x^p/p·ln(1/x)ln(ln(1/x))` below `x1`, and the straight chord between
/// `(x1, Φ(x1))` and `(x0, Φ(x0))`. Thresholds come from [`chord_join`].
pub fn riordan(p: f64) -> Result<YoungFunction, YoungError> {
    if !(p > 1.0 && p < 2.0) {
        return Err(YoungError::BadParam(format!(
            "riordan exponent must satisfy 1 < p < 2, got {p}"
        )));
    }
    let outer = move |x: f64| x.powf(p) / p * sv_factor(x);
    let mirror = move |x: f64| {
        if x == 0.0 {
            0.0
        } else {
            x.powf(p) / p * sv_factor(1.0 / x)
        }
    };
    let join = chord_join(
        outer,
        |x| riordan_outer_deriv(x, p),
        mirror,
        |x| riordan_mirror_deriv(x, p),
        &format!("riordan:{p}"),
    )?;
    let ChordJoin { x0, x1, slope, left_at_x1 } = join;
    let f = YoungFunction::from_parts(
        format!("riordan:{p}"),
        move |x: f64| {
            if x <= x1 {
                mirror(x)
            } else if x >= x0 {
                outer(x)
            } else {
                left_at_x1 + slope * (x - x1)
            }
        },
        move |x: f64| {
            if x < x1 {
                riordan_mirror_deriv(x, p)
            } else if x >= x0 {
                riordan_outer_deriv(x, p)
            } else {
                slope
            }
        },
        None,
    );
    f.validate(1e6, 1e-9)?;
    Ok(f)
}

/// The closed companion of the Riordan conjugate,
/// `Ψ(x) = x^q/q · L(x)^{q/p}` with `q = p/(p−1)`, assembled with the same
/// mirrored branch and chord join. Equivalent to the true conjugate of
/// [`riordan`] but not equal to it; kept for cross-checks.
pub fn riordan_conjugate_form(p: f64) -> Result<YoungFunction, YoungError> {
    if !(p > 1.0 && p < 2.0) {
        return Err(YoungError::BadParam(format!(
            "riordan exponent must satisfy 1 < p < 2, got {p}"
        )));
    }
    let q = p / (p - 1.0);
    let e = q / p;
    let outer = move |x: f64| x.powf(q) / q * sv_factor(x).powf(e);
    let outer_d = move |x: f64| {
        let l = x.ln();
        let sv = sv_factor(x);
        // d/dx [x^q/q · sv^e] with sv' = (ln ln x + 1)/x
        x.powf(q - 1.0) * sv.powf(e - 1.0) * (sv + e * (l.ln() + 1.0) / q)
    };
    let mirror = move |x: f64| {
        if x == 0.0 {
            0.0
        } else {
            x.powf(q) / q * sv_factor(1.0 / x).powf(e)
        }
    };
    let mirror_d = move |x: f64| {
        let l = (1.0 / x).ln();
        let sv = l * l.ln();
        x.powf(q - 1.0) * sv.powf(e - 1.0) * (sv - e * (l.ln() + 1.0) / q)
    };
    let join = chord_join(outer, outer_d, mirror, mirror_d, &format!("riordan-psi:{p}"))?;
    let ChordJoin { x0, x1, slope, left_at_x1 } = join;
    let f = YoungFunction::from_parts(
        format!("riordan-psi:{p}"),
        move |x: f64| {
            if x <= x1 {
                mirror(x)
            } else if x >= x0 {
                outer(x)
            } else {
                left_at_x1 + slope * (x - x1)
            }
        },
        move |x: f64| {
            if x < x1 {
                mirror_d(x)
            } else if x >= x0 {
                outer_d(x)
            } else {
                slope
            }
        },
        None,
    );
    f.validate(1e6, 1e-9)?;
    Ok(f)
}

/// Closed-form conjugate of `exp`: `Ψ(y) = (1 + y)·ln(1 + y) − y`.
pub fn exp_minus_conjugate() -> YoungFunction {
    YoungFunction::from_parts(
        "exp*",
        |y: f64| (1.0 + y) * (1.0 + y).ln() - y,
        |y: f64| (1.0 + y).ln(),
        None,
    )
}

/// Closed-form conjugate of `cosh`: `Ψ(y) = y·asinh(y) − √(1+y²) + 1`.
pub fn cosh_minus_conjugate() -> YoungFunction {
    YoungFunction::from_parts(
        "cosh*",
        |y: f64| y * y.asinh() - (1.0 + y * y).sqrt() + 1.0,
        |y: f64| y.asinh(),
        None,
    )
}

/// Look up a Young function by string spec.
pub fn builtin(spec: &str) -> Result<YoungFunction, YoungError> {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    let param = || -> Result<f64, YoungError> {
        arg.ok_or_else(|| YoungError::BadParam(format!("'{name}' needs a parameter, e.g. {name}:1.5")))?
            .parse::<f64>()
            .map_err(|_| YoungError::BadParam(format!("unparseable parameter in '{spec}'")))
    };
    match name {
        "power" => power(param()?),
        "exp" | "exp_minus" => Ok(exp_minus()),
        "cosh" | "cosh_minus" => Ok(cosh_minus()),
        "xplog" | "xp_log" => xp_log(param()?),
        "riordan" => riordan(param()?),
        "riordan-psi" => riordan_conjugate_form(param()?),
        _ => Err(YoungError::BadParam(format!("unknown Young function '{spec}'"))),
    }
}

/// Specs listable by the CLI, in sorted order.
pub fn builtin_specs() -> Vec<&'static str> {
    vec!["cosh", "exp", "power:<p>", "riordan:<p>", "riordan-psi:<p>", "xplog:<p>"]
}

/// Build the normalized complementary pair for a Young-function spec.
///
/// Closed-form conjugates are used where known (`power`, `exp`, `cosh`);
/// everything else, in particular `riordan`, pairs with the true numeric
/// conjugate.
pub fn pair(spec: &str) -> Result<ComplementaryPair, YoungError> {
    let phi = builtin(spec)?;
    let name = spec.split(':').next().unwrap_or(spec);
    match name {
        "power" => {
            let p: f64 = spec.split(':').nth(1).unwrap().parse().unwrap();
            if p == 1.0 {
                return Err(YoungError::BadParam(
                    "power:1 has no finite complementary gauge".into(),
                ));
            }
            let q = p / (p - 1.0);
            normalize_with(&phi, &power(q)?)
        }
        "exp" | "exp_minus" => normalize_with(&phi, &exp_minus_conjugate()),
        "cosh" | "cosh_minus" => normalize_with(&phi, &cosh_minus_conjugate()),
        _ => super::normalize_pair(&phi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::log_grid;

    #[test]
    fn builtin_rejects_bad_params() {
        assert!(matches!(power(0.5), Err(YoungError::BadParam(_))));
        assert!(matches!(riordan(2.0), Err(YoungError::BadParam(_))));
        assert!(matches!(riordan(1.0), Err(YoungError::BadParam(_))));
        assert!(matches!(builtin("nope"), Err(YoungError::BadParam(_))));
    }

    #[test]
    fn riordan_thresholds_bracket_e_squared() {
        // x0 is a power of two at or above e² and the secant-slope scan
        // passes on [x1/10, 10·x0].
        let phi = riordan(1.5).unwrap();
        assert!(phi.validate(1e8, 1e-9).is_ok());
        let grid = log_grid(1e-4, 1e4, 2000);
        let mut prev_slope = f64::NEG_INFINITY;
        for w in grid.windows(2) {
            let slope = (phi.eval(w[1]) - phi.eval(w[0])) / (w[1] - w[0]);
            assert!(
                slope >= prev_slope - 1e-9,
                "secant slopes must be nondecreasing at x = {}",
                w[0]
            );
            prev_slope = slope;
        }
    }

    #[test]
    fn xp_log_is_convex_without_repair() {
        for p in [1.0, 1.5, 2.0] {
            let f = xp_log(p).unwrap();
            assert_eq!(f.eval(0.7), 0.0);
            assert!(f.eval(2.0) > 0.0);
        }
    }

    #[test]
    fn pair_specs_resolve() {
        for spec in ["power:1.5", "exp", "cosh", "riordan:1.5"] {
            let pr = pair(spec).unwrap();
            assert!(pr.normalized, "{spec} should normalize");
            assert!(pr.youngs_gap(60) <= 1e-8, "{spec} violates Young's inequality");
        }
    }
}
