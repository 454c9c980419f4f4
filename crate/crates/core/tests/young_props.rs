//! Conjugation and ordering properties of the Young-function layer,
//! checked against independent oracles: dense-grid suprema for the
//! conjugate, dense scans for normalization scales, and closed forms
//! where they exist.

use orlicz_hy::numerics::log_grid;
use orlicz_hy::young::{
    builtin, check_delta2, check_order, conjugate_at, cosh_minus, exp_minus, normalize_pair, pair,
    power, riordan, xp_log, YoungFunction,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Upper end kept at 10: exponential-type gauges push the conjugate's
// maximizer past the e^x scale, which must stay inside the bracket cap.
fn eval_points() -> Vec<f64> {
    log_grid(1e-2, 1e1, 64)
}

/// Dense-grid supremum oracle for the conjugate: max of `xy − Φ(x)` over
/// a uniform grid on `[0, x_max]`.
fn conjugate_oracle(phi: &YoungFunction, y: f64, x_max: f64, n: usize) -> f64 {
    let mut best = 0.0_f64;
    for i in 0..=n {
        let x = x_max * i as f64 / n as f64;
        best = best.max(x * y - phi.eval(x));
    }
    best
}

#[test]
fn quadratic_gauge_is_self_conjugate() {
    let phi = power(2.0).unwrap();
    let psi = phi.conjugate().unwrap();
    for y in [0.5, 1.0, 2.0] {
        assert!((psi.eval(y) - y * y / 2.0).abs() <= 1e-9, "y = {y}");
    }
}

#[test]
fn conjugate_of_power_three_halves_is_cubic() {
    // q = p/(p−1) = 3
    let phi = power(1.5).unwrap();
    let psi = phi.conjugate().unwrap();
    for &y in &eval_points() {
        let expect = y.powi(3) / 3.0;
        assert!(
            (psi.eval(y) - expect).abs() <= 1e-6 * expect.max(1.0),
            "y = {y}: {} vs {expect}",
            psi.eval(y)
        );
    }
}

#[test]
fn conjugate_of_exp_matches_closed_form_and_dense_oracle() {
    let phi = exp_minus();
    let psi = phi.conjugate().unwrap();
    // frozen closed-form values (1+y)ln(1+y) − y
    let frozen = [
        (0.1, 0.004_841_197_794_322_543),
        (1.0, 0.386_294_361_119_890_6),
        (5.0, 5.750_556_815_368_330_4),
    ];
    for (y, expect) in frozen {
        let numeric = psi.eval(y);
        let oracle = conjugate_oracle(&phi, y, 50.0, 1_000_000);
        assert!((numeric - expect).abs() <= 1e-6, "closed form at y = {y}");
        assert!((oracle - expect).abs() <= 1e-6, "oracle at y = {y}");
        assert!((numeric - oracle).abs() <= 1e-6, "numeric vs oracle at y = {y}");
    }
}

#[test]
fn conjugate_derivative_inverts_the_primal_slope() {
    // Ψ' is the maximizer x*(y), the inverse of Φ'.
    let phi = power(1.5).unwrap();
    let psi = phi.conjugate().unwrap();
    for y in [0.3, 1.0, 4.2] {
        let x_star = psi.deriv(y);
        assert!((phi.deriv(x_star) - y).abs() < 1e-9, "y = {y}");
    }
}

#[test]
fn biconjugation_recovers_every_builtin() {
    for spec in ["power:1.5", "power:2", "power:3", "exp", "cosh", "xplog:2", "riordan:1.5"] {
        let phi = builtin(spec).unwrap();
        let psi = phi.conjugate().unwrap();
        let phi2 = psi.conjugate().unwrap();
        for &x in &eval_points() {
            let a = phi.eval(x);
            let b = phi2.eval(x);
            if !a.is_finite() {
                continue;
            }
            assert!(
                (a - b).abs() <= 1e-6 * a.abs().max(1e-9),
                "{spec} at x = {x}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn youngs_inequality_with_equality_on_the_derivative_graph() {
    for spec in ["power:1.5", "power:2", "exp", "cosh", "riordan:1.5"] {
        let phi = builtin(spec).unwrap();
        let psi = phi.conjugate().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10_000 {
            let x: f64 = rng.gen::<f64>() * 20.0;
            let y: f64 = rng.gen::<f64>() * 20.0;
            let (fx, fy) = (phi.eval(x), psi.eval(y));
            if fx.is_finite() && fy.is_finite() {
                assert!(x * y <= fx + fy + 1e-9, "{spec}: ({x}, {y})");
            }
        }
        for x in [0.2, 1.0, 3.7] {
            let y = phi.deriv(x);
            let gap = phi.eval(x) + psi.eval(y) - x * y;
            assert!(gap.abs() <= 1e-8, "{spec}: equality gap {gap} at x = {x}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn youngs_inequality_for_power_pairs(p in 1.05f64..3.0, x in 0.0f64..50.0, y in 0.0f64..50.0) {
        let phi = power(p).unwrap();
        let q = p / (p - 1.0);
        // closed-form complementary pair
        let lhs = x * y;
        let rhs = x.powf(p) / p + y.powf(q) / q;
        prop_assert!(lhs <= rhs + 1e-9 * rhs.max(1.0));
    }

    #[test]
    fn conjugate_homogeneity_of_scaling(s in 0.2f64..4.0, y in 0.05f64..20.0) {
        // (Φ(s·))* (y) = Φ*(y/s)
        let phi = power(1.7).unwrap();
        let scaled = phi.scaled(s);
        let a = conjugate_at(&scaled, y).unwrap();
        let b = conjugate_at(&phi, y / s).unwrap();
        prop_assert!((a - b).abs() <= 1e-8 * a.abs().max(1.0));
    }
}

#[test]
fn conjugation_is_antitone() {
    // Φ_a ≤ Φ_b pointwise forces Ψ_b ≤ Ψ_a pointwise.
    let phi_a = power(2.0).unwrap(); // x²/2
    let phi_b = YoungFunction::from_parts("square", |x| x * x, |x| 2.0 * x, None);
    let psi_a = phi_a.conjugate().unwrap();
    let psi_b = phi_b.conjugate().unwrap();
    for &x in &eval_points() {
        assert!(phi_a.eval(x) <= phi_b.eval(x) + 1e-12);
        assert!(psi_b.eval(x) <= psi_a.eval(x) + 1e-9, "x = {x}");
    }
}

#[test]
fn order_transfers_to_conjugates() {
    // an ordering witness for (Φ₁, Φ₂) forces one for (Ψ₂, Ψ₁)
    let cases: Vec<(YoungFunction, YoungFunction)> = vec![
        (power(1.5).unwrap(), power(2.0).unwrap()),
        (riordan(1.5).unwrap(), power(2.0).unwrap()),
        (power(2.0).unwrap(), exp_minus()),
    ];
    for (phi1, phi2) in cases {
        assert!(
            check_order(&phi1, &phi2).is_some(),
            "({}, {}) should be ordered",
            phi1.label(),
            phi2.label()
        );
        let psi1 = phi1.conjugate().unwrap();
        let psi2 = phi2.conjugate().unwrap();
        assert!(
            check_order(&psi2, &psi1).is_some(),
            "conjugates of ({}, {}) should be ordered the other way",
            phi1.label(),
            phi2.label()
        );
    }
}

#[test]
fn normalize_cosh_matches_dense_scan_oracle() {
    let phi = cosh_minus();
    let pr = normalize_pair(&phi).unwrap();
    assert!(pr.normalized);
    // oracle: dense scan of the normalization residual over s ∈ (0, 4]
    let psi = phi.conjugate().unwrap();
    let mut best_s = 0.0;
    let mut best = f64::INFINITY;
    for i in 1..=4000 {
        let s = 4.0 * i as f64 / 4000.0;
        let g = (phi.eval(s) + psi.eval(1.0 / s) - 1.0).abs();
        if g < best {
            best = g;
            best_s = s;
        }
    }
    let sum = pr.phi.at_one() + pr.psi.at_one();
    assert!((sum - 1.0).abs() <= 1e-10);
    // the bisection scale and the scan minimizer agree to grid resolution
    assert!((pr.phi.at_one() - phi.eval(best_s)).abs() < 1e-2);
}

#[test]
fn normalized_riordan_pair_satisfies_youngs_inequality() {
    let pr = pair("riordan:1.5").unwrap();
    assert!(pr.normalized);
    assert!(pr.youngs_gap(80) <= 1e-8);
    // equality residual of the defining scale
    let sum = pr.phi.at_one() + pr.psi.at_one();
    assert!((sum - 1.0).abs() <= 1e-10);
}

#[test]
fn delta2_riordan_is_finite_and_near_two_to_p() {
    let phi = riordan(1.5).unwrap();
    let grid = log_grid(1e-3, 1e3, 500);
    let w = check_delta2(&phi, &grid).expect("riordan satisfies the doubling condition");
    assert!(w.c.is_finite() && w.c >= 2f64.powf(1.5) - 1e-6, "C = {}", w.c);
    assert!(w.c < 16.0, "C = {}", w.c);
}

#[test]
fn order_witness_for_riordan_against_quadratic() {
    let phi = riordan(1.5).unwrap();
    let w = check_order(&phi, &power(2.0).unwrap()).expect("hypothesis witness");
    assert!(w.holds_for(&phi, &power(2.0).unwrap(), 10));
    // and the normalized version keeps the ordering
    let pr = pair("riordan:1.5").unwrap();
    assert!(check_order(&pr.phi, &power(2.0).unwrap()).is_some());
}

#[test]
fn xp_log_conjugate_is_linear_below_the_kink() {
    // Φ' jumps from 0 to 1 at x = 1, so Ψ(y) = y for y ≤ 1.
    let phi = xp_log(2.0).unwrap();
    let psi = phi.conjugate().unwrap();
    for y in [0.1, 0.5, 0.9] {
        assert!((psi.eval(y) - y).abs() < 1e-9, "y = {y}");
    }
}
