//! Norm-layer properties checked against independent oracles: a dense
//! λ-scan for the Luxemburg gauge, an SVD oracle for Schatten norms, the
//! algebraic collapse of the Orlicz sequence gauge to the weighted ℓ^p
//! norm for power gauges, and the norm axioms on random samples.

use num_complex::Complex64;
use orlicz_hy::norms::{
    dual_lp, dual_orlicz, dual_schatten, luxemburg, luxemburg_with, modular, orlicz_norm, profile,
    GaugeThreshold, GAUGE_REL_TOL,
};
use orlicz_hy::spaces::{
    random_bandlimited, synthesize, Block, RepLabel, SampledFunction, Space, SpectralCoefficients,
    SpectralProfile,
};
use orlicz_hy::young::{builtin, pair, power, YoungFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn torus_sample(band: u32, seed: u64) -> SampledFunction {
    let sp = Space::parse("torus:1").unwrap();
    let quad = sp.quadrature(band, 4);
    let sigma = random_bandlimited(&sp, band, seed, SpectralProfile::Decay(1.0));
    synthesize(&sigma, &quad)
}

/// Independent Luxemburg oracle: locate the feasibility boundary by a
/// coarse logarithmic scan, then refine with a dense linear scan.
fn luxemburg_dense_scan(phi: &YoungFunction, f: &SampledFunction, fine: usize) -> f64 {
    let thr = phi.at_one();
    let rho = |lambda: f64| modular(phi, &f.scale(Complex64::new(1.0 / lambda, 0.0)));
    let sup = f.sup_abs();
    assert!(sup > 0.0);
    let lo0 = sup * 1e-6;
    let hi0 = sup * 2.0;
    let mut boundary = hi0;
    let coarse = 2000;
    let mut prev = lo0;
    for i in 0..=coarse {
        let l = lo0 * (hi0 / lo0).powf(i as f64 / coarse as f64);
        if rho(l) <= thr {
            boundary = l;
            break;
        }
        prev = l;
    }
    let (a, b) = (prev, boundary);
    let mut best = b;
    for i in 0..=fine {
        let l = a + (b - a) * i as f64 / fine as f64;
        if rho(l) <= thr {
            best = l;
            break;
        }
    }
    best
}

#[test]
fn luxemburg_bisection_agrees_with_dense_scan() {
    let phi = builtin("power:1.5").unwrap();
    for seed in 0..6 {
        let f = torus_sample(6, seed);
        let fast = luxemburg(&phi, &f).unwrap().value;
        let slow = luxemburg_dense_scan(&phi, &f, 100_000);
        assert!(
            (fast - slow).abs() <= 1e-7 * fast.max(1.0),
            "seed {seed}: {fast} vs {slow}"
        );
    }
}

#[test]
fn luxemburg_modular_equality_at_the_gauge() {
    // For continuous gauges the defining inequality is tight at the norm.
    for spec in ["power:1.5", "exp", "riordan:1.5"] {
        let phi = builtin(spec).unwrap();
        let f = torus_sample(5, 3);
        let n = luxemburg(&phi, &f).unwrap().value;
        let at = modular(&phi, &f.scale(Complex64::new(1.0 / n, 0.0)));
        assert!(
            (at - phi.at_one()).abs() <= 1e-8,
            "{spec}: modular at the gauge = {at}, threshold {}",
            phi.at_one()
        );
    }
}

#[test]
fn gauge_unit_ball_characterizes_the_modular_threshold() {
    // N_Φ(f) ≤ 1 exactly when ρ_Φ(f) ≤ Φ(1), the threshold analogue of
    // the classical unit-ball statement.
    let phi = builtin("power:1.5").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for seed in 0..40 {
        let f = torus_sample(4, seed);
        let scale: f64 = 0.2 + 1.6 * rng.gen::<f64>();
        let g = f.scale(Complex64::new(
            scale / luxemburg(&phi, &f).unwrap().value,
            0.0,
        ));
        let n = luxemburg(&phi, &g).unwrap().value;
        let rho = modular(&phi, &g);
        if n <= 1.0 - 1e-9 {
            assert!(rho <= phi.at_one() + 1e-9, "seed {seed}: N = {n}, ρ = {rho}");
        }
        if n >= 1.0 + 1e-9 {
            assert!(rho >= phi.at_one() - 1e-9, "seed {seed}: N = {n}, ρ = {rho}");
        }
    }
}

#[test]
fn norm_axioms_on_random_samples() {
    // absolute homogeneity and the triangle inequality, both sides
    let sp = Space::parse("torus:1").unwrap();
    let quad = sp.quadrature(4, 2);
    let phi = builtin("power:1.5").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..1000 {
        let sa = random_bandlimited(&sp, 4, 2 * i, SpectralProfile::Flat);
        let sb = random_bandlimited(&sp, 4, 2 * i + 1, SpectralProfile::Flat);
        let fa = synthesize(&sa, &quad);
        let fb = synthesize(&sb, &quad);
        let c = Complex64::new(rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0);

        let na = luxemburg(&phi, &fa).unwrap().value;
        let nb = luxemburg(&phi, &fb).unwrap().value;
        let nscaled = luxemburg(&phi, &fa.scale(c)).unwrap().value;
        assert!(
            (nscaled - c.norm() * na).abs() <= 1e-9 * (1.0 + nscaled),
            "homogeneity, sample {i}"
        );
        let sum = SampledFunction::new(
            quad.clone(),
            fa.values.iter().zip(&fb.values).map(|(x, y)| x + y).collect(),
        );
        let nsum = luxemburg(&phi, &sum).unwrap().value;
        assert!(nsum <= na + nb + 1e-9, "triangle, sample {i}");

        let da = dual_orlicz(&phi, &sa).unwrap().value;
        let db = dual_orlicz(&phi, &sb).unwrap().value;
        let dscaled = dual_orlicz(&phi, &sa.scale(c)).unwrap().value;
        assert!(
            (dscaled - c.norm() * da).abs() <= 1e-9 * (1.0 + dscaled),
            "dual homogeneity, sample {i}"
        );
        let mut ssum = SpectralCoefficients::new(sp.clone(), 4);
        for (label, block) in sa.blocks() {
            let other = sb.get(label).unwrap();
            let merged = Block::from_fn(block.dim(), block.invariant_dim(), |r, cidx| {
                block.get(r, cidx) + other.get(r, cidx)
            });
            ssum.insert(label.clone(), merged);
        }
        let dsum = dual_orlicz(&phi, &ssum).unwrap().value;
        assert!(dsum <= da + db + 1e-9, "dual triangle, sample {i}");
    }
}

#[test]
fn dual_orlicz_of_power_gauge_collapses_to_weighted_lp() {
    for (space, band) in [
        (Space::parse("torus:1").unwrap(), 6),
        (Space::Sphere2, 4),
        (Space::Su2, 2),
    ] {
        for p in [1.3, 1.5, 2.0] {
            let phi = power(p).unwrap();
            for seed in 0..8 {
                let sigma = random_bandlimited(&space, band, seed, SpectralProfile::Flat);
                let a = dual_orlicz(&phi, &sigma).unwrap().value;
                let b = dual_lp(&sigma, p).unwrap();
                assert!(
                    (a - b).abs() <= 1e-10 * b.max(1.0),
                    "{} p={p} seed={seed}: {a} vs {b}",
                    space.spec_string()
                );
            }
        }
    }
}

#[test]
fn dual_gauge_modular_equality_at_the_norm() {
    // Σ Φ(F/λ₀)·k·d = Φ(1) at the returned gauge value
    let phi = builtin("riordan:1.5").unwrap();
    let sigma = random_bandlimited(&Space::Sphere2, 4, 8, SpectralProfile::Decay(1.0));
    let n = dual_orlicz(&phi, &sigma).unwrap().value;
    let prof = profile(&sigma);
    let mut acc = 0.0;
    for e in prof.entries() {
        acc += phi.eval(e.value / n) * (e.invariant_dim * e.dim) as f64;
    }
    assert!((acc - phi.at_one()).abs() <= 1e-8, "modular sum {acc}");
}

#[test]
fn schatten_matches_svd_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for trial in 0..40 {
        let d = 3 + (trial % 4);
        let entries: Vec<Complex64> = (0..d * d)
            .map(|_| Complex64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
            .collect();
        // oracle: singular values via the real 2d×2d embedding in nalgebra
        let m = 2 * d;
        let mut emb = nalgebra::DMatrix::<f64>::zeros(m, m);
        for i in 0..d {
            for j in 0..d {
                let z = entries[i * d + j];
                emb[(i, j)] = z.re;
                emb[(i, j + d)] = -z.im;
                emb[(i + d, j)] = z.im;
                emb[(i + d, j + d)] = z.re;
            }
        }
        let mut sv: Vec<f64> = emb.svd(false, false).singular_values.iter().cloned().collect();
        sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let oracle: Vec<f64> = sv.into_iter().step_by(2).collect();

        let mut sigma = SpectralCoefficients::new(Space::Su2, (d as u32 - 1) / 2 + 1);
        let block = Block::from_fn(d, d, |i, j| entries[i * d + j]);
        sigma.insert(RepLabel::Su2(d as u32 - 1), block);
        for p in [1.0, 2.0, 3.5, f64::INFINITY] {
            let got = dual_schatten(&sigma, p).unwrap();
            let expect = if p.is_infinite() {
                oracle[0]
            } else {
                (d as f64 * oracle.iter().map(|s| s.powf(p)).sum::<f64>()).powf(1.0 / p)
            };
            assert!(
                (got - expect).abs() <= 1e-9 * expect.max(1.0),
                "trial {trial} p={p}: {got} vs {expect}"
            );
        }
    }
}

#[test]
fn embedding_chain_and_schatten_comparisons() {
    let ps = [1.0, 1.2, 1.5, 2.0, 2.5, 3.0, f64::INFINITY];
    for (space, band) in [
        (Space::parse("torus:1").unwrap(), 6),
        (Space::Sphere2, 4),
        (Space::Su2, 2),
    ] {
        for seed in 0..30 {
            let sigma = random_bandlimited(&space, band, seed, SpectralProfile::Flat);
            let lp: Vec<f64> = ps.iter().map(|&p| dual_lp(&sigma, p).unwrap()).collect();
            for a in 0..ps.len() {
                for b in (a + 1)..ps.len() {
                    assert!(
                        lp[b] <= lp[a] + 1e-12,
                        "{} seed={seed}: ℓ^{} > ℓ^{}",
                        space.spec_string(),
                        ps[b],
                        ps[a]
                    );
                }
            }
            for (idx, &p) in ps.iter().enumerate() {
                let sch = dual_schatten(&sigma, p).unwrap();
                if p <= 2.0 {
                    assert!(sch <= lp[idx] + 1e-12, "schatten ≤ ℓ^p at p = {p}");
                }
                if p >= 2.0 {
                    assert!(lp[idx] <= sch + 1e-12, "ℓ^p ≤ schatten at p = {p}");
                }
            }
        }
    }
}

#[test]
fn single_block_rank_one_comparisons_reduce_to_k_powers() {
    // with one rank-one block the Schatten and HS norms coincide, so the
    // comparisons reduce to pure k_π power factors
    let mut sigma = SpectralCoefficients::new(Space::Sphere2, 3);
    let block = Block::from_fn(7, 1, |_, j| Complex64::new(1.0 + j as f64, -0.5));
    let hs = block.hs_norm();
    sigma.insert(RepLabel::Sphere(3), block);
    for p in [1.0, 1.5, 2.0, 3.0] {
        let lp = dual_lp(&sigma, p).unwrap();
        let sch = dual_schatten(&sigma, p).unwrap();
        let expect_lp = 7f64.powf(1.0 / p) * hs; // k = 1
        let expect_sch = 7f64.powf(1.0 / p) * hs;
        assert!((lp - expect_lp).abs() <= 1e-10);
        assert!((sch - expect_sch).abs() <= 1e-10);
    }
}

#[test]
fn ordering_transfers_to_gauge_norms() {
    // Φ₁ ≺ Φ₂ bounds N_{Φ₁} by a multiple of N_{Φ₂}; the sampled ratio
    // must stay stable when the sample count doubles.
    let pr1 = pair("power:1.5").unwrap();
    let pr2 = pair("power:2").unwrap();
    assert!(orlicz_hy::young::check_order(&pr1.phi, &pr2.phi).is_some());
    let ratio_max = |n: u64| -> f64 {
        let mut worst: f64 = 0.0;
        for seed in 0..n {
            let f = torus_sample(4, seed);
            let n1 = luxemburg(&pr1.phi, &f).unwrap().value;
            let n2 = luxemburg(&pr2.phi, &f).unwrap().value;
            worst = worst.max(n1 / n2);
        }
        worst
    };
    let r1 = ratio_max(60);
    let r2 = ratio_max(120);
    assert!(r1.is_finite() && r1 > 0.0);
    assert!(
        r2 <= r1 * 1.05,
        "sampled ratio grew more than 5% under doubling: {r1} -> {r2}"
    );
}

#[test]
fn orlicz_norm_sits_in_the_equivalence_bracket() {
    for spec in ["power:1.5", "power:2", "riordan:1.5"] {
        let pr = pair(spec).unwrap();
        let phi1 = pr.phi.at_one();
        // constant function: both sides are explicit
        let sp = Space::parse("torus:1").unwrap();
        let quad = sp.quadrature(2, 2);
        let one = SampledFunction::constant(quad, Complex64::new(1.0, 0.0));
        let n = luxemburg(&pr.phi, &one).unwrap().value;
        let o = orlicz_norm(&pr, &one).unwrap().value;
        assert!(
            o >= phi1 * n - 1e-9 && o <= 2.0 * n + 1e-9,
            "{spec} constant: {o} outside [{}, {}]",
            phi1 * n,
            2.0 * n
        );
        for seed in 0..10 {
            let f = torus_sample(5, seed);
            let n = luxemburg(&pr.phi, &f).unwrap().value;
            let o = orlicz_norm(&pr, &f).unwrap().value;
            assert!(
                o >= phi1 * n - 1e-9 && o <= 2.0 * n + 1e-9,
                "{spec} seed {seed}: {o} outside [{}, {}]",
                phi1 * n,
                2.0 * n
            );
        }
    }
    // zero function
    let sp = Space::parse("torus:1").unwrap();
    let quad = sp.quadrature(2, 2);
    let zero = SampledFunction::constant(quad, Complex64::new(0.0, 0.0));
    let pr = pair("power:2").unwrap();
    assert_eq!(orlicz_norm(&pr, &zero).unwrap().value, 0.0);
}

#[test]
fn luxemburg_classical_threshold_is_available() {
    let phi = power(2.0).unwrap();
    let sp = Space::parse("torus:1").unwrap();
    let quad = sp.quadrature(3, 2);
    let g = SampledFunction::constant(quad, Complex64::new(2.0, 0.0));
    let paper = luxemburg_with(&phi, &g, GaugeThreshold::PhiAtOne, GAUGE_REL_TOL)
        .unwrap()
        .value;
    let classical = luxemburg_with(&phi, &g, GaugeThreshold::ClassicalOne, GAUGE_REL_TOL)
        .unwrap()
        .value;
    assert!((paper - 2.0).abs() < 1e-9);
    assert!((classical - 2.0 / std::f64::consts::SQRT_2).abs() < 1e-9);
}
