//! SU(2): Wigner-D matrix coefficients
//! `D^l_{m′m}(α,β,γ) = e^{−im′α} d^l_{m′m}(β) e^{−imγ}`
//! in zyz Euler angles, including half-integer spins.
//!
//! The group is covered once by `α ∈ [0,2π)`, `β ∈ [0,π]`, `γ ∈ [0,4π)`
//! with Haar measure `dα · d(cos β)/2 · dγ / (2π · 4π)`. A uniform α-grid
//! of `2·os·L+1` points kills all integer frequency differences up to
//! `2L`; the γ-grid over `[0,4π)` with `4·os·L+1` points kills all
//! half-integer differences (so cross terms between integer and
//! half-integer spins cancel exactly); Gauss–Legendre in `cos β` with
//! `os·(L+1)` nodes is exact for the degree `≤ 2L` polynomials that the
//! diagonal products reduce to.

use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use super::{Block, Quadrature, RepLabel, SampledFunction, SpectralCoefficients, Tables};
use crate::numerics::gauss_legendre;

fn factorials() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![1.0_f64; 171];
        for i in 1..t.len() {
            t[i] = t[i - 1] * i as f64;
        }
        t
    })
}

/// Wigner small-d element `d^l_{m′m}(β)` with all spins doubled to stay
/// integral: `two_l = 2l`, `two_mp = 2m′`, `two_m = 2m`.
pub(crate) fn wigner_d(two_l: u32, two_mp: i64, two_m: i64, beta: f64) -> f64 {
    let f = factorials();
    let tl = two_l as i64;
    debug_assert!((tl + two_mp) % 2 == 0 && (tl + two_m) % 2 == 0);
    let jpmp = ((tl + two_mp) / 2) as usize;
    let jmmp = ((tl - two_mp) / 2) as usize;
    let jpm = ((tl + two_m) / 2) as usize;
    let jmm = ((tl - two_m) / 2) as usize;
    let dm = (two_mp - two_m) / 2; // m′ − m
    let pre = (f[jpmp] * f[jmmp] * f[jpm] * f[jmm]).sqrt();
    let (ch, sh) = ((beta / 2.0).cos(), (beta / 2.0).sin());
    let s_lo = 0.max(-dm);
    let s_hi = (jpm as i64).min(jmmp as i64);
    let mut acc = 0.0;
    let mut s = s_lo;
    while s <= s_hi {
        let sign = if (dm + s) % 2 == 0 { 1.0 } else { -1.0 };
        let denom = f[jpm - s as usize] * f[s as usize] * f[(dm + s) as usize] * f[jmmp - s as usize];
        let cos_pow = tl - dm - 2 * s;
        let sin_pow = dm + 2 * s;
        acc += sign / denom * ch.powi(cos_pow as i32) * sh.powi(sin_pow as i32);
        s += 1;
    }
    pre * acc
}

pub(crate) struct Su2Tables {
    pub n_alpha: usize,
    pub n_beta: usize,
    pub n_gamma: usize,
    pub alphas: Vec<f64>,
    pub gammas: Vec<f64>,
    /// `d^l_{m′(r), m(c)}(β_b)` at `offsets[two_l] + b·d² + r·d + c`,
    /// with `two_m′(r) = two_l − 2r`, `two_m(c) = two_l − 2c`.
    pub wig: Vec<f64>,
    pub offsets: Vec<usize>,
}

pub(crate) fn build(band: u32, oversample: u32) -> (Vec<f64>, Vec<f64>, usize, Tables) {
    let n_alpha = (2 * oversample * band + 1) as usize;
    let n_beta = (oversample as usize) * (band as usize + 1);
    let n_gamma = (4 * oversample * band + 1) as usize;
    let (gl_x, gl_w) = gauss_legendre(n_beta);
    let alphas: Vec<f64> = (0..n_alpha)
        .map(|a| 2.0 * std::f64::consts::PI * a as f64 / n_alpha as f64)
        .collect();
    let gammas: Vec<f64> = (0..n_gamma)
        .map(|c| 4.0 * std::f64::consts::PI * c as f64 / n_gamma as f64)
        .collect();
    let betas: Vec<f64> = gl_x.iter().map(|x| x.clamp(-1.0, 1.0).acos()).collect();

    let mut nodes = Vec::with_capacity(n_alpha * n_beta * n_gamma * 3);
    let mut weights = Vec::with_capacity(n_alpha * n_beta * n_gamma);
    for &alpha in &alphas {
        for (b, &beta) in betas.iter().enumerate() {
            let w = gl_w[b] / (2.0 * (n_alpha * n_gamma) as f64);
            for &gamma in &gammas {
                nodes.push(alpha);
                nodes.push(beta);
                nodes.push(gamma);
                weights.push(w);
            }
        }
    }

    let two_l_max = 2 * band;
    let mut offsets = Vec::with_capacity(two_l_max as usize + 2);
    let mut total = 0usize;
    for two_l in 0..=two_l_max {
        offsets.push(total);
        let d = two_l as usize + 1;
        total += n_beta * d * d;
    }
    offsets.push(total);
    let mut wig = vec![0.0; total];
    for two_l in 0..=two_l_max {
        let d = two_l as usize + 1;
        let base = offsets[two_l as usize];
        for (b, &beta) in betas.iter().enumerate() {
            for r in 0..d {
                let two_mp = two_l as i64 - 2 * r as i64;
                for c in 0..d {
                    let two_m = two_l as i64 - 2 * c as i64;
                    wig[base + b * d * d + r * d + c] = wigner_d(two_l, two_mp, two_m, beta);
                }
            }
        }
    }

    (
        nodes,
        weights,
        3,
        Tables::Su2(Su2Tables {
            n_alpha,
            n_beta,
            n_gamma,
            alphas,
            gammas,
            wig,
            offsets,
        }),
    )
}

/// Direct (table-free) coefficient evaluation, used for spot checks.
pub(crate) fn coefficient(two_l: u32, i: usize, j: usize, node: &[f64]) -> Complex64 {
    let (alpha, beta, gamma) = (node[0], node[1], node[2]);
    let two_mp = two_l as i64 - 2 * i as i64;
    let two_m = two_l as i64 - 2 * j as i64;
    let d = wigner_d(two_l, two_mp, two_m, beta);
    Complex64::from_polar(
        1.0,
        -(two_mp as f64 / 2.0) * alpha - (two_m as f64 / 2.0) * gamma,
    ) * d
}

/// Index of a doubled frequency `two_m ∈ [−2L, 2L]` in the phase tables.
fn m_index(two_m: i64, band: u32) -> usize {
    (two_m + 2 * band as i64) as usize
}

fn phase_table(angles: &[f64], band: u32, half: f64, sign: f64) -> Vec<Complex64> {
    let n_m = 4 * band as usize + 1;
    let mut out = vec![Complex64::new(0.0, 0.0); n_m * angles.len()];
    for two_m in -(2 * band as i64)..=(2 * band as i64) {
        let m = two_m as f64 / half; // half = 2 ⇒ m = two_m / 2
        let row = m_index(two_m, band) * angles.len();
        for (k, &ang) in angles.iter().enumerate() {
            out[row + k] = Complex64::from_polar(1.0, sign * m * ang);
        }
    }
    out
}

pub(crate) fn synthesize(
    sigma: &SpectralCoefficients,
    quad: &Arc<Quadrature>,
    t: &Su2Tables,
) -> SampledFunction {
    let band = quad.band;
    let n_m = 4 * band as usize + 1;
    // e^{−i m α} and e^{−i m γ}
    let alpha_ph = phase_table(&t.alphas, band, 2.0, -1.0);
    let gamma_ph = phase_table(&t.gammas, band, 2.0, -1.0);

    let zero = Complex64::new(0.0, 0.0);
    let mut values = vec![zero; quad.len()];
    let mut tmat = vec![zero; n_m * n_m]; // [mp][mm]
    let mut vmat = vec![zero; n_m * t.n_gamma]; // [mp][c]
    for b in 0..t.n_beta {
        tmat.fill(zero);
        // T[mp][mm] = Σ_l d_l σ[u(mm)][v(mp)] d^l_{mp,mm}(β_b)
        for (label, block) in sigma.blocks() {
            let RepLabel::Su2(two_l) = label else { unreachable!() };
            let d = *two_l as usize + 1;
            let dl = d as f64;
            let base = t.offsets[*two_l as usize] + b * d * d;
            for v in 0..d {
                let two_mp = *two_l as i64 - 2 * v as i64;
                let mp = m_index(two_mp, band);
                for u in 0..d {
                    let s = block.get(u, v);
                    if s.norm_sqr() == 0.0 {
                        continue;
                    }
                    let two_m = *two_l as i64 - 2 * u as i64;
                    let mm = m_index(two_m, band);
                    tmat[mp * n_m + mm] += s * dl * t.wig[base + v * d + u];
                }
            }
        }
        // V[mp][c] = Σ_mm T[mp][mm] e^{−i m γ_c}
        vmat.fill(zero);
        for mp in 0..n_m {
            for mm in 0..n_m {
                let tv = tmat[mp * n_m + mm];
                if tv.norm_sqr() == 0.0 {
                    continue;
                }
                let row = &gamma_ph[mm * t.n_gamma..(mm + 1) * t.n_gamma];
                let out = &mut vmat[mp * t.n_gamma..(mp + 1) * t.n_gamma];
                for (o, ph) in out.iter_mut().zip(row) {
                    *o += tv * ph;
                }
            }
        }
        // f(a,b,c) = Σ_mp e^{−i m′ α_a} V[mp][c]
        for a in 0..t.n_alpha {
            let node_base = (a * t.n_beta + b) * t.n_gamma;
            for mp in 0..n_m {
                let ph = alpha_ph[mp * t.n_alpha + a];
                let row = &vmat[mp * t.n_gamma..(mp + 1) * t.n_gamma];
                let out = &mut values[node_base..node_base + t.n_gamma];
                for (o, v) in out.iter_mut().zip(row) {
                    *o += ph * v;
                }
            }
        }
    }
    SampledFunction::new(quad.clone(), values)
}

pub(crate) fn analyze(f: &SampledFunction, band: u32, t: &Su2Tables) -> SpectralCoefficients {
    let quad = &f.quad;
    let qband = quad.band;
    let n_m = 4 * qband as usize + 1;
    let alpha_ph = phase_table(&t.alphas, qband, 2.0, 1.0);
    let gamma_ph = phase_table(&t.gammas, qband, 2.0, 1.0);

    let zero = Complex64::new(0.0, 0.0);
    let mut out = SpectralCoefficients::new(quad.space.clone(), band);
    let mut blocks: Vec<Block> = (0..=2 * band)
        .map(|two_l| {
            let d = two_l as usize + 1;
            Block::zeros(d, d)
        })
        .collect();

    let mut gmat = vec![zero; n_m * t.n_gamma]; // [mp][c]
    let mut hmat = vec![zero; n_m * n_m]; // [mp][mm]
    for b in 0..t.n_beta {
        // polar weight glw_b/2 recovered from the node weights
        let w_polar = quad.weights()[b * t.n_gamma] * (t.n_alpha * t.n_gamma) as f64;
        gmat.fill(zero);
        for a in 0..t.n_alpha {
            let node_base = (a * t.n_beta + b) * t.n_gamma;
            let vals = &f.values[node_base..node_base + t.n_gamma];
            for mp in 0..n_m {
                let ph = alpha_ph[mp * t.n_alpha + a] / t.n_alpha as f64;
                let row = &mut gmat[mp * t.n_gamma..(mp + 1) * t.n_gamma];
                for (g, v) in row.iter_mut().zip(vals) {
                    *g += ph * v;
                }
            }
        }
        hmat.fill(zero);
        for mp in 0..n_m {
            let grow = &gmat[mp * t.n_gamma..(mp + 1) * t.n_gamma];
            for mm in 0..n_m {
                let prow = &gamma_ph[mm * t.n_gamma..(mm + 1) * t.n_gamma];
                let mut acc = zero;
                for (g, p) in grow.iter().zip(prow) {
                    acc += g * p;
                }
                hmat[mp * n_m + mm] = acc / t.n_gamma as f64;
            }
        }
        // f̂^l[j][i] += w_polar · d^l_{m′(i),m(j)}(β_b) · H[m′(i)][m(j)]
        for two_l in 0..=2 * band {
            let d = two_l as usize + 1;
            let base = t.offsets[two_l as usize] + b * d * d;
            let block = &mut blocks[two_l as usize];
            for i in 0..d {
                let mp = m_index(two_l as i64 - 2 * i as i64, qband);
                for j in 0..d {
                    let mm = m_index(two_l as i64 - 2 * j as i64, qband);
                    let add = w_polar * t.wig[base + i * d + j] * hmat[mp * n_m + mm];
                    let cur = block.get(j, i);
                    block.set(j, i, cur + add).unwrap();
                }
            }
        }
    }
    for (two_l, block) in blocks.into_iter().enumerate() {
        out.insert(RepLabel::Su2(two_l as u32), block);
    }
    out
}
