//! The 2-sphere: spherical functions `π_{i,0}(x) = √(4π/(2l+1))·Y_l^m(x)`
//! with `m = i − l`, over a Gauss–Legendre × uniform-azimuth grid.
//!
//! The normalized invariant measure is `dμ = sin θ dθ dφ / 4π`, so the
//! node weight is `w_GL(θ) / (2 n_φ)`. With `n_θ ≥ oversample·(L+1)`
//! nodes in `cos θ` the rule is exact for all coefficient products up to
//! band `L`; the azimuth grid needs `n_φ ≥ 2·oversample·L + 1`.

use std::sync::Arc;

use num_complex::Complex64;

use super::{Block, Quadrature, RepLabel, SampledFunction, SpectralCoefficients, Tables};
use crate::numerics::gauss_legendre;

pub(crate) struct SphereTables {
    pub n_theta: usize,
    pub n_phi: usize,
    /// `√(4π/(2l+1))·P̄_l^m(cos θ_i)` for `0 ≤ m ≤ l ≤ L`, indexed
    /// `tri(l) + m` by node; `P̄` is the orthonormal associated Legendre
    /// function including Condon–Shortley phase.
    pub plm: Vec<f64>,
    pub phis: Vec<f64>,
}

fn tri(l: usize) -> usize {
    l * (l + 1) / 2
}

/// Orthonormal associated Legendre values `P̄_l^m(x)` for all `0 ≤ m ≤ l ≤ lmax`
/// at a single `x`, via the stable normalized recurrences.
pub(crate) fn legendre_bar(lmax: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; tri(lmax + 1)];
    let sx = (1.0 - x * x).max(0.0).sqrt();
    out[0] = (1.0 / (4.0 * std::f64::consts::PI)).sqrt();
    for m in 1..=lmax {
        // P̄_m^m = −√((2m+1)/(2m)) · sinθ · P̄_{m−1}^{m−1}
        out[tri(m) + m] =
            -((2.0 * m as f64 + 1.0) / (2.0 * m as f64)).sqrt() * sx * out[tri(m - 1) + m - 1];
    }
    for m in 0..lmax {
        // P̄_{m+1}^m = √(2m+3) · x · P̄_m^m
        out[tri(m + 1) + m] = (2.0 * m as f64 + 3.0).sqrt() * x * out[tri(m) + m];
    }
    for m in 0..=lmax {
        for l in (m + 2)..=lmax {
            let lf = l as f64;
            let mf = m as f64;
            let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
            let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0))
                .sqrt();
            out[tri(l) + m] = a * (x * out[tri(l - 1) + m] - b * out[tri(l - 2) + m]);
        }
    }
    out
}

pub(crate) fn build(band: u32, oversample: u32) -> (Vec<f64>, Vec<f64>, usize, Tables) {
    let l = band as usize;
    let n_theta = (oversample as usize) * (l + 1);
    let n_phi = (2 * oversample * band + 1) as usize;
    let (gl_x, gl_w) = gauss_legendre(n_theta);
    let phis: Vec<f64> = (0..n_phi)
        .map(|j| 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64)
        .collect();

    let mut nodes = Vec::with_capacity(n_theta * n_phi * 2);
    let mut weights = Vec::with_capacity(n_theta * n_phi);
    for i in 0..n_theta {
        let theta = gl_x[i].clamp(-1.0, 1.0).acos();
        let w = gl_w[i] / (2.0 * n_phi as f64);
        for &phi in &phis {
            nodes.push(theta);
            nodes.push(phi);
            weights.push(w);
        }
    }

    let mut plm = vec![0.0; tri(l + 1) * n_theta];
    for (i, &x) in gl_x.iter().enumerate() {
        let bar = legendre_bar(l, x);
        for li in 0..=l {
            let scale = (4.0 * std::f64::consts::PI / (2.0 * li as f64 + 1.0)).sqrt();
            for m in 0..=li {
                plm[(tri(li) + m) * n_theta + i] = scale * bar[tri(li) + m];
            }
        }
    }

    (
        nodes,
        weights,
        2,
        Tables::Sphere(SphereTables {
            n_theta,
            n_phi,
            plm,
            phis,
        }),
    )
}

/// Condon–Shortley sign flip for negative orders:
/// `Y_l^{-m} = (−1)^m · conj(Y_l^m)`.
fn cs_sign(m: i64) -> f64 {
    if m < 0 && m % 2 != 0 {
        -1.0
    } else {
        1.0
    }
}

/// Direct (table-free) coefficient evaluation, used for spot checks.
pub(crate) fn coefficient(l: u32, i: usize, node: &[f64]) -> Complex64 {
    let (theta, phi) = (node[0], node[1]);
    let m = i as i64 - l as i64;
    let bar = legendre_bar(l as usize, theta.cos());
    let scale = (4.0 * std::f64::consts::PI / (2.0 * l as f64 + 1.0)).sqrt();
    let p = scale * bar[tri(l as usize) + m.unsigned_abs() as usize];
    cs_sign(m) * p * Complex64::from_polar(1.0, m as f64 * phi)
}

pub(crate) fn synthesize(
    sigma: &SpectralCoefficients,
    quad: &Arc<Quadrature>,
    t: &SphereTables,
) -> SampledFunction {
    let lmax = quad.band as usize;
    let n_m = 2 * lmax + 1;
    // H[m][iθ] = Σ_l d_l · σ(l)_{0,i(m)} · cs(m) · q_l^{|m|}(θ_i)
    let mut h = vec![Complex64::new(0.0, 0.0); n_m * t.n_theta];
    for (label, block) in sigma.blocks() {
        let RepLabel::Sphere(l) = label else { unreachable!() };
        let l = *l as usize;
        let d = (2 * l + 1) as f64;
        for i_col in 0..(2 * l + 1) {
            let c = block.get(0, i_col);
            if c.norm_sqr() == 0.0 {
                continue;
            }
            let m = i_col as i64 - l as i64;
            let coeff = c * d * cs_sign(m);
            let row = &t.plm[(tri(l) + m.unsigned_abs() as usize) * t.n_theta..][..t.n_theta];
            let m_idx = (m + lmax as i64) as usize;
            for (it, &p) in row.iter().enumerate() {
                h[m_idx * t.n_theta + it] += coeff * p;
            }
        }
    }
    let mut values = vec![Complex64::new(0.0, 0.0); quad.len()];
    for m_idx in 0..n_m {
        let m = m_idx as i64 - lmax as i64;
        for it in 0..t.n_theta {
            let hh = h[m_idx * t.n_theta + it];
            if hh.norm_sqr() == 0.0 {
                continue;
            }
            for (jp, &phi) in t.phis.iter().enumerate() {
                values[it * t.n_phi + jp] += hh * Complex64::from_polar(1.0, m as f64 * phi);
            }
        }
    }
    SampledFunction::new(quad.clone(), values)
}

pub(crate) fn analyze(f: &SampledFunction, band: u32, t: &SphereTables) -> SpectralCoefficients {
    let quad = &f.quad;
    let lmax = band as usize;
    let n_m = 2 * lmax + 1;
    // G[m][iθ] = (1/n_φ) Σ_j f(θ_i, φ_j) e^{−imφ_j}
    let mut g = vec![Complex64::new(0.0, 0.0); n_m * t.n_theta];
    for it in 0..t.n_theta {
        for (jp, &phi) in t.phis.iter().enumerate() {
            let v = f.values[it * t.n_phi + jp] / t.n_phi as f64;
            for m_idx in 0..n_m {
                let m = m_idx as i64 - lmax as i64;
                g[m_idx * t.n_theta + it] += v * Complex64::from_polar(1.0, -(m as f64) * phi);
            }
        }
    }
    // polar weights: the node weight is glw/(2 n_φ); the 1/n_φ is in G
    let mut out = SpectralCoefficients::new(quad.space.clone(), band);
    for l in 0..=lmax {
        let dim = 2 * l + 1;
        let block = Block::from_fn(dim, 1, |_, i_col| {
            let m = i_col as i64 - l as i64;
            let m_idx = (m + lmax as i64) as usize;
            let row = &t.plm[(tri(l) + m.unsigned_abs() as usize) * t.n_theta..][..t.n_theta];
            let mut acc = Complex64::new(0.0, 0.0);
            for it in 0..t.n_theta {
                let w_polar = quad.weights()[it * t.n_phi] * t.n_phi as f64;
                acc += w_polar * row[it] * g[m_idx * t.n_theta + it];
            }
            acc * cs_sign(m)
        });
        out.insert(RepLabel::Sphere(l as u32), block);
    }
    out
}
