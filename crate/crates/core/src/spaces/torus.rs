//! The d-torus: characters `e^{i n·θ}` on a uniform product grid.
//!
//! A uniform grid with `N ≥ 2·oversample·L + 1` points per dimension
//! integrates `e^{i k θ}` exactly for `|k| < N`, which covers all products
//! of characters up to band `L`.

use std::sync::Arc;

use num_complex::Complex64;

use super::{Block, Quadrature, RepInfo, RepLabel, SampledFunction, SpectralCoefficients, Tables};

pub(crate) struct TorusTables {
    pub dim: usize,
}

pub(crate) fn reps(dim: usize, band: u32) -> Vec<RepInfo> {
    let l = band as i64;
    let mut labels: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(labels.len() * (2 * band as usize + 1));
        for base in &labels {
            for n in -l..=l {
                let mut v = base.clone();
                v.push(n);
                next.push(v);
            }
        }
        labels = next;
    }
    let mut labels: Vec<RepLabel> = labels.into_iter().map(RepLabel::Torus).collect();
    labels.sort();
    labels
        .into_iter()
        .map(|label| RepInfo {
            label,
            dim: 1,
            invariant_dim: 1,
        })
        .collect()
}

pub(crate) fn build(dim: usize, band: u32, oversample: u32) -> (Vec<f64>, Vec<f64>, usize, Tables) {
    let n = (2 * oversample * band + 1) as usize;
    let total = n.pow(dim as u32);
    let mut nodes = Vec::with_capacity(total * dim);
    let step = 2.0 * std::f64::consts::PI / n as f64;
    for flat in 0..total {
        let mut rest = flat;
        for _ in 0..dim {
            nodes.push((rest % n) as f64 * step);
            rest /= n;
        }
    }
    let w = 1.0 / total as f64;
    (
        nodes,
        vec![w; total],
        dim,
        Tables::Torus(TorusTables { dim }),
    )
}

pub(crate) fn character(n: &[i64], node: &[f64]) -> Complex64 {
    let phase: f64 = n.iter().zip(node).map(|(&k, &t)| k as f64 * t).sum();
    Complex64::from_polar(1.0, phase)
}

pub(crate) fn synthesize(
    sigma: &SpectralCoefficients,
    quad: &Arc<Quadrature>,
    _t: &TorusTables,
) -> SampledFunction {
    let mut values = vec![Complex64::new(0.0, 0.0); quad.len()];
    for (label, block) in sigma.blocks() {
        let RepLabel::Torus(n) = label else { unreachable!() };
        let c = block.get(0, 0);
        if c.norm_sqr() == 0.0 {
            continue;
        }
        for (idx, v) in values.iter_mut().enumerate() {
            *v += c * character(n, quad.node(idx));
        }
    }
    SampledFunction::new(quad.clone(), values)
}

pub(crate) fn analyze(f: &SampledFunction, band: u32, t: &TorusTables) -> SpectralCoefficients {
    let quad = &f.quad;
    let mut out = SpectralCoefficients::new(quad.space.clone(), band);
    for info in reps(t.dim, band) {
        let RepLabel::Torus(n) = &info.label else { unreachable!() };
        let mut acc = Complex64::new(0.0, 0.0);
        for idx in 0..quad.len() {
            acc += quad.weights()[idx] * f.values[idx] * character(n, quad.node(idx)).conj();
        }
        let mut block = Block::zeros(1, 1);
        block.set(0, 0, acc).unwrap();
        out.insert(info.label, block);
    }
    out
}
