//! Concrete compact homogeneous manifolds: class-I dual enumeration,
//! matrix coefficients, exact quadrature for the normalized invariant
//! measure, and Fourier analysis/synthesis.
//!
//! Three spaces are built in, addressable by string spec:
//!
//! * `torus:d` — the d-torus; the dual is `ℤ^d` with characters
//!   `e^{i n·θ}` and `d_π = k_π = 1`.
//! * `sphere2` — the 2-sphere as a rank-one quotient; the dual is the
//!   integer spins `l ≤ L` with `d_π = 2l + 1`, `k_π = 1`, spherical
//!   functions proportional to the `Y_l^m`.
//! * `su2` — the group itself (trivial stabilizer); the dual runs over
//!   half-integer spins with `d_π = k_π = 2l + 1` and Wigner-D matrix
//!   coefficients.
//!
//! Coefficient matrices carry the row-truncation convention: blocks
//! `σ(π)` are `d_π × d_π` with rows at and beyond `k_π` identically
//! zero, while the matrix functions `π(x)` have columns beyond `k_π`
//! zero, so that `π(x)π(x)*` is the diagonal projector of rank `k_π`.

mod sphere;
mod su2;
mod torus;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors from the homogeneous-space layer.
#[derive(Debug, thiserror::Error)]
pub enum SpaceError {
    #[error("band limit {requested} exceeds the quadrature's exactness band {available}")]
    BandLimitExceeded { requested: u32, available: u32 },
    #[error("bad space spec: {0}")]
    BadSpec(String),
    #[error("entry ({i}, {j}) is outside the admissible block of a rep with d = {d}, k = {k}")]
    InadmissibleEntry { i: usize, j: usize, d: usize, k: usize },
}

/// A built-in compact homogeneous space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Torus { dim: usize },
    Sphere2,
    Su2,
}

impl Space {
    /// Parse `"torus:d"`, `"sphere2"` or `"su2"`.
    pub fn parse(spec: &str) -> Result<Self, SpaceError> {
        match spec {
            "sphere2" => Ok(Space::Sphere2),
            "su2" => Ok(Space::Su2),
            other => {
                if let Some(d) = other.strip_prefix("torus:") {
                    let dim: usize = d
                        .parse()
                        .map_err(|_| SpaceError::BadSpec(format!("bad torus dimension in '{spec}'")))?;
                    if dim == 0 || dim > 4 {
                        return Err(SpaceError::BadSpec(format!(
                            "torus dimension must be in 1..=4, got {dim}"
                        )));
                    }
                    Ok(Space::Torus { dim })
                } else {
                    Err(SpaceError::BadSpec(format!("unknown space '{spec}'")))
                }
            }
        }
    }

    pub fn spec_string(&self) -> String {
        match self {
            Space::Torus { dim } => format!("torus:{dim}"),
            Space::Sphere2 => "sphere2".into(),
            Space::Su2 => "su2".into(),
        }
    }

    /// Class-I dual up to band limit `L`, in the canonical sorted order.
    pub fn reps(&self, band: u32) -> Vec<RepInfo> {
        match self {
            Space::Torus { dim } => torus::reps(*dim, band),
            Space::Sphere2 => (0..=band)
                .map(|l| RepInfo {
                    label: RepLabel::Sphere(l),
                    dim: (2 * l + 1) as usize,
                    invariant_dim: 1,
                })
                .collect(),
            Space::Su2 => (0..=2 * band)
                .map(|two_l| RepInfo {
                    label: RepLabel::Su2(two_l),
                    dim: (two_l + 1) as usize,
                    invariant_dim: (two_l + 1) as usize,
                })
                .collect(),
        }
    }

    /// Nodes and weights of a product quadrature exact for all pairwise
    /// products of matrix coefficients up to band `L`, oversampled by the
    /// given factor for non-polynomial integrands. Weights sum to one.
    pub fn quadrature(&self, band: u32, oversample: u32) -> Arc<Quadrature> {
        let oversample = oversample.max(1);
        let (nodes, weights, coord_dim, tables) = match self {
            Space::Torus { dim } => torus::build(*dim, band, oversample),
            Space::Sphere2 => sphere::build(band, oversample),
            Space::Su2 => su2::build(band, oversample),
        };
        Arc::new(Quadrature {
            space: self.clone(),
            band,
            oversample,
            nodes,
            weights,
            coord_dim,
            tables,
        })
    }

    /// Matrix coefficient `π(x)_{ij}` (0-based indices) at a node given by
    /// its coordinates. Columns `j ≥ k_π` are zero by convention.
    pub fn coefficient(&self, rep: &RepLabel, i: usize, j: usize, node: &[f64]) -> Complex64 {
        let info = rep.info();
        if i >= info.dim || j >= info.dim {
            return Complex64::new(0.0, 0.0);
        }
        if j >= info.invariant_dim {
            return Complex64::new(0.0, 0.0);
        }
        match (self, rep) {
            (Space::Torus { dim }, RepLabel::Torus(n)) => {
                debug_assert_eq!(n.len(), *dim);
                torus::character(n, node)
            }
            (Space::Sphere2, RepLabel::Sphere(l)) => sphere::coefficient(*l, i, node),
            (Space::Su2, RepLabel::Su2(two_l)) => su2::coefficient(*two_l, i, j, node),
            _ => panic!("rep label does not belong to this space"),
        }
    }
}

/// Label of an irreducible class-I representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RepLabel {
    /// Torus frequency vector `n ∈ ℤ^d`.
    Torus(Vec<i64>),
    /// Integer spin `l` on the sphere.
    Sphere(u32),
    /// Twice the (half-integer) spin on SU(2).
    Su2(u32),
}

impl RepLabel {
    pub fn info(&self) -> RepInfo {
        match self {
            RepLabel::Torus(n) => RepInfo {
                label: RepLabel::Torus(n.clone()),
                dim: 1,
                invariant_dim: 1,
            },
            RepLabel::Sphere(l) => RepInfo {
                label: self.clone(),
                dim: (2 * l + 1) as usize,
                invariant_dim: 1,
            },
            RepLabel::Su2(two_l) => RepInfo {
                label: self.clone(),
                dim: (two_l + 1) as usize,
                invariant_dim: (two_l + 1) as usize,
            },
        }
    }

    /// A scalar degree used by spectral decay profiles.
    pub fn degree(&self) -> f64 {
        match self {
            RepLabel::Torus(n) => (n.iter().map(|&x| (x * x) as f64).sum::<f64>()).sqrt(),
            RepLabel::Sphere(l) => *l as f64,
            RepLabel::Su2(two_l) => *two_l as f64 / 2.0,
        }
    }
}

impl PartialOrd for RepLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RepLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use RepLabel::*;
        match (self, other) {
            (Torus(a), Torus(b)) => {
                let la = a.iter().map(|x| x.abs()).max().unwrap_or(0);
                let lb = b.iter().map(|x| x.abs()).max().unwrap_or(0);
                la.cmp(&lb).then_with(|| a.cmp(b))
            }
            (Sphere(a), Sphere(b)) => a.cmp(b),
            (Su2(a), Su2(b)) => a.cmp(b),
            (Torus(_), _) => std::cmp::Ordering::Less,
            (_, Torus(_)) => std::cmp::Ordering::Greater,
            (Sphere(_), _) => std::cmp::Ordering::Less,
            (_, Sphere(_)) => std::cmp::Ordering::Greater,
        }
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Torus(n) => {
                write!(f, "n=")?;
                for (i, x) in n.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            RepLabel::Sphere(l) => write!(f, "l={l}"),
            RepLabel::Su2(two_l) => write!(f, "2l={two_l}"),
        }
    }
}

impl FromStr for RepLabel {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("n=") {
            let parts: Result<Vec<i64>, _> = rest.split(',').map(|p| p.parse::<i64>()).collect();
            return parts
                .map(RepLabel::Torus)
                .map_err(|_| SpaceError::BadSpec(format!("bad rep label '{s}'")));
        }
        if let Some(rest) = s.strip_prefix("2l=") {
            return rest
                .parse::<u32>()
                .map(RepLabel::Su2)
                .map_err(|_| SpaceError::BadSpec(format!("bad rep label '{s}'")));
        }
        if let Some(rest) = s.strip_prefix("l=") {
            return rest
                .parse::<u32>()
                .map(RepLabel::Sphere)
                .map_err(|_| SpaceError::BadSpec(format!("bad rep label '{s}'")));
        }
        Err(SpaceError::BadSpec(format!("bad rep label '{s}'")))
    }
}

impl Serialize for RepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RepLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|e: SpaceError| D::Error::custom(e.to_string()))
    }
}

/// Dimension data of one representation: `d_π` and the invariant-vector
/// count `k_π ≤ d_π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepInfo {
    pub label: RepLabel,
    pub dim: usize,
    pub invariant_dim: usize,
}

/// Per-space cached basis evaluations attached to a quadrature.
pub(crate) enum Tables {
    Torus(torus::TorusTables),
    Sphere(sphere::SphereTables),
    Su2(su2::Su2Tables),
}

/// Nodes and positive weights of the normalized invariant measure,
/// together with cached basis tables. Immutable after construction.
pub struct Quadrature {
    pub space: Space,
    /// Exactness band: products of coefficients up to this band integrate
    /// exactly.
    pub band: u32,
    pub oversample: u32,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    coord_dim: usize,
    pub(crate) tables: Tables,
}

impl Quadrature {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn node(&self, idx: usize) -> &[f64] {
        &self.nodes[idx * self.coord_dim..(idx + 1) * self.coord_dim]
    }

    /// Integrate node values against the normalized measure.
    pub fn integrate(&self, values: &[Complex64]) -> Complex64 {
        debug_assert_eq!(values.len(), self.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for (w, v) in self.weights.iter().zip(values) {
            acc += w * v;
        }
        acc
    }
}

impl fmt::Debug for Quadrature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quadrature")
            .field("space", &self.space)
            .field("band", &self.band)
            .field("oversample", &self.oversample)
            .field("nodes", &self.len())
            .finish()
    }
}

/// One spectral block: a `d × d` complex matrix whose rows at and beyond
/// `k` are identically zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    dim: usize,
    invariant_dim: usize,
    entries: Vec<Complex64>,
}

impl Block {
    pub fn zeros(dim: usize, invariant_dim: usize) -> Self {
        assert!(invariant_dim >= 1 && invariant_dim <= dim);
        Self {
            dim,
            invariant_dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    /// Fill the admissible rows `i < k` from a closure; forbidden rows
    /// stay zero by construction.
    pub fn from_fn(dim: usize, invariant_dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut b = Self::zeros(dim, invariant_dim);
        for i in 0..invariant_dim {
            for j in 0..dim {
                b.entries[i * dim + j] = f(i, j);
            }
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn invariant_dim(&self) -> usize {
        self.invariant_dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    /// Checked write; rows `i ≥ k` are inadmissible.
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) -> Result<(), SpaceError> {
        if i >= self.invariant_dim || j >= self.dim {
            return Err(SpaceError::InadmissibleEntry {
                i,
                j,
                d: self.dim,
                k: self.invariant_dim,
            });
        }
        self.entries[i * self.dim + j] = v;
        Ok(())
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Hilbert–Schmidt norm of the block.
    pub fn hs_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            invariant_dim: self.invariant_dim,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }
}

/// A finitely supported matrix-valued function on the dual, with the
/// row-truncation constraint enforced per block.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCoefficients {
    pub space: Space,
    pub band: u32,
    blocks: Vec<(RepLabel, Block)>, // sorted by label
}

impl SpectralCoefficients {
    pub fn new(space: Space, band: u32) -> Self {
        Self {
            space,
            band,
            blocks: Vec::new(),
        }
    }

    /// Insert or replace a block, keeping the support sorted.
    pub fn insert(&mut self, label: RepLabel, block: Block) {
        match self.blocks.binary_search_by(|(l, _)| l.cmp(&label)) {
            Ok(i) => self.blocks[i] = (label, block),
            Err(i) => self.blocks.insert(i, (label, block)),
        }
    }

    pub fn get(&self, label: &RepLabel) -> Option<&Block> {
        self.blocks
            .binary_search_by(|(l, _)| l.cmp(label))
            .ok()
            .map(|i| &self.blocks[i].1)
    }

    pub fn support(&self) -> impl Iterator<Item = &RepLabel> {
        self.blocks.iter().map(|(l, _)| l)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&RepLabel, &Block)> {
        self.blocks.iter().map(|(l, b)| (l, b))
    }

    pub fn support_len(&self) -> usize {
        self.blocks.len()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            space: self.space.clone(),
            band: self.band,
            blocks: self
                .blocks
                .iter()
                .map(|(l, b)| (l.clone(), b.scale(c)))
                .collect(),
        }
    }

    /// Largest absolute entrywise difference against another set.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for (label, block) in self.blocks() {
            match other.get(label) {
                Some(b2) => {
                    for (a, b) in block.entries().iter().zip(b2.entries()) {
                        worst = worst.max((a - b).norm());
                    }
                }
                None => {
                    for a in block.entries() {
                        worst = worst.max(a.norm());
                    }
                }
            }
        }
        for (label, b2) in other.blocks() {
            if self.get(label).is_none() {
                for a in b2.entries() {
                    worst = worst.max(a.norm());
                }
            }
        }
        worst
    }
}

#[derive(Serialize, Deserialize)]
struct BlockWire {
    rep: RepLabel,
    d: usize,
    k: usize,
    /// Admissible rows `i < k`, row-major, as `[re, im]` pairs.
    entries_re_im: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientsWire {
    space: String,
    #[serde(rename = "L")]
    band: u32,
    blocks: Vec<BlockWire>,
}

impl Serialize for SpectralCoefficients {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wire = CoefficientsWire {
            space: self.space.spec_string(),
            band: self.band,
            blocks: self
                .blocks
                .iter()
                .map(|(label, b)| BlockWire {
                    rep: label.clone(),
                    d: b.dim(),
                    k: b.invariant_dim(),
                    entries_re_im: (0..b.invariant_dim())
                        .flat_map(|i| (0..b.dim()).map(move |j| (i, j)))
                        .map(|(i, j)| {
                            let z = b.get(i, j);
                            [z.re, z.im]
                        })
                        .collect(),
                })
                .collect(),
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpectralCoefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = CoefficientsWire::deserialize(d)?;
        let space = Space::parse(&wire.space).map_err(|e| D::Error::custom(e.to_string()))?;
        let mut out = SpectralCoefficients::new(space, wire.band);
        for bw in wire.blocks {
            if bw.entries_re_im.len() != bw.k * bw.d {
                return Err(D::Error::custom(format!(
                    "block {} carries {} entries, expected k·d = {}",
                    bw.rep,
                    bw.entries_re_im.len(),
                    bw.k * bw.d
                )));
            }
            let block = Block::from_fn(bw.d, bw.k, |i, j| {
                let [re, im] = bw.entries_re_im[i * bw.d + j];
                Complex64::new(re, im)
            });
            out.insert(bw.rep, block);
        }
        Ok(out)
    }
}

/// A function on the space represented by its values at quadrature nodes.
#[derive(Clone, Debug)]
pub struct SampledFunction {
    pub quad: Arc<Quadrature>,
    pub values: Vec<Complex64>,
    pub band_hint: Option<u32>,
    pub seed: Option<u64>,
}

impl SampledFunction {
    pub fn new(quad: Arc<Quadrature>, values: Vec<Complex64>) -> Self {
        assert_eq!(values.len(), quad.len());
        Self {
            quad,
            values,
            band_hint: None,
            seed: None,
        }
    }

    /// Sample a callable at the quadrature nodes.
    pub fn from_fn(quad: Arc<Quadrature>, f: impl Fn(&[f64]) -> Complex64) -> Self {
        let values = (0..quad.len()).map(|i| f(quad.node(i))).collect();
        Self::new(quad, values)
    }

    pub fn constant(quad: Arc<Quadrature>, c: Complex64) -> Self {
        let n = quad.len();
        Self::new(quad, vec![c; n])
    }

    pub fn sup_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            quad: self.quad.clone(),
            values: self.values.iter().map(|z| z * c).collect(),
            band_hint: self.band_hint,
            seed: self.seed,
        }
    }
}

/// Fourier coefficients by quadrature: `f̂(π)_{ji} = Σ_x w·f(x)·conj(π_{ij}(x))`.
///
/// Rows `j ≥ k_π` of each block are exactly zero by construction. Fails
/// with `BandLimitExceeded` when `band` is beyond the quadrature's
/// exactness band.
pub fn analyze(f: &SampledFunction, band: u32) -> Result<SpectralCoefficients, SpaceError> {
    if band > f.quad.band {
        return Err(SpaceError::BandLimitExceeded {
            requested: band,
            available: f.quad.band,
        });
    }
    Ok(match &f.quad.tables {
        Tables::Torus(t) => torus::analyze(f, band, t),
        Tables::Sphere(t) => sphere::analyze(f, band, t),
        Tables::Su2(t) => su2::analyze(f, band, t),
    })
}

/// Fourier synthesis at the quadrature nodes:
/// `f(x) = Σ_π d_π · Tr(σ(π) π(x))` over the support of `σ`.
///
/// The support must lie within the quadrature's exactness band for a
/// subsequent [`analyze`] to be exact.
pub fn synthesize(sigma: &SpectralCoefficients, quad: &Arc<Quadrature>) -> SampledFunction {
    debug_assert_eq!(sigma.space, quad.space);
    debug_assert!(sigma.band <= quad.band);
    let mut out = match &quad.tables {
        Tables::Torus(t) => torus::synthesize(sigma, quad, t),
        Tables::Sphere(t) => sphere::synthesize(sigma, quad, t),
        Tables::Su2(t) => su2::synthesize(sigma, quad, t),
    };
    out.band_hint = Some(sigma.band);
    out
}

/// How random coefficients are scaled per representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpectralProfile {
    /// Unit-variance complex Gaussians everywhere.
    Flat,
    /// Scale by `(1 + degree)^(-rate)`.
    Decay(f64),
}

impl SpectralProfile {
    pub fn parse(spec: &str) -> Result<Self, SpaceError> {
        if spec == "flat" {
            return Ok(SpectralProfile::Flat);
        }
        if let Some(r) = spec.strip_prefix("decay:") {
            let rate: f64 = r
                .parse()
                .map_err(|_| SpaceError::BadSpec(format!("bad profile '{spec}'")))?;
            return Ok(SpectralProfile::Decay(rate));
        }
        Err(SpaceError::BadSpec(format!("unknown profile '{spec}'")))
    }

    pub fn spec_string(&self) -> String {
        match self {
            SpectralProfile::Flat => "flat".into(),
            SpectralProfile::Decay(r) => format!("decay:{r}"),
        }
    }

    fn scale(&self, label: &RepLabel) -> f64 {
        match self {
            SpectralProfile::Flat => 1.0,
            SpectralProfile::Decay(rate) => (1.0 + label.degree()).powf(-rate),
        }
    }
}

/// Random band-limited coefficients: independent complex Gaussians on the
/// admissible entries, scaled by the profile. Deterministic per seed.
pub fn random_bandlimited(
    space: &Space,
    band: u32,
    seed: u64,
    profile: SpectralProfile,
) -> SpectralCoefficients {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SpectralCoefficients::new(space.clone(), band);
    for info in space.reps(band) {
        let s = profile.scale(&info.label);
        let block = Block::from_fn(info.dim, info.invariant_dim, |_, _| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re * s, im * s)
        });
        out.insert(info.label, block);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs_roundtrip() {
        for spec in ["torus:1", "torus:3", "sphere2", "su2"] {
            assert_eq!(Space::parse(spec).unwrap().spec_string(), spec);
        }
        assert!(Space::parse("torus:0").is_err());
        assert!(Space::parse("klein").is_err());
    }

    #[test]
    fn rep_dimensions_match_conventions() {
        let t = Space::parse("torus:1").unwrap();
        for r in t.reps(3) {
            assert_eq!((r.dim, r.invariant_dim), (1, 1));
        }
        let s = Space::Sphere2;
        let reps = s.reps(4);
        assert_eq!(reps.len(), 5);
        assert!(reps.iter().all(|r| r.invariant_dim == 1));
        assert_eq!(reps[4].dim, 9);
        let g = Space::Su2;
        let reps = g.reps(2); // 2l = 0..4
        assert_eq!(reps.len(), 5);
        assert!(reps.iter().all(|r| r.dim == r.invariant_dim));
    }

    #[test]
    fn torus_rep_order_starts_at_zero() {
        let t = Space::parse("torus:1").unwrap();
        let labels: Vec<_> = t.reps(3).into_iter().map(|r| r.label).collect();
        assert_eq!(labels[0], RepLabel::Torus(vec![0]));
        assert_eq!(labels[1], RepLabel::Torus(vec![-1]));
        assert_eq!(labels[2], RepLabel::Torus(vec![1]));
    }

    #[test]
    fn weights_sum_to_one() {
        for spec in ["torus:1", "torus:2", "sphere2", "su2"] {
            let sp = Space::parse(spec).unwrap();
            for os in [1, 2, 4] {
                let q = sp.quadrature(5, os);
                let total: f64 = q.weights().iter().sum();
                assert!(
                    (total - 1.0).abs() <= 1e-12,
                    "{spec} os={os}: total weight {total}"
                );
                assert!(q.weights().iter().all(|&w| w > 0.0));
            }
        }
    }

    #[test]
    fn block_rejects_forbidden_rows() {
        let mut b = Block::zeros(5, 1);
        assert!(b.set(0, 3, Complex64::new(1.0, 0.0)).is_ok());
        assert!(matches!(
            b.set(2, 0, Complex64::new(1.0, 0.0)),
            Err(SpaceError::InadmissibleEntry { .. })
        ));
    }

    #[test]
    fn random_bandlimited_is_deterministic() {
        let sp = Space::Sphere2;
        let a = random_bandlimited(&sp, 4, 42, SpectralProfile::Flat);
        let b = random_bandlimited(&sp, 4, 42, SpectralProfile::Flat);
        assert_eq!(a.max_abs_diff(&b), 0.0);
        let c = random_bandlimited(&sp, 4, 43, SpectralProfile::Flat);
        assert!(a.max_abs_diff(&c) > 0.0);
    }

    #[test]
    fn random_bandlimited_at_band_zero_is_constant() {
        let sp = Space::parse("torus:1").unwrap();
        let sigma = random_bandlimited(&sp, 0, 7, SpectralProfile::Flat);
        assert_eq!(sigma.support_len(), 1);
        let q = sp.quadrature(0, 2);
        let f = synthesize(&sigma, &q);
        let first = f.values[0];
        assert!(f.values.iter().all(|v| (v - first).norm() < 1e-14));
    }

    #[test]
    fn decay_profile_shrinks_high_degrees() {
        let sp = Space::Sphere2;
        let mut mean_low = 0.0;
        let mut mean_high = 0.0;
        for seed in 0..100 {
            let sigma = random_bandlimited(&sp, 8, seed, SpectralProfile::Decay(2.0));
            mean_low += sigma.get(&RepLabel::Sphere(1)).unwrap().hs_norm();
            mean_high += sigma.get(&RepLabel::Sphere(8)).unwrap().hs_norm();
        }
        assert!(
            mean_low / 100.0 > 2.0 * mean_high / 100.0,
            "decay profile should damp high spins: low {mean_low}, high {mean_high}"
        );
    }

    #[test]
    fn coefficients_json_roundtrip() {
        let sp = Space::Su2;
        let sigma = random_bandlimited(&sp, 2, 5, SpectralProfile::Decay(1.0));
        let json = serde_json::to_string(&sigma).unwrap();
        let back: SpectralCoefficients = serde_json::from_str(&json).unwrap();
        assert!(sigma.max_abs_diff(&back) == 0.0);
        assert!(json.contains("\"L\""));
        assert!(json.contains("entries_re_im"));
    }
}
