//! Fourier analysis and Orlicz-space norms on concrete compact homogeneous
//! manifolds, together with a numerical harness that checks the classical
//! inequalities tying the two sides together.
//!
//! The crate is organised around four layers:
//!
//! * [`young`] — Young-function calculus: evaluation, derivatives, numerical
//!   convex conjugation, pair normalization, the Δ₂ condition and the
//!   partial order ≺ between Young functions.
//! * [`spaces`] — the three built-in homogeneous spaces (`torus:d`,
//!   `sphere2`, `su2`): class-I dual enumeration, matrix coefficients,
//!   exact quadrature for the normalized invariant measure, and Fourier
//!   analysis/synthesis between node values and spectral coefficients.
//! * [`norms`] — modulars and gauge (Luxemburg) norms on the function side,
//!   and the ℓ^p, Schatten and Orlicz sequence norms on the dual side.
//! * [`verify`] — the inequality harness: Hausdorff–Young in both the L^p
//!   and Orlicz forms, Hölder with its extremal-equality construction,
//!   dual-space embeddings, Parseval, and a ratio-supremum search.

pub mod linalg;
pub mod norms;
pub mod numerics;
pub mod spaces;
pub mod verify;
pub mod young;
