//! Deterministic sampling helpers for tests, examples, and experiments.
//!
//! Everything takes an explicit RNG so runs are reproducible; `seeded_rng`
//! is the conventional entry point.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bloch::CMatrix;

/// A reproducible RNG for the given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian entry.
fn gaussian_entry<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Complex `d x d` matrix with independent Gaussian entries.
pub fn complex_matrix<R: Rng>(d: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(d, d, |_, _| gaussian_entry(rng))
}

/// Real `n x n` matrix with independent Gaussian entries.
pub fn real_matrix<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.sample(StandardNormal))
}

/// Random Hermitian matrix `(G + G^dagger)/2`.
pub fn hermitian<R: Rng>(d: usize, rng: &mut R) -> CMatrix {
    let g = complex_matrix(d, rng);
    (&g + g.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Projector onto a Haar-random pure state.
pub fn pure_state<R: Rng>(d: usize, rng: &mut R) -> CMatrix {
    let mut psi: Vec<Complex64> = (0..d).map(|_| gaussian_entry(rng)).collect();
    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut psi {
        *z /= norm;
    }
    CMatrix::from_fn(d, d, |i, j| psi[i] * psi[j].conj())
}

/// Full-rank random density matrix `G G^dagger / Tr(G G^dagger)`.
pub fn density_matrix<R: Rng>(d: usize, rng: &mut R) -> CMatrix {
    let g = complex_matrix(d, rng);
    let m = &g * g.adjoint();
    let tr = m.trace();
    m / tr
}

/// Haar-distributed orthogonal matrix via sign-fixed QR.
pub fn orthogonal<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let qr = nalgebra::QR::new(real_matrix(n, rng));
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            for i in 0..n {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}

/// Haar-distributed rotation (orthogonal with determinant +1).
pub fn special_orthogonal<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let mut q = orthogonal(n, rng);
    if q.determinant() < 0.0 {
        for i in 0..n {
            q[(i, n - 1)] = -q[(i, n - 1)];
        }
    }
    q
}

/// Random real contraction: Gaussian matrix rescaled so its largest
/// singular value lands in `(0, 1]`.
pub fn contraction<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let m = real_matrix(n, rng);
    let sigma_max = m
        .clone()
        .singular_values()
        .iter()
        .cloned()
        .fold(0.0, f64::max);
    let target: f64 = rng.random_range(0.05..=1.0);
    m * (target / sigma_max)
}
