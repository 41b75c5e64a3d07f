//! Exponentiation of superoperator matrices into affine dynamical maps.
//!
//! A superoperator matrix `(Lambda, ell)` generates the coordinate flow
//! `xdot = Lambda x + ell/d`, whose solution is the affine map
//! `x_t = M_t x_0 + c_t` with `M_t = exp(t Lambda)` and
//! `c_t = (exp(t Lambda) - I) Lambda^{-1} (ell/d)`, falling back to the
//! integral series when `Lambda` is singular. Homogeneous coordinates
//! `(1, x)` turn the affine maps into plain matrices that compose by
//! multiplication.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::bloch::{BlochVector, CMatrix};
use crate::error::{Error, Result};
use crate::lindblad::{normality_defect, SuperopMatrix};

/// Affine map on Bloch coordinates, `x -> M x + c`.
#[derive(Debug, Clone)]
pub struct DynamicalMatrix {
    /// Hilbert space dimension `d`; the map acts on length `d^2 - 1`.
    pub dim: usize,
    /// Time at which a semigroup was evaluated; `None` for maps that do
    /// not come from a semigroup, such as a channel's affine form.
    pub t: Option<f64>,
    pub m: DMatrix<f64>,
    pub c: DVector<f64>,
}

impl DynamicalMatrix {
    pub fn new(dim: usize, t: Option<f64>, m: DMatrix<f64>, c: DVector<f64>) -> Result<Self> {
        let n = dim * dim - 1;
        if m.nrows() != n || m.ncols() != n || c.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n} matrix and length-{n} vector for d = {dim}"
            )));
        }
        Ok(Self { dim, t, m, c })
    }

    pub fn identity(dim: usize) -> Self {
        let n = dim * dim - 1;
        Self {
            dim,
            t: Some(0.0),
            m: DMatrix::identity(n, n),
            c: DVector::zeros(n),
        }
    }

    /// Largest singular value of the linear part.
    pub fn max_singular_value(&self) -> f64 {
        operator_norm(&self.m)
    }
}

/// Largest singular value, computed as the root of the largest
/// eigenvalue of `M M^T`. The symmetric eigensolver stays accurate on
/// the tightly clustered singular values that rotation planes produce,
/// where the bidiagonalization SVD can misconverge.
pub fn operator_norm(m: &DMatrix<f64>) -> f64 {
    let gram = m * m.transpose();
    let eig = nalgebra::SymmetricEigen::new((&gram + gram.transpose()) * 0.5);
    eig.eigenvalues
        .iter()
        .map(|mu| mu.max(0.0).sqrt())
        .fold(0.0, f64::max)
}

/// Affine map packed into a single `d^2 x d^2` matrix acting on `(1, x)`.
#[derive(Debug, Clone)]
pub struct HomogeneousMatrix {
    pub dim: usize,
    pub h: DMatrix<f64>,
}

impl HomogeneousMatrix {
    /// Applies the map to bare coordinates via the `(1, x)` embedding.
    pub fn apply_to(&self, x: &DVector<f64>) -> Result<DVector<f64>> {
        let n = self.dim * self.dim - 1;
        if x.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected length-{n} coordinates, got {}",
                x.len()
            )));
        }
        let mut embedded = DVector::zeros(n + 1);
        embedded[0] = 1.0;
        embedded.rows_mut(1, n).copy_from(x);
        let out = &self.h * embedded;
        Ok(out.rows(1, n).into_owned())
    }

    /// Splits the block layout back into the affine form.
    pub fn affine(&self) -> DynamicalMatrix {
        let n = self.dim * self.dim - 1;
        DynamicalMatrix {
            dim: self.dim,
            t: None,
            m: self.h.view((1, 1), (n, n)).into_owned(),
            c: self.h.view((1, 0), (n, 1)).column(0).into_owned(),
        }
    }
}

/// `exp(t A)`, choosing between an eigendecomposition split for normal
/// matrices and Pade scaling-and-squaring otherwise.
pub fn matrix_exponential(a: &DMatrix<f64>, t: f64) -> DMatrix<f64> {
    if normality_defect(a) < 1e-10 {
        if let Ok(m) = exp_normal_split(a, t) {
            return m;
        }
    }
    (a * t).exp()
}

/// `exp(t A)` for a normal matrix, by exponentiating the symmetric and
/// antisymmetric parts separately (they commute exactly when `A` is
/// normal). The antisymmetric factor comes from the Hermitian
/// eigendecomposition of `iB`.
pub fn exp_normal_split(a: &DMatrix<f64>, t: f64) -> Result<DMatrix<f64>> {
    let defect = normality_defect(a);
    if defect > 1e-8 {
        return Err(Error::NotNormal {
            defect,
            tol: 1e-8,
        });
    }
    let sym = (a + a.transpose()) * 0.5;
    let anti = (a - a.transpose()) * 0.5;

    let eig = SymmetricEigen::new(sym);
    let exp_sym = &eig.eigenvectors
        * DMatrix::from_diagonal(&eig.eigenvalues.map(|x| (t * x).exp()))
        * eig.eigenvectors.transpose();

    let herm = anti.map(|x| Complex64::new(0.0, x));
    let ceig = SymmetricEigen::new(herm);
    let phases = ceig.eigenvalues.map(|theta| Complex64::from_polar(1.0, -t * theta));
    let w = &ceig.eigenvectors;
    let exp_anti_c: CMatrix = w * CMatrix::from_diagonal(&phases) * w.adjoint();
    let residue = exp_anti_c.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residue > 1e-9 {
        return Err(Error::ImaginaryResidue {
            context: "rotation factor of the exponential",
            residue,
        });
    }
    Ok(exp_sym * exp_anti_c.map(|z| z.re))
}

/// The affine map at time `t` generated by `sup`.
pub fn dynamical_matrix(sup: &SuperopMatrix, t: f64) -> Result<DynamicalMatrix> {
    if t < 0.0 {
        return Err(Error::OutOfRange(format!("time must be >= 0, got {t}")));
    }
    let m = matrix_exponential(&sup.lambda, t);
    let c = translation_vector(sup, t)?;
    DynamicalMatrix::new(sup.dim, Some(t), m, c)
}

/// The accumulated translation `c_t` of the affine flow.
///
/// Uses `(exp(t Lambda) - I) Lambda^{-1} v` with `v = ell/d` when the
/// smallest singular value of `Lambda` exceeds `1e-10`, and otherwise
/// the series `sum_n t^{n+1}/(n+1)! Lambda^n v`, truncated once a term
/// drops below `1e-15` in norm.
pub fn translation_vector(sup: &SuperopMatrix, t: f64) -> Result<DVector<f64>> {
    if t < 0.0 {
        return Err(Error::OutOfRange(format!("time must be >= 0, got {t}")));
    }
    let v = sup.translation_rate();
    let n = v.len();
    if v.norm() == 0.0 {
        return Ok(DVector::zeros(n));
    }
    let smallest = sup
        .lambda
        .singular_values()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    if smallest > 1e-10 {
        let inv = sup
            .lambda
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Numerical("inversion failed despite nonzero spectrum".into()))?;
        let m = matrix_exponential(&sup.lambda, t);
        Ok((m - DMatrix::identity(n, n)) * inv * v)
    } else {
        Ok(translation_series(&sup.lambda, &v, t))
    }
}

fn translation_series(lambda: &DMatrix<f64>, v: &DVector<f64>, t: f64) -> DVector<f64> {
    let mut total = DVector::zeros(v.len());
    let mut term = v * t;
    for n in 1..=500 {
        total += &term;
        term = lambda * term * (t / (n as f64 + 1.0));
        if term.norm() < 1e-15 {
            break;
        }
    }
    total
}

/// Applies the affine map to a Bloch vector.
pub fn evolve(dm: &DynamicalMatrix, x0: &BlochVector) -> Result<BlochVector> {
    if x0.dim != dm.dim {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} does not match map dimension {}",
            x0.dim, dm.dim
        )));
    }
    BlochVector::new(dm.dim, &dm.m * &x0.coords + &dm.c)
}

/// Evolves one initial vector over a time grid; grid points are
/// independent and evaluated in parallel, output order follows `times`.
pub fn evolve_trajectory(
    sup: &SuperopMatrix,
    x0: &BlochVector,
    times: &[f64],
) -> Result<Vec<BlochVector>> {
    times
        .par_iter()
        .map(|&t| evolve(&dynamical_matrix(sup, t)?, x0))
        .collect()
}

/// Packs an affine map into homogeneous block form: first row
/// `(1, 0, ..., 0)`, translation in the first column tail, linear part
/// in the lower-right block.
pub fn homogeneous_matrix(dm: &DynamicalMatrix) -> HomogeneousMatrix {
    let n = dm.dim * dm.dim - 1;
    let mut h = DMatrix::zeros(n + 1, n + 1);
    h[(0, 0)] = 1.0;
    h.view_mut((1, 0), (n, 1)).copy_from(&dm.c);
    h.view_mut((1, 1), (n, n)).copy_from(&dm.m);
    HomogeneousMatrix { dim: dm.dim, h }
}

/// The generator in homogeneous coordinates: `d/dt (1, x) = G (1, x)`
/// with zero first row, `ell/d` in the first column tail, and `Lambda`
/// in the lower-right block.
pub fn homogeneous_generator(sup: &SuperopMatrix) -> DMatrix<f64> {
    let n = sup.lambda.nrows();
    let mut g = DMatrix::zeros(n + 1, n + 1);
    g.view_mut((1, 0), (n, 1)).copy_from(&sup.translation_rate());
    g.view_mut((1, 1), (n, n)).copy_from(&sup.lambda);
    g
}

/// Nullity of the homogeneous generator; singular values below `1e-10`
/// count as zero. One-dimensional kernels signal relaxation to a unique
/// stationary state.
pub fn homogeneous_kernel_dimension(sup: &SuperopMatrix) -> usize {
    let g = homogeneous_generator(sup);
    let n = g.nrows();
    let rank = g.singular_values().iter().filter(|&&s| s >= 1e-10).count();
    n - rank
}

/// Combined deviation from the composition law `M_{t+s} = M_t M_s`
/// (Frobenius norm on the linear parts, Euclidean norm on the composed
/// translations; the larger of the two is returned).
pub fn semigroup_defect(sup: &SuperopMatrix, t: f64, s: f64) -> Result<f64> {
    let dm_t = dynamical_matrix(sup, t)?;
    let dm_s = dynamical_matrix(sup, s)?;
    let dm_ts = dynamical_matrix(sup, t + s)?;
    let matrix_defect = (&dm_ts.m - &dm_t.m * &dm_s.m).norm();
    let translation_defect = (&dm_ts.c - (&dm_t.m * &dm_s.c + &dm_t.c)).norm();
    Ok(matrix_defect.max(translation_defect))
}
