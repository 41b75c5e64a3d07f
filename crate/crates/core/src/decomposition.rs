//! Polar splitting of dynamical matrices and canonical block reduction.
//!
//! Every real square matrix factors as `M = S R` with `R` orthogonal and
//! `S` symmetric positive-semidefinite. When `M` is normal the two parts
//! commute and share invariant subspaces: conjugating by a single
//! orthogonal `K` reduces `R` to planar rotation blocks and `S` to
//! isotropic scalings `e^{-lambda} I_2` on the same planes. For a
//! semigroup `M_t = exp(t Lambda)` the per-block angle and log-scaling
//! grow linearly, `theta_k(t) = omega_k t` and `lambda_k(t) = gamma_k t`,
//! which [`fit_rates`] extracts and verifies against sampled times.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::evolution::{dynamical_matrix, matrix_exponential, operator_norm};
use crate::lindblad::SuperopMatrix;

/// Orthogonal and symmetric factors of `M = S R`.
#[derive(Debug, Clone)]
pub struct PolarParts {
    /// Orthogonal factor.
    pub r: DMatrix<f64>,
    /// Symmetric positive-semidefinite factor.
    pub s: DMatrix<f64>,
    /// `||R S - S R||_F`; vanishes exactly when the source is normal.
    pub commute_defect: f64,
    /// Determinant of `R` (`+1` or `-1` up to rounding).
    pub det_r: f64,
    /// Set when the source matrix is singular, in which case `R` is one
    /// of several valid completions.
    pub singular: bool,
}

impl PolarParts {
    /// Rebuilds the source matrix as `S R`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        &self.s * &self.r
    }
}

/// One canonical subspace: a planar rotation (`dim == 2`) or an invariant
/// axis (`dim == 1`). The angle of an axis is `0` or `pi` depending on
/// whether the orthogonal part preserves or reverses it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalBlock {
    pub theta: f64,
    pub lambda: f64,
    pub dim: usize,
}

/// Block reduction of commuting polar parts by one orthogonal change of
/// basis.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// Conjugation matrix; its column order matches [`CanonicalForm::blocks`].
    pub k: DMatrix<f64>,
    /// Blocks sorted by descending `lambda`, ties by ascending `theta`,
    /// then by first occurrence.
    pub blocks: Vec<CanonicalBlock>,
    /// Whether any one-dimensional invariant axis appears (always true in
    /// odd dimension).
    pub has_fixed_block: bool,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.k.nrows()
    }

    /// The block-diagonal rotation `K^T R K` should equal.
    pub fn rotation_blocks(&self) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(self.n(), self.n());
        let mut i = 0;
        for b in &self.blocks {
            if b.dim == 2 {
                let (c, s) = (b.theta.cos(), b.theta.sin());
                out[(i, i)] = c;
                out[(i, i + 1)] = -s;
                out[(i + 1, i)] = s;
                out[(i + 1, i + 1)] = c;
            } else {
                out[(i, i)] = b.theta.cos();
            }
            i += b.dim;
        }
        out
    }

    /// The block-diagonal scaling `K^T S K` should equal.
    pub fn scaling_blocks(&self) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(self.n(), self.n());
        let mut i = 0;
        for b in &self.blocks {
            for j in 0..b.dim {
                out[(i + j, i + j)] = (-b.lambda).exp();
            }
            i += b.dim;
        }
        out
    }

    /// Log-scaling rate expanded to one entry per coordinate, in block
    /// column order.
    pub fn lambdas_per_coordinate(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n());
        for b in &self.blocks {
            for _ in 0..b.dim {
                out.push(b.lambda);
            }
        }
        out
    }
}

/// Whether all scaling rates coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Isotropy {
    Isotropic,
    Anisotropic,
}

/// Shape of the image of the Bloch ball under a qubit map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpheroidClass {
    Prolate,
    Oblate,
    Ball,
}

/// Linear-in-time rates recovered from a semigroup generator.
#[derive(Debug, Clone)]
pub struct RateFit {
    /// Orthogonal change of basis aligning every sampled map with the
    /// same block structure; columns follow the block order.
    pub k: DMatrix<f64>,
    /// Scaling rates expanded per coordinate (length `n`), in block order.
    pub gammas: Vec<f64>,
    /// Rotation rates per block (`0` for one-dimensional blocks).
    pub omegas: Vec<f64>,
    /// Subspace dimension per block; pairs entries of
    /// [`RateFit::omegas`] with runs inside [`RateFit::gammas`].
    pub block_dims: Vec<usize>,
    /// Largest deviation of sampled `lambda_k(t)` from `gamma_k t` and of
    /// `theta_k(t)` from `omega_k t` modulo `2 pi`.
    pub residual: f64,
}

impl RateFit {
    /// One scaling rate per block.
    pub fn gammas_per_block(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.block_dims.len());
        let mut i = 0;
        for &d in &self.block_dims {
            out.push(self.gammas[i]);
            i += d;
        }
        out
    }
}

/// Commuting marginal factors of a normal unital semigroup at one time.
#[derive(Debug, Clone)]
pub struct TwoParameterSplit {
    /// Orthogonal marginal; a semigroup in `t` on its own.
    pub rotation: DMatrix<f64>,
    /// Symmetric marginal; a semigroup in the reparameterized time `s`.
    pub scaling: DMatrix<f64>,
    /// Value of the scaling parameter (the identity reparameterization
    /// `s = t`).
    pub s: f64,
}

/// Singular values, Gram eigenvectors, and the scaling factor
/// `sqrt(M M^T)`, all through the symmetric eigensolver: the
/// bidiagonalization SVD loses accuracy on the tightly clustered
/// singular values that rotation planes produce, while the symmetric
/// route keeps them to machine precision.
fn gram_scaling(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>, DMatrix<f64>) {
    let gram = m * m.transpose();
    let eig = SymmetricEigen::new((&gram + gram.transpose()) * 0.5);
    let sigmas: Vec<f64> = eig.eigenvalues.iter().map(|mu| mu.max(0.0).sqrt()).collect();
    let w = eig.eigenvectors;
    let s_raw = &w * DMatrix::from_diagonal(&DVector::from_vec(sigmas.clone())) * w.transpose();
    let s = (&s_raw + s_raw.transpose()) * 0.5;
    (sigmas, w, s)
}

/// Splits `M = S R` with `S = sqrt(M M^T)` symmetric positive
/// semidefinite and `R` orthogonal.
///
/// `R` comes from the scaled Newton iteration
/// `X <- (g X + g^{-1} X^{-T})/2` started at `M` itself, which stays
/// backward stable on badly conditioned input; `S` is then recovered as
/// `sym(M R^T)`, so the product reconstructs `M` to machine precision.
/// A singular `M` falls back to the SVD factor `U V^T` and the Gram
/// square root, since `R` is genuinely ambiguous on the null
/// directions.
pub fn polar(m: &DMatrix<f64>) -> Result<PolarParts> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "polar factorization needs a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let n = m.nrows();
    let (sigmas, _, gram_s) = gram_scaling(m);
    let sigma_min = sigmas.iter().cloned().fold(f64::INFINITY, f64::min);
    let singular = sigma_min <= 1e-12;

    let (r, s) = if singular {
        let svd = m.clone().svd(true, true);
        let u = svd.u.as_ref().ok_or_else(|| {
            Error::Numerical("singular value decomposition returned no U".into())
        })?;
        let v_t = svd.v_t.as_ref().ok_or_else(|| {
            Error::Numerical("singular value decomposition returned no V^T".into())
        })?;
        (u * v_t, gram_s)
    } else {
        let floor = 1e-14 + 1e-15 * n as f64;
        let mut x = m.clone();
        let mut prev = f64::INFINITY;
        for _ in 0..60 {
            let defect = (x.transpose() * &x - DMatrix::identity(n, n)).norm();
            if defect < floor || (defect < 1e-10 && defect >= 0.5 * prev) {
                break;
            }
            prev = defect;
            let inv_t = x.transpose().try_inverse().ok_or_else(|| {
                Error::Numerical("orthogonal polish hit a non-invertible iterate".into())
            })?;
            let g = if defect > 1e-2 {
                (inv_t.norm() / x.norm()).sqrt()
            } else {
                1.0
            };
            x = (&x * g + inv_t / g) * 0.5;
        }
        let s_raw = m * x.transpose();
        let s = (&s_raw + s_raw.transpose()) * 0.5;
        (x, s)
    };

    let commute_defect = (&r * &s - &s * &r).norm();
    let det_r = r.determinant();
    Ok(PolarParts {
        r,
        s,
        commute_defect,
        det_r,
        singular,
    })
}

fn block_order(a: &CanonicalBlock, b: &CanonicalBlock) -> Ordering {
    match b.lambda.partial_cmp(&a.lambda) {
        Some(Ordering::Equal) | None => a
            .theta
            .partial_cmp(&b.theta)
            .unwrap_or(Ordering::Equal),
        Some(o) => o,
    }
}

struct RawBlock {
    theta: f64,
    lambda: f64,
    cols: Vec<DVector<f64>>,
}

/// Groups sorted values into runs separated by gaps larger than `tol`;
/// returns half-open index ranges.
fn cluster_ranges(values: &[f64], tol: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || (values[i] - values[i - 1]).abs() > tol {
            out.push((start, i));
            start = i;
        }
    }
    out
}

fn log_scaling(sigma: f64) -> f64 {
    if sigma > 0.0 {
        -sigma.ln()
    } else {
        f64::INFINITY
    }
}

/// Reduces commuting polar parts to canonical blocks.
///
/// The scaling eigenspaces are split first, so coincident rotation
/// angles on subspaces with different scalings stay separated. Within
/// one scaling eigenspace the restricted rotation is decomposed into
/// planes through its symmetric part; each plane's basis is oriented so
/// the lower-left entry of the rotation block is `+sin theta`, putting
/// every angle in `[0, pi]`. Identity (and point-reflection) rotations
/// leave bare axes, which are re-paired two at a time within their
/// scaling eigenspace; leftovers become one-dimensional blocks.
pub fn canonical_form(parts: &PolarParts, tol: f64) -> Result<CanonicalForm> {
    let n = parts.r.nrows();
    if parts.commute_defect >= tol {
        return Err(Error::NonCommutingParts {
            defect: parts.commute_defect,
            tol,
        });
    }
    if parts.det_r < 0.0 {
        return Err(Error::OrientationReversing);
    }

    let eig = SymmetricEigen::new(parts.s.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(Ordering::Equal)
    });
    let sigmas: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors: Vec<DVector<f64>> = order
        .iter()
        .map(|&i| eig.eigenvectors.column(i).into_owned())
        .collect();
    let scale = sigmas.iter().fold(0.0_f64, |m, s| m.max(s.abs()));
    let cluster_tol = 1e-8 * (1.0 + scale);

    let mut raw: Vec<RawBlock> = Vec::new();
    for (start, end) in cluster_ranges(&sigmas, cluster_tol) {
        let m_c = end - start;
        let mean_sigma = sigmas[start..end].iter().sum::<f64>() / m_c as f64;
        let lambda = log_scaling(mean_sigma);
        let v_e = DMatrix::from_columns(&vectors[start..end]);
        let r_e = v_e.transpose() * &parts.r * &v_e;
        let c_mat = (&r_e + r_e.transpose()) * 0.5;
        let a_mat = (&r_e - r_e.transpose()) * 0.5;
        let ceig = SymmetricEigen::new(c_mat);
        let mut corder: Vec<usize> = (0..m_c).collect();
        corder.sort_by(|&a, &b| {
            ceig.eigenvalues[b]
                .partial_cmp(&ceig.eigenvalues[a])
                .unwrap_or(Ordering::Equal)
        });

        let mut accepted: Vec<DVector<f64>> = Vec::new();
        let mut axes_preserved: Vec<DVector<f64>> = Vec::new();
        let mut axes_reversed: Vec<DVector<f64>> = Vec::new();
        for idx in corder {
            let mut v = ceig.eigenvectors.column(idx).into_owned();
            for u in &accepted {
                let overlap = u.dot(&v);
                v -= u * overlap;
            }
            let norm = v.norm();
            if norm < 0.5 {
                continue;
            }
            v /= norm;
            let av = &a_mat * &v;
            let sin_theta = av.norm();
            let cos_theta = ceig.eigenvalues[idx];
            if sin_theta < 1e-7 {
                if cos_theta >= 0.0 {
                    axes_preserved.push(v.clone());
                } else {
                    axes_reversed.push(v.clone());
                }
                accepted.push(v);
            } else {
                let mut w = av / sin_theta;
                let overlap = v.dot(&w);
                w -= &v * overlap;
                for u in &accepted {
                    let overlap = u.dot(&w);
                    w -= u * overlap;
                }
                w = w.normalize();
                raw.push(RawBlock {
                    theta: sin_theta.atan2(cos_theta),
                    lambda,
                    cols: vec![&v_e * &v, &v_e * &w],
                });
                accepted.push(v);
                accepted.push(w);
            }
        }
        for (theta, axes) in [(0.0, axes_preserved), (PI, axes_reversed)] {
            let mut it = axes.into_iter();
            loop {
                match (it.next(), it.next()) {
                    (Some(a), Some(b)) => raw.push(RawBlock {
                        theta,
                        lambda,
                        cols: vec![&v_e * &a, &v_e * &b],
                    }),
                    (Some(a), None) => {
                        raw.push(RawBlock {
                            theta,
                            lambda,
                            cols: vec![&v_e * &a],
                        });
                        break;
                    }
                    _ => break,
                }
            }
        }
    }

    raw.sort_by(|x, y| {
        block_order(
            &CanonicalBlock {
                theta: x.theta,
                lambda: x.lambda,
                dim: x.cols.len(),
            },
            &CanonicalBlock {
                theta: y.theta,
                lambda: y.lambda,
                dim: y.cols.len(),
            },
        )
    });

    let mut k = DMatrix::zeros(n, n);
    let mut blocks = Vec::with_capacity(raw.len());
    let mut col = 0;
    for rb in &raw {
        for c in &rb.cols {
            k.set_column(col, c);
            col += 1;
        }
        blocks.push(CanonicalBlock {
            theta: rb.theta,
            lambda: rb.lambda,
            dim: rb.cols.len(),
        });
    }
    debug_assert_eq!(col, n);
    let has_fixed_block = blocks.iter().any(|b| b.dim == 1);
    Ok(CanonicalForm {
        k,
        blocks,
        has_fixed_block,
    })
}

/// Isotropic iff the spread of scaling rates (fixed blocks included)
/// stays below `tol`.
pub fn classify_isotropy(cf: &CanonicalForm, tol: f64) -> Isotropy {
    let lambdas: Vec<f64> = cf.blocks.iter().map(|b| b.lambda).collect();
    let max = lambdas.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = lambdas.iter().cloned().fold(f64::INFINITY, f64::min);
    if max - min < tol {
        Isotropy::Isotropic
    } else {
        Isotropy::Anisotropic
    }
}

/// Classifies the image of the qubit Bloch ball: prolate when the
/// doubly-degenerate rate exceeds the axial one, oblate in the opposite
/// case, ball when all three agree within `1e-9`.
pub fn spheroid_class(cf: &CanonicalForm) -> Result<SpheroidClass> {
    const TOL: f64 = 1e-9;
    if cf.n() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "spheroid classification needs 3 coordinates, got {}",
            cf.n()
        )));
    }
    let (lambda_plane, lambda_axis) = match cf.blocks.as_slice() {
        [a, b] if a.dim == 2 && b.dim == 1 => (a.lambda, b.lambda),
        [a, b] if a.dim == 1 && b.dim == 2 => (b.lambda, a.lambda),
        [a, b, c] => {
            // Three axes: the doubly-degenerate pair plays the plane role.
            if (a.lambda - b.lambda).abs() < TOL {
                (a.lambda, c.lambda)
            } else if (b.lambda - c.lambda).abs() < TOL {
                (b.lambda, a.lambda)
            } else if (a.lambda - c.lambda).abs() < TOL {
                (a.lambda, b.lambda)
            } else {
                return Err(Error::OutOfRange(
                    "three pairwise distinct scaling rates admit no spheroid axis".into(),
                ));
            }
        }
        _ => {
            return Err(Error::OutOfRange(format!(
                "expected one plane and one axis, got {} blocks",
                cf.blocks.len()
            )));
        }
    };
    if lambda_plane > lambda_axis + TOL {
        Ok(SpheroidClass::Prolate)
    } else if lambda_plane < lambda_axis - TOL {
        Ok(SpheroidClass::Oblate)
    } else {
        Ok(SpheroidClass::Ball)
    }
}

fn circle_distance(a: f64, b: f64) -> f64 {
    let diff = (a - b).rem_euclid(TAU);
    diff.min(TAU - diff)
}

/// Extracts per-block rates from a normal generator and measures how
/// well the sampled angles and log-scalings stay linear in time.
///
/// The conjugation `K` is built once from the generator itself: the
/// symmetric part fixes the scaling eigenspaces (eigenvalue `-gamma_k`),
/// the antisymmetric part pairs them into rotation planes with rate
/// `omega_k`, standardized so the generator block is
/// `[[-gamma, -omega], [omega, -gamma]]` with `omega >= 0`. Every
/// sampled `exp(t Lambda)` is then read in this one basis.
pub fn fit_rates(sup: &SuperopMatrix, times: &[f64], tol: f64) -> Result<RateFit> {
    if times.is_empty() {
        return Err(Error::OutOfRange("empty time sample".into()));
    }
    for pair in times.windows(2) {
        if pair[1] < pair[0] {
            return Err(Error::OutOfRange("times must be sorted ascending".into()));
        }
    }
    if times[0] <= 0.0 {
        return Err(Error::OutOfRange("times must be positive".into()));
    }
    let (normal, defect) = sup.is_normal(tol);
    if !normal {
        return Err(Error::NotNormal { defect, tol });
    }

    let n = sup.lambda.nrows();
    let sym = (&sup.lambda + sup.lambda.transpose()) * 0.5;
    let anti = (&sup.lambda - sup.lambda.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .unwrap_or(Ordering::Equal)
    });
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors: Vec<DVector<f64>> = order
        .iter()
        .map(|&i| eig.eigenvectors.column(i).into_owned())
        .collect();
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let cluster_tol = 1e-8 * (1.0 + scale);

    struct GenBlock {
        gamma: f64,
        omega: f64,
        cols: Vec<DVector<f64>>,
    }
    let mut gen_blocks: Vec<GenBlock> = Vec::new();
    for (start, end) in cluster_ranges(&values, cluster_tol) {
        let m_c = end - start;
        let gamma = -(values[start..end].iter().sum::<f64>() / m_c as f64);
        let v_e = DMatrix::from_columns(&vectors[start..end]);
        let b_e = v_e.transpose() * &anti * &v_e;
        let gram = b_e.transpose() * &b_e;
        let geig = SymmetricEigen::new(gram);
        let mut gorder: Vec<usize> = (0..m_c).collect();
        gorder.sort_by(|&a, &b| {
            geig.eigenvalues[a]
                .partial_cmp(&geig.eigenvalues[b])
                .unwrap_or(Ordering::Equal)
        });
        let mut accepted: Vec<DVector<f64>> = Vec::new();
        for idx in gorder {
            let mut v = geig.eigenvectors.column(idx).into_owned();
            for u in &accepted {
                let overlap = u.dot(&v);
                v -= u * overlap;
            }
            let norm = v.norm();
            if norm < 0.5 {
                continue;
            }
            v /= norm;
            let bv = &b_e * &v;
            let omega = bv.norm();
            if omega < 1e-7 {
                gen_blocks.push(GenBlock {
                    gamma,
                    omega: 0.0,
                    cols: vec![&v_e * &v],
                });
                accepted.push(v);
            } else {
                let mut w = bv / omega;
                let overlap = v.dot(&w);
                w -= &v * overlap;
                for u in &accepted {
                    let overlap = u.dot(&w);
                    w -= u * overlap;
                }
                w = w.normalize();
                gen_blocks.push(GenBlock {
                    gamma,
                    omega,
                    cols: vec![&v_e * &v, &v_e * &w],
                });
                accepted.push(v);
                accepted.push(w);
            }
        }
    }
    gen_blocks.sort_by(|x, y| match y.gamma.partial_cmp(&x.gamma) {
        Some(Ordering::Equal) | None => {
            x.omega.partial_cmp(&y.omega).unwrap_or(Ordering::Equal)
        }
        Some(o) => o,
    });

    let mut k = DMatrix::zeros(n, n);
    let mut col = 0;
    let mut gammas = Vec::with_capacity(n);
    let mut omegas = Vec::with_capacity(gen_blocks.len());
    let mut block_dims = Vec::with_capacity(gen_blocks.len());
    for b in &gen_blocks {
        for c in &b.cols {
            k.set_column(col, c);
            col += 1;
        }
        omegas.push(b.omega);
        block_dims.push(b.cols.len());
        for _ in 0..b.cols.len() {
            gammas.push(b.gamma);
        }
    }

    let mut residual = 0.0_f64;
    for &t in times {
        let m_t = matrix_exponential(&sup.lambda, t);
        let c = k.transpose() * &m_t * &k;
        let mut i = 0;
        for (bi, &bd) in block_dims.iter().enumerate() {
            let gamma = gammas[i];
            let omega = omegas[bi];
            if bd == 2 {
                let a = (c[(i, i)] + c[(i + 1, i + 1)]) * 0.5;
                let b = (c[(i + 1, i)] - c[(i, i + 1)]) * 0.5;
                let radius = a.hypot(b);
                let lambda_t = log_scaling(radius);
                let theta_t = b.atan2(a);
                residual = residual
                    .max((lambda_t - gamma * t).abs())
                    .max(circle_distance(theta_t, omega * t));
            } else {
                let lambda_t = log_scaling(c[(i, i)]);
                residual = residual.max((lambda_t - gamma * t).abs());
            }
            i += bd;
        }
    }

    Ok(RateFit {
        k,
        gammas,
        omegas,
        block_dims,
        residual,
    })
}


/// Splits a normal unital semigroup at time `t` into commuting
/// orthogonal and symmetric marginals, each a one-parameter semigroup in
/// its own right; the identity reparameterization `s = t` is used.
pub fn two_parameter_split(sup: &SuperopMatrix, t: f64) -> Result<TwoParameterSplit> {
    let (normal, defect) = sup.is_normal(1e-9);
    if !normal {
        return Err(Error::NotNormal { defect, tol: 1e-9 });
    }
    let ell_size = sup.ell.amax();
    if ell_size > 1e-10 {
        return Err(Error::NotUnital { defect: ell_size });
    }
    let dm = dynamical_matrix(sup, t)?;
    let parts = polar(&dm.m)?;
    let r_norm = operator_norm(&parts.r);
    let s_norm = operator_norm(&parts.s);
    let m_norm = dm.max_singular_value();
    if (r_norm - 1.0).abs() > 1e-10 || (s_norm - m_norm).abs() > 1e-10 {
        return Err(Error::Numerical(format!(
            "marginal norms drifted: |R| = {r_norm}, |S| = {s_norm}, |M| = {m_norm}"
        )));
    }
    Ok(TwoParameterSplit {
        rotation: parts.r,
        scaling: parts.s,
        s: t,
    })
}
