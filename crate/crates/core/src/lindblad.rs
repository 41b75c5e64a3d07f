//! Lindblad generators and their real superoperator matrices.
//!
//! A generator is specified by a Hamiltonian `H` and jump operators
//! `h_k`, acting on states as
//!
//! ```text
//! L(rho) = -i[H, rho] + (1/2) sum_k ( h_k rho h_k' - (1/2){A_k, rho} )
//! ```
//!
//! where `h'` denotes the adjoint and the anticommutator operator `A_k`
//! depends on the convention: `A_k = h_k h_k'` ([`Convention::Paper`]) or
//! `A_k = h_k' h_k` ([`Convention::Standard`]). The two coincide whenever
//! every jump is normal, and in particular for Hermitian jumps. They are
//! dual otherwise: the `Paper` form always annihilates the identity (so
//! it is automatically unital) but only preserves the trace when
//! `sum_k [h_k', h_k] = 0`, while the `Standard` form always preserves
//! the trace but need not be unital.
//!
//! Projecting `L` onto an orthonormal Hermitian basis gives the real
//! matrix `Lambda[a][b] = Tr(f_a L(f_b))` on traceless coordinates and
//! the translation generator `ell[a] = Tr(L(I) f_a)`; trace-one states
//! then follow the affine flow `xdot = Lambda x + ell/d`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bloch::{hermiticity_defect, CMatrix, HermitianBasis, HERMITICITY_TOL};
use crate::error::{Error, Result};

/// Placement of the adjoint in the dissipator's anticommutator term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Anticommutator built from `h h'` (gain and loss share `h rho h'`
    /// but the loss operator is `h h'`). Annihilates the identity.
    #[default]
    Paper,
    /// Anticommutator built from `h' h`; the usual trace-preserving form.
    Standard,
}

/// Hamiltonian plus jump operators.
#[derive(Debug, Clone)]
pub struct LindbladGenerator {
    dim: usize,
    hamiltonian: CMatrix,
    jumps: Vec<CMatrix>,
    convention: Convention,
}

impl LindbladGenerator {
    /// A generator with the default (paper) dissipator convention.
    pub fn new(hamiltonian: CMatrix, jumps: Vec<CMatrix>) -> Result<Self> {
        let d = hamiltonian.nrows();
        if d < 2 || hamiltonian.ncols() != d {
            return Err(Error::InvalidDimension(format!(
                "hamiltonian must be square with d >= 2, got {}x{}",
                hamiltonian.nrows(),
                hamiltonian.ncols()
            )));
        }
        let defect = hermiticity_defect(&hamiltonian);
        if defect > HERMITICITY_TOL {
            return Err(Error::NotHermitian { defect });
        }
        for (k, h) in jumps.iter().enumerate() {
            if h.nrows() != d || h.ncols() != d {
                return Err(Error::DimensionMismatch(format!(
                    "jump operator {k} is {}x{}, expected {d}x{d}",
                    h.nrows(),
                    h.ncols()
                )));
            }
        }
        Ok(Self {
            dim: d,
            hamiltonian,
            jumps,
            convention: Convention::Paper,
        })
    }

    /// Same generator with the given dissipator convention.
    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    /// Pure qubit dephasing: no Hamiltonian, single jump `sqrt(gamma) sigma_z`.
    pub fn pure_dephasing(gamma: f64) -> Result<Self> {
        if gamma < 0.0 {
            return Err(Error::OutOfRange(format!("rate must be >= 0, got {gamma}")));
        }
        let s = gamma.sqrt();
        let sz = CMatrix::from_diagonal(&DVector::from_vec(vec![
            Complex64::new(s, 0.0),
            Complex64::new(-s, 0.0),
        ]));
        Self::new(CMatrix::zeros(2, 2), vec![sz])
    }

    /// Isotropic unital generator in dimension `d`: every Bloch coordinate
    /// decays at rate `gamma`, so the superoperator matrix is `-gamma I`.
    ///
    /// Built from the full traceless basis as jumps `sqrt(2 gamma / d) f_a`,
    /// using the completeness relation `sum_a f_a X f_a = Tr(X) I - X/d`
    /// over the traceless elements.
    pub fn isotropic(dim: usize, gamma: f64) -> Result<Self> {
        if gamma < 0.0 {
            return Err(Error::OutOfRange(format!("rate must be >= 0, got {gamma}")));
        }
        let basis = HermitianBasis::new(dim)?;
        let scale = Complex64::new((2.0 * gamma / dim as f64).sqrt(), 0.0);
        let jumps = basis
            .traceless_elements()
            .iter()
            .map(|f| f * scale)
            .collect();
        Self::new(CMatrix::zeros(dim, dim), jumps)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hamiltonian(&self) -> &CMatrix {
        &self.hamiltonian
    }

    pub fn jumps(&self) -> &[CMatrix] {
        &self.jumps
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Applies the generator to a matrix.
    pub fn apply(&self, rho: &CMatrix) -> Result<CMatrix> {
        let d = self.dim;
        if rho.nrows() != d || rho.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "state is {}x{}, generator dimension is {d}",
                rho.nrows(),
                rho.ncols()
            )));
        }
        let i = Complex64::new(0.0, 1.0);
        let h = &self.hamiltonian;
        let mut out = (h * rho - rho * h) * (-i);
        let half = Complex64::new(0.5, 0.0);
        let quarter = Complex64::new(0.25, 0.0);
        for j in &self.jumps {
            let jd = j.adjoint();
            let gain = j * rho * &jd;
            let loss_op = match self.convention {
                Convention::Paper => j * &jd,
                Convention::Standard => &jd * j,
            };
            out += gain * half - (&loss_op * rho + rho * &loss_op) * quarter;
        }
        Ok(out)
    }

    /// Projects the generator onto Bloch coordinates.
    pub fn superop(&self, basis: &HermitianBasis) -> Result<SuperopMatrix> {
        let d = self.dim;
        if basis.dim() != d {
            return Err(Error::DimensionMismatch(format!(
                "basis dimension {} does not match generator dimension {d}",
                basis.dim()
            )));
        }
        let n = basis.bloch_dim();
        let mut lambda = DMatrix::zeros(n, n);
        for (b, fb) in basis.traceless_elements().iter().enumerate() {
            let lfb = self.apply(fb)?;
            for (a, fa) in basis.traceless_elements().iter().enumerate() {
                lambda[(a, b)] = real_trace_product(fa, &lfb, "superoperator entry")?;
            }
        }
        let l_id = self.apply(&CMatrix::identity(d, d))?;
        let mut ell = DVector::zeros(n);
        for (a, fa) in basis.traceless_elements().iter().enumerate() {
            ell[a] = real_trace_product(&l_id, fa, "translation generator entry")?;
        }
        Ok(SuperopMatrix {
            dim: d,
            lambda,
            ell,
        })
    }

    /// Whether the generator annihilates the identity, with the max-entry
    /// norm of `L(I)` as the measured defect.
    pub fn is_unital(&self) -> (bool, f64) {
        let id = CMatrix::identity(self.dim, self.dim);
        let l_id = self.apply(&id).expect("dimension fixed by construction");
        let defect = l_id.iter().map(|z| z.norm()).fold(0.0, f64::max);
        (defect < 1e-10, defect)
    }

    /// The full `d^2 x d^2` complex matrix of the generator acting on
    /// column-stacked matrices, so that `unvec(S vec(rho)) = L(rho)`.
    pub fn full_superoperator(&self) -> CMatrix {
        let d = self.dim;
        let id = CMatrix::identity(d, d);
        let i = Complex64::new(0.0, 1.0);
        let h = &self.hamiltonian;
        let mut s = (id.kronecker(h) - h.transpose().kronecker(&id)) * (-i);
        let half = Complex64::new(0.5, 0.0);
        let quarter = Complex64::new(0.25, 0.0);
        for j in &self.jumps {
            let jd = j.adjoint();
            let gain = j.conjugate().kronecker(j);
            let loss_op = match self.convention {
                Convention::Paper => j * &jd,
                Convention::Standard => &jd * j,
            };
            let loss = id.kronecker(&loss_op) + loss_op.transpose().kronecker(&id);
            s += gain * half - loss * quarter;
        }
        s
    }

    /// Complete-positivity check for the map `exp(t L)`.
    ///
    /// Exponentiates the full superoperator, assembles the Choi matrix
    /// `sum_ij E_ij (x) Phi(E_ij)` (so the identity map gives `d` times
    /// the maximally entangled projector), and reports its minimum
    /// eigenvalue. The map passes when that eigenvalue is at least
    /// `-1e-8`; the loose floor absorbs error accumulated through the
    /// exponentiation.
    pub fn is_completely_positive_at(&self, t: f64) -> Result<(bool, f64)> {
        if t < 0.0 {
            return Err(Error::OutOfRange(format!("time must be >= 0, got {t}")));
        }
        let d = self.dim;
        let propagator = (self.full_superoperator() * Complex64::new(t, 0.0)).exp();
        let choi = choi_matrix(d, |e| unvec(&(&propagator * vec_cols(e)), d));
        let min_eig = min_hermitian_eigenvalue(&choi)?;
        Ok((min_eig >= -1e-8, min_eig))
    }
}

/// Real superoperator matrix plus translation generator.
#[derive(Debug, Clone)]
pub struct SuperopMatrix {
    /// Hilbert space dimension `d` (coordinates have length `d^2 - 1`).
    pub dim: usize,
    /// Action on traceless coordinates, `(d^2-1) x (d^2-1)`.
    pub lambda: DMatrix<f64>,
    /// Translation generator entries `Tr(L(I) f_a)`.
    pub ell: DVector<f64>,
}

impl SuperopMatrix {
    /// Wraps an explicitly given matrix and translation generator.
    pub fn from_parts(dim: usize, lambda: DMatrix<f64>, ell: DVector<f64>) -> Result<Self> {
        let n = dim * dim - 1;
        if lambda.nrows() != n || lambda.ncols() != n || ell.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n} matrix and length-{n} vector for d = {dim}"
            )));
        }
        Ok(Self { dim, lambda, ell })
    }

    /// A unital superoperator matrix (zero translation generator).
    pub fn unital(dim: usize, lambda: DMatrix<f64>) -> Result<Self> {
        let n = dim * dim - 1;
        Self::from_parts(dim, lambda, DVector::zeros(n))
    }

    /// The affine term of the coordinate flow `xdot = Lambda x + ell/d`.
    pub fn translation_rate(&self) -> DVector<f64> {
        &self.ell / self.dim as f64
    }

    /// Normality defect and comparison against the tolerance.
    pub fn is_normal(&self, tol: f64) -> (bool, f64) {
        let defect = normality_defect(&self.lambda);
        (defect < tol, defect)
    }
}

/// Frobenius norm of `M M^T - M^T M`.
pub fn normality_defect(m: &DMatrix<f64>) -> f64 {
    (m * m.transpose() - m.transpose() * m).norm()
}

/// Dimension of the algebra commuting with every operator in `ops`,
/// computed as the nullity of the stacked commutator system; singular
/// values below `1e-10` count as zero.
pub fn commutant_dimension(dim: usize, ops: &[CMatrix]) -> Result<usize> {
    let d2 = dim * dim;
    if ops.is_empty() {
        return Ok(d2);
    }
    let id = CMatrix::identity(dim, dim);
    let mut stacked = CMatrix::zeros(ops.len() * d2, d2);
    for (k, a) in ops.iter().enumerate() {
        if a.nrows() != dim || a.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "operator {k} is {}x{}, expected {dim}x{dim}",
                a.nrows(),
                a.ncols()
            )));
        }
        let block = id.kronecker(a) - a.transpose().kronecker(&id);
        stacked.view_mut((k * d2, 0), (d2, d2)).copy_from(&block);
    }
    let singular = stacked.singular_values();
    let rank = singular.iter().filter(|&&s| s >= 1e-10).count();
    Ok(d2 - rank)
}

/// Choi matrix `sum_ij E_ij (x) phi(E_ij)` of a map given by its action
/// on matrices. Unnormalized: dividing by `d` gives the Choi state.
pub fn choi_matrix<F>(dim: usize, phi: F) -> CMatrix
where
    F: Fn(&CMatrix) -> CMatrix,
{
    let mut choi = CMatrix::zeros(dim * dim, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut unit = CMatrix::zeros(dim, dim);
            unit[(i, j)] = Complex64::new(1.0, 0.0);
            let out = phi(&unit);
            choi.view_mut((i * dim, j * dim), (dim, dim)).copy_from(&out);
        }
    }
    choi
}

/// Minimum eigenvalue of a Hermitian matrix, after symmetrizing away
/// rounding-level asymmetry.
pub fn min_hermitian_eigenvalue(m: &CMatrix) -> Result<f64> {
    let defect = hermiticity_defect(m);
    if defect > 1e-8 {
        return Err(Error::NotHermitian { defect });
    }
    let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = nalgebra::SymmetricEigen::new(sym);
    Ok(eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min))
}

/// Column-stacks a matrix.
pub fn vec_cols(m: &CMatrix) -> DVector<Complex64> {
    DVector::from_column_slice(m.as_slice())
}

/// Inverse of [`vec_cols`] for a `d x d` matrix.
pub fn unvec(v: &DVector<Complex64>, dim: usize) -> CMatrix {
    CMatrix::from_column_slice(dim, dim, v.as_slice())
}

fn real_trace_product(a: &CMatrix, b: &CMatrix, context: &'static str) -> Result<f64> {
    let z: Complex64 = (a * b).trace();
    if z.im.abs() > 1e-10 {
        return Err(Error::ImaginaryResidue {
            context,
            residue: z.im.abs(),
        });
    }
    Ok(z.re)
}
