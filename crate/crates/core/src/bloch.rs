//! Orthonormal Hermitian bases and the real-vector (Bloch) representation
//! of Hermitian matrices.
//!
//! A `d`-level system is described here through an orthonormal basis
//! `{f_0 = I/sqrt(d), f_1, ..., f_{d^2-1}}` of the Hermitian `d x d`
//! matrices under the Hilbert-Schmidt inner product. Any Hermitian `a`
//! splits into its trace part and a real coordinate vector,
//!
//! ```text
//! a = (Tr a / d) I + sum_alpha x_alpha f_alpha,    x_alpha = Tr(a f_alpha),
//! ```
//!
//! and the squared coordinate norm satisfies
//! `|x|^2 = Tr(a^2) - (Tr a)^2 / d`. For a density matrix this bounds the
//! coordinates to a ball of squared radius `(d-1)/d`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex matrix type used throughout.
pub type CMatrix = DMatrix<Complex64>;

/// Tolerance for accepting a matrix as Hermitian, in max-entry norm.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Imaginary residue above this level in a coordinate is treated as a
/// caller bug rather than rounding noise.
const IMAG_RESIDUE_TOL: f64 = 1e-10;

/// Orthonormal basis of the Hermitian `d x d` matrices.
///
/// Element `0` is `I/sqrt(d)`; the remaining `d^2 - 1` elements are the
/// generalized Gell-Mann matrices scaled to unit Hilbert-Schmidt norm,
/// ordered as all symmetric pair matrices `(j < k)`, then all
/// antisymmetric pair matrices `(j < k)`, then the diagonal family. For
/// `d = 2` this is `{I, sigma_x, sigma_y, sigma_z} / sqrt(2)`.
#[derive(Debug, Clone)]
pub struct HermitianBasis {
    dim: usize,
    elements: Vec<CMatrix>,
}

impl HermitianBasis {
    /// Builds the basis for dimension `d >= 2`.
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(format!(
                "basis requires d >= 2, got {dim}"
            )));
        }
        let d = dim;
        let mut elements = Vec::with_capacity(d * d);
        let inv_sqrt_d = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
        elements.push(CMatrix::identity(d, d) * inv_sqrt_d);

        let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
        // Symmetric family: (E_jk + E_kj) / sqrt(2).
        for j in 0..d {
            for k in (j + 1)..d {
                let mut m = CMatrix::zeros(d, d);
                m[(j, k)] = Complex64::new(inv_sqrt2, 0.0);
                m[(k, j)] = Complex64::new(inv_sqrt2, 0.0);
                elements.push(m);
            }
        }
        // Antisymmetric family: -i(E_jk - E_kj) / sqrt(2).
        for j in 0..d {
            for k in (j + 1)..d {
                let mut m = CMatrix::zeros(d, d);
                m[(j, k)] = Complex64::new(0.0, -inv_sqrt2);
                m[(k, j)] = Complex64::new(0.0, inv_sqrt2);
                elements.push(m);
            }
        }
        // Diagonal family: diag(1, ..., 1, -l, 0, ..., 0) / sqrt(l(l+1)).
        for l in 1..d {
            let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
            let mut m = CMatrix::zeros(d, d);
            for j in 0..l {
                m[(j, j)] = Complex64::new(norm, 0.0);
            }
            m[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
            elements.push(m);
        }

        Ok(Self { dim, elements })
    }

    /// Hilbert space dimension `d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the coordinate space, `d^2 - 1`.
    pub fn bloch_dim(&self) -> usize {
        self.dim * self.dim - 1
    }

    /// Basis element `f_alpha` for `alpha` in `0..d^2`.
    pub fn element(&self, alpha: usize) -> &CMatrix {
        &self.elements[alpha]
    }

    /// All `d^2` elements, `f_0` first.
    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }

    /// Traceless elements `f_1, ..., f_{d^2-1}` in coordinate order.
    pub fn traceless_elements(&self) -> &[CMatrix] {
        &self.elements[1..]
    }
}

/// Real coordinates of the traceless part of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    /// Hilbert space dimension the coordinates refer to.
    pub dim: usize,
    /// Coordinates `x_alpha = Tr(a f_alpha)`, length `d^2 - 1`.
    pub coords: DVector<f64>,
}

impl BlochVector {
    /// A vector with the given coordinates.
    pub fn new(dim: usize, coords: DVector<f64>) -> Result<Self> {
        if coords.len() != dim * dim - 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates for d = {}, got {}",
                dim * dim - 1,
                dim,
                coords.len()
            )));
        }
        Ok(Self { dim, coords })
    }

    /// The origin (coordinates of any multiple of the identity).
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coords: DVector::zeros(dim * dim - 1),
        }
    }

    /// Squared Euclidean norm of the coordinates.
    pub fn norm_squared(&self) -> f64 {
        self.coords.norm_squared()
    }

    /// Squared radius of the state ball, `(d-1)/d`.
    pub fn ball_radius_squared(&self) -> f64 {
        (self.dim as f64 - 1.0) / self.dim as f64
    }
}

/// Trace plus Bloch coordinates: the full content of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianDecomp {
    pub trace: f64,
    pub bloch: BlochVector,
}

impl HermitianDecomp {
    /// Decomposition of a trace-one state with the given coordinates.
    pub fn state(bloch: BlochVector) -> Self {
        Self { trace: 1.0, bloch }
    }
}

/// Max-entry deviation of `a` from its own adjoint.
pub fn hermiticity_defect(a: &CMatrix) -> f64 {
    let adj = a.adjoint();
    (a - adj).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_hermitian(a: &CMatrix) -> Result<()> {
    let defect = hermiticity_defect(a);
    if defect > HERMITICITY_TOL {
        return Err(Error::NotHermitian { defect });
    }
    Ok(())
}

/// Projects a Hermitian matrix onto trace plus real coordinates.
///
/// Each coordinate is `Tr(a f_alpha)`; its imaginary residue must sit
/// below `1e-10` (rounding noise) and is then discarded.
pub fn vectorize(a: &CMatrix, basis: &HermitianBasis) -> Result<HermitianDecomp> {
    let d = basis.dim();
    if a.nrows() != d || a.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, basis dimension is {}",
            a.nrows(),
            a.ncols(),
            d
        )));
    }
    check_hermitian(a)?;

    let trace = a.trace();
    let mut coords = DVector::zeros(basis.bloch_dim());
    for (alpha, f) in basis.traceless_elements().iter().enumerate() {
        let z: Complex64 = (a * f).trace();
        if z.im.abs() > IMAG_RESIDUE_TOL {
            return Err(Error::ImaginaryResidue {
                context: "bloch coordinate",
                residue: z.im.abs(),
            });
        }
        coords[alpha] = z.re;
    }
    Ok(HermitianDecomp {
        trace: trace.re,
        bloch: BlochVector { dim: d, coords },
    })
}

/// Rebuilds the Hermitian matrix `(trace/d) I + sum_alpha x_alpha f_alpha`.
pub fn reconstruct(decomp: &HermitianDecomp, basis: &HermitianBasis) -> Result<CMatrix> {
    let d = basis.dim();
    if decomp.bloch.dim != d {
        return Err(Error::DimensionMismatch(format!(
            "coordinates refer to d = {}, basis dimension is {}",
            decomp.bloch.dim, d
        )));
    }
    let mut a = CMatrix::identity(d, d) * Complex64::new(decomp.trace / d as f64, 0.0);
    for (alpha, f) in basis.traceless_elements().iter().enumerate() {
        a += f * Complex64::new(decomp.bloch.coords[alpha], 0.0);
    }
    Ok(a)
}

/// Checks whether a trace-one decomposition describes a physical state.
///
/// Reconstructs the matrix and reports the minimum eigenvalue; the state
/// is accepted when that eigenvalue is at least `-1e-10`.
pub fn is_physical_state(
    decomp: &HermitianDecomp,
    basis: &HermitianBasis,
) -> Result<(bool, f64)> {
    if (decomp.trace - 1.0).abs() > 1e-10 {
        return Err(Error::NotTraceOne {
            trace: decomp.trace,
        });
    }
    let rho = reconstruct(decomp, basis)?;
    let eig = nalgebra::SymmetricEigen::new(rho);
    let min_eig = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok((min_eig >= -1e-10, min_eig))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn pauli() -> [CMatrix; 3] {
        let i = Complex64::new(0.0, 1.0);
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        [
            CMatrix::from_row_slice(2, 2, &[z, one, one, z]),
            CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
            CMatrix::from_row_slice(2, 2, &[one, z, z, -one]),
        ]
    }

    fn random_hermitian(d: usize, seed: u64) -> CMatrix {
        crate::random::hermitian(d, &mut crate::random::seeded_rng(seed))
    }

    #[test]
    fn qubit_basis_is_scaled_pauli() {
        let basis = HermitianBasis::new(2).unwrap();
        let s = 1.0 / 2.0_f64.sqrt();
        let [sx, sy, sz] = pauli();
        for (got, want) in basis.traceless_elements().iter().zip([sx, sy, sz]) {
            let diff: f64 = (got - want * Complex64::new(s, 0.0))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(diff < 1e-15);
        }
    }

    #[test]
    fn gram_matrix_is_identity_up_to_d5() {
        for d in 2..=5 {
            let basis = HermitianBasis::new(d).unwrap();
            assert_eq!(basis.elements().len(), d * d);
            for (a, fa) in basis.elements().iter().enumerate() {
                assert!(hermiticity_defect(fa) < 1e-12);
                for (b, fb) in basis.elements().iter().enumerate() {
                    let ip = (fa.adjoint() * fb).trace();
                    let want = if a == b { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(ip.re, want, epsilon = 1e-12);
                    assert_abs_diff_eq!(ip.im, 0.0, epsilon = 1e-12);
                }
            }
            // Traceless elements really are traceless.
            for f in basis.traceless_elements() {
                assert!(f.trace().norm() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_dimension_below_two() {
        assert!(HermitianBasis::new(1).is_err());
        assert!(HermitianBasis::new(0).is_err());
    }

    #[test]
    fn identity_over_two_has_zero_coordinates() {
        let basis = HermitianBasis::new(2).unwrap();
        let rho = CMatrix::identity(2, 2) * Complex64::new(0.5, 0.0);
        let dec = vectorize(&rho, &basis).unwrap();
        assert_abs_diff_eq!(dec.trace, 1.0, epsilon = 1e-14);
        assert!(dec.bloch.coords.norm() < 1e-14);
    }

    #[test]
    fn ground_state_points_up_by_inv_sqrt2() {
        let basis = HermitianBasis::new(2).unwrap();
        let mut rho = CMatrix::zeros(2, 2);
        rho[(0, 0)] = Complex64::new(1.0, 0.0);
        let dec = vectorize(&rho, &basis).unwrap();
        assert_abs_diff_eq!(dec.bloch.coords[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dec.bloch.coords[1], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dec.bloch.coords[2], 1.0 / 2.0_f64.sqrt(), epsilon = 1e-14);

        // And the reconstruction inverts it.
        let back = reconstruct(&dec, &basis).unwrap();
        let diff: f64 = (&back - &rho).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(diff < 1e-14);
    }

    #[test]
    fn pure_qubit_states_sit_on_the_sphere() {
        let mut rng = crate::random::seeded_rng(7);
        let basis = HermitianBasis::new(2).unwrap();
        for _ in 0..100 {
            let rho = crate::random::pure_state(2, &mut rng);
            let dec = vectorize(&rho, &basis).unwrap();
            assert_abs_diff_eq!(dec.bloch.norm_squared(), 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn physical_state_check_matches_known_eigenvalues() {
        let basis = HermitianBasis::new(2).unwrap();

        let origin = HermitianDecomp::state(BlochVector::zero(2));
        let (ok, min_eig) = is_physical_state(&origin, &basis).unwrap();
        assert!(ok);
        assert_abs_diff_eq!(min_eig, 0.5, epsilon = 1e-12);

        // On the sphere surface: eigenvalues {0, 1}.
        let surface = HermitianDecomp::state(
            BlochVector::new(2, DVector::from_vec(vec![0.0, 0.0, 1.0 / 2.0_f64.sqrt()]))
                .unwrap(),
        );
        let (ok, min_eig) = is_physical_state(&surface, &basis).unwrap();
        assert!(ok);
        assert_abs_diff_eq!(min_eig, 0.0, epsilon = 1e-12);

        // Unit coordinate norm overshoots the ball: min eigenvalue (1-sqrt2)/2.
        let outside = HermitianDecomp::state(
            BlochVector::new(2, DVector::from_vec(vec![0.0, 0.0, 1.0])).unwrap(),
        );
        let (ok, min_eig) = is_physical_state(&outside, &basis).unwrap();
        assert!(!ok);
        assert_abs_diff_eq!(min_eig, (1.0 - 2.0_f64.sqrt()) / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let basis = HermitianBasis::new(2).unwrap();
        let mut a = CMatrix::zeros(2, 2);
        a[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(matches!(
            vectorize(&a, &basis),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn norm_relation_holds_for_random_hermitian() {
        let mut seed = 100;
        for d in 2..=5 {
            let basis = HermitianBasis::new(d).unwrap();
            for _ in 0..50 {
                seed += 1;
                let a = random_hermitian(d, seed);
                let dec = vectorize(&a, &basis).unwrap();
                let tr = a.trace().re;
                let tr_sq = (&a * &a).trace().re;
                let want = tr_sq - tr * tr / d as f64;
                assert_abs_diff_eq!(dec.bloch.norm_squared(), want, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn completeness_roundtrip_on_random_hermitian() {
        let mut seed = 1000;
        for d in 2..=4 {
            let basis = HermitianBasis::new(d).unwrap();
            for _ in 0..100 {
                seed += 1;
                let a = random_hermitian(d, seed);
                let dec = vectorize(&a, &basis).unwrap();
                let back = reconstruct(&dec, &basis).unwrap();
                let diff: f64 = (&back - &a).iter().map(|z| z.norm()).fold(0.0, f64::max);
                assert!(diff < 1e-12, "roundtrip deviation {diff:.3e} at d = {d}");
            }
        }
    }

    proptest! {
        #[test]
        fn vectorize_is_linear(
            re in proptest::collection::vec(-1.0f64..1.0, 9),
            im in proptest::collection::vec(-1.0f64..1.0, 9),
            alpha in -2.0f64..2.0,
            beta in -2.0f64..2.0,
        ) {
            let basis = HermitianBasis::new(3).unwrap();
            let raw = CMatrix::from_fn(3, 3, |i, j| {
                Complex64::new(re[3 * i + j], im[3 * i + j])
            });
            let a = (&raw + raw.adjoint()) * Complex64::new(0.5, 0.0);
            let raw2 = CMatrix::from_fn(3, 3, |i, j| {
                Complex64::new(im[3 * i + j], -re[3 * i + j])
            });
            let b = (&raw2 + raw2.adjoint()) * Complex64::new(0.5, 0.0);

            let combo = &a * Complex64::new(alpha, 0.0) + &b * Complex64::new(beta, 0.0);
            let lhs = vectorize(&combo, &basis).unwrap();
            let da = vectorize(&a, &basis).unwrap();
            let db = vectorize(&b, &basis).unwrap();
            let rhs = &da.bloch.coords * alpha + &db.bloch.coords * beta;
            prop_assert!((lhs.bloch.coords - rhs).amax() < 1e-12);
        }
    }
}
