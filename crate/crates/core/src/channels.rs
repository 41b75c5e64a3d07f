//! Qubit channel gallery, Kraus-to-affine conversion, and the NMR
//! relaxation model.
//!
//! Channels act on Bloch coordinates as affine maps `x -> T x + c`. The
//! flip channels and depolarizing are unital (`c = 0`) with diagonal
//! `T`; amplitude damping shifts the ball center toward the ground
//! state, so it is packaged in homogeneous coordinates.
//!
//! The NMR model relaxes a spin with raising, lowering, and dephasing
//! jumps at rates `Gamma_plus`, `Gamma_minus`, `Gamma_z` while
//! precessing at `omega`. The decay constants `r1 = Gamma_plus +
//! Gamma_minus` (populations) and `r2 = (Gamma_plus + Gamma_minus)/2 +
//! 2 Gamma_z` (coherences) are RATES with inverse-time units, entering
//! as `e^{-r t}`; the jump operators are scaled by `sqrt 2` relative to
//! the bare projectors precisely so that these identifications hold in
//! this library's generator normalization. Lowering really carries
//! `sqrt(Gamma_minus)` even though one printed Pauli expansion of it
//! shows the raising rate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::bloch::{CMatrix, HermitianBasis};
use crate::error::{Error, Result};
use crate::evolution::{DynamicalMatrix, HomogeneousMatrix};
use crate::lindblad::{Convention, LindbladGenerator};

/// Trace-preserving channel given by Kraus operators.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    dim: usize,
    kraus: Vec<CMatrix>,
}

impl KrausChannel {
    /// Validates shapes and trace preservation (`sum K' K = I` within
    /// `1e-10`).
    pub fn new(dim: usize, kraus: Vec<CMatrix>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(format!(
                "channel dimension must be >= 2, got {dim}"
            )));
        }
        if kraus.is_empty() {
            return Err(Error::InvalidDimension("empty Kraus list".into()));
        }
        for (i, k) in kraus.iter().enumerate() {
            if k.nrows() != dim || k.ncols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "Kraus operator {i} is {}x{}, expected {dim}x{dim}",
                    k.nrows(),
                    k.ncols()
                )));
            }
        }
        let ch = Self { dim, kraus };
        let defect = ch.trace_preservation_defect();
        if defect > 1e-10 {
            return Err(Error::NotTracePreserving { defect });
        }
        Ok(ch)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    /// Max-entry norm of `sum K' K - I`.
    pub fn trace_preservation_defect(&self) -> f64 {
        let mut acc = CMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            acc += k.adjoint() * k;
        }
        acc -= CMatrix::identity(self.dim, self.dim);
        acc.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `sum_i K_i a K_i'`.
    pub fn apply(&self, a: &CMatrix) -> Result<CMatrix> {
        if a.nrows() != self.dim || a.ncols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "input is {}x{}, channel dimension is {}",
                a.nrows(),
                a.ncols(),
                self.dim
            )));
        }
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            out += k * a * k.adjoint();
        }
        Ok(out)
    }

    /// The channel applying `inner` first and then `self`, with Kraus
    /// list `{K_i L_j}`.
    pub fn compose(&self, inner: &KrausChannel) -> Result<KrausChannel> {
        if self.dim != inner.dim {
            return Err(Error::DimensionMismatch(format!(
                "composing channels of dimension {} and {}",
                self.dim, inner.dim
            )));
        }
        let mut kraus = Vec::with_capacity(self.kraus.len() * inner.kraus.len());
        for k in &self.kraus {
            for l in &inner.kraus {
                kraus.push(k * l);
            }
        }
        KrausChannel::new(self.dim, kraus)
    }
}

/// Affine Bloch representation `(T, c)` of a channel: `c` is the image
/// of the maximally mixed state and `T[a][b] = Tr(f_a Phi(f_b))`.
pub fn channel_to_affine(
    ch: &KrausChannel,
    basis: &HermitianBasis,
) -> Result<(DMatrix<f64>, DVector<f64>)> {
    if basis.dim() != ch.dim {
        return Err(Error::DimensionMismatch(format!(
            "basis dimension {} does not match channel dimension {}",
            basis.dim(),
            ch.dim
        )));
    }
    let defect = ch.trace_preservation_defect();
    if defect > 1e-10 {
        return Err(Error::NotTracePreserving { defect });
    }
    let d = ch.dim;
    let n = basis.bloch_dim();
    let mixed = CMatrix::identity(d, d) * Complex64::new(1.0 / d as f64, 0.0);
    let image = ch.apply(&mixed)?;
    let c = crate::bloch::vectorize(&image, basis)?.bloch.coords;
    let mut t = DMatrix::zeros(n, n);
    for (b, fb) in basis.traceless_elements().iter().enumerate() {
        let out = ch.apply(fb)?;
        for (a, fa) in basis.traceless_elements().iter().enumerate() {
            let z = (fa * &out).trace();
            if z.im.abs() > 1e-10 {
                return Err(Error::ImaginaryResidue {
                    context: "affine matrix entry",
                    residue: z.im.abs(),
                });
            }
            t[(a, b)] = z.re;
        }
    }
    Ok((t, c))
}

fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ZERO,
            Complex64::ONE,
            Complex64::ONE,
            Complex64::ZERO,
        ],
    )
}

fn pauli_y() -> CMatrix {
    let i = Complex64::new(0.0, 1.0);
    CMatrix::from_row_slice(2, 2, &[Complex64::ZERO, -i, i, Complex64::ZERO])
}

fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ONE,
            Complex64::ZERO,
            Complex64::ZERO,
            -Complex64::ONE,
        ],
    )
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Unital gallery channel with its diagonal Bloch matrix.
#[derive(Debug, Clone)]
pub struct GalleryChannel {
    pub channel: KrausChannel,
    /// Exact diagonal affine form (no tomography rounding).
    pub affine: DynamicalMatrix,
    /// Set when `p` sits on the boundary of the unit interval, where the
    /// channel degenerates (identity or a projection-like extreme).
    pub boundary: bool,
}

fn check_probability(p: f64) -> Result<bool> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!(
            "probability must lie in [0, 1], got {p}"
        )));
    }
    Ok(p == 0.0 || p == 1.0)
}

fn diagonal_affine(entries: [f64; 3]) -> DynamicalMatrix {
    DynamicalMatrix::new(
        2,
        None,
        DMatrix::from_diagonal(&DVector::from_vec(entries.to_vec())),
        DVector::zeros(3),
    )
    .expect("3x3 shape is fixed")
}

/// Flips the qubit with probability `p`: Kraus `{sqrt(1-p) I, sqrt(p)
/// sigma_x}`, Bloch matrix `diag(1, 1-2p, 1-2p)` (the x-axis is
/// untouched).
pub fn bit_flip(p: f64) -> Result<GalleryChannel> {
    let boundary = check_probability(p)?;
    let channel = KrausChannel::new(
        2,
        vec![
            CMatrix::identity(2, 2) * real((1.0 - p).sqrt()),
            pauli_x() * real(p.sqrt()),
        ],
    )?;
    Ok(GalleryChannel {
        channel,
        affine: diagonal_affine([1.0, 1.0 - 2.0 * p, 1.0 - 2.0 * p]),
        boundary,
    })
}

/// Applies `sigma_z` with probability `p`: Bloch matrix
/// `diag(1-2p, 1-2p, 1)` (the z-axis is invariant).
pub fn phase_flip(p: f64) -> Result<GalleryChannel> {
    let boundary = check_probability(p)?;
    let channel = KrausChannel::new(
        2,
        vec![
            CMatrix::identity(2, 2) * real((1.0 - p).sqrt()),
            pauli_z() * real(p.sqrt()),
        ],
    )?;
    Ok(GalleryChannel {
        channel,
        affine: diagonal_affine([1.0 - 2.0 * p, 1.0 - 2.0 * p, 1.0]),
        boundary,
    })
}

/// Mixes toward the center, `rho -> (1-p) rho + p I/2`: an exactly
/// isotropic scaling by `1 - p`. The Kraus realization spreads `p`
/// evenly over the three Pauli flips.
pub fn depolarizing(p: f64) -> Result<GalleryChannel> {
    let boundary = check_probability(p)?;
    let channel = KrausChannel::new(
        2,
        vec![
            CMatrix::identity(2, 2) * real((1.0 - 0.75 * p).sqrt()),
            pauli_x() * real((p / 4.0).sqrt()),
            pauli_y() * real((p / 4.0).sqrt()),
            pauli_z() * real((p / 4.0).sqrt()),
        ],
    )?;
    Ok(GalleryChannel {
        channel,
        affine: diagonal_affine([1.0 - p, 1.0 - p, 1.0 - p]),
        boundary,
    })
}

/// Amplitude damping with its homogeneous Bloch form.
#[derive(Debug, Clone)]
pub struct DampingChannel {
    pub channel: KrausChannel,
    /// Homogeneous form with `T = diag(sqrt(1-p), sqrt(1-p), 1-p)` and
    /// translation `(0, 0, p/sqrt 2)` toward the ground-state pole.
    pub homogeneous: HomogeneousMatrix,
    pub boundary: bool,
}

/// Decays the excited state with probability `p`: Kraus pair
/// `{diag(1, sqrt(1-p)), sqrt(p) |0><1|}`. Not unital, so the Bloch
/// representation carries a translation.
pub fn amplitude_damping(p: f64) -> Result<DampingChannel> {
    let boundary = check_probability(p)?;
    let keep = CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ONE,
            Complex64::ZERO,
            Complex64::ZERO,
            real((1.0 - p).sqrt()),
        ],
    );
    let decay = CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ZERO,
            real(p.sqrt()),
            Complex64::ZERO,
            Complex64::ZERO,
        ],
    );
    let channel = KrausChannel::new(2, vec![keep, decay])?;
    let root = (1.0 - p).sqrt();
    let affine = DynamicalMatrix::new(
        2,
        None,
        DMatrix::from_diagonal(&DVector::from_vec(vec![root, root, 1.0 - p])),
        DVector::from_vec(vec![0.0, 0.0, p / 2.0_f64.sqrt()]),
    )?;
    Ok(DampingChannel {
        channel,
        homogeneous: crate::evolution::homogeneous_matrix(&affine),
        boundary,
    })
}

/// Precession frequency and relaxation rates of the NMR model.
#[derive(Debug, Clone, Copy)]
pub struct NmrParams {
    pub omega: f64,
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub gamma_z: f64,
}

impl NmrParams {
    pub fn new(omega: f64, gamma_plus: f64, gamma_minus: f64, gamma_z: f64) -> Result<Self> {
        for (name, g) in [
            ("gamma_plus", gamma_plus),
            ("gamma_minus", gamma_minus),
            ("gamma_z", gamma_z),
        ] {
            if g < 0.0 {
                return Err(Error::OutOfRange(format!(
                    "{name} must be >= 0, got {g}"
                )));
            }
        }
        Ok(Self {
            omega,
            gamma_plus,
            gamma_minus,
            gamma_z,
        })
    }

    /// Population and coherence decay rates `(r1, r2)`.
    pub fn rates(&self) -> (f64, f64) {
        let r1 = self.gamma_plus + self.gamma_minus;
        let r2 = 0.5 * (self.gamma_plus + self.gamma_minus) + 2.0 * self.gamma_z;
        (r1, r2)
    }

    /// Equilibrium z Bloch coordinate `(Gamma_plus - Gamma_minus) /
    /// ((Gamma_plus + Gamma_minus) sqrt 2)`; zero in the rate-free case.
    pub fn equilibrium_z(&self) -> f64 {
        let total = self.gamma_plus + self.gamma_minus;
        if total == 0.0 {
            0.0
        } else {
            (self.gamma_plus - self.gamma_minus) / (total * 2.0_f64.sqrt())
        }
    }
}

/// The NMR generator: `H = -(omega/2) sigma_z` with raising, lowering,
/// and dephasing jumps `{sqrt(2 Gamma_plus) |0><1|, sqrt(2 Gamma_minus)
/// |1><0|, sqrt(2 Gamma_z) sigma_z}` in the trace-preserving
/// convention.
///
/// With this scaling the population transfer rates are exactly
/// `Gamma_plus` (up) and `Gamma_minus` (down), giving `r1` and `r2` of
/// [`NmrParams::rates`] as the Bloch decay constants.
pub fn nmr_generator(params: &NmrParams) -> Result<LindbladGenerator> {
    let h = pauli_z() * real(-params.omega / 2.0);
    let raising = CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ZERO,
            real((2.0 * params.gamma_plus).sqrt()),
            Complex64::ZERO,
            Complex64::ZERO,
        ],
    );
    let lowering = CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ZERO,
            Complex64::ZERO,
            real((2.0 * params.gamma_minus).sqrt()),
            Complex64::ZERO,
        ],
    );
    let dephasing = pauli_z() * real((2.0 * params.gamma_z).sqrt());
    Ok(LindbladGenerator::new(h, vec![raising, lowering, dephasing])?
        .with_convention(Convention::Standard))
}

/// Closed-form NMR map at time `t` in homogeneous coordinates
/// `(1, x, y, z)`: the xy-plane spins clockwise by `omega t` while
/// contracting by `e^{-r2 t}`, the z-axis contracts by `e^{-r1 t}` and
/// translates toward the equilibrium polarization.
pub fn nmr_matrix(params: &NmrParams, t: f64) -> Result<HomogeneousMatrix> {
    if t < 0.0 {
        return Err(Error::OutOfRange(format!("time must be >= 0, got {t}")));
    }
    let (r1, r2) = params.rates();
    let plane = (-r2 * t).exp();
    let axial = (-r1 * t).exp();
    let (cos, sin) = ((params.omega * t).cos(), (params.omega * t).sin());
    let m = DMatrix::from_row_slice(
        3,
        3,
        &[
            plane * cos,
            plane * sin,
            0.0,
            -plane * sin,
            plane * cos,
            0.0,
            0.0,
            0.0,
            axial,
        ],
    );
    let c = DVector::from_vec(vec![0.0, 0.0, params.equilibrium_z() * (1.0 - axial)]);
    let dm = DynamicalMatrix::new(2, Some(t), m, c)?;
    Ok(crate::evolution::homogeneous_matrix(&dm))
}
