//! Linear, von Neumann, and relative entropies, their closed-form decay
//! laws under normal unital semigroups, and the production/exchange
//! split of an entropy change.
//!
//! In Bloch coordinates the linear entropy is a shifted squared norm,
//! `S_L = (d-1)/d - ||x||^2`, so any dynamics that scales canonical
//! subspaces by `e^{-gamma_k t}` turns it into a weighted sum of
//! exponentials. That closed form is evaluated here and cross-checked
//! against direct evolution elsewhere.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::bloch::{hermiticity_defect, BlochVector, CMatrix, HERMITICITY_TOL};
use crate::error::{Error, Result};

/// Which entropy a trace records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyKind {
    Linear,
    VonNeumann,
}

/// Entropy values sampled along a time grid.
#[derive(Debug, Clone)]
pub struct EntropyTrace {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub kind: EntropyKind,
}

impl EntropyTrace {
    pub fn new(times: Vec<f64>, values: Vec<f64>, kind: EntropyKind) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} times against {} values",
                times.len(),
                values.len()
            )));
        }
        Ok(Self {
            times,
            values,
            kind,
        })
    }

    /// Largest decrease between consecutive samples (zero for a
    /// non-decreasing trace).
    pub fn monotonicity_defect(&self) -> f64 {
        self.values
            .windows(2)
            .map(|w| w[0] - w[1])
            .fold(0.0, f64::max)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Squared coordinate weights of a state in a canonical basis, one entry
/// per coordinate in block column order; they sum to `||x||^2`.
#[derive(Debug, Clone)]
pub struct SubspaceWeights {
    pub weights: Vec<f64>,
}

impl SubspaceWeights {
    /// Weights of `x` read in the basis given by the columns of `k`.
    pub fn from_bloch_in_basis(x: &BlochVector, k: &DMatrix<f64>) -> Result<Self> {
        if k.nrows() != x.coords.len() || k.ncols() != x.coords.len() {
            return Err(Error::DimensionMismatch(format!(
                "basis is {}x{}, coordinates have length {}",
                k.nrows(),
                k.ncols(),
                x.coords.len()
            )));
        }
        let y = k.transpose() * &x.coords;
        Ok(Self {
            weights: y.iter().map(|v| v * v).collect(),
        })
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// Checks Hermiticity, unit trace (within `1e-8`), and positivity
/// (minimum eigenvalue at least `-1e-10`).
pub fn validate_density_matrix(rho: &CMatrix) -> Result<()> {
    let defect = hermiticity_defect(rho);
    if defect > HERMITICITY_TOL {
        return Err(Error::NotHermitian { defect });
    }
    let trace = rho.trace();
    if (trace.re - 1.0).abs() > 1e-8 || trace.im.abs() > 1e-8 {
        return Err(Error::NotTraceOne { trace: trace.re });
    }
    let min_eig = eigenvalues_ascending(rho)[0];
    if min_eig < -1e-10 {
        return Err(Error::NotPositive { min_eig });
    }
    Ok(())
}

fn eigenvalues_ascending(rho: &CMatrix) -> Vec<f64> {
    let sym = (rho + rho.adjoint()) * Complex64::new(0.5, 0.0);
    let mut eigs: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().cloned().collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

/// `S_L = 1 - Tr(rho^2)`.
pub fn linear_entropy(rho: &CMatrix) -> Result<f64> {
    validate_density_matrix(rho)?;
    let purity = (rho * rho).trace().re;
    Ok(1.0 - purity)
}

/// `S_L = (d-1)/d - ||x||^2` for a trace-one state with coordinates `x`.
pub fn linear_entropy_from_bloch(x: &BlochVector) -> Result<f64> {
    let cap = x.ball_radius_squared();
    let norm_sq = x.norm_squared();
    if norm_sq > cap + 1e-10 {
        return Err(Error::OutOfRange(format!(
            "squared norm {norm_sq} exceeds the state ball bound {cap}"
        )));
    }
    Ok(cap - norm_sq)
}

/// Closed-form linear entropy `(d-1)/d - sum_k w_k e^{-2 gamma_k t}` of
/// a state with canonical-subspace weights `w_k` decaying at rates
/// `gamma_k`. Rates may dip to `-1e-10`, absorbing rounding in fitted
/// values for frozen coordinates; anything lower is rejected.
pub fn predicted_linear_entropy(
    weights: &SubspaceWeights,
    gammas: &[f64],
    d: usize,
    t: f64,
) -> Result<f64> {
    if weights.weights.len() != gammas.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights against {} rates",
            weights.weights.len(),
            gammas.len()
        )));
    }
    if t < 0.0 {
        return Err(Error::OutOfRange(format!("time must be >= 0, got {t}")));
    }
    if let Some(g) = gammas.iter().find(|g| **g < -1e-10) {
        return Err(Error::OutOfRange(format!("rates must be >= 0, got {g}")));
    }
    let cap = (d as f64 - 1.0) / d as f64;
    let surviving: f64 = weights
        .weights
        .iter()
        .zip(gammas)
        .map(|(w, g)| w * (-2.0 * g * t).exp())
        .sum();
    Ok(cap - surviving)
}

/// Linear entropy along an isotropic semigroup:
/// `(d-1)/d (1 - e^{-2 gamma t}) + e^{-2 gamma t} S0`.
pub fn isotropic_entropy_curve(
    gamma: f64,
    d: usize,
    s0: f64,
    times: &[f64],
) -> Result<EntropyTrace> {
    if gamma < 0.0 {
        return Err(Error::OutOfRange(format!("rate must be >= 0, got {gamma}")));
    }
    let cap = (d as f64 - 1.0) / d as f64;
    if !(0.0..=cap).contains(&s0) {
        return Err(Error::OutOfRange(format!(
            "initial entropy {s0} outside [0, {cap}]"
        )));
    }
    let values = times
        .iter()
        .map(|&t| {
            let decay = (-2.0 * gamma * t).exp();
            cap * (1.0 - decay) + decay * s0
        })
        .collect();
    EntropyTrace::new(times.to_vec(), values, EntropyKind::Linear)
}

fn xlnx(p: f64) -> f64 {
    if p > 0.0 {
        p * p.ln()
    } else {
        0.0
    }
}

/// `S_v = -Tr(rho ln rho)` in nats; eigenvalues in `[-1e-10, 0)` are
/// clamped to zero before the logarithm.
pub fn von_neumann_entropy(rho: &CMatrix) -> Result<f64> {
    validate_density_matrix(rho)?;
    let mut total = 0.0;
    for p in eigenvalues_ascending(rho) {
        total -= xlnx(p.max(0.0));
    }
    Ok(total)
}

/// Qubit von Neumann entropy under isotropic scaling: the ball radius
/// contracts as `r(t) = r0 e^{-gamma t}` and the eigenvalues stay
/// `(1 +- r)/2`.
pub fn qubit_vn_isotropic_curve(gamma: f64, r0: f64, times: &[f64]) -> Result<EntropyTrace> {
    if gamma < 0.0 {
        return Err(Error::OutOfRange(format!("rate must be >= 0, got {gamma}")));
    }
    if !(0.0..=1.0).contains(&r0) {
        return Err(Error::OutOfRange(format!(
            "ball radius {r0} outside [0, 1]"
        )));
    }
    let values = times
        .iter()
        .map(|&t| {
            let r = r0 * (-gamma * t).exp();
            let mut s = 0.0;
            s -= xlnx((1.0 + r) / 2.0);
            s -= xlnx((1.0 - r) / 2.0);
            s
        })
        .collect();
    EntropyTrace::new(times.to_vec(), values, EntropyKind::VonNeumann)
}

struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: CMatrix,
}

fn spectrum(rho: &CMatrix) -> Spectrum {
    let sym = (rho + rho.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(sym);
    Spectrum {
        eigenvalues: eig.eigenvalues.iter().cloned().collect(),
        eigenvectors: eig.eigenvectors,
    }
}

/// Weight of `rho` on the direction `v`.
fn weight_on(rho: &CMatrix, v: &DVector<Complex64>) -> f64 {
    let image = rho * v;
    v.dotc(&image).re
}

const SUPPORT_TOL: f64 = 1e-10;
const ZERO_EIGENVALUE_TOL: f64 = 1e-12;

/// `S(rho|sigma) = Tr(rho ln rho) - Tr(rho ln sigma)`, returning
/// `f64::INFINITY` when the support of `rho` leaks outside the support
/// of `sigma`.
pub fn relative_entropy(rho: &CMatrix, sigma: &CMatrix) -> Result<f64> {
    if rho.nrows() != sigma.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "states of dimension {} and {}",
            rho.nrows(),
            sigma.nrows()
        )));
    }
    validate_density_matrix(rho)?;
    validate_density_matrix(sigma)?;
    let mut total = 0.0;
    for p in eigenvalues_ascending(rho) {
        total += xlnx(p.max(0.0));
    }
    let sig = spectrum(sigma);
    for (j, s) in sig.eigenvalues.iter().enumerate() {
        let w = weight_on(rho, &sig.eigenvectors.column(j).into_owned());
        if *s > ZERO_EIGENVALUE_TOL {
            total -= w * s.ln();
        } else if w > SUPPORT_TOL {
            return Ok(f64::INFINITY);
        }
    }
    Ok(total)
}

/// Entropy change split against a stationary state.
#[derive(Debug, Clone, Copy)]
pub struct EntropySplit {
    /// `S_v(rho_out) - S_v(rho_in)`.
    pub delta_s: f64,
    /// Production `delta_s - delta_e`; equals the drop of relative
    /// entropy to `sigma`, so it is non-negative whenever `sigma` is a
    /// fixed point of the map connecting the two states.
    pub delta_p: f64,
    /// Exchange `Tr{(rho_in - rho_out) ln sigma}`; zero when `sigma` is
    /// maximally mixed.
    pub delta_e: f64,
}

/// Splits `S_v(rho_out) - S_v(rho_in)` into production and exchange
/// relative to the stationary state `sigma`.
///
/// When `sigma` is singular the exchange picks up `ln 0` terms; each is
/// resolved as a signed infinity from the sign of the state-weight
/// difference on that null direction (weights within `1e-10` of each
/// other cancel). An indeterminate mix of opposite infinities is
/// reported as an error.
pub fn entropy_production_exchange(
    rho_in: &CMatrix,
    rho_out: &CMatrix,
    sigma: &CMatrix,
) -> Result<EntropySplit> {
    if rho_in.nrows() != rho_out.nrows() || rho_in.nrows() != sigma.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "states of dimension {}, {}, {}",
            rho_in.nrows(),
            rho_out.nrows(),
            sigma.nrows()
        )));
    }
    let delta_s = von_neumann_entropy(rho_out)? - von_neumann_entropy(rho_in)?;
    validate_density_matrix(sigma)?;

    let sig = spectrum(sigma);
    let mut finite = 0.0;
    let mut positive_div = false;
    let mut negative_div = false;
    for (j, s) in sig.eigenvalues.iter().enumerate() {
        let v = sig.eigenvectors.column(j).into_owned();
        let diff = weight_on(rho_in, &v) - weight_on(rho_out, &v);
        if *s > ZERO_EIGENVALUE_TOL {
            finite += diff * s.ln();
        } else if diff > SUPPORT_TOL {
            negative_div = true;
        } else if diff < -SUPPORT_TOL {
            positive_div = true;
        }
    }
    let delta_e = match (positive_div, negative_div) {
        (false, false) => finite,
        (true, false) => f64::INFINITY,
        (false, true) => f64::NEG_INFINITY,
        (true, true) => {
            return Err(Error::Numerical(
                "opposite divergent exchange terms on the null space of sigma".into(),
            ));
        }
    };
    Ok(EntropySplit {
        delta_s,
        delta_p: delta_s - delta_e,
        delta_e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch::{vectorize, HermitianBasis, HermitianDecomp};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn diag_state(entries: &[f64]) -> CMatrix {
        CMatrix::from_diagonal(&DVector::from_vec(
            entries.iter().map(|&p| Complex64::new(p, 0.0)).collect::<Vec<_>>(),
        ))
    }

    fn maximally_mixed(d: usize) -> CMatrix {
        CMatrix::identity(d, d) * Complex64::new(1.0 / d as f64, 0.0)
    }

    #[test]
    fn linear_entropy_fixed_values() {
        let mut rng = crate::random::seeded_rng(41);
        let pure = crate::random::pure_state(3, &mut rng);
        assert_abs_diff_eq!(linear_entropy(&pure).unwrap(), 0.0, epsilon = 1e-12);
        for d in 2..=5 {
            assert_abs_diff_eq!(
                linear_entropy(&maximally_mixed(d)).unwrap(),
                (d as f64 - 1.0) / d as f64,
                epsilon = 1e-14
            );
        }
        let basis = HermitianBasis::new(2).unwrap();
        let x = BlochVector::new(2, DVector::from_vec(vec![0.5, 0.0, 0.0])).unwrap();
        let rho = crate::bloch::reconstruct(&HermitianDecomp::state(x), &basis).unwrap();
        assert_abs_diff_eq!(linear_entropy(&rho).unwrap(), 0.25, epsilon = 1e-14);
    }

    #[test]
    fn linear_entropy_rejects_invalid_states() {
        let not_trace_one = diag_state(&[0.7, 0.7]);
        assert!(matches!(
            linear_entropy(&not_trace_one),
            Err(Error::NotTraceOne { .. })
        ));
        let negative = diag_state(&[1.2, -0.2]);
        assert!(matches!(
            linear_entropy(&negative),
            Err(Error::NotPositive { .. })
        ));
    }

    #[test]
    fn bloch_form_matches_matrix_form() {
        assert_abs_diff_eq!(
            linear_entropy_from_bloch(&BlochVector::zero(3)).unwrap(),
            2.0 / 3.0,
            epsilon = 1e-14
        );
        let pure = BlochVector::new(2, DVector::from_vec(vec![0.0, 0.0, 0.5_f64.sqrt()]))
            .unwrap();
        assert_abs_diff_eq!(linear_entropy_from_bloch(&pure).unwrap(), 0.0, epsilon = 1e-14);

        // d = 4 state with ||x||^2 = 0.3: alpha |0><0| + (1-alpha) I/4
        // has purity alpha^2 + (1-alpha^2)/4, so alpha = sqrt(0.4).
        let alpha = 0.4_f64.sqrt();
        let mut rho = maximally_mixed(4) * Complex64::new(1.0 - alpha, 0.0);
        rho[(0, 0)] += Complex64::new(alpha, 0.0);
        let basis = HermitianBasis::new(4).unwrap();
        let decomp = vectorize(&rho, &basis).unwrap();
        assert_abs_diff_eq!(decomp.bloch.norm_squared(), 0.3, epsilon = 1e-12);
        let from_bloch = linear_entropy_from_bloch(&decomp.bloch).unwrap();
        assert_abs_diff_eq!(from_bloch, 0.45, epsilon = 1e-12);
        assert_abs_diff_eq!(from_bloch, linear_entropy(&rho).unwrap(), epsilon = 1e-12);

        let outside = BlochVector::new(2, DVector::from_vec(vec![1.0, 0.0, 0.0])).unwrap();
        assert!(linear_entropy_from_bloch(&outside).is_err());
    }

    #[test]
    fn predicted_entropy_closed_forms() {
        let w = SubspaceWeights {
            weights: vec![0.2, 0.1, 0.05],
        };
        let g = vec![0.5, 0.5, 0.5];
        assert_abs_diff_eq!(
            predicted_linear_entropy(&w, &g, 2, 0.0).unwrap(),
            0.5 - w.total(),
            epsilon = 1e-14
        );
        // All rates equal and pure initial state: the fully isotropic law.
        let pure = SubspaceWeights {
            weights: vec![0.5, 0.0, 0.0],
        };
        let t = 0.8_f64;
        let gamma = 0.5_f64;
        let want = 0.5 * (1.0 - (-2.0 * gamma * t).exp());
        assert_abs_diff_eq!(
            predicted_linear_entropy(&pure, &[gamma; 3], 2, t).unwrap(),
            want,
            epsilon = 1e-14
        );
        // A single occupied subspace decays with just its own rate.
        let single = SubspaceWeights {
            weights: vec![0.0, 0.3, 0.0],
        };
        let gs = vec![0.1, 0.7, 0.2];
        assert_abs_diff_eq!(
            predicted_linear_entropy(&single, &gs, 2, t).unwrap(),
            0.5 - 0.3 * (-2.0 * 0.7 * t).exp(),
            epsilon = 1e-14
        );
        assert!(predicted_linear_entropy(&w, &[0.1], 2, 1.0).is_err());
        assert!(predicted_linear_entropy(&w, &g, 2, -1.0).is_err());
    }

    #[test]
    fn isotropic_curve_matches_figure_values() {
        let times: Vec<f64> = (0..=300).map(|k| k as f64 * 0.01).collect();
        let trace = isotropic_entropy_curve(1.0, 4, 0.0, &times).unwrap();
        for (k, &t) in times.iter().enumerate() {
            let want = 0.75 * (1.0 - (-2.0 * t).exp());
            assert_abs_diff_eq!(trace.values[k], want, epsilon = 1e-12);
        }
        let half = isotropic_entropy_curve(1.0, 4, 0.5, &[0.0]).unwrap();
        assert_abs_diff_eq!(half.values[0], 0.5, epsilon = 1e-14);
        let flat = isotropic_entropy_curve(0.0, 4, 0.3, &[0.0, 1.0, 5.0]).unwrap();
        for v in &flat.values {
            assert_abs_diff_eq!(*v, 0.3, epsilon = 1e-14);
        }
        assert!(isotropic_entropy_curve(1.0, 4, 0.8, &[0.0]).is_err());
        assert!(isotropic_entropy_curve(1.0, 4, -0.1, &[0.0]).is_err());
    }

    #[test]
    fn von_neumann_fixed_values() {
        let mut rng = crate::random::seeded_rng(42);
        let pure = crate::random::pure_state(2, &mut rng);
        assert_abs_diff_eq!(von_neumann_entropy(&pure).unwrap(), 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(
            von_neumann_entropy(&maximally_mixed(2)).unwrap(),
            2.0_f64.ln(),
            epsilon = 1e-14
        );
        for k in 1..=9 {
            let r = k as f64 * 0.1;
            let rho = diag_state(&[(1.0 + r) / 2.0, (1.0 - r) / 2.0]);
            let want = -xlnx((1.0 + r) / 2.0) - xlnx((1.0 - r) / 2.0);
            assert_abs_diff_eq!(von_neumann_entropy(&rho).unwrap(), want, epsilon = 1e-13);
        }
    }

    #[test]
    fn qubit_curve_endpoints_and_limits() {
        let curve = qubit_vn_isotropic_curve(0.5, 1.0, &[0.0, 20.0]).unwrap();
        assert_abs_diff_eq!(curve.values[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(curve.values[1], 2.0_f64.ln(), epsilon = 1e-6);
        let flat = qubit_vn_isotropic_curve(0.7, 0.0, &[0.0, 1.0]).unwrap();
        for v in &flat.values {
            assert_abs_diff_eq!(*v, 2.0_f64.ln(), epsilon = 1e-14);
        }
        assert!(qubit_vn_isotropic_curve(0.5, 1.5, &[0.0]).is_err());

        // Independent route: evolve the Bloch vector, diagonalize, sum.
        let (gamma, r0) = (0.5, 0.8);
        for &t in &[0.3_f64, 1.1, 2.4] {
            let r = r0 * (-gamma * t).exp();
            let rho = diag_state(&[(1.0 + r) / 2.0, (1.0 - r) / 2.0]);
            let direct = von_neumann_entropy(&rho).unwrap();
            let closed = qubit_vn_isotropic_curve(gamma, r0, &[t]).unwrap().values[0];
            assert_abs_diff_eq!(direct, closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn relative_entropy_identities() {
        let mut rng = crate::random::seeded_rng(43);
        for d in 2..=3 {
            let rho = crate::random::density_matrix(d, &mut rng);
            assert_abs_diff_eq!(relative_entropy(&rho, &rho).unwrap(), 0.0, epsilon = 1e-10);
            let want = (d as f64).ln() - von_neumann_entropy(&rho).unwrap();
            assert_abs_diff_eq!(
                relative_entropy(&rho, &maximally_mixed(d)).unwrap(),
                want,
                epsilon = 1e-10
            );
        }
        let pure = crate::random::pure_state(2, &mut rng);
        let sigma = crate::random::density_matrix(2, &mut rng);
        let value = relative_entropy(&pure, &sigma).unwrap();
        assert!(value.is_finite());
        assert!(value >= -1e-10);
    }

    #[test]
    fn relative_entropy_support_sentinel() {
        let ground = diag_state(&[1.0, 0.0]);
        let mixed = maximally_mixed(2);
        assert_eq!(relative_entropy(&mixed, &ground).unwrap(), f64::INFINITY);
        // Supported case stays finite.
        assert_abs_diff_eq!(
            relative_entropy(&ground, &ground).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn split_vanishes_exchange_for_maximally_mixed_reference() {
        let mut rng = crate::random::seeded_rng(44);
        for _ in 0..10 {
            let rho_in = crate::random::density_matrix(2, &mut rng);
            let rho_out = crate::random::density_matrix(2, &mut rng);
            let split =
                entropy_production_exchange(&rho_in, &rho_out, &maximally_mixed(2)).unwrap();
            assert!(split.delta_e.abs() < 1e-10);
            assert_abs_diff_eq!(split.delta_p, split.delta_s, epsilon = 1e-10);
        }
        let rho = crate::random::density_matrix(3, &mut rng);
        let split = entropy_production_exchange(&rho, &rho, &maximally_mixed(3)).unwrap();
        assert_abs_diff_eq!(split.delta_s, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(split.delta_p, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(split.delta_e, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn depolarizing_a_pure_state_produces_entropy() {
        let mut rng = crate::random::seeded_rng(45);
        let p = 0.3;
        let rho_in = crate::random::pure_state(2, &mut rng);
        let rho_out = &rho_in * Complex64::new(1.0 - p, 0.0)
            + maximally_mixed(2) * Complex64::new(p, 0.0);
        let split =
            entropy_production_exchange(&rho_in, &rho_out, &maximally_mixed(2)).unwrap();
        assert!(split.delta_p > 0.0);
        assert_abs_diff_eq!(split.delta_p, split.delta_s, epsilon = 1e-10);
    }

    #[test]
    fn damping_toward_a_pure_fixed_point_diverges_consistently() {
        // Population flows toward |0>, so the exchange dumps entropy into
        // the environment without bound while production stays the
        // dominant positive term.
        let plus = {
            let h = Complex64::new(0.5, 0.0);
            CMatrix::from_row_slice(2, 2, &[h, h, h, h])
        };
        let p = 0.4;
        let rho_out = {
            let mut out = plus.clone();
            out[(0, 0)] = Complex64::new(0.5 + 0.5 * p, 0.0);
            out[(1, 1)] = Complex64::new(0.5 - 0.5 * p, 0.0);
            let damp = Complex64::new((1.0 - p).sqrt(), 0.0);
            out[(0, 1)] *= damp;
            out[(1, 0)] *= damp;
            out
        };
        let ground = diag_state(&[1.0, 0.0]);
        let split = entropy_production_exchange(&plus, &rho_out, &ground).unwrap();
        assert_eq!(split.delta_e, f64::NEG_INFINITY);
        assert_eq!(split.delta_p, f64::INFINITY);
        assert!(split.delta_s.is_finite());

        // Regularizing the fixed point keeps everything finite and the
        // production comfortably positive.
        for eps in [1e-3, 1e-6, 1e-9] {
            let sigma = &ground * Complex64::new(1.0 - eps, 0.0)
                + maximally_mixed(2) * Complex64::new(eps, 0.0);
            let split = entropy_production_exchange(&plus, &rho_out, &sigma).unwrap();
            assert!(split.delta_p.is_finite());
            assert!(split.delta_p > -1e-8);
            assert_abs_diff_eq!(
                split.delta_s,
                split.delta_p + split.delta_e,
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn production_equals_relative_entropy_drop() {
        let mut rng = crate::random::seeded_rng(46);
        // Any full-rank sigma gives a finite consistency identity
        // delta_p = S(in|sigma) - S(out|sigma).
        for _ in 0..10 {
            let rho_in = crate::random::density_matrix(2, &mut rng);
            let rho_out = crate::random::density_matrix(2, &mut rng);
            let sigma = crate::random::density_matrix(2, &mut rng);
            let split = entropy_production_exchange(&rho_in, &rho_out, &sigma).unwrap();
            let want = relative_entropy(&rho_in, &sigma).unwrap()
                - relative_entropy(&rho_out, &sigma).unwrap();
            assert_abs_diff_eq!(split.delta_p, want, epsilon = 1e-9);
        }
    }

    #[test]
    fn traces_monotone_and_bounded_under_isotropic_decay() {
        let times: Vec<f64> = (0..200).map(|k| k as f64 * 0.05).collect();
        let trace = isotropic_entropy_curve(0.4, 3, 0.1, &times).unwrap();
        assert!(trace.monotonicity_defect() <= 1e-10);
        assert!(trace.max_value() <= 2.0 / 3.0 + 1e-12);
        // Saturation once t passes 20 / gamma.
        let late = isotropic_entropy_curve(0.4, 3, 0.1, &[20.0 / 0.4]).unwrap();
        assert_abs_diff_eq!(late.values[0], 2.0 / 3.0, epsilon = 1e-6);
    }

    #[test]
    fn both_entropies_decrease_strictly_in_radius() {
        let mut last_linear = f64::INFINITY;
        let mut last_vn = f64::INFINITY;
        for k in 1..=19 {
            let r = k as f64 * 0.05;
            let rho = diag_state(&[(1.0 + r) / 2.0, (1.0 - r) / 2.0]);
            let s_l = linear_entropy(&rho).unwrap();
            let s_v = von_neumann_entropy(&rho).unwrap();
            assert!(s_l < last_linear);
            assert!(s_v < last_vn);
            last_linear = s_l;
            last_vn = s_v;
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn matrix_and_bloch_linear_entropies_agree(seed in 0u64..10_000, d in 2usize..=4) {
            let mut rng = crate::random::seeded_rng(seed);
            let basis = HermitianBasis::new(d).unwrap();
            let rho = crate::random::density_matrix(d, &mut rng);
            let decomp = vectorize(&rho, &basis).unwrap();
            let via_matrix = linear_entropy(&rho).unwrap();
            let via_bloch = linear_entropy_from_bloch(&decomp.bloch).unwrap();
            prop_assert!((via_matrix - via_bloch).abs() < 1e-12);
        }

        #[test]
        fn relative_entropy_nonnegative(seed in 0u64..10_000) {
            let mut rng = crate::random::seeded_rng(seed.wrapping_add(90_000));
            let rho = crate::random::density_matrix(3, &mut rng);
            let sigma = crate::random::density_matrix(3, &mut rng);
            let value = relative_entropy(&rho, &sigma).unwrap();
            prop_assert!(value >= -1e-10);
        }
    }
}
