//! JSON run configuration: system, generator or channel, time grid,
//! initial state, output preferences, and tolerance overrides.
//!
//! Matrices are row-major nested arrays; complex entries are `[re, im]`
//! pairs. Exactly one of `generator` and `channel` must be present.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::Deserialize;

use crate::bloch::{vectorize, BlochVector, CMatrix, HermitianBasis, HermitianDecomp};
use crate::channels::{
    amplitude_damping, bit_flip, depolarizing, nmr_generator, phase_flip, KrausChannel,
    NmrParams,
};
use crate::lindblad::{Convention, LindbladGenerator};

use super::CliError;

type CliResult<T> = Result<T, CliError>;

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub system: SystemConfig,
    #[serde(default)]
    pub generator: Option<GeneratorConfig>,
    #[serde(default)]
    pub channel: Option<ChannelConfig>,
    #[serde(default)]
    pub time_grid: Option<TimeGridConfig>,
    #[serde(default)]
    pub initial_state: Option<StateConfig>,
    #[serde(default)]
    pub outputs: Option<OutputsConfig>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl RunConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        let config: RunConfig = serde_json::from_str(text)
            .map_err(|e| config_err(format!("invalid config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> CliResult<()> {
        if self.system.dim < 2 {
            return Err(config_err(format!(
                "system.dim must be >= 2, got {}",
                self.system.dim
            )));
        }
        match (&self.generator, &self.channel) {
            (Some(_), Some(_)) => Err(config_err(
                "config must contain exactly one of `generator` and `channel`, found both",
            )),
            (None, None) => Err(config_err(
                "config must contain exactly one of `generator` and `channel`, found neither",
            )),
            _ => Ok(()),
        }
    }

    pub fn basis(&self) -> CliResult<HermitianBasis> {
        match self.system.basis.as_str() {
            "gell_mann" => HermitianBasis::new(self.system.dim)
                .map_err(|e| config_err(format!("system: {e}"))),
            other => Err(config_err(format!(
                "unknown basis {other:?}; only \"gell_mann\" is supported"
            ))),
        }
    }

    pub fn times(&self) -> CliResult<Vec<f64>> {
        let grid = self
            .time_grid
            .as_ref()
            .ok_or_else(|| config_err("this command requires a `time_grid` section"))?;
        grid.times()
    }

    pub fn build_generator(&self) -> CliResult<LindbladGenerator> {
        let spec = self
            .generator
            .as_ref()
            .ok_or_else(|| config_err("this command requires a `generator` section"))?;
        spec.build(self.system.dim)
    }

    pub fn build_channel(&self) -> CliResult<KrausChannel> {
        let spec = self
            .channel
            .as_ref()
            .ok_or_else(|| config_err("this command requires a `channel` section"))?;
        spec.build(self.system.dim)
    }

    pub fn initial_bloch(&self, basis: &HermitianBasis) -> CliResult<BlochVector> {
        let spec = self
            .initial_state
            .as_ref()
            .ok_or_else(|| config_err("this command requires an `initial_state` section"))?;
        spec.build(basis)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub dim: usize,
    #[serde(default = "default_basis")]
    pub basis: String,
}

fn default_basis() -> String {
    "gell_mann".into()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GeneratorConfig {
    /// Qubit relaxation with precession `omega` and raising, lowering,
    /// and dephasing rates.
    Nmr {
        omega: f64,
        gamma_plus: f64,
        gamma_minus: f64,
        gamma_z: f64,
    },
    /// Uniform contraction of the Bloch ball at rate `gamma`.
    Isotropic { gamma: f64 },
    /// Qubit coherence decay at rate `gamma` with populations fixed.
    Dephasing { gamma: f64 },
    /// Explicit Hamiltonian and jump operators.
    Matrices {
        hamiltonian: ComplexMatrixDef,
        #[serde(default)]
        jumps: Vec<ComplexMatrixDef>,
        #[serde(default)]
        convention: ConventionDef,
    },
}

impl GeneratorConfig {
    pub fn build(&self, dim: usize) -> CliResult<LindbladGenerator> {
        match self {
            GeneratorConfig::Nmr {
                omega,
                gamma_plus,
                gamma_minus,
                gamma_z,
            } => {
                require_dim(dim, 2, "nmr generator")?;
                let params = NmrParams::new(*omega, *gamma_plus, *gamma_minus, *gamma_z)
                    .map_err(|e| config_err(format!("generator: {e}")))?;
                nmr_generator(&params).map_err(|e| config_err(format!("generator: {e}")))
            }
            GeneratorConfig::Isotropic { gamma } => LindbladGenerator::isotropic(dim, *gamma)
                .map_err(|e| config_err(format!("generator: {e}"))),
            GeneratorConfig::Dephasing { gamma } => {
                require_dim(dim, 2, "dephasing generator")?;
                LindbladGenerator::pure_dephasing(*gamma)
                    .map_err(|e| config_err(format!("generator: {e}")))
            }
            GeneratorConfig::Matrices {
                hamiltonian,
                jumps,
                convention,
            } => {
                let h = hamiltonian.to_matrix(dim, "hamiltonian")?;
                let jump_ops = jumps
                    .iter()
                    .enumerate()
                    .map(|(i, j)| j.to_matrix(dim, &format!("jumps[{i}]")))
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(LindbladGenerator::new(h, jump_ops)
                    .map_err(|e| config_err(format!("generator: {e}")))?
                    .with_convention(convention.into()))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionDef {
    #[default]
    Paper,
    Standard,
}

impl From<&ConventionDef> for Convention {
    fn from(def: &ConventionDef) -> Convention {
        match def {
            ConventionDef::Paper => Convention::Paper,
            ConventionDef::Standard => Convention::Standard,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChannelConfig {
    BitFlip { p: f64 },
    PhaseFlip { p: f64 },
    Depolarizing { p: f64 },
    AmplitudeDamping { p: f64 },
    Kraus { operators: Vec<ComplexMatrixDef> },
}

impl ChannelConfig {
    pub fn build(&self, dim: usize) -> CliResult<KrausChannel> {
        let wrap = |e: crate::error::Error| config_err(format!("channel: {e}"));
        match self {
            ChannelConfig::BitFlip { p } => {
                require_dim(dim, 2, "bit_flip channel")?;
                Ok(bit_flip(*p).map_err(wrap)?.channel)
            }
            ChannelConfig::PhaseFlip { p } => {
                require_dim(dim, 2, "phase_flip channel")?;
                Ok(phase_flip(*p).map_err(wrap)?.channel)
            }
            ChannelConfig::Depolarizing { p } => {
                require_dim(dim, 2, "depolarizing channel")?;
                Ok(depolarizing(*p).map_err(wrap)?.channel)
            }
            ChannelConfig::AmplitudeDamping { p } => {
                require_dim(dim, 2, "amplitude_damping channel")?;
                Ok(amplitude_damping(*p).map_err(wrap)?.channel)
            }
            ChannelConfig::Kraus { operators } => {
                let kraus = operators
                    .iter()
                    .enumerate()
                    .map(|(i, k)| k.to_matrix(dim, &format!("operators[{i}]")))
                    .collect::<CliResult<Vec<_>>>()?;
                KrausChannel::new(dim, kraus).map_err(wrap)
            }
        }
    }
}

fn require_dim(dim: usize, want: usize, what: &str) -> CliResult<()> {
    if dim != want {
        return Err(config_err(format!(
            "{what} requires system.dim = {want}, got {dim}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeGridConfig {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

#[derive(Debug, Clone, Copy, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

impl TimeGridConfig {
    pub fn times(&self) -> CliResult<Vec<f64>> {
        if self.count == 0 {
            return Err(config_err("time_grid.count must be >= 1"));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(config_err("time_grid endpoints must be finite"));
        }
        if self.count == 1 {
            return Ok(vec![self.start]);
        }
        if self.stop <= self.start {
            return Err(config_err(format!(
                "time_grid must be strictly increasing: start {} >= stop {}",
                self.start, self.stop
            )));
        }
        let n = self.count;
        let ts = match self.spacing {
            Spacing::Linear => (0..n)
                .map(|k| self.start + (self.stop - self.start) * k as f64 / (n - 1) as f64)
                .collect(),
            Spacing::Log => {
                if self.start <= 0.0 {
                    return Err(config_err("log spacing requires start > 0"));
                }
                let (a, b) = (self.start.ln(), self.stop.ln());
                (0..n)
                    .map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp())
                    .collect()
            }
        };
        Ok(ts)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateConfig {
    #[serde(default)]
    pub bloch: Option<Vec<f64>>,
    #[serde(default)]
    pub matrix: Option<ComplexMatrixDef>,
}

impl StateConfig {
    pub fn build(&self, basis: &HermitianBasis) -> CliResult<BlochVector> {
        match (&self.bloch, &self.matrix) {
            (Some(_), Some(_)) => Err(config_err(
                "initial_state must contain exactly one of `bloch` and `matrix`, found both",
            )),
            (None, None) => Err(config_err(
                "initial_state must contain exactly one of `bloch` and `matrix`",
            )),
            (Some(coords), None) => {
                let x = BlochVector::new(basis.dim(), DVector::from_vec(coords.clone()))
                    .map_err(|e| config_err(format!("initial_state: {e}")))?;
                let (physical, min_eig) = crate::bloch::is_physical_state(
                    &HermitianDecomp::state(x.clone()),
                    basis,
                )
                .map_err(|e| config_err(format!("initial_state: {e}")))?;
                if !physical {
                    return Err(config_err(format!(
                        "initial_state.bloch lies outside the state space \
                         (minimum eigenvalue {min_eig:.3e})"
                    )));
                }
                Ok(x)
            }
            (None, Some(def)) => {
                let rho = def.to_matrix(basis.dim(), "initial_state.matrix")?;
                crate::entropy::validate_density_matrix(&rho)
                    .map_err(|e| config_err(format!("initial_state.matrix: {e}")))?;
                let decomp = vectorize(&rho, basis)
                    .map_err(|e| config_err(format!("initial_state.matrix: {e}")))?;
                Ok(decomp.bloch)
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputsConfig {
    #[serde(default)]
    pub path: Option<String>,
    #[serde(default)]
    pub format: Option<FormatDef>,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum FormatDef {
    Csv,
    Json,
}

/// Named tolerances with overridable defaults. `verification` gates the
/// pass lines of `verify`; `normality` admits maps into the canonical
/// form; `fit` does the same for rate extraction.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    pub verification: f64,
    pub normality: f64,
    pub fit: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            verification: 1e-8,
            normality: 1e-9,
            fit: 1e-9,
        }
    }
}

/// Row-major complex matrix with `[re, im]` entries.
#[derive(Debug, Clone, Deserialize)]
#[serde(transparent)]
pub struct ComplexMatrixDef(pub Vec<Vec<[f64; 2]>>);

impl ComplexMatrixDef {
    pub fn to_matrix(&self, dim: usize, what: &str) -> CliResult<CMatrix> {
        if self.0.len() != dim || self.0.iter().any(|row| row.len() != dim) {
            return Err(config_err(format!(
                "{what} must be a {dim}x{dim} matrix of [re, im] pairs"
            )));
        }
        let mut m = CMatrix::zeros(dim, dim);
        for (i, row) in self.0.iter().enumerate() {
            for (j, &[re, im]) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(re, im);
            }
        }
        Ok(m)
    }
}
