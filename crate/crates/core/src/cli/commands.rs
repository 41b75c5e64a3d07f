//! Implementations of the four subcommands. Each takes a parsed
//! configuration plus flag overrides and returns the rendered output;
//! writing and exit codes live in the parent module.

use serde_json::{json, Value};

use crate::bloch::{reconstruct, BlochVector, HermitianBasis, HermitianDecomp};
use crate::channels::channel_to_affine;
use crate::decomposition::{
    canonical_form, classify_isotropy, fit_rates, polar, spheroid_class, Isotropy,
    SpheroidClass,
};
use crate::entropy::{predicted_linear_entropy, von_neumann_entropy, SubspaceWeights};
use crate::error::Error;
use crate::evolution::{
    dynamical_matrix, evolve_trajectory, homogeneous_kernel_dimension, semigroup_defect,
    DynamicalMatrix,
};
use crate::lindblad::{
    choi_matrix, commutant_dimension, min_hermitian_eigenvalue, normality_defect,
    LindbladGenerator, SuperopMatrix,
};

use super::config::{FormatDef, RunConfig, Tolerances};
use super::report::{condition, float_list, float_value, matrix_value, render_json, Table};
use super::CliError;

/// Flag-level overrides that beat the corresponding config entries.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub format: Option<FormatDef>,
    pub tol: Option<f64>,
}

type CliResult<T> = Result<T, CliError>;

/// Numerical breakdowns keep their own exit code; everything else a
/// library call rejects traces back to the configuration.
fn run_err(e: Error) -> CliError {
    match e {
        Error::Numerical(_) | Error::ImaginaryResidue { .. } => {
            CliError::Numerical(e.to_string())
        }
        other => CliError::Config(other.to_string()),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidDimension(_) => "invalid_dimension",
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::NotHermitian { .. } => "not_hermitian",
        Error::ImaginaryResidue { .. } => "imaginary_residue",
        Error::OutOfRange(_) => "out_of_range",
        Error::NotTraceOne { .. } => "not_trace_one",
        Error::NotPositive { .. } => "not_positive",
        Error::NotTracePreserving { .. } => "not_trace_preserving",
        Error::NonCommutingParts { .. } => "non_commuting_parts",
        Error::OrientationReversing => "orientation_reversing",
        Error::NotNormal { .. } => "not_normal",
        Error::NotUnital { .. } => "not_unital",
        Error::Numerical(_) => "numerical",
    }
}

/// Structural failures inside a report are results, not crashes: the
/// affected section carries this object instead of its fields.
fn error_object(e: &Error) -> Value {
    json!({
        "error": {
            "kind": error_kind(e),
            "message": e.to_string(),
        }
    })
}

fn tabular_format(config: &RunConfig, opts: &Options) -> FormatDef {
    opts.format
        .or(config.outputs.as_ref().and_then(|o| o.format))
        .unwrap_or(FormatDef::Csv)
}

fn json_only(opts: &Options, command: &str) -> CliResult<()> {
    if opts.format == Some(FormatDef::Csv) {
        return Err(CliError::Config(format!(
            "{command} emits a JSON report; --format csv is not supported"
        )));
    }
    Ok(())
}

fn semigroup_times(config: &RunConfig) -> CliResult<Vec<f64>> {
    let times = config.times()?;
    if times.first().is_some_and(|t| *t < 0.0) {
        return Err(CliError::Config(
            "time_grid must start at t >= 0 for semigroup evolution".into(),
        ));
    }
    Ok(times)
}

struct Evolution {
    basis: HermitianBasis,
    sup: SuperopMatrix,
    generator: LindbladGenerator,
    times: Vec<f64>,
    x0: BlochVector,
    trajectory: Vec<BlochVector>,
}

fn run_evolution(config: &RunConfig) -> CliResult<Evolution> {
    let basis = config.basis()?;
    let generator = config.build_generator()?;
    let sup = generator.superop(&basis).map_err(run_err)?;
    let times = semigroup_times(config)?;
    let x0 = config.initial_bloch(&basis)?;
    let trajectory = evolve_trajectory(&sup, &x0, &times).map_err(run_err)?;
    Ok(Evolution {
        basis,
        sup,
        generator,
        times,
        x0,
        trajectory,
    })
}

fn render_table(table: &Table, format: FormatDef) -> String {
    match format {
        FormatDef::Csv => table.to_csv(),
        FormatDef::Json => render_json(&table.to_json()),
    }
}

/// Bloch trajectory with purity and linear entropy per sample.
pub fn evolve(config: &RunConfig, opts: &Options) -> CliResult<String> {
    let format = tabular_format(config, opts);
    let run = run_evolution(config)?;
    let d = run.basis.dim() as f64;
    let n = run.basis.bloch_dim();

    let mut columns = vec!["t".to_string()];
    columns.extend((1..=n).map(|k| format!("x_{k}")));
    columns.push("purity".into());
    columns.push("S_L".into());
    let mut table = Table::new(columns);
    for (t, x) in run.times.iter().zip(&run.trajectory) {
        let ns = x.norm_squared();
        let mut row = Vec::with_capacity(n + 3);
        row.push(*t);
        row.extend(x.coords.iter().copied());
        row.push(1.0 / d + ns);
        row.push((d - 1.0) / d - ns);
        table.push(row);
    }
    Ok(render_table(&table, format))
}

/// Entropy trace with the closed-form prediction where it applies (a
/// normal unital generator); otherwise the prediction columns are NaN.
pub fn entropy(config: &RunConfig, opts: &Options) -> CliResult<String> {
    let format = tabular_format(config, opts);
    let run = run_evolution(config)?;
    let d = run.basis.dim();
    let cap = (d as f64 - 1.0) / d as f64;

    let fit_times: Vec<f64> = run.times.iter().copied().filter(|t| *t > 0.0).collect();
    let (unital, _) = run.generator.is_unital();
    let (normal, _) = run.sup.is_normal(config.tolerances.normality);
    let prediction = if unital && normal && !fit_times.is_empty() {
        match fit_rates(&run.sup, &fit_times, config.tolerances.fit) {
            Ok(fit) => {
                let weights = SubspaceWeights::from_bloch_in_basis(&run.x0, &fit.k)
                    .map_err(run_err)?;
                Some((fit, weights))
            }
            Err(Error::NotNormal { .. }) => None,
            Err(e) => return Err(run_err(e)),
        }
    } else {
        None
    };

    let mut table = Table::new(
        ["t", "S_L_direct", "S_L_predicted", "S_vN", "abs_err"]
            .map(String::from)
            .to_vec(),
    );
    for (t, x) in run.times.iter().zip(&run.trajectory) {
        let direct = cap - x.norm_squared();
        let predicted = match &prediction {
            Some((fit, weights)) => {
                predicted_linear_entropy(weights, &fit.gammas, d, *t).map_err(run_err)?
            }
            None => f64::NAN,
        };
        let rho = reconstruct(&HermitianDecomp::state(x.clone()), &run.basis)
            .map_err(run_err)?;
        let vn = von_neumann_entropy(&rho).map_err(run_err)?;
        table.push(vec![*t, direct, predicted, vn, (direct - predicted).abs()]);
    }
    Ok(render_table(&table, format))
}

fn isotropy_name(i: Isotropy) -> &'static str {
    match i {
        Isotropy::Isotropic => "isotropic",
        Isotropy::Anisotropic => "anisotropic",
    }
}

fn spheroid_name(s: SpheroidClass) -> &'static str {
    match s {
        SpheroidClass::Prolate => "prolate",
        SpheroidClass::Oblate => "oblate",
        SpheroidClass::Ball => "ball",
    }
}

/// Polar and canonical structure of one dynamical matrix. Structural
/// rejections (non-commuting parts, reversed orientation) land as error
/// objects inside the report.
fn map_sections(dm: &DynamicalMatrix, tolerances: &Tolerances, tol_v: f64) -> Value {
    let mut out = json!({
        "normality_defect": float_value(normality_defect(&dm.m)),
        "translation": float_list(dm.c.as_slice()),
        "translation_norm": float_value(dm.c.norm()),
    });
    let parts = match polar(&dm.m) {
        Err(e) => {
            out["polar"] = error_object(&e);
            out["canonical"] = error_object(&e);
            return out;
        }
        Ok(parts) => parts,
    };
    out["polar"] = json!({
        "rotation": matrix_value(&parts.r),
        "scaling": matrix_value(&parts.s),
        "commute_defect": float_value(parts.commute_defect),
        "det_rotation": float_value(parts.det_r),
        "singular": parts.singular,
    });
    match canonical_form(&parts, tolerances.normality) {
        Err(e) => out["canonical"] = error_object(&e),
        Ok(cf) => {
            let blocks: Vec<Value> = cf
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "theta": float_value(b.theta),
                        "lambda": float_value(b.lambda),
                        "dim": b.dim,
                    })
                })
                .collect();
            let spheroid = if cf.n() == 3 {
                match spheroid_class(&cf) {
                    Ok(s) => json!(spheroid_name(s)),
                    Err(_) => Value::Null,
                }
            } else {
                Value::Null
            };
            out["canonical"] = json!({
                "blocks": blocks,
                "has_fixed_block": cf.has_fixed_block,
                "isotropy": isotropy_name(classify_isotropy(&cf, tol_v)),
                "spheroid": spheroid,
                "basis": matrix_value(&cf.k),
            });
        }
    }
    out
}

/// JSON decomposition report for a channel or for the map a generator
/// reaches at the last grid time, with fitted semigroup rates.
pub fn decompose(config: &RunConfig, opts: &Options) -> CliResult<String> {
    json_only(opts, "decompose")?;
    let basis = config.basis()?;
    let tol_v = opts.tol.unwrap_or(config.tolerances.verification);

    let report = if config.channel.is_some() {
        let ch = config.build_channel()?;
        let (t, c) = channel_to_affine(&ch, &basis).map_err(run_err)?;
        let dm = DynamicalMatrix::new(basis.dim(), None, t, c).map_err(run_err)?;
        let mut report = map_sections(&dm, &config.tolerances, tol_v);
        report["subject"] = json!("channel");
        report["dim"] = json!(basis.dim());
        report["fitted"] = Value::Null;
        report
    } else {
        let generator = config.build_generator()?;
        let sup = generator.superop(&basis).map_err(run_err)?;
        let times = semigroup_times(config)?;
        let t_last = *times.last().expect("grid is non-empty");
        let dm = dynamical_matrix(&sup, t_last).map_err(run_err)?;
        let mut report = map_sections(&dm, &config.tolerances, tol_v);
        report["subject"] = json!("generator");
        report["dim"] = json!(basis.dim());
        report["map_time"] = float_value(t_last);
        let (unital, unital_defect) = generator.is_unital();
        report["unital"] = json!(unital);
        report["unitality_defect"] = float_value(unital_defect);
        let fit_times: Vec<f64> = times.iter().copied().filter(|t| *t > 0.0).collect();
        report["fitted"] = if fit_times.is_empty() {
            error_object(&Error::OutOfRange(
                "rate fitting needs at least one positive grid time".into(),
            ))
        } else {
            match fit_rates(&sup, &fit_times, config.tolerances.fit) {
                Ok(fit) => json!({
                    "gammas": float_list(&fit.gammas),
                    "gammas_per_block": float_list(&fit.gammas_per_block()),
                    "omegas": float_list(&fit.omegas),
                    "block_dims": fit.block_dims,
                    "residual": float_value(fit.residual),
                }),
                Err(e @ Error::NotNormal { .. }) => error_object(&e),
                Err(e) => return Err(run_err(e)),
            }
        };
        report
    };
    Ok(render_json(&report))
}

/// JSON conformance report: map conditions for channels, semigroup
/// conditions plus the commutant fixed-point criterion for generators.
/// Failed conditions are results; the command still succeeds.
pub fn verify(config: &RunConfig, opts: &Options) -> CliResult<String> {
    json_only(opts, "verify")?;
    let basis = config.basis()?;
    let d = basis.dim();
    let tol_v = opts.tol.unwrap_or(config.tolerances.verification);
    let mut conditions: Vec<Value> = Vec::new();

    let report = if config.channel.is_some() {
        let ch = config.build_channel()?;
        let choi = choi_matrix(d, |e| ch.apply(e).expect("probe dimensions match"));
        let min_eig = min_hermitian_eigenvalue(&choi).map_err(run_err)?;
        conditions.push(condition(
            "c1_completely_positive",
            min_eig >= -tol_v,
            (-min_eig).max(0.0),
            &format!("minimum Choi eigenvalue {min_eig:.6e}"),
        ));
        let (t, c) = channel_to_affine(&ch, &basis).map_err(run_err)?;
        let sigma_max = crate::evolution::operator_norm(&t);
        conditions.push(condition(
            "c2_contractive",
            sigma_max <= 1.0 + tol_v,
            (sigma_max - 1.0).max(0.0),
            &format!("largest singular value {sigma_max:.6e}"),
        ));
        let shift = c.amax();
        conditions.push(condition(
            "c3_unital",
            shift <= tol_v,
            shift,
            "displacement of the maximally mixed state",
        ));
        let tp = ch.trace_preservation_defect();
        conditions.push(condition(
            "trace_preserving",
            tp <= tol_v,
            tp,
            "max entry of sum K'K - I",
        ));
        json!({
            "subject": "channel",
            "dim": d,
            "tolerance": float_value(tol_v),
            "conditions": conditions,
        })
    } else {
        let generator = config.build_generator()?;
        let sup = generator.superop(&basis).map_err(run_err)?;
        let times = semigroup_times(config)?;

        let mut min_eig = f64::INFINITY;
        for &t in &times {
            let (_, eig) = generator.is_completely_positive_at(t).map_err(run_err)?;
            min_eig = min_eig.min(eig);
        }
        conditions.push(condition(
            "l1_completely_positive",
            min_eig >= -tol_v,
            (-min_eig).max(0.0),
            &format!("minimum Choi eigenvalue over the grid {min_eig:.6e}"),
        ));

        let mut sg_defect = 0.0_f64;
        let pair_count = (times.len().saturating_sub(1)).min(16);
        if pair_count > 0 {
            let stride = (times.len() - 1).div_euclid(pair_count).max(1);
            let mut i = 0;
            while i + 1 < times.len() {
                sg_defect = sg_defect
                    .max(semigroup_defect(&sup, times[i], times[i + 1]).map_err(run_err)?);
                i += stride;
            }
        }
        conditions.push(condition(
            "l3_semigroup",
            sg_defect <= tol_v,
            sg_defect,
            "max composition defect over sampled grid pairs",
        ));

        let mut sigma_max = 0.0_f64;
        for &t in &times {
            let dm = dynamical_matrix(&sup, t).map_err(run_err)?;
            sigma_max = sigma_max.max(dm.max_singular_value());
        }
        conditions.push(condition(
            "c2_contractive",
            sigma_max <= 1.0 + tol_v,
            (sigma_max - 1.0).max(0.0),
            &format!("largest singular value over the grid {sigma_max:.6e}"),
        ));

        let (unital, unital_defect) = generator.is_unital();
        conditions.push(condition(
            "c3_unital",
            unital,
            unital_defect,
            "max entry of L(I)",
        ));

        let commutant = commutant_dimension(d, generator.jumps()).map_err(run_err)?;
        let kernel = homogeneous_kernel_dimension(&sup);
        conditions.push(condition(
            "spohn_unique_fixed_point",
            commutant == 1,
            commutant as f64 - 1.0,
            &format!(
                "jump commutant dimension {commutant}, homogeneous kernel dimension {kernel}"
            ),
        ));

        json!({
            "subject": "generator",
            "dim": d,
            "tolerance": float_value(tol_v),
            "conditions": conditions,
            "spohn": {
                "commutant_dimension": commutant,
                "homogeneous_kernel_dimension": kernel,
            },
        })
    };

    let pass = report["conditions"]
        .as_array()
        .expect("conditions array")
        .iter()
        .all(|c| c["pass"] == json!(true));
    let mut report = report;
    report["pass"] = json!(pass);
    Ok(render_json(&report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(text: &str) -> RunConfig {
        RunConfig::from_json(text).unwrap()
    }

    fn opts() -> Options {
        Options::default()
    }

    const ISOTROPIC: &str = r#"{
        "system": {"dim": 2},
        "generator": {"type": "isotropic", "gamma": 1.0},
        "time_grid": {"start": 0.0, "stop": 2.0, "count": 9},
        "initial_state": {"bloch": [0.0, 0.0, 0.70710678118654752]}
    }"#;

    #[test]
    fn evolve_emits_a_decaying_deterministic_trace() {
        let cfg = config(ISOTROPIC);
        let first = evolve(&cfg, &opts()).unwrap();
        let second = evolve(&cfg, &opts()).unwrap();
        assert_eq!(first, second);
        let lines: Vec<&str> = first.lines().collect();
        assert_eq!(lines[0], "t,x_1,x_2,x_3,purity,S_L");
        assert_eq!(lines.len(), 10);
        let start: Vec<f64> = lines[1].split(',').map(|v| v.parse().unwrap()).collect();
        assert!((start[4] - 1.0).abs() < 1e-12, "pure initial state");
        let end: Vec<f64> = lines[9].split(',').map(|v| v.parse().unwrap()).collect();
        let expected_z = std::f64::consts::FRAC_1_SQRT_2 * (-2.0_f64).exp();
        assert!((end[3] - expected_z).abs() < 1e-12);
        assert!(end[5] > start[5], "entropy grows");
    }

    #[test]
    fn entropy_prediction_matches_direct_for_isotropic_decay() {
        let cfg = config(ISOTROPIC);
        let out = entropy(&cfg, &opts()).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "t,S_L_direct,S_L_predicted,S_vN,abs_err");
        for line in &lines[1..] {
            let row: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
            assert!(row[4] < 1e-10, "abs_err {:.3e}", row[4]);
            assert!(row[3] >= 0.0);
        }
    }

    #[test]
    fn entropy_prediction_is_nan_for_non_unital_generators() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "generator": {"type": "nmr", "omega": 1.0, "gamma_plus": 0.4,
                          "gamma_minus": 0.1, "gamma_z": 0.2},
            "time_grid": {"start": 0.0, "stop": 1.0, "count": 3},
            "initial_state": {"bloch": [0.5, 0.0, 0.0]}
        }"#,
        );
        let out = entropy(&cfg, &opts()).unwrap();
        let last = out.lines().last().unwrap();
        let cells: Vec<&str> = last.split(',').collect();
        assert_eq!(cells[2], "NaN");
        assert_eq!(cells[4], "NaN");
        let direct: f64 = cells[1].parse().unwrap();
        assert!(direct.is_finite());
    }

    #[test]
    fn evolve_requires_a_generator_section() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "channel": {"type": "bit_flip", "p": 0.25}
        }"#,
        );
        assert!(matches!(
            evolve(&cfg, &opts()),
            Err(CliError::Config(_))
        ));
    }

    #[test]
    fn decompose_reports_prolate_bit_flip() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "channel": {"type": "bit_flip", "p": 0.25}
        }"#,
        );
        let out = decompose(&cfg, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["subject"], "channel");
        assert_eq!(v["canonical"]["isotropy"], "anisotropic");
        assert_eq!(v["canonical"]["spheroid"], "prolate");
        assert_eq!(v["fitted"], serde_json::Value::Null);
        assert!(v["canonical"]["has_fixed_block"].as_bool().unwrap());
    }

    #[test]
    fn decompose_reports_ball_for_depolarizing() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "channel": {"type": "depolarizing", "p": 0.3}
        }"#,
        );
        let out = decompose(&cfg, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["canonical"]["isotropy"], "isotropic");
        assert_eq!(v["canonical"]["spheroid"], "ball");
    }

    #[test]
    fn decompose_fits_nmr_rates() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "generator": {"type": "nmr", "omega": 2.0, "gamma_plus": 0.3,
                          "gamma_minus": 0.3, "gamma_z": 0.4},
            "time_grid": {"start": 0.0, "stop": 2.0, "count": 5}
        }"#,
        );
        let out = decompose(&cfg, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["subject"], "generator");
        let gammas = v["fitted"]["gammas"].as_array().unwrap();
        // r2 = 0.3 + 0.8 = 1.1 twice, then r1 = 0.6.
        assert!((gammas[0].as_f64().unwrap() - 1.1).abs() < 1e-10);
        assert!((gammas[1].as_f64().unwrap() - 1.1).abs() < 1e-10);
        assert!((gammas[2].as_f64().unwrap() - 0.6).abs() < 1e-10);
        let omegas = v["fitted"]["omegas"].as_array().unwrap();
        assert!((omegas[0].as_f64().unwrap() - 2.0).abs() < 1e-10);
        assert!(v["fitted"]["residual"].as_f64().unwrap() < 1e-8);
        assert_eq!(v["unital"], serde_json::Value::Bool(true));
    }

    #[test]
    fn decompose_replaces_canonical_section_for_non_normal_generators() {
        // Precession about x with dephasing along z: the symmetric part
        // diag(-1, -1, 0) does not commute with the (y, z) rotation, so
        // the superoperator matrix is not normal.
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "generator": {"type": "matrices",
                "hamiltonian": [[[0.0, 0.0], [0.5, 0.0]], [[0.5, 0.0], [0.0, 0.0]]],
                "jumps": [[[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [-1.0, 0.0]]]]
            },
            "time_grid": {"start": 0.0, "stop": 2.0, "count": 5}
        }"#,
        );
        let out = decompose(&cfg, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["fitted"]["error"]["kind"], "not_normal");
        // The map at the reporting time is also non-normal, so the
        // canonical section explains rather than decomposes.
        assert!(
            v["canonical"].get("error").is_some(),
            "canonical section: {}",
            v["canonical"]
        );
        assert!(v["polar"].get("rotation").is_some());
    }

    #[test]
    fn verify_passes_gallery_channel_and_flags_damping_as_non_unital() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "channel": {"type": "phase_flip", "p": 0.4}
        }"#,
        );
        let out = verify(&cfg, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], serde_json::Value::Bool(true));

        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "channel": {"type": "amplitude_damping", "p": 0.5}
        }"#,
        );
        let out = verify(&cfg, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], serde_json::Value::Bool(false));
        let c3 = v["conditions"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["condition"] == "c3_unital")
            .unwrap();
        assert_eq!(c3["pass"], serde_json::Value::Bool(false));
        let c1 = v["conditions"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["condition"] == "c1_completely_positive")
            .unwrap();
        assert_eq!(c1["pass"], serde_json::Value::Bool(true));
    }

    #[test]
    fn verify_reports_spohn_commutant_for_generators() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "generator": {"type": "isotropic", "gamma": 0.7},
            "time_grid": {"start": 0.0, "stop": 3.0, "count": 7}
        }"#,
        );
        let out = verify(&cfg, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], serde_json::Value::Bool(true));
        assert_eq!(v["spohn"]["commutant_dimension"], 1);
        assert_eq!(v["spohn"]["homogeneous_kernel_dimension"], 1);

        let dephasing = config(
            r#"{
            "system": {"dim": 2},
            "generator": {"type": "dephasing", "gamma": 0.5},
            "time_grid": {"start": 0.0, "stop": 3.0, "count": 7}
        }"#,
        );
        let out = verify(&dephasing, &opts()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["spohn"]["commutant_dimension"], 2);
        assert_eq!(v["pass"], serde_json::Value::Bool(false));
    }

    #[test]
    fn json_reports_reject_csv_format() {
        let cfg = config(
            r#"{
            "system": {"dim": 2},
            "channel": {"type": "bit_flip", "p": 0.25}
        }"#,
        );
        let csv = Options {
            format: Some(FormatDef::Csv),
            tol: None,
        };
        assert!(matches!(decompose(&cfg, &csv), Err(CliError::Config(_))));
        assert!(matches!(verify(&cfg, &csv), Err(CliError::Config(_))));
    }

    #[test]
    fn tabular_commands_serve_json_too() {
        let cfg = config(ISOTROPIC);
        let out = evolve(
            &cfg,
            &Options {
                format: Some(FormatDef::Json),
                tol: None,
            },
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["columns"][0], "t");
        assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    }
}
