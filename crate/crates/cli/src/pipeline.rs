//! The five pipeline stages: dataset synthesis, feature extraction, model
//! training, evaluation, and the end-to-end benchmark.
//!
//! Every stage works off the effective config echoed into the dataset
//! directory by `synth`, so a run is fully determined by (config, seed);
//! wall-time fields in `results.json` are the only nondeterministic bytes.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use qkad_core::ar::{self, FeatureVector};
use qkad_core::eval::{self, PositiveClass};
use qkad_core::kernel::{self, KernelConfig, Standardizer};
use qkad_core::quantum::FeatureMapConfig;
use qkad_core::signal::{self, Condition, MachineSpec, SceneConfig};
use qkad_core::stats;
use qkad_core::svm::{self, OcSvmModel};

use crate::config::{ChannelSpec, EvalScope, ExperimentConfig, KernelChoice};
use crate::formats::{self, file_digest, FeatureRow, MetricsRow, ModelFile};
use crate::manifest::{Manifest, ManifestEntry, Split};
use crate::wav;

pub const CONFIG_FILE: &str = "config.json";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const FEATURES_FILE: &str = "features.csv";
pub const AUDIO_DIR: &str = "audio";
pub const MODELS_DIR: &str = "models";
pub const RESULTS_DIR: &str = "results";

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn adjusted_spec(base: &MachineSpec, gain_db: f64) -> MachineSpec {
    MachineSpec {
        base_spl_db: base.base_spl_db + gain_db,
        ..base.clone()
    }
}

fn cell_stem(distance_m: f64, channel: &str, kernel: &str) -> String {
    format!("d{distance_m}_{channel}_{kernel}")
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

/// Synthesizes the full dataset: per (distance, channel) cell, the
/// configured number of samples for each CON/CHA condition, written as
/// 16-bit PCM WAV files plus a manifest with the train/test split.
pub fn cmd_synth(config: &ExperimentConfig, out_dir: &Path) -> Result<Manifest> {
    config.validate()?;
    let audio_dir = out_dir.join(AUDIO_DIR);
    fs::create_dir_all(&audio_dir).with_context(|| format!("creating {}", audio_dir.display()))?;
    config.save(&out_dir.join(CONFIG_FILE))?;

    let gen = &config.generator;
    let rate = gen.synth.sample_rate_hz;
    let duration_s = gen.window_len as f64 / rate as f64;

    let counts = [
        (Condition::new(false, false), config.dataset.normal),
        (Condition::new(false, true), config.dataset.cha_anomaly),
        (Condition::new(true, false), config.dataset.con_anomaly),
        (Condition::new(true, true), config.dataset.both_anomaly),
    ];

    let mut entries = Vec::new();
    let mut counter: u64 = 0;
    for &distance_m in &config.distances_m {
        for channel in &config.channels {
            let con = adjusted_spec(&gen.con, channel.con_gain_db);
            let cha = adjusted_spec(&gen.cha, channel.cha_gain_db);
            for (condition, count) in &counts {
                for idx in 0..*count {
                    let scene_seed =
                        splitmix64(config.seed ^ counter.wrapping_mul(0xA076_1D64_78BD_642F));
                    counter += 1;
                    let scene = SceneConfig {
                        con_state: condition.con_anomalous,
                        cha_state: condition.cha_anomalous,
                        distance_m,
                        noise_floor_db: gen.noise_floor_db,
                        anomaly_impulse_rate_hz: gen.anomaly_impulse_rate_hz,
                        seed: scene_seed,
                    };
                    let ts =
                        signal::synthesize_scene_with(&con, &cha, &scene, duration_s, &gen.synth)
                            .map_err(|e| anyhow::anyhow!("synthesis failed: {e}"))?;

                    let file = format!(
                        "{AUDIO_DIR}/d{distance_m}_{}_c{}{}_{idx:03}.wav",
                        channel.name, condition.con_anomalous as u8, condition.cha_anomalous as u8,
                    );
                    wav::write_wav(&out_dir.join(&file), &ts)
                        .map_err(|e| anyhow::anyhow!("writing {file}: {e}"))?;

                    let split = if condition.is_normal() && idx < config.dataset.training_normals {
                        Split::Train
                    } else {
                        Split::Test
                    };
                    entries.push(ManifestEntry {
                        file,
                        con_state: condition.con_anomalous as u8,
                        cha_state: condition.cha_anomalous as u8,
                        distance_m,
                        channel: channel.name.clone(),
                        split,
                        scene_seed,
                    });
                }
            }
        }
    }

    let manifest = Manifest {
        seed: config.seed,
        sample_rate_hz: rate,
        window_len: gen.window_len,
        entries,
    };
    manifest.validate_composition(
        &config.dataset,
        config.distances_m.len(),
        config.channels.len(),
    )?;
    manifest.save(&out_dir.join(MANIFEST_FILE))?;
    Ok(manifest)
}

// ---------------------------------------------------------------------------
// features
// ---------------------------------------------------------------------------

/// Extracts AR(p) coefficient features from every manifest entry and writes
/// `features.csv`. Aborts listing all unreadable files.
pub fn cmd_features(dataset_dir: &Path) -> Result<PathBuf> {
    let config = ExperimentConfig::load(&dataset_dir.join(CONFIG_FILE))?;
    let manifest = Manifest::load(&dataset_dir.join(MANIFEST_FILE))?;

    let mut rows = Vec::with_capacity(manifest.entries.len());
    let mut failures = Vec::new();
    for entry in &manifest.entries {
        let path = dataset_dir.join(&entry.file);
        let ts = match wav::read_wav(&path) {
            Ok(ts) => ts,
            Err(e) => {
                failures.push(format!("{}: {e}", entry.file));
                continue;
            }
        };
        let segments = match signal::segment(&ts, manifest.window_len, manifest.window_len) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("{}: {e}", entry.file));
                continue;
            }
        };
        for seg in &segments {
            match ar::extract_features(seg, config.ar_order) {
                Ok(fv) => rows.push(FeatureRow {
                    phi: fv.values,
                    condition: entry.condition(),
                    distance_m: entry.distance_m,
                    channel: entry.channel.clone(),
                    split: entry.split,
                }),
                Err(e) => failures.push(format!("{}: {e}", entry.file)),
            }
        }
    }
    if !failures.is_empty() {
        bail!(
            "{} file(s) could not be processed:\n{}",
            failures.len(),
            failures.join("\n")
        );
    }

    let path = dataset_dir.join(FEATURES_FILE);
    formats::write_features_csv(&path, &rows, config.ar_order)?;
    Ok(path)
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

struct CellRows {
    distance_m: f64,
    channel: String,
    train: Vec<FeatureVector>,
    eval_rows: Vec<FeatureRow>,
}

fn split_cells(
    config: &ExperimentConfig,
    rows: &[FeatureRow],
    scope: EvalScope,
) -> Result<Vec<CellRows>> {
    let mut cells = Vec::new();
    for &distance_m in &config.distances_m {
        for channel in &config.channels {
            let in_cell = |r: &&FeatureRow| r.distance_m == distance_m && r.channel == channel.name;
            let train: Vec<FeatureVector> = rows
                .iter()
                .filter(in_cell)
                .filter(|r| r.split == Split::Train)
                .map(|r| {
                    if !r.condition.is_normal() {
                        bail!(
                            "training row in cell d{distance_m}/{} is not normal",
                            channel.name
                        );
                    }
                    Ok(r.feature_vector())
                })
                .collect::<Result<_>>()?;
            let eval_rows: Vec<FeatureRow> = rows
                .iter()
                .filter(in_cell)
                .filter(|r| scope == EvalScope::All || r.split == Split::Test)
                .cloned()
                .collect();
            if train.len() < 2 {
                bail!(
                    "cell d{distance_m}/{}: {} training normals, need at least 2",
                    channel.name,
                    train.len()
                );
            }
            cells.push(CellRows {
                distance_m,
                channel: channel.name.clone(),
                train,
                eval_rows,
            });
        }
    }
    Ok(cells)
}

fn kernel_config_for(
    choice: &KernelChoice,
    train: &[FeatureVector],
    config: &ExperimentConfig,
) -> Result<KernelConfig> {
    Ok(match choice {
        KernelChoice::Rbf { gamma, standardize } => {
            let gamma = match gamma {
                Some(g) => *g,
                None => {
                    kernel::select_gamma(train, &config.gamma_grid, &config.ocsvm, *standardize)
                        .map_err(|e| anyhow::anyhow!("gamma selection failed: {e}"))?
                }
            };
            KernelConfig {
                kind: kernel::KernelKind::Rbf { gamma },
                standardize: *standardize,
            }
        }
        KernelChoice::Quantum {
            feature_map,
            standardize,
        } => KernelConfig {
            kind: kernel::KernelKind::Quantum {
                feature_map: feature_map.clone(),
            },
            standardize: *standardize,
        },
    })
}

/// Trains one model per (distance, channel, kernel) cell on that cell's
/// training normals and serializes each to JSON under `models/`.
pub fn cmd_train(dataset_dir: &Path, dump_grams: bool) -> Result<Vec<PathBuf>> {
    let config = ExperimentConfig::load(&dataset_dir.join(CONFIG_FILE))?;
    let features_path = dataset_dir.join(FEATURES_FILE);
    let rows = formats::read_features_csv(&features_path)?;
    let digest = file_digest(&features_path)?;

    let models_dir = dataset_dir.join(MODELS_DIR);
    fs::create_dir_all(&models_dir)?;
    let grams_dir = dataset_dir.join("grams");
    if dump_grams {
        fs::create_dir_all(&grams_dir)?;
    }

    let cells = split_cells(&config, &rows, config.eval_scope)?;
    let mut written = Vec::new();
    for cell in &cells {
        for choice in &config.kernels {
            let kernel_cfg = kernel_config_for(choice, &cell.train, &config)?;
            let standardizer =
                Standardizer::fit(&cell.train).map_err(|e| anyhow::anyhow!("standardizer: {e}"))?;
            let gram = kernel::gram(&cell.train, &kernel_cfg, &standardizer)
                .map_err(|e| anyhow::anyhow!("gram: {e}"))?;
            let model = svm::train(&gram, &config.ocsvm, &standardizer)
                .map_err(|e| anyhow::anyhow!("train: {e}"))?;
            if let qkad_core::svm::Convergence::MaxIterReached { kkt_violation } = model.convergence
            {
                eprintln!(
                    "warning: cell d{}/{} {}: solver hit max_iter with KKT violation {kkt_violation:e}",
                    cell.distance_m,
                    cell.channel,
                    choice.name()
                );
            }

            let stem = cell_stem(cell.distance_m, &cell.channel, choice.name());
            if dump_grams {
                formats::write_gram_csv(&grams_dir.join(format!("{stem}.csv")), &gram)?;
            }
            let model_file = ModelFile {
                distance_m: cell.distance_m,
                channel: cell.channel.clone(),
                kernel: choice.name().to_string(),
                model,
                train_features: cell.train.iter().map(|fv| fv.values.clone()).collect(),
                features_digest: digest.clone(),
            };
            let path = models_dir.join(format!("{stem}.json"));
            model_file.save(&path)?;
            written.push(path);
        }
    }
    Ok(written)
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionSummary {
    pub condition: String,
    pub n: usize,
    pub correct: usize,
    pub accuracy: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HyperSummary {
    pub nu: f64,
    pub tol: f64,
    pub standardize: bool,
    pub gamma: Option<f64>,
    pub feature_map: Option<FeatureMapConfig>,
    pub converged: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellResult {
    pub distance_m: f64,
    pub channel: String,
    pub kernel: String,
    pub n_train: usize,
    pub n_eval: usize,
    /// Headline metrics under the anomaly-positive convention.
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// F1 under the normal-positive reading, for comparability.
    pub f1_normal_positive: f64,
    pub true_positive: usize,
    pub false_negative: usize,
    pub false_positive: usize,
    pub true_negative: usize,
    pub positive_class: PositiveClass,
    pub per_condition: Vec<ConditionSummary>,
    pub hyperparameters: HyperSummary,
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonStats {
    pub quantum_mean: f64,
    pub rbf_mean: f64,
    /// Channel-averaged values per distance, in distance order.
    pub per_distance_quantum: Vec<f64>,
    pub per_distance_rbf: Vec<f64>,
    pub t: Option<f64>,
    pub df: Option<usize>,
    pub p: Option<f64>,
    pub cohens_d: Option<f64>,
    /// Set when the paired test is degenerate (e.g. identical series).
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StatsBlock {
    /// Protocol description: metrics are averaged over channels per
    /// distance, then the kernels are compared pairwise across distances.
    pub method: String,
    pub positive_class: PositiveClass,
    pub accuracy: ComparisonStats,
    pub f1: ComparisonStats,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunResult {
    pub config: ExperimentConfig,
    pub scope: EvalScope,
    pub cells: Vec<CellResult>,
    pub statistics: Option<StatsBlock>,
}

fn condensed_summaries(report: &eval::MetricsReport) -> Vec<ConditionSummary> {
    report
        .breakdown
        .iter()
        .map(|b| {
            let m = &b.matrix;
            let correct = m.true_positive + m.true_negative;
            let n = m.total();
            ConditionSummary {
                condition: b.condition.label().to_string(),
                n,
                correct,
                accuracy: correct as f64 / n as f64,
            }
        })
        .collect()
}

fn compare_kernels(
    cells: &[CellResult],
    distances: &[f64],
    metric: impl Fn(&CellResult) -> f64,
) -> Option<ComparisonStats> {
    let per_distance = |kernel: &str| -> Option<Vec<f64>> {
        distances
            .iter()
            .map(|&d| {
                let vals: Vec<f64> = cells
                    .iter()
                    .filter(|c| c.kernel == kernel && c.distance_m == d)
                    .map(&metric)
                    .collect();
                if vals.is_empty() {
                    None
                } else {
                    Some(vals.iter().sum::<f64>() / vals.len() as f64)
                }
            })
            .collect()
    };
    let quantum = per_distance("quantum")?;
    let rbf = per_distance("rbf")?;
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;

    let (t, df, p, d, note) = match stats::paired_t_test(&quantum, &rbf) {
        Ok(tt) => {
            let d = stats::cohens_d(&quantum, &rbf).ok();
            (Some(tt.t), Some(tt.df), Some(tt.p), d, None)
        }
        Err(e) => (None, None, None, None, Some(format!("{e}"))),
    };
    Some(ComparisonStats {
        quantum_mean: mean(&quantum),
        rbf_mean: mean(&rbf),
        per_distance_quantum: quantum,
        per_distance_rbf: rbf,
        t,
        df,
        p,
        cohens_d: d,
        note,
    })
}

/// Scores every trained model on its cell's evaluation rows and writes the
/// result artifacts: `results.json`, the per-cell metrics table, the
/// feature sweep, and per-cell anomaly scatters for the quantum kernel.
pub fn cmd_eval(dataset_dir: &Path, scope_override: Option<EvalScope>) -> Result<RunResult> {
    let config = ExperimentConfig::load(&dataset_dir.join(CONFIG_FILE))?;
    let scope = scope_override.unwrap_or(config.eval_scope);
    let features_path = dataset_dir.join(FEATURES_FILE);
    let rows = formats::read_features_csv(&features_path)?;
    let digest = file_digest(&features_path)?;
    let results_dir = dataset_dir.join(RESULTS_DIR);
    fs::create_dir_all(&results_dir)?;

    let cells = split_cells(&config, &rows, scope)?;
    let mut cell_results: Vec<CellResult> = Vec::new();
    let mut metrics_rows: Vec<MetricsRow> = Vec::new();
    let mut sweep_rows: Vec<(String, usize, f64, f64)> = Vec::new();

    // Reference cell for the incremental-feature sweep: nearest distance on
    // the last (conveyor-facing) channel.
    let sweep_distance = config.distances_m[0];
    let sweep_channel = config.channels.last().expect("validated").name.clone();

    for cell in &cells {
        let labels: Vec<bool> = cell
            .eval_rows
            .iter()
            .map(|r| !r.condition.is_normal())
            .collect();
        let conditions: Vec<Condition> = cell.eval_rows.iter().map(|r| r.condition).collect();
        let eval_fvs: Vec<FeatureVector> =
            cell.eval_rows.iter().map(|r| r.feature_vector()).collect();

        for choice in &config.kernels {
            let started = Instant::now();
            let stem = cell_stem(cell.distance_m, &cell.channel, choice.name());
            let model_path = dataset_dir.join(MODELS_DIR).join(format!("{stem}.json"));
            let model_file = ModelFile::load(&model_path)?;
            if model_file.features_digest != digest {
                bail!(
                    "model {stem} was trained from a different feature file \
                     (digest {} vs {digest})",
                    model_file.features_digest
                );
            }
            let model: &OcSvmModel = &model_file.model;
            let train_fvs: Vec<FeatureVector> = model_file
                .train_features
                .iter()
                .map(|v| FeatureVector::new(v.clone()))
                .collect();

            let cross = kernel::gram_cross(
                &eval_fvs,
                &train_fvs,
                &model.kernel_config,
                &model.standardizer,
            )
            .map_err(|e| anyhow::anyhow!("cross gram: {e}"))?;
            let preds =
                svm::predict_batch(model, &cross).map_err(|e| anyhow::anyhow!("predict: {e}"))?;

            let report =
                eval::metrics_with_conditions(&preds, &labels, &conditions, PositiveClass::Anomaly)
                    .map_err(|e| anyhow::anyhow!("metrics: {e}"))?;
            let cm = eval::confusion(&preds, &labels, PositiveClass::Anomaly)
                .map_err(|e| anyhow::anyhow!("confusion: {e}"))?;
            let normal_f1 = eval::metrics(&cm.relabeled())
                .map_err(|e| anyhow::anyhow!("metrics: {e}"))?
                .f1;

            // Anomaly scatter for the quantum kernel, one CSV per cell.
            if matches!(choice, KernelChoice::Quantum { .. }) {
                let samples: Vec<(FeatureVector, Condition, bool)> = eval_fvs
                    .iter()
                    .cloned()
                    .zip(conditions.iter().copied())
                    .zip(preds.iter().copied())
                    .map(|((fv, c), p)| (fv, c, p))
                    .collect();
                formats::scatter_export(
                    &samples,
                    &model.standardizer,
                    &results_dir.join(format!("scatter_d{}_{}.csv", cell.distance_m, cell.channel)),
                )?;
            }

            // Incremental-feature sweep on the reference cell.
            if cell.distance_m == sweep_distance && cell.channel == sweep_channel {
                let sweep = eval::feature_sweep(
                    &cell.train,
                    &eval_fvs,
                    &labels,
                    &model.kernel_config,
                    &config.ocsvm,
                )
                .map_err(|e| anyhow::anyhow!("feature sweep: {e}"))?;
                for point in sweep {
                    sweep_rows.push((choice.name().to_string(), point.k, point.accuracy, point.f1));
                }
            }

            let gamma = match &model.kernel_config.kind {
                kernel::KernelKind::Rbf { gamma } => Some(*gamma),
                kernel::KernelKind::Quantum { .. } => None,
            };
            let feature_map = match &model.kernel_config.kind {
                kernel::KernelKind::Quantum { feature_map } => Some(feature_map.clone()),
                kernel::KernelKind::Rbf { .. } => None,
            };

            metrics_rows.push(MetricsRow {
                distance_m: cell.distance_m,
                channel: cell.channel.clone(),
                kernel: choice.name().to_string(),
                accuracy: report.accuracy,
                f1: report.f1,
                true_positive: cm.true_positive,
                false_negative: cm.false_negative,
                false_positive: cm.false_positive,
                true_negative: cm.true_negative,
            });
            cell_results.push(CellResult {
                distance_m: cell.distance_m,
                channel: cell.channel.clone(),
                kernel: choice.name().to_string(),
                n_train: train_fvs.len(),
                n_eval: eval_fvs.len(),
                accuracy: report.accuracy,
                precision: report.precision,
                recall: report.recall,
                f1: report.f1,
                f1_normal_positive: normal_f1,
                true_positive: cm.true_positive,
                false_negative: cm.false_negative,
                false_positive: cm.false_positive,
                true_negative: cm.true_negative,
                positive_class: PositiveClass::Anomaly,
                per_condition: condensed_summaries(&report),
                hyperparameters: HyperSummary {
                    nu: model.config.nu,
                    tol: model.config.tol,
                    standardize: model.kernel_config.standardize,
                    gamma,
                    feature_map,
                    converged: model.convergence.is_converged(),
                },
                wall_time_s: started.elapsed().as_secs_f64(),
            });
        }
    }

    let statistics = if config.distances_m.len() >= 2 {
        let accuracy = compare_kernels(&cell_results, &config.distances_m, |c| c.accuracy);
        let f1 = compare_kernels(&cell_results, &config.distances_m, |c| c.f1);
        match (accuracy, f1) {
            (Some(accuracy), Some(f1)) => Some(StatsBlock {
                method: "per distance, metrics averaged over channels; paired t-test and \
                         Cohen's d between kernels across distances"
                    .to_string(),
                positive_class: PositiveClass::Anomaly,
                accuracy,
                f1,
            }),
            _ => None,
        }
    } else {
        None
    };

    formats::write_metrics_csv(&results_dir.join("metrics.csv"), &metrics_rows)?;
    formats::write_sweep_csv(&results_dir.join("sweep.csv"), &sweep_rows)?;

    let run = RunResult {
        config,
        scope,
        cells: cell_results,
        statistics,
    };
    fs::write(
        results_dir.join("results.json"),
        serde_json::to_string_pretty(&run)?,
    )?;
    Ok(run)
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

/// Outcome of the end-to-end run; `check_failures` is non-empty when
/// `--check` assertions did not hold.
pub struct BenchOutcome {
    pub run: RunResult,
    pub check_failures: Vec<String>,
}

/// One-command reproduction: synth -> features -> train -> eval, optionally
/// followed by the directional checks.
pub fn cmd_bench(config: &ExperimentConfig, out_dir: &Path, check: bool) -> Result<BenchOutcome> {
    let manifest = cmd_synth(config, out_dir)?;
    cmd_features(out_dir)?;
    cmd_train(out_dir, false)?;
    let run = cmd_eval(out_dir, None)?;

    let mut check_failures = Vec::new();
    if check {
        if let Err(e) = manifest.validate_composition(
            &config.dataset,
            config.distances_m.len(),
            config.channels.len(),
        ) {
            check_failures.push(format!("composition: {e}"));
        }
        let max_distance = config
            .distances_m
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        let mean_at = |kernel: &str, d: f64| -> Option<f64> {
            let v: Vec<f64> = run
                .cells
                .iter()
                .filter(|c| c.kernel == kernel && c.distance_m == d)
                .map(|c| c.accuracy)
                .collect();
            if v.is_empty() {
                None
            } else {
                Some(v.iter().sum::<f64>() / v.len() as f64)
            }
        };
        match (
            mean_at("quantum", max_distance),
            mean_at("rbf", max_distance),
        ) {
            (Some(q), Some(r)) => {
                if q + 1e-12 < r {
                    check_failures.push(format!(
                        "quantum accuracy {q:.4} below classical {r:.4} at {max_distance} m"
                    ));
                }
            }
            _ => check_failures.push("check needs both quantum and rbf kernels".to_string()),
        }
    }
    Ok(BenchOutcome {
        run,
        check_failures,
    })
}

// ---------------------------------------------------------------------------
// helpers shared with tests
// ---------------------------------------------------------------------------

/// Per-channel machine specs after gain adjustment (exposed for tests and
/// the statevector inspector).
pub fn channel_machines(
    config: &ExperimentConfig,
    channel: &ChannelSpec,
) -> (MachineSpec, MachineSpec) {
    (
        adjusted_spec(&config.generator.con, channel.con_gain_db),
        adjusted_spec(&config.generator.cha, channel.cha_gain_db),
    )
}
