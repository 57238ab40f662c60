//! Experiment configuration: a single JSON file with defaults for every
//! field. The effective (post-default) config is echoed into the output
//! directory by `synth`/`bench` so downstream stages and future readers see
//! exactly what ran.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use qkad_core::quantum::FeatureMapConfig;
use qkad_core::signal::{MachineSpec, SynthParams};
use qkad_core::svm::OcSvmConfig;

/// Dataset composition per (distance, channel) cell: sample counts for the
/// four CON/CHA conditions plus how many normals are reserved for training.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct DatasetConfig {
    /// 0/0 samples.
    pub normal: usize,
    /// 0/1 samples (chain-belt anomaly).
    pub cha_anomaly: usize,
    /// 1/0 samples (conveyor anomaly).
    pub con_anomaly: usize,
    /// 1/1 samples.
    pub both_anomaly: usize,
    /// Normals assigned to the training split; the rest of the normals and
    /// all anomalous samples form the test split.
    pub training_normals: usize,
}

impl Default for DatasetConfig {
    fn default() -> Self {
        Self {
            normal: 60,
            cha_anomaly: 30,
            con_anomaly: 30,
            both_anomaly: 30,
            training_normals: 40,
        }
    }
}

impl DatasetConfig {
    pub fn total(&self) -> usize {
        self.normal + self.cha_anomaly + self.con_anomaly + self.both_anomaly
    }

    pub fn test_total(&self) -> usize {
        self.total() - self.training_normals
    }

    pub fn validate(&self) -> Result<()> {
        if self.training_normals > self.normal {
            bail!(
                "training_normals ({}) exceeds normal sample count ({})",
                self.training_normals,
                self.normal
            );
        }
        if self.normal == 0 {
            bail!("dataset needs normal samples");
        }
        Ok(())
    }
}

/// A named microphone-position preset: per-machine gain offsets applied to
/// the machines' base levels before synthesis.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ChannelSpec {
    pub name: String,
    pub con_gain_db: f64,
    pub cha_gain_db: f64,
}

fn default_channels() -> Vec<ChannelSpec> {
    vec![
        // CH1 faces the chain belt, CH3 the conveyor, CH2 hears both.
        ChannelSpec {
            name: "CH1".into(),
            con_gain_db: -4.0,
            cha_gain_db: 0.0,
        },
        ChannelSpec {
            name: "CH2".into(),
            con_gain_db: -1.3,
            cha_gain_db: -1.3,
        },
        ChannelSpec {
            name: "CH3".into(),
            con_gain_db: 0.0,
            cha_gain_db: -4.0,
        },
    ]
}

/// Synthesizer settings beyond the machine specs themselves.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct GeneratorConfig {
    /// Samples per analysis window; each synthesized sample is exactly one
    /// window long.
    pub window_len: usize,
    pub con: MachineSpec,
    pub cha: MachineSpec,
    /// Distance-independent white-noise floor, dB.
    pub noise_floor_db: f64,
    /// Nail-strike rate for anomalous machines, Hz.
    pub anomaly_impulse_rate_hz: f64,
    /// Sample rate, attenuation table, and impulse shape.
    pub synth: SynthParams,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self {
            window_len: 3000,
            con: MachineSpec::conveyor(),
            cha: MachineSpec::chain_belt(),
            noise_floor_db: 36.0,
            anomaly_impulse_rate_hz: 150.0,
            synth: SynthParams::default(),
        }
    }
}

fn default_true() -> bool {
    true
}

/// Which kernels the pipeline trains per cell. The RBF bandwidth is
/// cross-validated per cell unless pinned here.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KernelChoice {
    Rbf {
        /// Fixed bandwidth; omit to select by cross-validation.
        #[serde(default)]
        gamma: Option<f64>,
        #[serde(default = "default_true")]
        standardize: bool,
    },
    Quantum {
        #[serde(default = "default_feature_map")]
        feature_map: FeatureMapConfig,
        #[serde(default = "default_true")]
        standardize: bool,
    },
}

impl KernelChoice {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Rbf { .. } => "rbf",
            Self::Quantum { .. } => "quantum",
        }
    }
}

fn default_feature_map() -> FeatureMapConfig {
    FeatureMapConfig::default()
}

/// Default kernel pair. The RBF baseline z-scores features and
/// cross-validates its bandwidth. The quantum kernel encodes raw AR
/// coefficients: machinery with several operating speeds makes the normal
/// class multimodal, and z-scoring folds that legitimate mode spread into
/// the unit scale, diluting anomaly offsets; the raw coefficients keep
/// within-mode spread tiny against the pi-per-unit rotation, so normal
/// samples stay near-unit fidelity while nail-strike offsets rotate away.
fn default_kernels() -> Vec<KernelChoice> {
    vec![
        KernelChoice::Rbf {
            gamma: None,
            standardize: true,
        },
        KernelChoice::Quantum {
            feature_map: default_feature_map(),
            standardize: false,
        },
    ]
}

/// Which rows `eval` scores: the held-out test split, or every sample
/// including training normals.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "snake_case")]
pub enum EvalScope {
    #[default]
    TestOnly,
    All,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct ExperimentConfig {
    pub dataset: DatasetConfig,
    pub distances_m: Vec<f64>,
    pub channels: Vec<ChannelSpec>,
    pub ar_order: usize,
    pub kernels: Vec<KernelChoice>,
    pub ocsvm: OcSvmConfig,
    /// Candidate bandwidths for RBF cross-validation.
    pub gamma_grid: Vec<f64>,
    pub eval_scope: EvalScope,
    pub seed: u64,
    pub generator: GeneratorConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            dataset: DatasetConfig::default(),
            distances_m: vec![0.0, 1.0, 2.0, 3.0],
            channels: default_channels(),
            ar_order: 5,
            kernels: default_kernels(),
            ocsvm: OcSvmConfig::default(),
            gamma_grid: qkad_core::kernel::DEFAULT_GAMMA_GRID.to_vec(),
            eval_scope: EvalScope::default(),
            seed: 7,
            generator: GeneratorConfig::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.dataset.validate()?;
        if self.distances_m.is_empty() {
            bail!("at least one distance required");
        }
        if self.channels.is_empty() {
            bail!("at least one channel required");
        }
        if self.kernels.is_empty() {
            bail!("at least one kernel required");
        }
        if self.ar_order == 0 || self.ar_order >= self.generator.window_len / 2 {
            bail!("ar_order must be in 1..window_len/2");
        }
        if self.generator.window_len == 0 {
            bail!("window_len must be positive");
        }
        for k in &self.kernels {
            if let KernelChoice::Quantum { feature_map, .. } = k {
                if feature_map.n_qubits != self.ar_order {
                    bail!(
                        "quantum feature map has {} qubits but ar_order is {}",
                        feature_map.n_qubits,
                        self.ar_order
                    );
                }
            }
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let cfg: Self = serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Writes the effective configuration; downstream stages read this echo
    /// rather than the user's partial file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}
