//! Dataset manifest: one entry per synthesized sample mapping its audio
//! file to (condition, distance, channel, split, scene seed). Written once
//! by `synth`; every later stage cross-checks against it.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use qkad_core::signal::Condition;

use crate::config::DatasetConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Test,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ManifestEntry {
    /// Audio path relative to the dataset directory.
    pub file: String,
    pub con_state: u8,
    pub cha_state: u8,
    pub distance_m: f64,
    pub channel: String,
    pub split: Split,
    /// Seed of the scene that produced this sample.
    pub scene_seed: u64,
}

impl ManifestEntry {
    pub fn condition(&self) -> Condition {
        Condition::new(self.con_state == 1, self.cha_state == 1)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Manifest {
    pub seed: u64,
    pub sample_rate_hz: u32,
    pub window_len: usize,
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading manifest {}", path.display()))?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(self)?)
            .with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    pub fn train_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.split == Split::Train)
            .count()
    }

    pub fn test_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.split == Split::Test)
            .count()
    }

    /// Checks the manifest against the configured composition: per
    /// (distance, channel) cell, exact per-condition counts, all training
    /// entries normal, and the declared train/test totals.
    pub fn validate_composition(
        &self,
        dataset: &DatasetConfig,
        n_distances: usize,
        n_channels: usize,
    ) -> Result<()> {
        let cells = n_distances * n_channels;
        if self.entries.len() != cells * dataset.total() {
            bail!(
                "manifest has {} entries, expected {}",
                self.entries.len(),
                cells * dataset.total()
            );
        }
        for e in &self.entries {
            if e.split == Split::Train && !e.condition().is_normal() {
                bail!("training entry {} is not a normal sample", e.file);
            }
        }

        let mut per_cell: BTreeMap<(String, String), [usize; 4]> = BTreeMap::new();
        let mut train_per_cell: BTreeMap<(String, String), usize> = BTreeMap::new();
        for e in &self.entries {
            let key = (format!("{}", e.distance_m), e.channel.clone());
            let counts = per_cell.entry(key.clone()).or_insert([0; 4]);
            let idx = match (e.con_state, e.cha_state) {
                (0, 0) => 0,
                (0, 1) => 1,
                (1, 0) => 2,
                _ => 3,
            };
            counts[idx] += 1;
            if e.split == Split::Train {
                *train_per_cell.entry(key).or_insert(0) += 1;
            }
        }
        if per_cell.len() != cells {
            bail!("manifest covers {} cells, expected {cells}", per_cell.len());
        }
        for (cell, counts) in &per_cell {
            let expected = [
                dataset.normal,
                dataset.cha_anomaly,
                dataset.con_anomaly,
                dataset.both_anomaly,
            ];
            if *counts != expected {
                bail!("cell {cell:?}: condition counts {counts:?}, expected {expected:?}");
            }
            let trains = train_per_cell.get(cell).copied().unwrap_or(0);
            if trains != dataset.training_normals {
                bail!(
                    "cell {cell:?}: {trains} training samples, expected {}",
                    dataset.training_normals
                );
            }
        }
        Ok(())
    }
}
