//! On-disk artifact formats: the feature CSV, serialized models, metrics and
//! sweep tables, and the anomaly scatter. All CSVs are UTF-8, comma
//! separated, and headered; report floats carry six significant digits,
//! while the feature CSV keeps full round-trip precision because models are
//! trained from it.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use qkad_core::ar::FeatureVector;
use qkad_core::eval::{Quadrant, ScatterPoint};
use qkad_core::kernel::GramMatrix;
use qkad_core::signal::Condition;
use qkad_core::svm::OcSvmModel;

use crate::manifest::Split;

/// Formats a float with six significant digits (report artifacts only).
pub fn fmt_sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Hex SHA-256 of a file's bytes; ties models to the exact feature CSV they
/// were trained from.
pub fn file_digest(path: &Path) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let hash = Sha256::digest(&bytes);
    Ok(hash.iter().fold(String::new(), |mut acc, b| {
        let _ = write!(acc, "{b:02x}");
        acc
    }))
}

// ---------------------------------------------------------------------------
// Feature CSV
// ---------------------------------------------------------------------------

/// One extracted feature row with its provenance columns.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRow {
    pub phi: Vec<f64>,
    pub condition: Condition,
    pub distance_m: f64,
    pub channel: String,
    pub split: Split,
}

impl FeatureRow {
    pub fn feature_vector(&self) -> FeatureVector {
        FeatureVector::with_label(self.phi.clone(), self.condition)
    }
}

pub fn write_features_csv(path: &Path, rows: &[FeatureRow], order: usize) -> Result<()> {
    let mut out = String::new();
    for k in 1..=order {
        let _ = write!(out, "phi_{k},");
    }
    out.push_str("con_state,cha_state,distance_m,channel,split\n");
    for row in rows {
        if row.phi.len() != order {
            bail!(
                "feature row has {} coefficients, expected {order}",
                row.phi.len()
            );
        }
        for v in &row.phi {
            let _ = write!(out, "{v},");
        }
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.condition.con_anomalous as u8,
            row.condition.cha_anomalous as u8,
            row.distance_m,
            row.channel,
            match row.split {
                Split::Train => "train",
                Split::Test => "test",
            }
        );
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn read_features_csv(path: &Path) -> Result<Vec<FeatureRow>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading features {}", path.display()))?;
    let mut lines = text.lines();
    let header = lines.next().context("empty feature CSV")?;
    let columns: Vec<&str> = header.split(',').collect();
    let order = columns.iter().take_while(|c| c.starts_with("phi_")).count();
    if order == 0 || columns.len() != order + 5 {
        bail!("unrecognized feature CSV header: {header}");
    }

    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns.len() {
            bail!(
                "line {}: {} fields, expected {}",
                lineno + 2,
                fields.len(),
                columns.len()
            );
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .with_context(|| format!("line {}: bad number {s:?}", lineno + 2))
        };
        let phi = fields[..order]
            .iter()
            .map(|s| parse(s))
            .collect::<Result<Vec<f64>>>()?;
        let con = fields[order] == "1";
        let cha = fields[order + 1] == "1";
        let distance_m = parse(fields[order + 2])?;
        let channel = fields[order + 3].to_string();
        let split = match fields[order + 4] {
            "train" => Split::Train,
            "test" => Split::Test,
            other => bail!("line {}: bad split {other:?}", lineno + 2),
        };
        rows.push(FeatureRow {
            phi,
            condition: Condition::new(con, cha),
            distance_m,
            channel,
            split,
        });
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Model files
// ---------------------------------------------------------------------------

/// A trained per-cell model with everything needed to reload and predict:
/// the solved SVM (coefficients, offset, kernel and feature-map
/// configuration, standardizer statistics), the raw training features its
/// kernel rows are computed against, and a digest of the feature CSV for
/// consistency checks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelFile {
    pub distance_m: f64,
    pub channel: String,
    pub kernel: String,
    pub model: OcSvmModel,
    /// Raw (unstandardized) training feature rows, in training order.
    pub train_features: Vec<Vec<f64>>,
    /// Hex SHA-256 of the feature CSV the model was trained from.
    pub features_digest: String,
}

impl ModelFile {
    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(self)?)
            .with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading model {}", path.display()))?;
        Ok(serde_json::from_str(&text)?)
    }
}

// ---------------------------------------------------------------------------
// Report CSVs
// ---------------------------------------------------------------------------

/// One row of the per-cell metrics table.
#[derive(Debug, Clone)]
pub struct MetricsRow {
    pub distance_m: f64,
    pub channel: String,
    pub kernel: String,
    pub accuracy: f64,
    pub f1: f64,
    pub true_positive: usize,
    pub false_negative: usize,
    pub false_positive: usize,
    pub true_negative: usize,
}

/// Table of per-cell metrics (one row per distance x channel x kernel).
pub fn write_metrics_csv(path: &Path, rows: &[MetricsRow]) -> Result<()> {
    let mut out = String::from("distance_m,channel,kernel,accuracy,f1,tp,fn,fp,tn\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.distance_m,
            r.channel,
            r.kernel,
            fmt_sig6(r.accuracy),
            fmt_sig6(r.f1),
            r.true_positive,
            r.false_negative,
            r.false_positive,
            r.true_negative
        );
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Incremental-feature sweep table.
pub fn write_sweep_csv(path: &Path, rows: &[(String, usize, f64, f64)]) -> Result<()> {
    let mut out = String::from("kernel,k,accuracy,f1\n");
    for (kernel, k, acc, f1) in rows {
        let _ = writeln!(out, "{kernel},{k},{},{}", fmt_sig6(*acc), fmt_sig6(*f1));
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Scatter CSV
// ---------------------------------------------------------------------------

/// Projects anomaly-flagged samples onto the standardized (phi_3, phi_4)
/// plane and writes them as CSV in one step.
pub fn scatter_export(
    samples: &[(qkad_core::ar::FeatureVector, Condition, bool)],
    standardizer: &qkad_core::kernel::Standardizer,
    path: &Path,
) -> Result<()> {
    let points = qkad_core::eval::scatter_points(samples, standardizer)
        .map_err(|e| anyhow::anyhow!("scatter: {e}"))?;
    write_scatter_csv(path, &points)
}

pub fn write_scatter_csv(path: &Path, points: &[ScatterPoint]) -> Result<()> {
    let mut out = String::from("x3,x4,con_state,cha_state,predicted,quadrant\n");
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            fmt_sig6(p.x3),
            fmt_sig6(p.x4),
            p.condition.con_anomalous as u8,
            p.condition.cha_anomalous as u8,
            p.predicted_anomaly as u8,
            p.quadrant
        );
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn read_scatter_csv(path: &Path) -> Result<Vec<ScatterPoint>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading scatter {}", path.display()))?;
    let mut lines = text.lines();
    let header = lines.next().context("empty scatter CSV")?;
    if header != "x3,x4,con_state,cha_state,predicted,quadrant" {
        bail!("unrecognized scatter header: {header}");
    }
    let mut out = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 6 {
            bail!("bad scatter row: {line}");
        }
        let quadrant = match f[5] {
            "I" => Quadrant::I,
            "II" => Quadrant::II,
            "III" => Quadrant::III,
            "IV" => Quadrant::IV,
            "origin" => Quadrant::Origin,
            other => bail!("bad quadrant {other:?}"),
        };
        out.push(ScatterPoint {
            x3: f[0].parse()?,
            x4: f[1].parse()?,
            condition: Condition::new(f[2] == "1", f[3] == "1"),
            predicted_anomaly: f[4] == "1",
            quadrant,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Gram dump
// ---------------------------------------------------------------------------

/// Row-major Gram CSV with the sample ids as header.
pub fn write_gram_csv(path: &Path, gram: &GramMatrix) -> Result<()> {
    let mut out = gram.sample_ids.join(",");
    out.push('\n');
    for i in 0..gram.n() {
        let row: Vec<String> = gram.row(i).iter().map(|v| fmt_sig6(*v)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
