//! Detection quality evaluation: confusion matrices with an explicit
//! positive-class convention, derived metrics, per-condition breakdowns, the
//! incremental-feature sweep, and the two-dimensional quadrant diagnosis
//! that attributes a flagged anomaly to a machine.
//!
//! Headline metrics treat anomaly as the positive class (standard for
//! anomaly detection); the confusion operation takes the convention
//! explicitly and every report records which one was used, so results under
//! either reading stay comparable.

use alloc::vec::Vec;
use core::fmt;

use crate::ar::FeatureVector;
use crate::kernel::{self, KernelConfig, KernelError, KernelKind, Standardizer};
use crate::signal::{Condition, MachineId};
use crate::svm::{self, OcSvmConfig, SvmError};

#[allow(unused_imports)]
use num_traits::Float as _;

/// Coordinates closer to zero than this are treated as lying on an axis.
pub const QUADRANT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    LengthMismatch {
        preds: usize,
        labels: usize,
    },
    EmptyInput,
    /// Quadrant diagnosis needs at least four feature dimensions.
    DimensionTooSmall {
        have: usize,
        need: usize,
    },
    Kernel(KernelError),
    Svm(SvmError),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LengthMismatch { preds, labels } => {
                write!(f, "{preds} predictions vs {labels} labels")
            }
            Self::EmptyInput => write!(f, "empty evaluation input"),
            Self::DimensionTooSmall { have, need } => {
                write!(f, "need {need} feature dimensions, got {have}")
            }
            Self::Kernel(e) => write!(f, "kernel: {e}"),
            Self::Svm(e) => write!(f, "svm: {e}"),
        }
    }
}

impl core::error::Error for EvalError {}

impl From<KernelError> for EvalError {
    fn from(e: KernelError) -> Self {
        Self::Kernel(e)
    }
}

impl From<SvmError> for EvalError {
    fn from(e: SvmError) -> Self {
        Self::Svm(e)
    }
}

// ---------------------------------------------------------------------------
// Confusion matrix and metrics
// ---------------------------------------------------------------------------

/// Which class counts as "positive" in a confusion matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PositiveClass {
    Normal,
    Anomaly,
}

impl fmt::Display for PositiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Normal => write!(f, "normal"),
            Self::Anomaly => write!(f, "anomaly"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConfusionMatrix {
    pub true_positive: usize,
    pub false_negative: usize,
    pub false_positive: usize,
    pub true_negative: usize,
    pub positive_class: PositiveClass,
}

impl ConfusionMatrix {
    pub fn total(&self) -> usize {
        self.true_positive + self.false_negative + self.false_positive + self.true_negative
    }

    /// The same counts under the opposite positive-class convention.
    pub fn relabeled(&self) -> Self {
        Self {
            true_positive: self.true_negative,
            false_negative: self.false_positive,
            false_positive: self.false_negative,
            true_negative: self.true_positive,
            positive_class: match self.positive_class {
                PositiveClass::Normal => PositiveClass::Anomaly,
                PositiveClass::Anomaly => PositiveClass::Normal,
            },
        }
    }

    fn add(&mut self, other: &ConfusionMatrix) {
        self.true_positive += other.true_positive;
        self.false_negative += other.false_negative;
        self.false_positive += other.false_positive;
        self.true_negative += other.true_negative;
    }
}

/// Tallies predictions against labels. Both slices mark anomalies with
/// `true`; `positive_class` decides which side lands in the TP cell.
pub fn confusion(
    preds: &[bool],
    labels: &[bool],
    positive_class: PositiveClass,
) -> Result<ConfusionMatrix, EvalError> {
    if preds.len() != labels.len() {
        return Err(EvalError::LengthMismatch {
            preds: preds.len(),
            labels: labels.len(),
        });
    }
    if preds.is_empty() {
        return Err(EvalError::EmptyInput);
    }
    let as_positive = |anomalous: bool| match positive_class {
        PositiveClass::Anomaly => anomalous,
        PositiveClass::Normal => !anomalous,
    };
    let mut cm = ConfusionMatrix {
        true_positive: 0,
        false_negative: 0,
        false_positive: 0,
        true_negative: 0,
        positive_class,
    };
    for (&p, &l) in preds.iter().zip(labels) {
        match (as_positive(l), as_positive(p)) {
            (true, true) => cm.true_positive += 1,
            (true, false) => cm.false_negative += 1,
            (false, true) => cm.false_positive += 1,
            (false, false) => cm.true_negative += 1,
        }
    }
    Ok(cm)
}

/// Per-condition slice of a test run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConditionBreakdown {
    pub condition: Condition,
    pub matrix: ConfusionMatrix,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetricsReport {
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub positive_class: PositiveClass,
    /// Per-condition confusion counts; empty when the report was derived
    /// from a bare matrix. The per-condition counts sum to the overall
    /// matrix.
    pub breakdown: Vec<ConditionBreakdown>,
}

/// Standard metric formulas with the 0/0 -> 0 convention for degenerate
/// ratios.
pub fn metrics(cm: &ConfusionMatrix) -> Result<MetricsReport, EvalError> {
    let total = cm.total();
    if total == 0 {
        return Err(EvalError::EmptyInput);
    }
    let ratio = |num: usize, den: usize| {
        if den == 0 {
            0.0
        } else {
            num as f64 / den as f64
        }
    };
    let accuracy = (cm.true_positive + cm.true_negative) as f64 / total as f64;
    let precision = ratio(cm.true_positive, cm.true_positive + cm.false_positive);
    let recall = ratio(cm.true_positive, cm.true_positive + cm.false_negative);
    let f1 = if precision + recall > 0.0 {
        2.0 * precision * recall / (precision + recall)
    } else {
        0.0
    };
    Ok(MetricsReport {
        accuracy,
        precision,
        recall,
        f1,
        positive_class: cm.positive_class,
        breakdown: Vec::new(),
    })
}

/// Metrics plus the per-condition confusion breakdown.
pub fn metrics_with_conditions(
    preds: &[bool],
    labels: &[bool],
    conditions: &[Condition],
    positive_class: PositiveClass,
) -> Result<MetricsReport, EvalError> {
    if conditions.len() != preds.len() {
        return Err(EvalError::LengthMismatch {
            preds: preds.len(),
            labels: conditions.len(),
        });
    }
    let overall = confusion(preds, labels, positive_class)?;
    let mut report = metrics(&overall)?;

    for condition in Condition::all() {
        let idx: Vec<usize> = (0..preds.len())
            .filter(|&i| conditions[i] == condition)
            .collect();
        if idx.is_empty() {
            continue;
        }
        let p: Vec<bool> = idx.iter().map(|&i| preds[i]).collect();
        let l: Vec<bool> = idx.iter().map(|&i| labels[i]).collect();
        report.breakdown.push(ConditionBreakdown {
            condition,
            matrix: confusion(&p, &l, positive_class)?,
        });
    }

    // Conservation check: condition-wise counts must tally to the overall
    // matrix whenever every sample carries one of the four conditions.
    let mut sum = ConfusionMatrix {
        true_positive: 0,
        false_negative: 0,
        false_positive: 0,
        true_negative: 0,
        positive_class,
    };
    for b in &report.breakdown {
        sum.add(&b.matrix);
    }
    debug_assert_eq!(sum.total(), overall.total());

    Ok(report)
}

// ---------------------------------------------------------------------------
// Quadrant diagnosis
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Quadrant {
    I,
    II,
    III,
    IV,
    Origin,
}

impl Quadrant {
    pub fn name(&self) -> &'static str {
        match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
            Self::Origin => "origin",
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Where a sample falls in the standardized (phi_3, phi_4) plane and which
/// machine that location implicates: quadrant II points at the conveyor,
/// quadrant IV at the chain belt, anywhere else at nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadrantDiagnosis {
    pub quadrant: Quadrant,
    pub implicated: Option<MachineId>,
}

/// Classifies standardized feature coordinates by the signs of the third
/// and fourth entries. Points within [`QUADRANT_EPS`] of either axis are
/// reported as origin and implicate nothing.
pub fn quadrant_classify(standardized: &[f64]) -> Result<QuadrantDiagnosis, EvalError> {
    if standardized.len() < 4 {
        return Err(EvalError::DimensionTooSmall {
            have: standardized.len(),
            need: 4,
        });
    }
    let x = standardized[2];
    let y = standardized[3];
    let quadrant = if x.abs() < QUADRANT_EPS || y.abs() < QUADRANT_EPS {
        Quadrant::Origin
    } else {
        match (x > 0.0, y > 0.0) {
            (true, true) => Quadrant::I,
            (false, true) => Quadrant::II,
            (false, false) => Quadrant::III,
            (true, false) => Quadrant::IV,
        }
    };
    let implicated = match quadrant {
        Quadrant::II => Some(MachineId::Con),
        Quadrant::IV => Some(MachineId::Cha),
        _ => None,
    };
    Ok(QuadrantDiagnosis {
        quadrant,
        implicated,
    })
}

/// One row of the anomaly scatter: standardized (phi_3, phi_4) coordinates
/// of a sample the detector flagged, with its true condition.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScatterPoint {
    pub x3: f64,
    pub x4: f64,
    pub condition: Condition,
    pub predicted_anomaly: bool,
    pub quadrant: Quadrant,
}

/// Projects anomaly-flagged samples onto the standardized (phi_3, phi_4)
/// plane; samples predicted normal are dropped.
pub fn scatter_points(
    samples: &[(FeatureVector, Condition, bool)],
    standardizer: &Standardizer,
) -> Result<Vec<ScatterPoint>, EvalError> {
    let mut out = Vec::new();
    for (fv, condition, predicted_anomaly) in samples {
        if !predicted_anomaly {
            continue;
        }
        let z = standardizer.apply(&fv.values)?;
        let diag = quadrant_classify(&z)?;
        out.push(ScatterPoint {
            x3: z[2],
            x4: z[3],
            condition: *condition,
            predicted_anomaly: true,
            quadrant: diag.quadrant,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Incremental-feature sweep
// ---------------------------------------------------------------------------

/// Accuracy/F1 of the pipeline restricted to the first `k` coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepPoint {
    pub k: usize,
    pub accuracy: f64,
    pub f1: f64,
}

fn truncate(features: &[FeatureVector], k: usize) -> Vec<FeatureVector> {
    features
        .iter()
        .map(|fv| FeatureVector {
            values: fv.values[..k].to_vec(),
            label: fv.label,
        })
        .collect()
}

/// Re-runs standardize/train/score with only the first `k = 1..=d`
/// coefficients; the quantum map shrinks to `k` qubits with the rest of its
/// configuration unchanged. The `k = d` row reproduces the full pipeline
/// exactly. Metrics use the anomaly-positive convention.
pub fn feature_sweep(
    train: &[FeatureVector],
    test: &[FeatureVector],
    labels: &[bool],
    kernel_cfg: &KernelConfig,
    svm_cfg: &OcSvmConfig,
) -> Result<Vec<SweepPoint>, EvalError> {
    let d = match train.first() {
        Some(fv) => fv.dim(),
        None => return Err(EvalError::EmptyInput),
    };
    if labels.len() != test.len() {
        return Err(EvalError::LengthMismatch {
            preds: test.len(),
            labels: labels.len(),
        });
    }

    let mut out = Vec::with_capacity(d);
    for k in 1..=d {
        let train_k = truncate(train, k);
        let test_k = truncate(test, k);
        let std = Standardizer::fit(&train_k)?;
        let cfg_k = KernelConfig {
            kind: match &kernel_cfg.kind {
                KernelKind::Rbf { gamma } => KernelKind::Rbf { gamma: *gamma },
                KernelKind::Quantum { feature_map } => KernelKind::Quantum {
                    feature_map: feature_map.with_qubits(k),
                },
            },
            standardize: kernel_cfg.standardize,
        };
        let g = kernel::gram(&train_k, &cfg_k, &std)?;
        let model = svm::train(&g, svm_cfg, &std)?;
        let cross = kernel::gram_cross(&test_k, &train_k, &cfg_k, &std)?;
        let preds = svm::predict_batch(&model, &cross)?;
        let cm = confusion(&preds, labels, PositiveClass::Anomaly)?;
        let report = metrics(&cm)?;
        out.push(SweepPoint {
            k,
            accuracy: report.accuracy,
            f1: report.f1,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::FeatureMapConfig;
    use alloc::vec;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gauss(rng: &mut ChaCha8Rng) -> f64 {
        let (u1, u2): (f64, f64) = (1.0 - rng.gen::<f64>(), rng.gen());
        (-2.0 * u1.ln()).sqrt() * (2.0 * core::f64::consts::PI * u2).cos()
    }

    #[test]
    fn perfect_predictor_confusion() {
        let labels: Vec<bool> = [vec![false; 20], vec![true; 90]].concat();
        let cm = confusion(&labels, &labels, PositiveClass::Normal).unwrap();
        assert_eq!(cm.true_positive, 20);
        assert_eq!(cm.false_negative, 0);
        assert_eq!(cm.false_positive, 0);
        assert_eq!(cm.true_negative, 90);
    }

    #[test]
    fn reported_matrix_reconstructed_from_predictions() {
        // 20 normals all predicted normal, 30 of 90 anomalies predicted
        // normal: tp=20, fn=0, fp=30, tn=60 under the normal-positive
        // convention.
        let labels: Vec<bool> = [vec![false; 20], vec![true; 90]].concat();
        let mut preds = labels.clone();
        for p in preds.iter_mut().skip(20).take(30) {
            *p = false;
        }
        let cm = confusion(&preds, &labels, PositiveClass::Normal).unwrap();
        assert_eq!(
            (
                cm.true_positive,
                cm.false_negative,
                cm.false_positive,
                cm.true_negative
            ),
            (20, 0, 30, 60)
        );
    }

    #[test]
    fn all_anomaly_predictor() {
        let labels: Vec<bool> = [vec![false; 20], vec![true; 90]].concat();
        let preds = vec![true; 110];
        let cm = confusion(&preds, &labels, PositiveClass::Normal).unwrap();
        assert_eq!(cm.true_positive, 0);
        assert_eq!(cm.false_negative, 20);
        assert_eq!(cm.false_positive, 0);
        assert_eq!(cm.true_negative, 90);
    }

    #[test]
    fn metrics_of_reported_matrix_under_both_conventions() {
        let cm = ConfusionMatrix {
            true_positive: 20,
            false_negative: 0,
            false_positive: 30,
            true_negative: 60,
            positive_class: PositiveClass::Normal,
        };
        let m = metrics(&cm).unwrap();
        assert_abs_diff_eq!(m.accuracy, 80.0 / 110.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.recall, 1.0, epsilon = 0.0);
        assert_abs_diff_eq!(m.precision, 0.4, epsilon = 1e-12);
        assert_abs_diff_eq!(m.f1, 2.0 * 0.4 / 1.4, epsilon = 1e-12);

        let m2 = metrics(&cm.relabeled()).unwrap();
        assert_abs_diff_eq!(m2.accuracy, 80.0 / 110.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m2.f1, 0.8, epsilon = 1e-12);
    }

    #[test]
    fn metrics_trivial_cases() {
        let perfect = ConfusionMatrix {
            true_positive: 10,
            false_negative: 0,
            false_positive: 0,
            true_negative: 5,
            positive_class: PositiveClass::Anomaly,
        };
        let m = metrics(&perfect).unwrap();
        assert_eq!(
            (m.accuracy, m.precision, m.recall, m.f1),
            (1.0, 1.0, 1.0, 1.0)
        );

        let degenerate = ConfusionMatrix {
            true_positive: 0,
            false_negative: 3,
            false_positive: 0,
            true_negative: 7,
            positive_class: PositiveClass::Anomaly,
        };
        let m = metrics(&degenerate).unwrap();
        assert_eq!(m.precision, 0.0);
        assert_eq!(m.f1, 0.0);
    }

    #[test]
    fn f1_identity_holds() {
        let cm = ConfusionMatrix {
            true_positive: 13,
            false_negative: 7,
            false_positive: 4,
            true_negative: 30,
            positive_class: PositiveClass::Anomaly,
        };
        let m = metrics(&cm).unwrap();
        assert_abs_diff_eq!(
            m.f1 * (m.precision + m.recall),
            2.0 * m.precision * m.recall,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            m.accuracy * cm.total() as f64,
            (cm.true_positive + cm.true_negative) as f64,
            epsilon = 1e-9
        );
    }

    #[test]
    fn per_condition_breakdown_sums_to_overall() {
        let conditions: Vec<Condition> = Condition::all()
            .into_iter()
            .flat_map(|c| core::iter::repeat_n(c, 10))
            .collect();
        let labels: Vec<bool> = conditions.iter().map(|c| !c.is_normal()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let preds: Vec<bool> = labels
            .iter()
            .map(|&l| if rng.gen::<f64>() < 0.8 { l } else { !l })
            .collect();
        let report =
            metrics_with_conditions(&preds, &labels, &conditions, PositiveClass::Anomaly).unwrap();
        assert_eq!(report.breakdown.len(), 4);
        let overall = confusion(&preds, &labels, PositiveClass::Anomaly).unwrap();
        let sum: usize = report.breakdown.iter().map(|b| b.matrix.total()).sum();
        assert_eq!(sum, overall.total());
        let tp_sum: usize = report
            .breakdown
            .iter()
            .map(|b| b.matrix.true_positive)
            .sum();
        assert_eq!(tp_sum, overall.true_positive);
    }

    #[test]
    fn quadrant_mapping() {
        let q2 = quadrant_classify(&[0.0, 0.0, -1.0, 1.0]).unwrap();
        assert_eq!(q2.quadrant, Quadrant::II);
        assert_eq!(q2.implicated, Some(MachineId::Con));

        let q4 = quadrant_classify(&[0.0, 0.0, 1.0, -1.0]).unwrap();
        assert_eq!(q4.quadrant, Quadrant::IV);
        assert_eq!(q4.implicated, Some(MachineId::Cha));

        let origin = quadrant_classify(&[0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(origin.quadrant, Quadrant::Origin);
        assert_eq!(origin.implicated, None);

        let q1 = quadrant_classify(&[0.0, 0.0, 0.5, 2.0]).unwrap();
        assert_eq!(q1.quadrant, Quadrant::I);
        assert_eq!(q1.implicated, None);

        let q3 = quadrant_classify(&[0.0, 0.0, -0.5, -2.0]).unwrap();
        assert_eq!(q3.quadrant, Quadrant::III);
        assert_eq!(q3.implicated, None);

        assert!(matches!(
            quadrant_classify(&[1.0, 2.0, 3.0]),
            Err(EvalError::DimensionTooSmall { have: 3, need: 4 })
        ));
    }

    #[test]
    fn quadrants_partition_the_off_axis_plane() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let x: f64 = rng.gen_range(-3.0..3.0);
            let y: f64 = rng.gen_range(-3.0..3.0);
            if x.abs() < QUADRANT_EPS || y.abs() < QUADRANT_EPS {
                continue;
            }
            let q = quadrant_classify(&[0.0, 0.0, x, y]).unwrap().quadrant;
            let expected = match (x > 0.0, y > 0.0) {
                (true, true) => Quadrant::I,
                (false, true) => Quadrant::II,
                (false, false) => Quadrant::III,
                (true, false) => Quadrant::IV,
            };
            assert_eq!(q, expected);
        }
    }

    /// Train/test split where anomalies shift only one coordinate.
    fn shifted_blobs(
        shift_dim: usize,
        shift: f64,
        seed: u64,
    ) -> (Vec<FeatureVector>, Vec<FeatureVector>, Vec<bool>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = 5;
        let noise = 0.1;
        let point = |rng: &mut ChaCha8Rng, anomalous: bool| {
            let mut v: Vec<f64> = (0..d).map(|_| noise * gauss(rng)).collect();
            if anomalous {
                v[shift_dim] += shift;
            }
            FeatureVector::new(v)
        };
        let train: Vec<FeatureVector> = (0..40).map(|_| point(&mut rng, false)).collect();
        let mut test = Vec::new();
        let mut labels = Vec::new();
        for _ in 0..20 {
            test.push(point(&mut rng, false));
            labels.push(false);
        }
        for _ in 0..80 {
            test.push(point(&mut rng, true));
            labels.push(true);
        }
        (train, test, labels)
    }

    #[test]
    fn sweep_final_row_matches_full_pipeline() {
        let (train, test, labels) = shifted_blobs(2, 1.0, 9);
        let kernel_cfg = KernelConfig::quantum(FeatureMapConfig {
            angle_scale: 0.6,
            ..FeatureMapConfig::default()
        });
        let svm_cfg = OcSvmConfig::default();
        let sweep = feature_sweep(&train, &test, &labels, &kernel_cfg, &svm_cfg).unwrap();
        assert_eq!(sweep.len(), 5);
        assert_eq!(sweep[4].k, 5);

        // Full pipeline by hand.
        let std = Standardizer::fit(&train).unwrap();
        let g = kernel::gram(&train, &kernel_cfg, &std).unwrap();
        let model = svm::train(&g, &svm_cfg, &std).unwrap();
        let cross = kernel::gram_cross(&test, &train, &kernel_cfg, &std).unwrap();
        let preds = svm::predict_batch(&model, &cross).unwrap();
        let report = metrics(&confusion(&preds, &labels, PositiveClass::Anomaly).unwrap()).unwrap();
        assert_eq!(sweep[4].accuracy, report.accuracy);
        assert_eq!(sweep[4].f1, report.f1);
    }

    #[test]
    fn sweep_gains_accuracy_once_informative_feature_enters() {
        // Only the third coefficient separates the classes: with one
        // feature the detector cannot beat the always-normal rate by much,
        // with all five it should be nearly perfect.
        let (train, test, labels) = shifted_blobs(2, 1.2, 11);
        let kernel_cfg = KernelConfig::rbf(0.5);
        let svm_cfg = OcSvmConfig::default();
        let sweep = feature_sweep(&train, &test, &labels, &kernel_cfg, &svm_cfg).unwrap();
        assert!(
            sweep[0].accuracy < 0.5,
            "k=1 accuracy {}",
            sweep[0].accuracy
        );
        assert!(
            sweep[4].accuracy > 0.8,
            "k=5 accuracy {}",
            sweep[4].accuracy
        );
        assert!(sweep[4].accuracy >= sweep[0].accuracy);
    }

    #[test]
    fn scatter_points_keep_only_flagged_samples() {
        let std = Standardizer::identity(5);
        let samples = vec![
            (
                FeatureVector::new(vec![0.0, 0.0, -1.0, 1.0, 0.0]),
                Condition::new(true, false),
                true,
            ),
            (
                FeatureVector::new(vec![0.0, 0.0, 1.0, -1.0, 0.0]),
                Condition::new(false, true),
                true,
            ),
            (
                FeatureVector::new(vec![0.0, 0.0, 9.0, 9.0, 0.0]),
                Condition::NORMAL,
                false,
            ),
        ];
        let pts = scatter_points(&samples, &std).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].quadrant, Quadrant::II);
        assert_eq!(pts[1].quadrant, Quadrant::IV);
    }
}
