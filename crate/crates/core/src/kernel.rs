//! Kernels over AR-coefficient feature vectors: the classical RBF kernel and
//! the quantum fidelity kernel, plus feature standardization, Gram-matrix
//! assembly with PSD validation, and one-class cross-validation for the RBF
//! bandwidth.
//!
//! Both kernels are normalized (self-similarity 1) and take values in
//! [0, 1]. Standardization statistics must come from training data only;
//! the pipeline is responsible for never fitting them on test rows.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ar::FeatureVector;
use crate::linalg;
use crate::quantum::{self, FeatureMapConfig, QuantumError, QuantumState};
use crate::svm::{self, OcSvmConfig, SvmError};

#[allow(unused_imports)]
use num_traits::Float as _;

/// Gram matrices are accepted while their smallest eigenvalue stays above
/// this bound; chosen above accumulated double-precision round-off at
/// n = 200.
pub const PSD_TOLERANCE: f64 = -1e-8;

/// Default bandwidth grid for [`select_gamma`].
pub const DEFAULT_GAMMA_GRID: [f64; 6] = [0.01, 0.1, 0.5, 1.0, 2.0, 10.0];

#[derive(Debug, Clone, PartialEq)]
pub enum KernelError {
    EmptyInput,
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
    InvalidGamma {
        gamma: f64,
    },
    /// Gram matrix failed the PSD check; carries the offending eigenvalue.
    NotPositiveSemidefinite {
        min_eigenvalue: f64,
    },
    /// Cross-validation needs at least this many training samples.
    TooFewSamples {
        have: usize,
        need: usize,
    },
    EmptyGrid,
    Quantum(QuantumError),
    Svm(SvmError),
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyInput => write!(f, "empty sample set"),
            Self::DimensionMismatch { expected, got } => {
                write!(
                    f,
                    "feature dimension mismatch: expected {expected}, got {got}"
                )
            }
            Self::InvalidGamma { gamma } => write!(f, "gamma must be positive, got {gamma}"),
            Self::NotPositiveSemidefinite { min_eigenvalue } => write!(
                f,
                "Gram matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})"
            ),
            Self::TooFewSamples { have, need } => {
                write!(f, "need at least {need} samples, got {have}")
            }
            Self::EmptyGrid => write!(f, "bandwidth grid is empty"),
            Self::Quantum(e) => write!(f, "feature map: {e}"),
            Self::Svm(e) => write!(f, "cross-validation solver: {e}"),
        }
    }
}

impl core::error::Error for KernelError {}

impl From<QuantumError> for KernelError {
    fn from(e: QuantumError) -> Self {
        Self::Quantum(e)
    }
}

impl From<SvmError> for KernelError {
    fn from(e: SvmError) -> Self {
        Self::Svm(e)
    }
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

/// Which kernel to evaluate, with its kind-specific parameters.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum KernelKind {
    Rbf { gamma: f64 },
    Quantum { feature_map: FeatureMapConfig },
}

impl KernelKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Rbf { .. } => "rbf",
            Self::Quantum { .. } => "quantum",
        }
    }
}

/// Kernel selection plus the standardization switch.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KernelConfig {
    pub kind: KernelKind,
    /// Z-score features with training statistics before evaluation.
    pub standardize: bool,
}

impl KernelConfig {
    pub fn rbf(gamma: f64) -> Self {
        Self {
            kind: KernelKind::Rbf { gamma },
            standardize: true,
        }
    }

    pub fn quantum(feature_map: FeatureMapConfig) -> Self {
        Self {
            kind: KernelKind::Quantum { feature_map },
            standardize: true,
        }
    }
}

// ---------------------------------------------------------------------------
// Standardization
// ---------------------------------------------------------------------------

/// Per-dimension z-score transform fitted on training data (population
/// statistics). Dimensions with zero spread keep their mean but divide by 1,
/// and are flagged in `degenerate`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Standardizer {
    pub means: Vec<f64>,
    pub stds: Vec<f64>,
    pub degenerate: Vec<bool>,
}

impl Standardizer {
    /// Fits means and population (1/N) standard deviations.
    pub fn fit(train: &[FeatureVector]) -> Result<Self, KernelError> {
        let first = train.first().ok_or(KernelError::EmptyInput)?;
        let d = first.dim();
        for fv in train {
            if fv.dim() != d {
                return Err(KernelError::DimensionMismatch {
                    expected: d,
                    got: fv.dim(),
                });
            }
        }
        let n = train.len() as f64;
        let mut means = alloc::vec![0.0; d];
        for fv in train {
            for (m, v) in means.iter_mut().zip(&fv.values) {
                *m += v;
            }
        }
        for m in means.iter_mut() {
            *m /= n;
        }
        let mut stds = alloc::vec![0.0; d];
        for fv in train {
            for ((s, v), m) in stds.iter_mut().zip(&fv.values).zip(&means) {
                let dev = v - m;
                *s += dev * dev;
            }
        }
        let mut degenerate = alloc::vec![false; d];
        for (s, flag) in stds.iter_mut().zip(degenerate.iter_mut()) {
            *s = (*s / n).sqrt();
            if !(*s > 0.0) {
                *s = 1.0;
                *flag = true;
            }
        }
        Ok(Self {
            means,
            stds,
            degenerate,
        })
    }

    /// Pass-through transform of the given dimension.
    pub fn identity(d: usize) -> Self {
        Self {
            means: alloc::vec![0.0; d],
            stds: alloc::vec![1.0; d],
            degenerate: alloc::vec![false; d],
        }
    }

    /// Restriction to the first `k` dimensions (for feature sweeps).
    pub fn truncated(&self, k: usize) -> Self {
        Self {
            means: self.means[..k].to_vec(),
            stds: self.stds[..k].to_vec(),
            degenerate: self.degenerate[..k].to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.means.len()
    }

    pub fn apply(&self, values: &[f64]) -> Result<Vec<f64>, KernelError> {
        if values.len() != self.dim() {
            return Err(KernelError::DimensionMismatch {
                expected: self.dim(),
                got: values.len(),
            });
        }
        Ok(values
            .iter()
            .zip(self.means.iter().zip(&self.stds))
            .map(|(v, (m, s))| (v - m) / s)
            .collect())
    }
}

/// Convenience alias for fitting on a training slice.
pub fn fit_standardizer(train: &[FeatureVector]) -> Result<Standardizer, KernelError> {
    Standardizer::fit(train)
}

// ---------------------------------------------------------------------------
// Kernel evaluations
// ---------------------------------------------------------------------------

/// `exp(-gamma * ||x - y||^2)`.
pub fn rbf_kernel(x: &[f64], y: &[f64], gamma: f64) -> Result<f64, KernelError> {
    if x.len() != y.len() {
        return Err(KernelError::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    if !(gamma > 0.0) {
        return Err(KernelError::InvalidGamma { gamma });
    }
    let dist_sq: f64 = x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok((-gamma * dist_sq).exp())
}

/// Fidelity between the feature-map encodings of two raw vectors:
/// `|<phi(y)|phi(x)>|^2`.
pub fn quantum_kernel(
    x: &FeatureVector,
    y: &FeatureVector,
    cfg: &FeatureMapConfig,
) -> Result<f64, KernelError> {
    let a = quantum::feature_map_state(&x.values, cfg)?;
    let b = quantum::feature_map_state(&y.values, cfg)?;
    Ok(quantum::fidelity(&a, &b)?)
}

/// Per-sample precomputation so Gram assembly is O(n) encodings plus O(n^2)
/// inner products.
enum Prepared {
    Rbf { gamma: f64, vectors: Vec<Vec<f64>> },
    Quantum { states: Vec<QuantumState> },
}

impl Prepared {
    fn build(
        samples: &[FeatureVector],
        cfg: &KernelConfig,
        std: &Standardizer,
    ) -> Result<Self, KernelError> {
        let mut vectors = Vec::with_capacity(samples.len());
        for fv in samples {
            let v = if cfg.standardize {
                std.apply(&fv.values)?
            } else {
                if fv.dim() != std.dim() {
                    return Err(KernelError::DimensionMismatch {
                        expected: std.dim(),
                        got: fv.dim(),
                    });
                }
                fv.values.clone()
            };
            vectors.push(v);
        }
        match &cfg.kind {
            KernelKind::Rbf { gamma } => {
                if !(*gamma > 0.0) {
                    return Err(KernelError::InvalidGamma { gamma: *gamma });
                }
                Ok(Self::Rbf {
                    gamma: *gamma,
                    vectors,
                })
            }
            KernelKind::Quantum { feature_map } => {
                let mut states = Vec::with_capacity(vectors.len());
                for v in &vectors {
                    states.push(quantum::feature_map_state(v, feature_map)?);
                }
                Ok(Self::Quantum { states })
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            Self::Rbf { vectors, .. } => vectors.len(),
            Self::Quantum { states } => states.len(),
        }
    }

    fn eval(&self, i: usize, other: &Prepared, j: usize) -> Result<f64, KernelError> {
        match (self, other) {
            (Self::Rbf { gamma, vectors }, Self::Rbf { vectors: w, .. }) => {
                rbf_kernel(&vectors[i], &w[j], *gamma)
            }
            (Self::Quantum { states }, Self::Quantum { states: w }) => {
                Ok(quantum::fidelity(&states[i], &w[j])?)
            }
            // Both sides are always prepared from the same config.
            _ => unreachable!("mismatched kernel preparations"),
        }
    }
}

// ---------------------------------------------------------------------------
// Gram matrices
// ---------------------------------------------------------------------------

/// Symmetric kernel matrix over one sample set, tagged with the kernel
/// configuration that produced it. Construction validates symmetry by
/// building only the upper triangle and PSD-ness via the smallest
/// eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    values: Vec<f64>,
    n: usize,
    pub config: KernelConfig,
    pub sample_ids: Vec<String>,
}

impl GramMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn min_eigenvalue(&self) -> f64 {
        linalg::min_symmetric_eigenvalue(&self.values, self.n)
    }
}

/// Rectangular kernel matrix between a test set (rows) and the training set
/// (columns); no PSD constraint applies.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossGram {
    values: Vec<f64>,
    n_rows: usize,
    n_cols: usize,
}

impl CrossGram {
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n_cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n_cols..(i + 1) * self.n_cols]
    }
}

/// Assembles the kernel matrix of a sample set. Entries are computed for
/// `i <= j` and mirrored; the diagonal is pinned to exactly 1.
pub fn gram(
    samples: &[FeatureVector],
    cfg: &KernelConfig,
    std: &Standardizer,
) -> Result<GramMatrix, KernelError> {
    if samples.is_empty() {
        return Err(KernelError::EmptyInput);
    }
    let prepared = Prepared::build(samples, cfg, std)?;
    let n = prepared.len();
    let mut values = alloc::vec![0.0; n * n];
    for i in 0..n {
        values[i * n + i] = 1.0;
        for j in i + 1..n {
            let k = prepared.eval(i, &prepared, j)?;
            values[i * n + j] = k;
            values[j * n + i] = k;
        }
    }

    let min_eigenvalue = linalg::min_symmetric_eigenvalue(&values, n);
    if min_eigenvalue < PSD_TOLERANCE {
        return Err(KernelError::NotPositiveSemidefinite { min_eigenvalue });
    }

    Ok(GramMatrix {
        values,
        n,
        config: cfg.clone(),
        sample_ids: (0..n).map(|i| format!("{i}")).collect(),
    })
}

/// Kernel values between every test sample (row) and every training sample
/// (column).
pub fn gram_cross(
    test: &[FeatureVector],
    train: &[FeatureVector],
    cfg: &KernelConfig,
    std: &Standardizer,
) -> Result<CrossGram, KernelError> {
    if train.is_empty() {
        return Err(KernelError::EmptyInput);
    }
    let rows = Prepared::build(test, cfg, std)?;
    let cols = Prepared::build(train, cfg, std)?;
    let (n_rows, n_cols) = (rows.len(), cols.len());
    let mut values = Vec::with_capacity(n_rows * n_cols);
    for i in 0..n_rows {
        for j in 0..n_cols {
            values.push(rows.eval(i, &cols, j)?);
        }
    }
    Ok(CrossGram {
        values,
        n_rows,
        n_cols,
    })
}

// ---------------------------------------------------------------------------
// Bandwidth selection
// ---------------------------------------------------------------------------

/// One-class k-fold (k = 5) cross-validation for the RBF bandwidth.
///
/// For each candidate gamma, a one-class SVM is trained on k-1 folds of the
/// (normal-only) training set and scored by the acceptance rate on the
/// held-out fold. The gamma maximizing mean held-out acceptance wins,
/// subject to a mean support-vector fraction of at most `2 * nu` (guarding
/// against trivially tight boundaries); ties break toward the smaller
/// gamma. `standardize` must match the kernel configuration the selected
/// gamma will be used with; when set, statistics are refitted inside each
/// fold. Deterministic: folds are contiguous index ranges.
pub fn select_gamma(
    train: &[FeatureVector],
    grid: &[f64],
    svm_cfg: &OcSvmConfig,
    standardize: bool,
) -> Result<f64, KernelError> {
    if grid.is_empty() {
        return Err(KernelError::EmptyGrid);
    }
    let n = train.len();
    if n < 10 {
        return Err(KernelError::TooFewSamples { have: n, need: 10 });
    }
    for &g in grid {
        if !(g > 0.0) {
            return Err(KernelError::InvalidGamma { gamma: g });
        }
    }

    let mut candidates: Vec<f64> = grid.to_vec();
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("gamma is NaN"));
    candidates.dedup();

    const FOLDS: usize = 5;
    let mut scored: Vec<(f64, f64, f64)> = Vec::with_capacity(candidates.len());
    for &gamma in &candidates {
        let mut acceptance_sum = 0.0;
        let mut sv_fraction_sum = 0.0;
        for fold in 0..FOLDS {
            let lo = fold * n / FOLDS;
            let hi = (fold + 1) * n / FOLDS;
            let held: Vec<FeatureVector> = train[lo..hi].to_vec();
            let mut fit: Vec<FeatureVector> = train[..lo].to_vec();
            fit.extend_from_slice(&train[hi..]);

            let std = Standardizer::fit(&fit)?;
            let cfg = KernelConfig {
                kind: KernelKind::Rbf { gamma },
                standardize,
            };
            let k_train = gram(&fit, &cfg, &std)?;
            let model = svm::train(&k_train, svm_cfg, &std)?;
            let k_cross = gram_cross(&held, &fit, &cfg, &std)?;
            let preds = svm::predict_batch(&model, &k_cross)?;
            let accepted = preds.iter().filter(|&&anomalous| !anomalous).count();
            acceptance_sum += accepted as f64 / held.len().max(1) as f64;
            sv_fraction_sum += model.support_indices.len() as f64 / fit.len() as f64;
        }
        scored.push((
            gamma,
            acceptance_sum / FOLDS as f64,
            sv_fraction_sum / FOLDS as f64,
        ));
    }

    let pick_best = |rows: &[(f64, f64, f64)]| -> Option<f64> {
        let mut best: Option<(f64, f64)> = None;
        for &(gamma, acceptance, _) in rows {
            match best {
                Some((_, best_acc)) if acceptance <= best_acc => {}
                _ => best = Some((gamma, acceptance)),
            }
        }
        best.map(|(g, _)| g)
    };

    let feasible: Vec<(f64, f64, f64)> = scored
        .iter()
        .copied()
        .filter(|&(_, _, sv_frac)| sv_frac <= 2.0 * svm_cfg.nu + 1e-12)
        .collect();

    // If the support-vector guard rules out every candidate, fall back to
    // plain acceptance maximization over the full grid.
    let chosen = pick_best(&feasible)
        .or_else(|| pick_best(&scored))
        .expect("non-empty grid");
    Ok(chosen)
}
