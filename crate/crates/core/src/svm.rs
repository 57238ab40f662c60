//! One-class nu-SVM over a precomputed Gram matrix.
//!
//! The dual problem is `min 1/2 a' K a` subject to `0 <= a_i <= 1/(nu n)`
//! and `sum a_i = 1`. It is solved by SMO-style pairwise coordinate updates
//! on the maximal-violating pair, which preserves the equality constraint
//! exactly. `nu` upper-bounds the fraction of training points scored as
//! outliers and lower-bounds the support-vector fraction.
//!
//! The decision function for a test sample with kernel row `k` is
//! `f = sum_i a_i k_i - rho`; `f >= 0` reads normal, `f < 0` anomalous
//! (boundary points count as normal).

use alloc::vec::Vec;
use core::fmt;

use crate::kernel::{CrossGram, GramMatrix, KernelConfig, Standardizer};

#[allow(unused_imports)]
use num_traits::Float as _;

#[derive(Debug, Clone, PartialEq)]
pub enum SvmError {
    /// Training needs at least two samples.
    TooFewSamples { have: usize },
    /// A Gram entry was NaN or infinite.
    NonFiniteGram { row: usize, col: usize },
    /// nu must lie in (0, 1].
    InvalidNu { nu: f64 },
    /// tol must be positive and max_iter nonzero.
    InvalidConfig,
    /// Kernel row length differs from the training size.
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for SvmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooFewSamples { have } => {
                write!(f, "one-class SVM needs at least 2 samples, got {have}")
            }
            Self::NonFiniteGram { row, col } => {
                write!(f, "non-finite Gram entry at ({row}, {col})")
            }
            Self::InvalidNu { nu } => write!(f, "nu must be in (0, 1], got {nu}"),
            Self::InvalidConfig => write!(f, "tol must be positive and max_iter nonzero"),
            Self::LengthMismatch { expected, got } => {
                write!(f, "kernel row has {got} entries, expected {expected}")
            }
        }
    }
}

impl core::error::Error for SvmError {}

/// Solver hyperparameters.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct OcSvmConfig {
    /// Upper bound on the training-outlier fraction, lower bound on the
    /// support-vector fraction.
    pub nu: f64,
    /// KKT violation threshold for convergence.
    pub tol: f64,
    /// Cap on pairwise updates; exhaustion is reported, never silent.
    pub max_iter: usize,
}

impl Default for OcSvmConfig {
    fn default() -> Self {
        Self {
            nu: 0.1,
            tol: 1e-6,
            max_iter: 100_000,
        }
    }
}

/// Terminal state of the solver.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Convergence {
    /// KKT violation dropped below tol after this many pairwise updates.
    Converged { iterations: usize },
    /// Iteration budget ran out; carries the residual KKT violation.
    MaxIterReached { kkt_violation: f64 },
}

impl Convergence {
    pub fn is_converged(&self) -> bool {
        matches!(self, Self::Converged { .. })
    }
}

/// A trained one-class SVM: dual coefficients, offset, and everything needed
/// to score new samples (kernel configuration and training standardizer).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OcSvmModel {
    /// Dual coefficients, one per training sample; sums to 1.
    pub alphas: Vec<f64>,
    /// Decision offset.
    pub rho: f64,
    /// Indices with `alpha > tol`.
    pub support_indices: Vec<usize>,
    pub config: OcSvmConfig,
    pub kernel_config: KernelConfig,
    pub standardizer: Standardizer,
    pub convergence: Convergence,
}

impl OcSvmModel {
    pub fn n_train(&self) -> usize {
        self.alphas.len()
    }
}

/// Dual objective `1/2 a' K a`; exposed for solver diagnostics and tests.
pub fn dual_objective(gram: &GramMatrix, alphas: &[f64]) -> f64 {
    let n = gram.n();
    let mut acc = 0.0;
    for i in 0..n {
        let row = gram.row(i);
        let mut dot = 0.0;
        for (j, &k) in row.iter().enumerate() {
            dot += alphas[j] * k;
        }
        acc += alphas[i] * dot;
    }
    0.5 * acc
}

/// Trains a one-class SVM on the Gram matrix of (normal-only) training
/// samples. The standardizer that produced the underlying features is
/// embedded in the model so it can be serialized and reused for scoring.
pub fn train(
    gram: &GramMatrix,
    cfg: &OcSvmConfig,
    standardizer: &Standardizer,
) -> Result<OcSvmModel, SvmError> {
    let n = gram.n();
    if n < 2 {
        return Err(SvmError::TooFewSamples { have: n });
    }
    if !(cfg.nu > 0.0 && cfg.nu <= 1.0) {
        return Err(SvmError::InvalidNu { nu: cfg.nu });
    }
    if !(cfg.tol > 0.0) || cfg.max_iter == 0 {
        return Err(SvmError::InvalidConfig);
    }
    for i in 0..n {
        for (j, &k) in gram.row(i).iter().enumerate() {
            if !k.is_finite() {
                return Err(SvmError::NonFiniteGram { row: i, col: j });
            }
        }
    }

    let upper = 1.0 / (cfg.nu * n as f64);

    // Feasible start in libsvm's style: the first floor(nu * n) coefficients
    // sit at the box bound, one fractional coefficient absorbs the rest.
    let mut alphas = alloc::vec![0.0; n];
    let n_at_bound = (cfg.nu * n as f64).floor() as usize;
    for a in alphas.iter_mut().take(n_at_bound.min(n)) {
        *a = upper;
    }
    if n_at_bound < n {
        alphas[n_at_bound] = 1.0 - n_at_bound as f64 * upper;
    }

    // Gradient of the objective: g = K a.
    let mut grad: Vec<f64> = (0..n)
        .map(|i| gram.row(i).iter().zip(&alphas).map(|(&k, &a)| k * a).sum())
        .collect();

    let bound_eps = upper * 1e-12;
    let mut convergence = Convergence::MaxIterReached {
        kkt_violation: f64::INFINITY,
    };

    for iter in 0..cfg.max_iter {
        // Maximal-violating pair: the steepest-descent candidate that can
        // grow (smallest gradient below the box bound) against the
        // steepest-ascent candidate that can shrink (largest gradient above
        // zero). First index wins ties, which keeps the solve deterministic
        // in the input order.
        let mut up: Option<usize> = None;
        let mut down: Option<usize> = None;
        for idx in 0..n {
            if alphas[idx] < upper - bound_eps && up.is_none_or(|u| grad[idx] < grad[u]) {
                up = Some(idx);
            }
            if alphas[idx] > bound_eps && down.is_none_or(|d| grad[idx] > grad[d]) {
                down = Some(idx);
            }
        }
        let (i, j) = match (up, down) {
            (Some(i), Some(j)) => (i, j),
            // No movable pair: the box pins every coefficient.
            _ => {
                convergence = Convergence::Converged { iterations: iter };
                break;
            }
        };

        let violation = grad[j] - grad[i];
        if violation < cfg.tol {
            convergence = Convergence::Converged { iterations: iter };
            break;
        }
        if iter + 1 == cfg.max_iter {
            convergence = Convergence::MaxIterReached {
                kkt_violation: violation,
            };
        }

        // One-dimensional Newton step along e_i - e_j, clipped to the box.
        let curvature = (gram.get(i, i) + gram.get(j, j) - 2.0 * gram.get(i, j)).max(1e-12);
        let step = (violation / curvature)
            .min(upper - alphas[i])
            .min(alphas[j]);

        alphas[i] += step;
        alphas[j] -= step;
        for (idx, g) in grad.iter_mut().enumerate() {
            *g += step * (gram.get(idx, i) - gram.get(idx, j));
        }
    }

    // Offset from margin support vectors; when none exist, take the
    // midpoint of the feasible interval the bound coefficients leave open.
    let mut margin_sum = 0.0;
    let mut margin_count = 0usize;
    let mut upper_bound_max = f64::NEG_INFINITY;
    let mut zero_min = f64::INFINITY;
    for idx in 0..n {
        let a = alphas[idx];
        if a > cfg.tol && a < upper - cfg.tol {
            margin_sum += grad[idx];
            margin_count += 1;
        } else if a >= upper - cfg.tol {
            upper_bound_max = upper_bound_max.max(grad[idx]);
        } else {
            zero_min = zero_min.min(grad[idx]);
        }
    }
    // Margin support vectors sit exactly on the boundary, so their decision
    // values are zero up to the solver's KKT tolerance; backing rho off by
    // that tolerance resolves the resulting sign noise toward "normal",
    // matching the f = 0 tie-break.
    let rho = if margin_count > 0 {
        margin_sum / margin_count as f64 - cfg.tol
    } else {
        match (upper_bound_max.is_finite(), zero_min.is_finite()) {
            (true, true) => 0.5 * (upper_bound_max + zero_min),
            (true, false) => upper_bound_max,
            (false, true) => zero_min,
            (false, false) => 0.0,
        }
    };

    let support_indices = (0..n).filter(|&i| alphas[i] > cfg.tol).collect();

    Ok(OcSvmModel {
        alphas,
        rho,
        support_indices,
        config: cfg.clone(),
        kernel_config: gram.config.clone(),
        standardizer: standardizer.clone(),
        convergence,
    })
}

/// Decision value of one test sample given its kernel row against the
/// training set.
pub fn decision(model: &OcSvmModel, k_row: &[f64]) -> Result<f64, SvmError> {
    if k_row.len() != model.alphas.len() {
        return Err(SvmError::LengthMismatch {
            expected: model.alphas.len(),
            got: k_row.len(),
        });
    }
    let weighted: f64 = model.alphas.iter().zip(k_row).map(|(&a, &k)| a * k).sum();
    Ok(weighted - model.rho)
}

/// Row-wise decisions over a cross Gram matrix. `true` marks an anomaly
/// (decision strictly negative); the boundary itself reads normal.
pub fn predict_batch(model: &OcSvmModel, cross: &CrossGram) -> Result<Vec<bool>, SvmError> {
    if cross.n_rows() > 0 && cross.n_cols() != model.alphas.len() {
        return Err(SvmError::LengthMismatch {
            expected: model.alphas.len(),
            got: cross.n_cols(),
        });
    }
    (0..cross.n_rows())
        .map(|i| decision(model, cross.row(i)).map(|f| f < 0.0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::FeatureVector;
    use crate::kernel::{self, KernelConfig};
    use alloc::vec;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Gaussian cluster in d dimensions around the origin.
    fn cluster(n: usize, d: usize, seed: u64) -> Vec<FeatureVector> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                FeatureVector::new(
                    (0..d)
                        .map(|_| {
                            let (u1, u2): (f64, f64) = (1.0 - rng.gen::<f64>(), rng.gen());
                            (-2.0 * u1.ln()).sqrt() * (2.0 * core::f64::consts::PI * u2).cos()
                        })
                        .collect(),
                )
            })
            .collect()
    }

    fn rbf_gram(samples: &[FeatureVector], gamma: f64) -> (GramMatrix, Standardizer) {
        let std = Standardizer::fit(samples).unwrap();
        let g = kernel::gram(samples, &KernelConfig::rbf(gamma), &std).unwrap();
        (g, std)
    }

    #[test]
    fn two_point_identity_kernel_box_solution() {
        // K = I, nu = 1: box forces alpha = {1/2, 1/2}, rho = 1/2.
        let samples = [
            FeatureVector::new(vec![0.0]),
            FeatureVector::new(vec![100.0]),
        ];
        let std = Standardizer::identity(1);
        let g = kernel::gram(&samples, &KernelConfig::rbf(10.0), &std).unwrap();
        let cfg = OcSvmConfig {
            nu: 1.0,
            ..OcSvmConfig::default()
        };
        let model = train(&g, &cfg, &std).unwrap();
        assert_abs_diff_eq!(model.alphas[0], 0.5, epsilon = 1e-10);
        assert_abs_diff_eq!(model.alphas[1], 0.5, epsilon = 1e-10);
        assert_abs_diff_eq!(model.rho, 0.5, epsilon = 1e-9);
        assert!(model.convergence.is_converged());
    }

    #[test]
    fn identical_points_all_ones_gram() {
        let samples: Vec<FeatureVector> = (0..10)
            .map(|_| FeatureVector::new(vec![1.0, 2.0]))
            .collect();
        let std = Standardizer::fit(&samples).unwrap();
        let g = kernel::gram(&samples, &KernelConfig::rbf(1.0), &std).unwrap();
        let model = train(&g, &OcSvmConfig::default(), &std).unwrap();
        assert_abs_diff_eq!(model.rho, 1.0, epsilon = 1e-5);
        // A duplicate of the training point sits exactly on the boundary
        // and is read as normal.
        let f = decision(&model, &[1.0; 10]).unwrap();
        assert_abs_diff_eq!(f, 0.0, epsilon = 1e-5);
        assert!(f >= 0.0);
    }

    #[test]
    fn dual_feasibility_at_convergence() {
        let samples = cluster(50, 3, 5);
        let (g, std) = rbf_gram(&samples, 0.5);
        let cfg = OcSvmConfig::default();
        let model = train(&g, &cfg, &std).unwrap();
        let upper = 1.0 / (cfg.nu * 50.0);
        let sum: f64 = model.alphas.iter().sum();
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-10);
        for &a in &model.alphas {
            assert!(a >= -1e-12 && a <= upper + 1e-12);
        }
    }

    #[test]
    fn nu_property_bounds_outliers_and_support_vectors() {
        for &n in &[20usize, 50, 100] {
            for &nu in &[0.05, 0.1, 0.2] {
                let samples = cluster(n, 2, 1000 + n as u64);
                let (g, std) = rbf_gram(&samples, 0.5);
                let cfg = OcSvmConfig {
                    nu,
                    ..OcSvmConfig::default()
                };
                let model = train(&g, &cfg, &std).unwrap();
                assert!(model.convergence.is_converged());

                let outliers = (0..n)
                    .filter(|&i| decision(&model, g.row(i)).unwrap() < 0.0)
                    .count();
                let outlier_frac = outliers as f64 / n as f64;
                let sv_frac = model.support_indices.len() as f64 / n as f64;
                let slack = 2.0 / n as f64;
                assert!(
                    outlier_frac <= nu + slack,
                    "n={n} nu={nu}: outlier fraction {outlier_frac}"
                );
                assert!(
                    sv_frac >= nu - slack,
                    "n={n} nu={nu}: SV fraction {sv_frac}"
                );
            }
        }
    }

    #[test]
    fn heavily_weighted_training_sample_reads_normal() {
        let samples = cluster(30, 2, 77);
        let (g, std) = rbf_gram(&samples, 0.5);
        let model = train(&g, &OcSvmConfig::default(), &std).unwrap();
        // Score the support vector with the largest coefficient.
        let &best = model
            .support_indices
            .iter()
            .max_by(|&&a, &&b| model.alphas[a].partial_cmp(&model.alphas[b]).unwrap())
            .unwrap();
        assert!(decision(&model, g.row(best)).unwrap() >= 0.0);
    }

    #[test]
    fn vanishing_kernel_row_is_anomalous() {
        let samples = cluster(25, 2, 3);
        let (g, std) = rbf_gram(&samples, 0.5);
        let model = train(&g, &OcSvmConfig::default(), &std).unwrap();
        let f = decision(&model, &[0.0; 25]).unwrap();
        assert_abs_diff_eq!(f, -model.rho, epsilon = 1e-15);
        assert!(f < 0.0);
    }

    #[test]
    fn predict_batch_trivials() {
        let samples = cluster(20, 2, 9);
        let std = Standardizer::fit(&samples).unwrap();
        let cfg = KernelConfig::rbf(0.5);
        let g = kernel::gram(&samples, &cfg, &std).unwrap();
        let model = train(&g, &OcSvmConfig::default(), &std).unwrap();

        let empty = kernel::gram_cross(&[], &samples, &cfg, &std).unwrap();
        assert!(predict_batch(&model, &empty).unwrap().is_empty());

        let mut doubled = samples.clone();
        doubled.extend_from_slice(&samples);
        let cross = kernel::gram_cross(&doubled, &samples, &cfg, &std).unwrap();
        let preds = predict_batch(&model, &cross).unwrap();
        assert_eq!(&preds[..20], &preds[20..]);

        // Training-set anomaly fraction obeys the nu bound.
        let anomalous = preds[..20].iter().filter(|&&a| a).count() as f64 / 20.0;
        assert!(anomalous <= 0.1 + 2.0 / 20.0);
    }

    #[test]
    fn permutation_equivariance() {
        // The RBF Gram of distinct points is positive definite, so the dual
        // optimum is unique; a tight tolerance lets both orderings reach it.
        let tight = OcSvmConfig {
            tol: 1e-12,
            max_iter: 1_000_000,
            ..OcSvmConfig::default()
        };
        let samples = cluster(30, 3, 13);
        let (g, std) = rbf_gram(&samples, 0.7);
        let model = train(&g, &tight, &std).unwrap();

        // Reverse the sample order and retrain.
        let reversed: Vec<FeatureVector> = samples.iter().rev().cloned().collect();
        let g_rev = kernel::gram(&reversed, &KernelConfig::rbf(0.7), &std).unwrap();
        let model_rev = train(&g_rev, &tight, &std).unwrap();

        for i in 0..30 {
            assert_abs_diff_eq!(model.alphas[i], model_rev.alphas[29 - i], epsilon = 1e-10);
        }
        assert_abs_diff_eq!(model.rho, model_rev.rho, epsilon = 1e-10);

        // Decision values of fresh samples are unchanged by the permutation.
        let probes = cluster(10, 3, 14);
        let cfg = KernelConfig::rbf(0.7);
        let cross = kernel::gram_cross(&probes, &samples, &cfg, &std).unwrap();
        let cross_rev = kernel::gram_cross(&probes, &reversed, &cfg, &std).unwrap();
        for i in 0..10 {
            let f = decision(&model, cross.row(i)).unwrap();
            let f_rev = decision(&model_rev, cross_rev.row(i)).unwrap();
            assert_abs_diff_eq!(f, f_rev, epsilon = 1e-10);
        }
    }

    #[test]
    fn exhausted_iteration_budget_is_reported() {
        let samples = cluster(40, 3, 99);
        let (g, std) = rbf_gram(&samples, 0.5);
        let strict = OcSvmConfig {
            tol: 1e-15,
            max_iter: 3,
            ..OcSvmConfig::default()
        };
        let model = train(&g, &strict, &std).unwrap();
        match model.convergence {
            Convergence::MaxIterReached { kkt_violation } => {
                assert!(kkt_violation.is_finite() && kkt_violation > 0.0);
            }
            Convergence::Converged { .. } => panic!("expected budget exhaustion"),
        }
    }

    #[test]
    fn rejects_undersized_and_invalid_inputs() {
        let one = [FeatureVector::new(vec![1.0])];
        let std = Standardizer::identity(1);
        let g = kernel::gram(&one, &KernelConfig::rbf(1.0), &std).unwrap();
        assert!(matches!(
            train(&g, &OcSvmConfig::default(), &std),
            Err(SvmError::TooFewSamples { have: 1 })
        ));

        let samples = cluster(5, 2, 2);
        let (g, std) = rbf_gram(&samples, 1.0);
        let bad_nu = OcSvmConfig {
            nu: 0.0,
            ..OcSvmConfig::default()
        };
        assert!(matches!(
            train(&g, &bad_nu, &std),
            Err(SvmError::InvalidNu { .. })
        ));

        let model = train(&g, &OcSvmConfig::default(), &std).unwrap();
        assert!(matches!(
            decision(&model, &[1.0, 2.0]),
            Err(SvmError::LengthMismatch {
                expected: 5,
                got: 2
            })
        ));
    }
}
