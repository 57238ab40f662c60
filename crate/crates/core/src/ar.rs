//! AR(p) estimation from time series.
//!
//! The model is `y_t = c + phi_1 y_{t-1} + ... + phi_p y_{t-p} + e_t` with
//! white-noise innovations of variance `sigma2`. Coefficients are estimated
//! from the biased (1/N) autocovariance via the Levinson-Durbin recursion;
//! a direct dense Yule-Walker solve is provided as an independent route for
//! cross-checking. Segments are mean-centered before fitting, so the stored
//! intercept is always zero and only the `phi` coefficients act as features.
//!
//! The biased autocovariance keeps the implied Toeplitz system positive
//! semidefinite, which keeps the recursion's prediction-error variance
//! non-negative up to round-off.

use alloc::vec::Vec;
use core::fmt;

use crate::linalg;
use crate::signal::{Condition, TimeSeries};

#[allow(unused_imports)]
use num_traits::Float as _;

/// Default AR order used throughout the pipeline.
pub const DEFAULT_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub enum ArError {
    /// `max_lag` (or the requested order) does not leave enough samples.
    LagExceedsLength { lag: usize, len: usize },
    /// Zero-lag autocovariance vanished: the series is (numerically)
    /// constant and carries no spectral information.
    DegenerateSeries,
    /// The autocovariance slice is shorter than `p + 1`.
    ShortAutocovariance { have: usize, need: usize },
    /// The Yule-Walker system is singular, or the prediction-error variance
    /// collapsed mid-recursion.
    SingularSystem,
    /// Order must be at least 1 (and below half the series length for order
    /// selection).
    InvalidOrder,
}

impl fmt::Display for ArError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LagExceedsLength { lag, len } => {
                write!(f, "lag {lag} out of range for series of length {len}")
            }
            Self::DegenerateSeries => write!(f, "series is constant; no AR fit possible"),
            Self::ShortAutocovariance { have, need } => {
                write!(f, "autocovariance has {have} lags, need {need}")
            }
            Self::SingularSystem => write!(f, "Yule-Walker system is singular"),
            Self::InvalidOrder => write!(f, "invalid model order"),
        }
    }
}

impl core::error::Error for ArError {}

/// A fitted AR(p) model.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ArModel {
    /// Model order p.
    pub order: usize,
    /// Intercept c; zero by construction because segments are centered.
    pub intercept: f64,
    /// Coefficients phi_1 .. phi_p.
    pub phi: Vec<f64>,
    /// Innovation variance sigma^2 (final prediction-error variance).
    pub sigma2: f64,
}

/// Feature vector derived from a fitted model's coefficients, optionally
/// tagged with the scene condition it came from.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FeatureVector {
    pub values: Vec<f64>,
    pub label: Option<Condition>,
}

impl FeatureVector {
    pub fn new(values: Vec<f64>) -> Self {
        Self {
            values,
            label: None,
        }
    }

    pub fn with_label(values: Vec<f64>, label: Condition) -> Self {
        Self {
            values,
            label: Some(label),
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }
}

/// Order-selection criterion. Both penalize the log prediction-error
/// variance; BIC's penalty grows with the sample count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum OrderCriterion {
    /// `N ln(sigma2_p) + 2 p`
    #[default]
    Aic,
    /// `N ln(sigma2_p) + p ln(N)`
    Bic,
}

/// Result of [`select_order`]: the chosen order and the criterion value for
/// every candidate order 1..=p_max.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderSelection {
    pub order: usize,
    pub criterion_values: Vec<f64>,
}

/// Biased autocovariance estimates for lags `0..=max_lag`:
/// `gamma(k) = (1/N) * sum_{t=k}^{N-1} (y_t - mean)(y_{t-k} - mean)`.
///
/// A constant series yields `gamma(0) = 0`; that degenerate case is left in
/// the output so the caller (or the fit) can reject it.
pub fn autocovariance(ts: &TimeSeries, max_lag: usize) -> Result<Vec<f64>, ArError> {
    let n = ts.len();
    if max_lag >= n {
        return Err(ArError::LagExceedsLength {
            lag: max_lag,
            len: n,
        });
    }
    let mean = ts.samples.iter().sum::<f64>() / n as f64;
    let centered: Vec<f64> = ts.samples.iter().map(|y| y - mean).collect();

    let mut acov = Vec::with_capacity(max_lag + 1);
    for k in 0..=max_lag {
        let mut sum = 0.0;
        for t in k..n {
            sum += centered[t] * centered[t - k];
        }
        acov.push(sum / n as f64);
    }
    Ok(acov)
}

/// Levinson-Durbin recursion over the first `p + 1` autocovariance lags.
///
/// Returns the order-p solution of the Yule-Walker system together with the
/// final prediction-error variance. The intercept is reported as zero per
/// the mean-removal convention.
pub fn levinson_durbin(acov: &[f64], p: usize) -> Result<ArModel, ArError> {
    if p == 0 {
        return Err(ArError::InvalidOrder);
    }
    if acov.len() < p + 1 {
        return Err(ArError::ShortAutocovariance {
            have: acov.len(),
            need: p + 1,
        });
    }
    if !(acov[0] > 0.0) {
        return Err(ArError::DegenerateSeries);
    }

    let mut phi = Vec::with_capacity(p);
    let mut err = acov[0];

    for m in 1..=p {
        let mut acc = acov[m];
        for (j, &coef) in phi.iter().enumerate() {
            acc -= coef * acov[m - 1 - j];
        }
        let reflection = acc / err;

        let prev = phi.clone();
        phi.push(0.0);
        for j in 0..m - 1 {
            phi[j] = prev[j] - reflection * prev[m - 2 - j];
        }
        phi[m - 1] = reflection;

        err *= 1.0 - reflection * reflection;
        if m < p && err <= 0.0 {
            return Err(ArError::SingularSystem);
        }
    }

    // PSD input keeps err >= 0 up to round-off; clamp the residue.
    if err < -1e-12 {
        return Err(ArError::SingularSystem);
    }
    Ok(ArModel {
        order: p,
        intercept: 0.0,
        phi,
        sigma2: err.max(0.0),
    })
}

/// Direct dense solve of the order-p Yule-Walker system
/// `T phi = r`, `T[i][j] = gamma(|i-j|)`, `r[i] = gamma(i+1)`.
///
/// Serves as the independent oracle for [`levinson_durbin`].
pub fn yule_walker_direct(acov: &[f64], p: usize) -> Result<Vec<f64>, ArError> {
    if p == 0 {
        return Err(ArError::InvalidOrder);
    }
    if acov.len() < p + 1 {
        return Err(ArError::ShortAutocovariance {
            have: acov.len(),
            need: p + 1,
        });
    }
    let mut toeplitz = Vec::with_capacity(p * p);
    for i in 0..p {
        for j in 0..p {
            toeplitz.push(acov[i.abs_diff(j)]);
        }
    }
    let rhs: Vec<f64> = acov[1..=p].to_vec();
    linalg::solve_dense(&toeplitz, &rhs, p).ok_or(ArError::SingularSystem)
}

/// Fits an AR(p) model to a mean-centered copy of the series.
pub fn fit_ar(ts: &TimeSeries, p: usize) -> Result<ArModel, ArError> {
    let acov = autocovariance(ts, p)?;
    levinson_durbin(&acov, p)
}

/// Prediction-error variances for every order 1..=p_max, from one pass of
/// the recursion.
fn error_variances(acov: &[f64], p_max: usize) -> Result<Vec<f64>, ArError> {
    if !(acov[0] > 0.0) {
        return Err(ArError::DegenerateSeries);
    }
    let mut phi: Vec<f64> = Vec::with_capacity(p_max);
    let mut err = acov[0];
    let mut out = Vec::with_capacity(p_max);
    for m in 1..=p_max {
        let mut acc = acov[m];
        for (j, &coef) in phi.iter().enumerate() {
            acc -= coef * acov[m - 1 - j];
        }
        let reflection = acc / err;
        let prev = phi.clone();
        phi.push(0.0);
        for j in 0..m - 1 {
            phi[j] = prev[j] - reflection * prev[m - 2 - j];
        }
        phi[m - 1] = reflection;
        err *= 1.0 - reflection * reflection;
        out.push(err.max(0.0));
        if err <= 0.0 {
            // Exactly predictable from here on; later orders keep zero error.
            out.extend(core::iter::repeat_n(0.0, p_max - m));
            break;
        }
    }
    Ok(out)
}

/// Fits orders `1..=p_max` and returns the criterion minimizer (ties broken
/// toward the smaller order) along with all criterion values.
pub fn select_order(
    ts: &TimeSeries,
    p_max: usize,
    criterion: OrderCriterion,
) -> Result<OrderSelection, ArError> {
    let n = ts.len();
    if p_max == 0 || 2 * p_max >= n {
        return Err(ArError::InvalidOrder);
    }
    let acov = autocovariance(ts, p_max)?;
    let variances = error_variances(&acov, p_max)?;

    let nf = n as f64;
    let criterion_values: Vec<f64> = variances
        .iter()
        .enumerate()
        .map(|(i, &s2)| {
            let p = (i + 1) as f64;
            // ln(0) from an exactly predictable series dominates every
            // finite value, as it should.
            let lls = nf * s2.max(f64::MIN_POSITIVE).ln();
            match criterion {
                OrderCriterion::Aic => lls + 2.0 * p,
                OrderCriterion::Bic => lls + p * nf.ln(),
            }
        })
        .collect();

    let mut best = 0;
    for (i, &v) in criterion_values.iter().enumerate() {
        if v < criterion_values[best] {
            best = i;
        }
    }
    Ok(OrderSelection {
        order: best + 1,
        criterion_values,
    })
}

/// Extracts the AR(p) coefficient features of a segment: the `phi` vector of
/// the model fitted to the mean-removed samples, ordered `phi_1..phi_p`.
pub fn extract_features(ts: &TimeSeries, p: usize) -> Result<FeatureVector, ArError> {
    let model = fit_ar(ts, p)?;
    Ok(FeatureVector::new(model.phi))
}
