//! Core algorithms for acoustic machinery anomaly detection with quantum
//! fidelity kernels.
//!
//! The pipeline implemented here fits AR(p) models to short sound segments,
//! uses the AR coefficients as feature vectors, maps them through a simulated
//! few-qubit feature-map circuit into a fidelity kernel (with a classical RBF
//! kernel as baseline), and scores samples with a one-class SVM trained on
//! normal operation only. An evaluation layer provides confusion-matrix
//! metrics, paired t-tests, Cohen's d effect sizes, incremental-feature
//! sweeps, and a two-dimensional quadrant diagnosis that attributes an
//! anomaly to a specific machine.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature for embedded use. File formats, WAV audio ingestion, and the
//! command-line pipeline live in the companion `qkad-cli` crate.
//!
//! # Example
//!
//! ```
//! use qkad_core::ar;
//! use qkad_core::kernel::{self, KernelConfig, Standardizer};
//! use qkad_core::quantum::FeatureMapConfig;
//! use qkad_core::signal::{self, MachineSpec, SceneConfig};
//! use qkad_core::svm::{self, OcSvmConfig};
//!
//! // Record a normal scene and an anomalous one.
//! let con = MachineSpec::conveyor();
//! let cha = MachineSpec::chain_belt();
//! let scene = |con_state, seed| SceneConfig {
//!     con_state,
//!     cha_state: false,
//!     distance_m: 0.0,
//!     noise_floor_db: 36.0,
//!     anomaly_impulse_rate_hz: 150.0,
//!     seed,
//! };
//!
//! // AR(5) coefficient features for a handful of normal segments.
//! let train: Vec<_> = (0..8)
//!     .map(|seed| {
//!         let ts = signal::synthesize_scene(&con, &cha, &scene(false, seed), 0.1875).unwrap();
//!         ar::extract_features(&ts, 5).unwrap()
//!     })
//!     .collect();
//!
//! // One-class SVM over the quantum fidelity kernel, trained on normals.
//! let cfg = KernelConfig {
//!     standardize: false,
//!     ..KernelConfig::quantum(FeatureMapConfig::default())
//! };
//! let standardizer = Standardizer::fit(&train).unwrap();
//! let gram = kernel::gram(&train, &cfg, &standardizer).unwrap();
//! let model = svm::train(&gram, &OcSvmConfig::default(), &standardizer).unwrap();
//!
//! // A nail-strike scene scores anomalous.
//! let struck = signal::synthesize_scene(&con, &cha, &scene(true, 99), 0.1875).unwrap();
//! let probe = vec![ar::extract_features(&struck, 5).unwrap()];
//! let k_rows = kernel::gram_cross(&probe, &train, &cfg, &standardizer).unwrap();
//! assert_eq!(svm::predict_batch(&model, &k_rows).unwrap(), vec![true]);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
// Validation guards are written `!(x > 0.0)` so that NaN fails closed.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod ar;
pub mod eval;
pub mod kernel;
pub mod linalg;
pub mod quantum;
pub mod signal;
pub mod stats;
pub mod svm;

pub use ar::{ArModel, FeatureVector};
pub use kernel::{GramMatrix, KernelConfig, KernelKind, Standardizer};
pub use quantum::{FeatureMapConfig, QuantumState};
pub use signal::{Condition, MachineId, MachineSpec, SceneConfig, TimeSeries};
pub use svm::{OcSvmConfig, OcSvmModel};
