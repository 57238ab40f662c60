//! Dense statevector simulation of the feature-map circuit.
//!
//! States hold all `2^n` complex amplitudes. Bit convention: qubit `i` is
//! bit `i` of the basis index, so qubit 0 is the least significant bit and
//! basis kets read `|q_{n-1} ... q_1 q_0>`.
//!
//! The feature map encodes a d-dimensional vector on d qubits: per
//! repetition, an `Ry(angle_scale * x_i)` rotation on each qubit followed by
//! a CNOT entangling layer (linear chain by default, optionally closed into
//! a ring). The fidelity `|<b|a>|^2` between two encoded states is the
//! kernel value consumed by the kernel module.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;

#[allow(unused_imports)]
use num_traits::Float as _;

/// Qubit count of the default feature map (32 amplitudes).
pub const DEFAULT_QUBITS: usize = 5;

/// Hard cap on simulated qubits; dense amplitudes beyond this are a mistake.
pub const MAX_QUBITS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuantumError {
    /// Qubit count must be in `1..=MAX_QUBITS`.
    BadQubitCount { n: usize },
    /// Gate addressed a qubit outside the register.
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    /// CNOT control and target must differ.
    ControlEqualsTarget { qubit: usize },
    /// Input vector length does not match the configured qubit count, or the
    /// two states in a fidelity have different dimensions.
    DimensionMismatch { expected: usize, got: usize },
    /// Feature values must be finite.
    NonFiniteInput,
}

impl fmt::Display for QuantumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BadQubitCount { n } => write!(f, "unsupported qubit count {n}"),
            Self::QubitOutOfRange { qubit, n_qubits } => {
                write!(f, "qubit {qubit} out of range for {n_qubits}-qubit state")
            }
            Self::ControlEqualsTarget { qubit } => {
                write!(f, "CNOT control and target are both qubit {qubit}")
            }
            Self::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Self::NonFiniteInput => write!(f, "feature values must be finite"),
        }
    }
}

impl core::error::Error for QuantumError {}

/// Entangling layer topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Entangler {
    /// CNOT(0,1), CNOT(1,2), ..., CNOT(n-2, n-1).
    LinearChain,
    /// Linear chain closed with CNOT(n-1, 0).
    Ring,
}

/// Parameters of the encoding circuit.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct FeatureMapConfig {
    pub n_qubits: usize,
    pub repetitions: usize,
    pub entangler: Entangler,
    /// Rotation angle per unit feature value, radians.
    pub angle_scale: f64,
}

impl Default for FeatureMapConfig {
    fn default() -> Self {
        Self {
            n_qubits: DEFAULT_QUBITS,
            repetitions: 2,
            entangler: Entangler::LinearChain,
            angle_scale: PI,
        }
    }
}

impl FeatureMapConfig {
    pub fn validate(&self) -> Result<(), QuantumError> {
        if self.n_qubits == 0 || self.n_qubits > MAX_QUBITS {
            return Err(QuantumError::BadQubitCount { n: self.n_qubits });
        }
        if self.repetitions == 0 {
            return Err(QuantumError::BadQubitCount { n: 0 });
        }
        Ok(())
    }

    /// Same circuit on a different register width (used by feature sweeps).
    pub fn with_qubits(&self, n_qubits: usize) -> Self {
        Self {
            n_qubits,
            ..self.clone()
        }
    }
}

/// A pure n-qubit state as a dense amplitude vector of length `2^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    amplitudes: Vec<Complex64>,
    n_qubits: usize,
}

impl QuantumState {
    /// The computational basis state `|0...0>`.
    pub fn zero(n_qubits: usize) -> Result<Self, QuantumError> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(QuantumError::BadQubitCount { n: n_qubits });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Ok(Self {
            amplitudes,
            n_qubits,
        })
    }

    /// Builds a state from raw amplitudes (length must be a power of two);
    /// intended for tests and inspection tooling. The norm is not adjusted.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self, QuantumError> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(QuantumError::BadQubitCount { n: 0 });
        }
        let n_qubits = len.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(QuantumError::BadQubitCount { n: n_qubits });
        }
        Ok(Self {
            amplitudes,
            n_qubits,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Total probability mass; 1 for any state reached by gates from
    /// [`QuantumState::zero`].
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_qubit(&self, qubit: usize) -> Result<(), QuantumError> {
        if qubit >= self.n_qubits {
            return Err(QuantumError::QubitOutOfRange {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Applies `Ry(theta)` on one qubit:
    /// rows `(cos t/2, -sin t/2; sin t/2, cos t/2)` on that tensor factor.
    pub fn apply_ry(&mut self, qubit: usize, theta: f64) -> Result<(), QuantumError> {
        self.check_qubit(qubit)?;
        let c = (theta / 2.0).cos();
        let s = (theta / 2.0).sin();
        let mask = 1usize << qubit;
        for idx in 0..self.amplitudes.len() {
            if idx & mask == 0 {
                let a0 = self.amplitudes[idx];
                let a1 = self.amplitudes[idx | mask];
                self.amplitudes[idx] = c * a0 - s * a1;
                self.amplitudes[idx | mask] = s * a0 + c * a1;
            }
        }
        Ok(())
    }

    /// Applies CNOT: flips the target bit of every basis index whose control
    /// bit is one. A pure amplitude permutation.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<(), QuantumError> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(QuantumError::ControlEqualsTarget { qubit: control });
        }
        let cmask = 1usize << control;
        let tmask = 1usize << target;
        for idx in 0..self.amplitudes.len() {
            if idx & cmask != 0 && idx & tmask == 0 {
                self.amplitudes.swap(idx, idx | tmask);
            }
        }
        Ok(())
    }
}

/// Squared overlap `|<b|a>|^2` of two equal-dimension states.
pub fn fidelity(a: &QuantumState, b: &QuantumState) -> Result<f64, QuantumError> {
    if a.amplitudes.len() != b.amplitudes.len() {
        return Err(QuantumError::DimensionMismatch {
            expected: a.amplitudes.len(),
            got: b.amplitudes.len(),
        });
    }
    let inner: Complex64 = a
        .amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| y.conj() * x)
        .sum();
    Ok(inner.norm_sqr())
}

fn apply_entangler(state: &mut QuantumState, entangler: Entangler) -> Result<(), QuantumError> {
    let n = state.n_qubits();
    if n < 2 {
        return Ok(());
    }
    for q in 0..n - 1 {
        state.apply_cnot(q, q + 1)?;
    }
    if entangler == Entangler::Ring {
        state.apply_cnot(n - 1, 0)?;
    }
    Ok(())
}

/// Encodes a feature vector as a quantum state: per repetition, Ry rotations
/// of `angle_scale * x_i` on qubit i, then the entangling layer.
pub fn feature_map_state(x: &[f64], cfg: &FeatureMapConfig) -> Result<QuantumState, QuantumError> {
    cfg.validate()?;
    if x.len() != cfg.n_qubits {
        return Err(QuantumError::DimensionMismatch {
            expected: cfg.n_qubits,
            got: x.len(),
        });
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(QuantumError::NonFiniteInput);
    }
    let mut state = QuantumState::zero(cfg.n_qubits)?;
    for _ in 0..cfg.repetitions {
        for (i, &xi) in x.iter().enumerate() {
            state.apply_ry(i, cfg.angle_scale * xi)?;
        }
        apply_entangler(&mut state, cfg.entangler)?;
    }
    Ok(state)
}
