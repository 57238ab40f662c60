//! Audio-domain types and the synthetic machinery-sound generator.
//!
//! Two machines, a conveyor (CON) and a chain belt (CHA), emit harmonic
//! tonal signatures on top of a white noise floor. A scene places both
//! machines at a common microphone distance; moving away attenuates the
//! machine components (per a configurable dB table) while the noise floor
//! stays put, so the signal-to-noise ratio degrades with distance. An
//! anomalous machine additionally emits impulsive transients modeled on a
//! nail strike: Poisson-timed, exponentially decaying clicks that ring at a
//! machine-specific frequency with a broadband component. Impulses shift the
//! AR coefficients of the recorded segment, which is the effect the detection
//! pipeline exploits.
//!
//! All dB figures map to full-scale amplitude via
//! `rms = 10^((db - FULL_SCALE_OFFSET_DB) / 20)`; only relative levels are
//! meaningful.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[allow(unused_imports)]
use num_traits::Float as _;

/// Default sample rate of synthesized scenes, in Hz.
pub const DEFAULT_SAMPLE_RATE_HZ: u32 = 16_000;

/// Default analysis window, in samples (one window per synthesized scene).
pub const DEFAULT_WINDOW_LEN: usize = 3000;

/// Sentinel minimum for [`spl_db`]; reported instead of -inf for silence.
pub const SPL_FLOOR_DB: f64 = -200.0;

/// dB value that maps to a full-scale RMS of 1.0.
pub const FULL_SCALE_OFFSET_DB: f64 = 60.0;

fn db_to_rms(db: f64) -> f64 {
    if db == f64::NEG_INFINITY {
        0.0
    } else {
        10.0_f64.powf((db - FULL_SCALE_OFFSET_DB) / 20.0)
    }
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Validation failures for audio types and segmentation.
#[derive(Debug, Clone, PartialEq)]
pub enum SignalError {
    /// A time series must contain at least one sample.
    EmptySeries,
    /// Sample rates must be strictly positive.
    ZeroSampleRate,
    /// A sample was NaN or infinite.
    NonFiniteSample { index: usize },
    /// Segmentation window exceeds the series length.
    WindowExceedsLength { window: usize, len: usize },
    /// Segmentation window and hop must be at least one sample.
    ZeroWindowOrHop,
    /// A machine spec or scene config field was out of range.
    InvalidParameter(&'static str),
}

impl fmt::Display for SignalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptySeries => write!(f, "time series is empty"),
            Self::ZeroSampleRate => write!(f, "sample rate must be positive"),
            Self::NonFiniteSample { index } => {
                write!(f, "non-finite sample at index {index}")
            }
            Self::WindowExceedsLength { window, len } => {
                write!(f, "window of {window} samples exceeds series length {len}")
            }
            Self::ZeroWindowOrHop => write!(f, "window and hop must be positive"),
            Self::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for SignalError {}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// A uniformly sampled mono audio segment.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    /// Amplitude samples, dimensionless, nominally within [-1, 1].
    pub samples: Vec<f64>,
    /// Sampling rate in Hz.
    pub sample_rate_hz: u32,
}

impl TimeSeries {
    /// Builds a time series, validating the type invariants: non-empty,
    /// positive rate, all samples finite.
    pub fn new(samples: Vec<f64>, sample_rate_hz: u32) -> Result<Self, SignalError> {
        if samples.is_empty() {
            return Err(SignalError::EmptySeries);
        }
        if sample_rate_hz == 0 {
            return Err(SignalError::ZeroSampleRate);
        }
        if let Some(index) = samples.iter().position(|s| !s.is_finite()) {
            return Err(SignalError::NonFiniteSample { index });
        }
        Ok(Self {
            samples,
            sample_rate_hz,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Duration in seconds.
    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate_hz as f64
    }
}

/// The two monitored machines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum MachineId {
    /// Conveyor.
    Con,
    /// Chain belt.
    Cha,
}

impl fmt::Display for MachineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Con => write!(f, "CON"),
            Self::Cha => write!(f, "CHA"),
        }
    }
}

/// Acoustic signature of one machine: a harmonic stack at `base_freq_hz`
/// whose combined tonal level at 0 m is `base_spl_db`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MachineSpec {
    pub machine_id: MachineId,
    /// Fundamental frequency of the tonal signature, Hz.
    pub base_freq_hz: f64,
    /// Relative gain of harmonic k at frequency (k+1) * base_freq_hz.
    pub harmonic_gains: Vec<f64>,
    /// Tonal SPL at 0 m, dB (see [`FULL_SCALE_OFFSET_DB`]).
    pub base_spl_db: f64,
}

impl MachineSpec {
    pub fn new(
        machine_id: MachineId,
        base_freq_hz: f64,
        harmonic_gains: Vec<f64>,
        base_spl_db: f64,
    ) -> Result<Self, SignalError> {
        if !(base_freq_hz > 0.0) {
            return Err(SignalError::InvalidParameter("base_freq_hz must be > 0"));
        }
        if harmonic_gains.is_empty() {
            return Err(SignalError::InvalidParameter(
                "harmonic_gains must be non-empty",
            ));
        }
        if !(20.0..=100.0).contains(&base_spl_db) {
            return Err(SignalError::InvalidParameter(
                "base_spl_db must be within [20, 100]",
            ));
        }
        Ok(Self {
            machine_id,
            base_freq_hz,
            harmonic_gains,
            base_spl_db,
        })
    }

    /// Default conveyor signature; levels follow the measured 0 m band.
    pub fn conveyor() -> Self {
        Self {
            machine_id: MachineId::Con,
            base_freq_hz: 420.0,
            harmonic_gains: vec![1.0, 0.55, 0.30, 0.15],
            base_spl_db: 43.7,
        }
    }

    /// Default chain-belt signature, slightly quieter than the conveyor.
    pub fn chain_belt() -> Self {
        Self {
            machine_id: MachineId::Cha,
            base_freq_hz: 660.0,
            harmonic_gains: vec![1.0, 0.45, 0.20],
            base_spl_db: 41.2,
        }
    }
}

/// Operating condition of a scene: per-machine normal (0) / anomalous (1)
/// flags, ordered CON/CHA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Condition {
    pub con_anomalous: bool,
    pub cha_anomalous: bool,
}

impl Condition {
    pub const NORMAL: Condition = Condition {
        con_anomalous: false,
        cha_anomalous: false,
    };

    pub fn new(con_anomalous: bool, cha_anomalous: bool) -> Self {
        Self {
            con_anomalous,
            cha_anomalous,
        }
    }

    /// All four conditions in the fixed 0/0, 0/1, 1/0, 1/1 order.
    pub fn all() -> [Condition; 4] {
        [
            Condition::new(false, false),
            Condition::new(false, true),
            Condition::new(true, false),
            Condition::new(true, true),
        ]
    }

    pub fn is_normal(&self) -> bool {
        !self.con_anomalous && !self.cha_anomalous
    }

    /// "CON/CHA" label string, e.g. `0/1` for a chain-belt anomaly.
    pub fn label(&self) -> &'static str {
        match (self.con_anomalous, self.cha_anomalous) {
            (false, false) => "0/0",
            (false, true) => "0/1",
            (true, false) => "1/0",
            (true, true) => "1/1",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One recording scenario: which machines are anomalous, microphone
/// distance, noise floor, impulse rate, and the RNG seed.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SceneConfig {
    /// Conveyor state: false = normal (0), true = anomalous (1).
    pub con_state: bool,
    /// Chain-belt state: false = normal (0), true = anomalous (1).
    pub cha_state: bool,
    /// Microphone distance in meters, nominally one of {0, 1, 2, 3}.
    pub distance_m: f64,
    /// White-noise floor level in dB; `-inf` silences the floor.
    pub noise_floor_db: f64,
    /// Mean rate of anomaly impulses, Hz (per anomalous machine).
    pub anomaly_impulse_rate_hz: f64,
    /// Seed for the scene-local RNG.
    pub seed: u64,
}

impl SceneConfig {
    pub fn condition(&self) -> Condition {
        Condition::new(self.con_state, self.cha_state)
    }

    pub fn validate(&self) -> Result<(), SignalError> {
        if !(self.distance_m >= 0.0) {
            return Err(SignalError::InvalidParameter("distance_m must be >= 0"));
        }
        if !(self.anomaly_impulse_rate_hz >= 0.0) {
            return Err(SignalError::InvalidParameter(
                "anomaly_impulse_rate_hz must be >= 0",
            ));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Generator parameters
// ---------------------------------------------------------------------------

/// Distance -> attenuation lookup, linearly interpolated between entries and
/// clamped beyond the ends. The default follows the measured per-distance
/// spread of the machine sound levels.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct AttenuationTable {
    /// (distance_m, attenuation_db) pairs, ascending in distance.
    pub entries: Vec<(f64, f64)>,
}

impl Default for AttenuationTable {
    fn default() -> Self {
        Self {
            entries: vec![(0.0, 0.0), (1.0, -2.0), (2.0, -3.5), (3.0, -4.0)],
        }
    }
}

impl AttenuationTable {
    /// Attenuation in dB at the given distance.
    pub fn attenuation_db(&self, distance_m: f64) -> f64 {
        let entries = &self.entries;
        if entries.is_empty() {
            return 0.0;
        }
        if distance_m <= entries[0].0 {
            return entries[0].1;
        }
        for pair in entries.windows(2) {
            let (d0, a0) = pair[0];
            let (d1, a1) = pair[1];
            if distance_m <= d1 {
                let t = (distance_m - d0) / (d1 - d0);
                return a0 + t * (a1 - a0);
            }
        }
        entries[entries.len() - 1].1
    }
}

/// Tunable constants of the synthesizer beyond what [`SceneConfig`] carries.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct SynthParams {
    pub sample_rate_hz: u32,
    pub attenuation: AttenuationTable,
    /// Exponential decay constant of a nail-strike impulse, seconds.
    pub impulse_decay_s: f64,
    /// Peak impulse amplitude relative to the machine's tonal RMS.
    pub impulse_gain: f64,
    /// Ring frequency of an impulse as a multiple of the machine's
    /// fundamental; clamped below Nyquist.
    pub ring_freq_factor: f64,
    /// Broadband (white) fraction mixed into each impulse, relative to the
    /// ring amplitude.
    pub impulse_noise_mix: f64,
    /// Discrete operating-speed settings; each scene draws one factor per
    /// machine uniformly at random and scales its tonal stack by it. Normal
    /// operation covers every setting. The impulse ring frequency is
    /// structural and does not scale.
    pub speed_states: Vec<f64>,
    /// Small fractional within-setting speed wander, drawn uniformly from
    /// `[-speed_jitter, +speed_jitter]` per scene.
    pub speed_jitter: f64,
}

impl Default for SynthParams {
    fn default() -> Self {
        Self {
            sample_rate_hz: DEFAULT_SAMPLE_RATE_HZ,
            attenuation: AttenuationTable::default(),
            impulse_decay_s: 0.005,
            impulse_gain: 1.2,
            ring_freq_factor: 6.0,
            impulse_noise_mix: 0.4,
            speed_states: vec![0.96, 1.0, 1.04],
            speed_jitter: 0.003,
        }
    }
}

// ---------------------------------------------------------------------------
// Synthesis
// ---------------------------------------------------------------------------

// RNG stream ids; keeping the machines on separate streams makes each
// machine's component independent of the other machine's state.
const STREAM_NOISE: u64 = 0;
const STREAM_CON: u64 = 1;
const STREAM_CHA: u64 = 2;

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard normal draw via Box-Muller.
fn gauss(rng: &mut impl RngCore) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// Synthesizes one machine's contribution: the attenuated harmonic stack,
/// plus nail-strike impulses when the machine is anomalous.
fn machine_component(
    spec: &MachineSpec,
    anomalous: bool,
    cfg: &SceneConfig,
    params: &SynthParams,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<f64> {
    let rate = params.sample_rate_hz as f64;
    let atten_db = params.attenuation.attenuation_db(cfg.distance_m);
    let target_rms = db_to_rms(spec.base_spl_db + atten_db);

    let gain_sq: f64 = spec.harmonic_gains.iter().map(|g| g * g).sum();
    // A sine of amplitude a has RMS a/sqrt(2); scale the stack to target_rms.
    let amp_scale = if gain_sq > 0.0 {
        target_rms * (2.0 / gain_sq).sqrt()
    } else {
        0.0
    };

    // Per-scene operating speed: one of the discrete settings plus a small
    // wander, scaling the whole tonal stack together.
    let state = if params.speed_states.is_empty() {
        1.0
    } else {
        params.speed_states[rng.gen_range(0..params.speed_states.len())]
    };
    let speed_factor = state * (1.0 + params.speed_jitter * (2.0 * rng.gen::<f64>() - 1.0));
    let tone_freq_hz = spec.base_freq_hz * speed_factor;

    let phases: Vec<f64> = spec
        .harmonic_gains
        .iter()
        .map(|_| rng.gen::<f64>() * 2.0 * PI)
        .collect();

    let mut out = vec![0.0; n];
    for (h, (&gain, &phase)) in spec.harmonic_gains.iter().zip(&phases).enumerate() {
        if gain == 0.0 {
            continue;
        }
        let omega = 2.0 * PI * tone_freq_hz * (h + 1) as f64 / rate;
        let a = gain * amp_scale;
        for (t, sample) in out.iter_mut().enumerate() {
            *sample += a * (omega * t as f64 + phase).sin();
        }
    }

    // A machine with an all-zero harmonic stack is fully silent, impulses
    // included.
    if anomalous && cfg.anomaly_impulse_rate_hz > 0.0 && target_rms > 0.0 && gain_sq > 0.0 {
        let duration = n as f64 / rate;
        let tau = params.impulse_decay_s;
        let ring_hz = (spec.base_freq_hz * params.ring_freq_factor).min(0.45 * rate);
        let omega_ring = 2.0 * PI * ring_hz / rate;
        let peak = params.impulse_gain * target_rms;
        let span = ((6.0 * tau * rate).ceil() as usize).max(1);

        // Poisson arrivals from exponential gaps.
        let mut t_hit = -(1.0 - rng.gen::<f64>()).ln() / cfg.anomaly_impulse_rate_hz;
        while t_hit < duration {
            let start = (t_hit * rate) as usize;
            let ring_phase = rng.gen::<f64>() * 2.0 * PI;
            for k in 0..span {
                let idx = start + k;
                if idx >= n {
                    // Keep consuming the burst's noise draws so the stream
                    // position does not depend on where the window ends.
                    let _ = gauss(rng);
                    continue;
                }
                let dt = k as f64;
                let env = peak * (-dt / (tau * rate)).exp();
                let ring = (omega_ring * dt + ring_phase).sin();
                let burst = params.impulse_noise_mix * gauss(rng);
                out[idx] += env * (ring + burst);
            }
            t_hit += -(1.0 - rng.gen::<f64>()).ln() / cfg.anomaly_impulse_rate_hz;
        }
    }

    out
}

/// Synthesizes a scene with the default [`SynthParams`].
pub fn synthesize_scene(
    con: &MachineSpec,
    cha: &MachineSpec,
    cfg: &SceneConfig,
    duration_s: f64,
) -> Result<TimeSeries, SignalError> {
    synthesize_scene_with(con, cha, cfg, duration_s, &SynthParams::default())
}

/// Synthesizes a scene: attenuated sum of both machine components plus the
/// distance-independent white noise floor. Deterministic in
/// (`specs`, `cfg`, `duration_s`, `params`).
pub fn synthesize_scene_with(
    con: &MachineSpec,
    cha: &MachineSpec,
    cfg: &SceneConfig,
    duration_s: f64,
    params: &SynthParams,
) -> Result<TimeSeries, SignalError> {
    if !(duration_s > 0.0) {
        return Err(SignalError::InvalidParameter("duration_s must be > 0"));
    }
    if params.sample_rate_hz == 0 {
        return Err(SignalError::ZeroSampleRate);
    }
    cfg.validate()?;

    let n = ((duration_s * params.sample_rate_hz as f64).round() as usize).max(1);

    let con_part = machine_component(
        con,
        cfg.con_state,
        cfg,
        params,
        n,
        &mut stream_rng(cfg.seed, STREAM_CON),
    );
    let cha_part = machine_component(
        cha,
        cfg.cha_state,
        cfg,
        params,
        n,
        &mut stream_rng(cfg.seed, STREAM_CHA),
    );

    let noise_rms = db_to_rms(cfg.noise_floor_db);
    let mut noise_rng = stream_rng(cfg.seed, STREAM_NOISE);

    let samples: Vec<f64> = (0..n)
        .map(|t| con_part[t] + cha_part[t] + noise_rms * gauss(&mut noise_rng))
        .collect();

    TimeSeries::new(samples, params.sample_rate_hz)
}

// ---------------------------------------------------------------------------
// Segmentation and SPL
// ---------------------------------------------------------------------------

/// Splits a series into fixed-length windows with the given hop. Produces
/// exactly `(len - window) / hop + 1` segments.
pub fn segment(
    ts: &TimeSeries,
    window_len: usize,
    hop: usize,
) -> Result<Vec<TimeSeries>, SignalError> {
    if window_len == 0 || hop == 0 {
        return Err(SignalError::ZeroWindowOrHop);
    }
    let len = ts.len();
    if window_len > len {
        return Err(SignalError::WindowExceedsLength {
            window: window_len,
            len,
        });
    }
    let count = (len - window_len) / hop + 1;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let start = i * hop;
        out.push(TimeSeries {
            samples: ts.samples[start..start + window_len].to_vec(),
            sample_rate_hz: ts.sample_rate_hz,
        });
    }
    Ok(out)
}

/// Sound pressure level in dB relative to full scale:
/// `20 * log10(rms / 1.0)`, clamped to [`SPL_FLOOR_DB`] for silence.
pub fn spl_db(ts: &TimeSeries) -> f64 {
    if ts.samples.is_empty() {
        return SPL_FLOOR_DB;
    }
    let mean_sq: f64 = ts.samples.iter().map(|s| s * s).sum::<f64>() / ts.samples.len() as f64;
    if mean_sq <= 0.0 {
        return SPL_FLOOR_DB;
    }
    (10.0 * mean_sq.log10()).max(SPL_FLOOR_DB)
}
