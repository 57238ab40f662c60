//! File formats, configuration, and pipeline orchestration around
//! `qkad-core`: WAV ingestion, dataset synthesis with a manifest, AR feature
//! extraction to CSV, per-cell model training with JSON serialization, and
//! the evaluation/statistics artifacts.

pub mod config;
pub mod formats;
pub mod manifest;
pub mod pipeline;
pub mod wav;
