//! Minimal RIFF/WAVE reader and writer for 16-bit PCM.
//!
//! The reader requires `fmt ` and `data` chunks, skips everything else, and
//! takes channel 0 of multi-channel files. Samples are rescaled to [-1, 1)
//! by dividing by 32768. The writer emits mono 16-bit PCM with samples
//! clamped to full scale.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use qkad_core::signal::TimeSeries;

#[derive(Debug)]
pub enum WavError {
    Io(io::Error),
    /// Missing RIFF magic.
    NotRiff,
    /// RIFF container that is not WAVE.
    NotWave,
    /// File ended inside a header or chunk.
    Truncated,
    MissingFmtChunk,
    MissingDataChunk,
    /// Compressed or non-PCM encoding (format tag != 1).
    UnsupportedEncoding {
        format_tag: u16,
    },
    UnsupportedBitDepth {
        bits: u16,
    },
    ZeroChannels,
    /// Zero-length data chunk.
    EmptyAudio,
    InvalidSampleRate,
}

impl fmt::Display for WavError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Io(e) => write!(f, "io: {e}"),
            Self::NotRiff => write!(f, "not a RIFF file"),
            Self::NotWave => write!(f, "RIFF container is not WAVE"),
            Self::Truncated => write!(f, "file truncated"),
            Self::MissingFmtChunk => write!(f, "missing fmt chunk"),
            Self::MissingDataChunk => write!(f, "missing data chunk"),
            Self::UnsupportedEncoding { format_tag } => {
                write!(
                    f,
                    "unsupported encoding (format tag {format_tag}); need PCM"
                )
            }
            Self::UnsupportedBitDepth { bits } => {
                write!(f, "unsupported bit depth {bits}; need 16")
            }
            Self::ZeroChannels => write!(f, "fmt chunk declares zero channels"),
            Self::EmptyAudio => write!(f, "empty audio"),
            Self::InvalidSampleRate => write!(f, "invalid sample rate"),
        }
    }
}

impl std::error::Error for WavError {}

impl From<io::Error> for WavError {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

fn read_u16(bytes: &[u8], at: usize) -> Result<u16, WavError> {
    bytes
        .get(at..at + 2)
        .map(|b| u16::from_le_bytes([b[0], b[1]]))
        .ok_or(WavError::Truncated)
}

fn read_u32(bytes: &[u8], at: usize) -> Result<u32, WavError> {
    bytes
        .get(at..at + 4)
        .map(|b| u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
        .ok_or(WavError::Truncated)
}

struct FmtChunk {
    format_tag: u16,
    channels: u16,
    sample_rate: u32,
    bits: u16,
}

/// Parses a WAV byte buffer into a mono time series (channel 0 of
/// multi-channel audio).
pub fn parse_wav(bytes: &[u8]) -> Result<TimeSeries, WavError> {
    if bytes.len() < 12 {
        return Err(if bytes.get(..4) == Some(b"RIFF") {
            WavError::Truncated
        } else {
            WavError::NotRiff
        });
    }
    if &bytes[..4] != b"RIFF" {
        return Err(WavError::NotRiff);
    }
    if &bytes[8..12] != b"WAVE" {
        return Err(WavError::NotWave);
    }

    let mut fmt: Option<FmtChunk> = None;
    let mut data: Option<&[u8]> = None;
    let mut pos = 12;
    while pos + 8 <= bytes.len() {
        let id = &bytes[pos..pos + 4];
        let size = read_u32(bytes, pos + 4)? as usize;
        let body_start = pos + 8;
        if body_start + size > bytes.len() {
            return Err(WavError::Truncated);
        }
        match id {
            b"fmt " => {
                if size < 16 {
                    return Err(WavError::Truncated);
                }
                fmt = Some(FmtChunk {
                    format_tag: read_u16(bytes, body_start)?,
                    channels: read_u16(bytes, body_start + 2)?,
                    sample_rate: read_u32(bytes, body_start + 4)?,
                    bits: read_u16(bytes, body_start + 14)?,
                });
            }
            b"data" => {
                data = Some(&bytes[body_start..body_start + size]);
            }
            _ => {} // skip unknown chunks
        }
        // Chunks are word-aligned; odd sizes carry a pad byte.
        pos = body_start + size + (size & 1);
    }

    let fmt = fmt.ok_or(WavError::MissingFmtChunk)?;
    let data = data.ok_or(WavError::MissingDataChunk)?;

    if fmt.format_tag != 1 {
        return Err(WavError::UnsupportedEncoding {
            format_tag: fmt.format_tag,
        });
    }
    if fmt.bits != 16 {
        return Err(WavError::UnsupportedBitDepth { bits: fmt.bits });
    }
    if fmt.channels == 0 {
        return Err(WavError::ZeroChannels);
    }
    if fmt.sample_rate == 0 {
        return Err(WavError::InvalidSampleRate);
    }
    if data.is_empty() {
        return Err(WavError::EmptyAudio);
    }

    let channels = fmt.channels as usize;
    let frame_bytes = 2 * channels;
    let n_frames = data.len() / frame_bytes;
    if n_frames == 0 {
        return Err(WavError::EmptyAudio);
    }
    let mut samples = Vec::with_capacity(n_frames);
    for frame in 0..n_frames {
        let at = frame * frame_bytes;
        let raw = i16::from_le_bytes([data[at], data[at + 1]]);
        samples.push(raw as f64 / 32768.0);
    }
    TimeSeries::new(samples, fmt.sample_rate).map_err(|_| WavError::EmptyAudio)
}

pub fn read_wav(path: &Path) -> Result<TimeSeries, WavError> {
    parse_wav(&fs::read(path)?)
}

/// Encodes a mono 16-bit PCM WAV. Samples are scaled by 32767 and clamped.
pub fn encode_wav(ts: &TimeSeries) -> Vec<u8> {
    let n = ts.samples.len();
    let data_len = (2 * n) as u32;
    let mut out = Vec::with_capacity(44 + 2 * n);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes()); // PCM
    out.extend_from_slice(&1u16.to_le_bytes()); // mono
    out.extend_from_slice(&ts.sample_rate_hz.to_le_bytes());
    out.extend_from_slice(&(2 * ts.sample_rate_hz).to_le_bytes()); // byte rate
    out.extend_from_slice(&2u16.to_le_bytes()); // block align
    out.extend_from_slice(&16u16.to_le_bytes()); // bits
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_len.to_le_bytes());
    for &s in &ts.samples {
        let v = (s * 32767.0)
            .round()
            .clamp(i16::MIN as f64, i16::MAX as f64) as i16;
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

pub fn write_wav(path: &Path, ts: &TimeSeries) -> Result<(), WavError> {
    Ok(fs::write(path, encode_wav(ts))?)
}
