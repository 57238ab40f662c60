//! `qkad`: machinery-sound anomaly detection with AR features and quantum
//! fidelity kernels.
//!
//! Subcommands: `synth` | `features` | `train` | `eval` | `bench` | `state`.
//! Exit codes: 0 success, 1 validation or I/O failure, 2 `--check`
//! property failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};

use qkad_cli::config::{EvalScope, ExperimentConfig};
use qkad_cli::pipeline;
use qkad_core::quantum::{self, Entangler, FeatureMapConfig};

#[derive(Parser)]
#[command(
    name = "qkad",
    about = "Machinery-sound anomaly detection with AR features, a quantum fidelity kernel, and a one-class SVM",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    /// Score only the held-out test split.
    Test,
    /// Score every sample, training normals included.
    All,
}

impl From<ScopeArg> for EvalScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Test => EvalScope::TestOnly,
            ScopeArg::All => EvalScope::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EntanglerArg {
    Linear,
    Ring,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize the two-machine dataset and write its manifest.
    Synth {
        /// JSON experiment config; defaults apply for missing fields.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "out")]
        output_dir: PathBuf,
        /// Override the config seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Extract AR coefficient features into features.csv.
    Features {
        #[arg(long, default_value = "out")]
        dataset: PathBuf,
    },
    /// Train one-class SVMs per (distance, channel, kernel) cell.
    Train {
        #[arg(long, default_value = "out")]
        dataset: PathBuf,
        /// Also dump each training Gram matrix as CSV.
        #[arg(long)]
        dump_grams: bool,
    },
    /// Score trained models and emit metrics, sweep, and scatter artifacts.
    Eval {
        #[arg(long, default_value = "out")]
        dataset: PathBuf,
        /// Evaluation scope (defaults to the config's setting).
        #[arg(long)]
        scope: Option<ScopeArg>,
    },
    /// End-to-end run: synth, features, train, eval.
    Bench {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "out")]
        output_dir: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        /// Assert the directional properties of the default benchmark; exit
        /// code 2 on failure.
        #[arg(long)]
        check: bool,
    },
    /// Print the feature-map statevector amplitudes as JSON.
    State {
        /// Comma-separated feature values, one per qubit.
        #[arg(long, value_delimiter = ',', required = true)]
        features: Vec<f64>,
        #[arg(long, default_value_t = 2)]
        repetitions: usize,
        #[arg(long, value_enum, default_value = "linear")]
        entangler: EntanglerArg,
        /// Rotation per unit feature value, radians (default pi).
        #[arg(long)]
        angle_scale: Option<f64>,
    },
}

/// Writes a line to stdout, exiting quietly when the consumer closed the
/// pipe (e.g. `qkad eval | head`).
macro_rules! outln {
    ($($arg:tt)*) => {{
        let mut out = std::io::stdout().lock();
        if let Err(e) = writeln!(out, $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(e.into());
        }
    }};
}

fn load_config(path: &Option<PathBuf>, seed: Option<u64>) -> Result<ExperimentConfig> {
    let mut cfg = match path {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn print_summary(run: &pipeline::RunResult) -> Result<()> {
    for cell in &run.cells {
        outln!(
            "d{:<4} {:<4} {:<8} accuracy {:.4}  f1 {:.4}",
            cell.distance_m,
            cell.channel,
            cell.kernel,
            cell.accuracy,
            cell.f1
        );
    }
    if let Some(stats) = &run.statistics {
        outln!(
            "accuracy: quantum {:.4} vs rbf {:.4}",
            stats.accuracy.quantum_mean,
            stats.accuracy.rbf_mean
        );
        if let (Some(t), Some(df), Some(p), Some(d)) = (
            stats.accuracy.t,
            stats.accuracy.df,
            stats.accuracy.p,
            stats.accuracy.cohens_d,
        ) {
            outln!("          t({df}) = {t:.3}, p = {p:.4}, Cohen's d = {d:.3}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Synth {
            config,
            output_dir,
            seed,
        } => {
            let cfg = load_config(&config, seed)?;
            let manifest = pipeline::cmd_synth(&cfg, &output_dir)?;
            outln!(
                "wrote {} samples ({} train / {} test) to {}",
                manifest.entries.len(),
                manifest.train_count(),
                manifest.test_count(),
                output_dir.display()
            );
        }
        Command::Features { dataset } => {
            let path = pipeline::cmd_features(&dataset)?;
            outln!("wrote {}", path.display());
        }
        Command::Train {
            dataset,
            dump_grams,
        } => {
            let models = pipeline::cmd_train(&dataset, dump_grams)?;
            outln!("trained {} models", models.len());
        }
        Command::Eval { dataset, scope } => {
            let run = pipeline::cmd_eval(&dataset, scope.map(Into::into))?;
            print_summary(&run)?;
        }
        Command::Bench {
            config,
            output_dir,
            seed,
            check,
        } => {
            let cfg = load_config(&config, seed)?;
            let outcome = pipeline::cmd_bench(&cfg, &output_dir, check)?;
            print_summary(&outcome.run)?;
            if !outcome.check_failures.is_empty() {
                for failure in &outcome.check_failures {
                    eprintln!("check failed: {failure}");
                }
                return Ok(ExitCode::from(2));
            }
            if check {
                outln!("all checks passed");
            }
        }
        Command::State {
            features,
            repetitions,
            entangler,
            angle_scale,
        } => {
            let cfg = FeatureMapConfig {
                n_qubits: features.len(),
                repetitions,
                entangler: match entangler {
                    EntanglerArg::Linear => Entangler::LinearChain,
                    EntanglerArg::Ring => Entangler::Ring,
                },
                angle_scale: angle_scale.unwrap_or(std::f64::consts::PI),
            };
            let state = match quantum::feature_map_state(&features, &cfg) {
                Ok(s) => s,
                Err(e) => bail!("feature map: {e}"),
            };
            let amplitudes: Vec<serde_json::Value> = state
                .amplitudes()
                .iter()
                .map(|a| serde_json::json!({ "re": a.re, "im": a.im }))
                .collect();
            outln!("{}", serde_json::to_string_pretty(&amplitudes)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
