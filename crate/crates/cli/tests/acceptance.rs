//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Criteria 7 and 12 share five
//! seeded end-to-end benchmark runs.
//!
//! Oracles used here (dense circuit builder, projected-gradient QP solver,
//! direct information-criterion evaluation) are implemented in this file,
//! independent of the library paths they verify.

use std::path::PathBuf;
use std::sync::OnceLock;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qkad_cli::config::ExperimentConfig;
use qkad_cli::formats;
use qkad_cli::manifest::Manifest;
use qkad_cli::pipeline::{self, RunResult};
use qkad_core::ar::{self, FeatureVector, OrderCriterion};
use qkad_core::eval::{self, PositiveClass, Quadrant};
use qkad_core::kernel::{self, KernelConfig, Standardizer};
use qkad_core::quantum::{self, Entangler, FeatureMapConfig};
use qkad_core::signal::TimeSeries;
use qkad_core::stats;
use qkad_core::svm::{self, OcSvmConfig};

fn pass(criterion: u32, what: &str) {
    println!("criterion {criterion:02}: PASS - {what}");
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn gauss(rng: &mut ChaCha8Rng) -> f64 {
    let (u1, u2): (f64, f64) = (1.0 - rng.gen::<f64>(), rng.gen());
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn cluster(n: usize, d: usize, seed: u64) -> Vec<FeatureVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| FeatureVector::new((0..d).map(|_| gauss(&mut rng)).collect()))
        .collect()
}

fn simulate_ar(phi: &[f64], n: usize, seed: u64) -> TimeSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let burn = 1000;
    let mut y = vec![0.0; n + burn];
    for t in 0..n + burn {
        let mut v = 0.0;
        for (j, &c) in phi.iter().enumerate() {
            if t > j {
                v += c * y[t - 1 - j];
            }
        }
        y[t] = v + gauss(&mut rng);
    }
    TimeSeries::new(y.split_off(burn), 16_000).unwrap()
}

/// Five end-to-end default-benchmark runs, built once and shared by the
/// criteria that consume them.
struct BenchRuns {
    // Held so the output directories survive until the process exits.
    _dirs: Vec<tempfile::TempDir>,
    runs: Vec<(u64, PathBuf, RunResult)>,
}

static RUNS: OnceLock<BenchRuns> = OnceLock::new();

const BENCH_SEEDS: [u64; 5] = [7, 8, 9, 10, 11];

fn bench_runs() -> &'static BenchRuns {
    RUNS.get_or_init(|| {
        let mut dirs = Vec::new();
        let mut runs = Vec::new();
        for &seed in &BENCH_SEEDS {
            let cfg = ExperimentConfig {
                seed,
                ..ExperimentConfig::default()
            };
            let dir = tempfile::tempdir().expect("tempdir");
            let outcome = pipeline::cmd_bench(&cfg, dir.path(), false).expect("bench");
            runs.push((seed, dir.path().to_path_buf(), outcome.run));
            dirs.push(dir);
        }
        BenchRuns { _dirs: dirs, runs }
    })
}

// ---------------------------------------------------------------------------
// 1. Dataset composition
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_dataset_composition() {
    let runs = bench_runs();
    let (_, dir, run) = &runs.runs[0];
    let manifest = Manifest::load(&dir.join("manifest.json")).unwrap();
    let cfg = &run.config;
    manifest
        .validate_composition(&cfg.dataset, cfg.distances_m.len(), cfg.channels.len())
        .unwrap();
    // Per cell: 60/30/30/30 samples with 40 training normals.
    assert_eq!(cfg.dataset.normal, 60);
    assert_eq!(cfg.dataset.cha_anomaly, 30);
    assert_eq!(cfg.dataset.con_anomaly, 30);
    assert_eq!(cfg.dataset.both_anomaly, 30);
    assert_eq!(cfg.dataset.training_normals, 40);
    let cells = cfg.distances_m.len() * cfg.channels.len();
    assert_eq!(manifest.entries.len(), cells * 150);
    assert_eq!(manifest.train_count(), cells * 40);
    assert_eq!(manifest.test_count(), cells * 110);
    pass(
        1,
        "default manifest holds 60/30/30/30 per cell with 40 training normals",
    );
}

// ---------------------------------------------------------------------------
// 2. Reported confusion-matrix metrics
// ---------------------------------------------------------------------------

#[test]
fn criterion_02_confusion_matrix_metrics() {
    let cm = eval::ConfusionMatrix {
        true_positive: 20,
        false_negative: 0,
        false_positive: 30,
        true_negative: 60,
        positive_class: PositiveClass::Normal,
    };
    let normal_positive = eval::metrics(&cm).unwrap();
    assert!((normal_positive.accuracy - 0.72727).abs() < 1e-5);
    assert!((normal_positive.f1 - 0.57143).abs() < 1e-5);

    let anomaly_positive = eval::metrics(&cm.relabeled()).unwrap();
    assert!((anomaly_positive.f1 - 0.8).abs() < 1e-5);
    assert!((anomaly_positive.accuracy - 0.72727).abs() < 1e-5);
    pass(
        2,
        "matrix (20,0,30,60) gives accuracy 0.72727, F1 0.8/0.57143 by convention",
    );
}

// ---------------------------------------------------------------------------
// 3. Kernel identities
// ---------------------------------------------------------------------------

#[test]
fn criterion_03_kernel_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let fm = FeatureMapConfig::default();
    let mut previous: Option<FeatureVector> = None;
    for _ in 0..1000 {
        let x = FeatureVector::new((0..5).map(|_| gauss(&mut rng)).collect());
        let k_self = kernel::quantum_kernel(&x, &x, &fm).unwrap();
        assert!((k_self - 1.0).abs() < 1e-12, "self-fidelity {k_self}");
        assert_eq!(kernel::rbf_kernel(&x.values, &x.values, 1.0).unwrap(), 1.0);

        if let Some(y) = previous {
            let kxy = kernel::quantum_kernel(&x, &y, &fm).unwrap();
            let kyx = kernel::quantum_kernel(&y, &x, &fm).unwrap();
            assert!((kxy - kyx).abs() < 1e-12);
            assert!((0.0..=1.0 + 1e-12).contains(&kxy), "range {kxy}");
            let rxy = kernel::rbf_kernel(&x.values, &y.values, 1.0).unwrap();
            assert_eq!(rxy, kernel::rbf_kernel(&y.values, &x.values, 1.0).unwrap());
            assert!((0.0..=1.0 + 1e-12).contains(&rxy));
        }
        previous = Some(x);
    }
    pass(
        3,
        "unit self-similarity, symmetry, and [0,1] range over 1000 vectors",
    );
}

// ---------------------------------------------------------------------------
// 4. Hilbert-space dimension
// ---------------------------------------------------------------------------

#[test]
fn criterion_04_hilbert_dimension() {
    let state =
        quantum::feature_map_state(&[0.1, -0.4, 0.9, 0.3, -0.7], &FeatureMapConfig::default())
            .unwrap();
    assert_eq!(state.amplitudes().len(), 32);
    pass(4, "5-dimensional input encodes into exactly 32 amplitudes");
}

// ---------------------------------------------------------------------------
// 5. Levinson-Durbin vs direct Yule-Walker
// ---------------------------------------------------------------------------

#[test]
fn criterion_05_estimation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for trial in 0..500 {
        let order = 1 + (trial % 10);
        // A valid autocovariance sequence: the biased estimator of a real
        // series is positive semidefinite by construction.
        let coef = 0.8 * (2.0 * rng.gen::<f64>() - 1.0);
        let ts = simulate_ar(&[coef, -0.2 * coef], 2000, 5000 + trial as u64);
        let acov = ar::autocovariance(&ts, order).unwrap();
        let fast = ar::levinson_durbin(&acov, order).unwrap();
        let direct = ar::yule_walker_direct(&acov, order).unwrap();
        for (a, b) in fast.phi.iter().zip(&direct) {
            assert!((a - b).abs() < 1e-10, "trial {trial}: {a} vs {b}");
        }
    }
    pass(
        5,
        "recursion matches dense Yule-Walker solve on 500 sequences, p <= 10",
    );
}

// ---------------------------------------------------------------------------
// 6. Order-selection study
// ---------------------------------------------------------------------------

#[test]
fn criterion_06_order_selection_study() {
    let phi = [0.5, -0.3, 0.2, -0.15, 0.1];
    let mut aic_hits = 0;
    let mut bic_hits = 0;
    for seed in 0..100u64 {
        let ts = simulate_ar(&phi, 10_000, seed);

        // AIC over candidate orders 1..=5, cross-checked against a direct
        // evaluation of the criterion per order.
        let sel = ar::select_order(&ts, 5, OrderCriterion::Aic).unwrap();
        let direct: Vec<f64> = (1..=5)
            .map(|p| {
                let model = ar::fit_ar(&ts, p).unwrap();
                10_000.0 * model.sigma2.ln() + 2.0 * p as f64
            })
            .collect();
        let direct_argmin = direct
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0
            + 1;
        assert_eq!(sel.order, direct_argmin, "seed {seed}: argmin mismatch");
        if sel.order == 5 {
            aic_hits += 1;
        }

        // The consistent criterion also recovers order 5 from a wider sweep.
        if ar::select_order(&ts, 10, OrderCriterion::Bic)
            .unwrap()
            .order
            == 5
        {
            bic_hits += 1;
        }
    }
    assert!(
        aic_hits >= 95,
        "AIC study selected 5 in only {aic_hits}/100 trials"
    );
    assert!(
        bic_hits >= 95,
        "BIC sweep selected 5 in only {bic_hits}/100 trials"
    );
    pass(
        6,
        "AIC picks order 5 in >=95/100 trials (and BIC does over 1..=10)",
    );
}

// ---------------------------------------------------------------------------
// 7. Benchmark: quantum vs classical across distances
// ---------------------------------------------------------------------------

fn channel_mean(run: &RunResult, kernel: &str, distance: f64) -> f64 {
    let vals: Vec<f64> = run
        .cells
        .iter()
        .filter(|c| c.kernel == kernel && c.distance_m == distance)
        .map(|c| c.accuracy)
        .collect();
    assert!(!vals.is_empty());
    vals.iter().sum::<f64>() / vals.len() as f64
}

#[test]
fn criterion_07_quantum_vs_classical_benchmark() {
    let runs = bench_runs();
    let distances = runs.runs[0].2.config.distances_m.clone();
    let max_distance = distances.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    // Quantum holds >= 0.90 at every distance for every seed.
    for (seed, _, run) in &runs.runs {
        for &d in &distances {
            let q = channel_mean(run, "quantum", d);
            assert!(
                q >= 0.90,
                "seed {seed}, {d} m: quantum accuracy {q:.4} < 0.90"
            );
        }
    }

    // Seed-aggregated comparison at the maximum distance.
    let mean_over_seeds = |kernel: &str| -> f64 {
        runs.runs
            .iter()
            .map(|(_, _, run)| channel_mean(run, kernel, max_distance))
            .sum::<f64>()
            / runs.runs.len() as f64
    };
    let quantum = mean_over_seeds("quantum");
    let rbf = mean_over_seeds("rbf");
    assert!(
        quantum >= rbf,
        "quantum {quantum:.4} below classical {rbf:.4} at {max_distance} m"
    );
    pass(
        7,
        "quantum >= 0.90 at every distance and >= RBF at max distance over 5 seeds",
    );
}

// ---------------------------------------------------------------------------
// 8. nu-property
// ---------------------------------------------------------------------------

#[test]
fn criterion_08_nu_property() {
    for &n in &[20usize, 50, 100] {
        for &nu in &[0.05, 0.1, 0.2] {
            let samples = cluster(n, 2, 800 + n as u64);
            let std = Standardizer::fit(&samples).unwrap();
            let gram = kernel::gram(&samples, &KernelConfig::rbf(0.5), &std).unwrap();
            let cfg = OcSvmConfig {
                nu,
                ..OcSvmConfig::default()
            };
            let model = svm::train(&gram, &cfg, &std).unwrap();
            let outliers = (0..n)
                .filter(|&i| svm::decision(&model, gram.row(i)).unwrap() < 0.0)
                .count() as f64
                / n as f64;
            let sv_fraction = model.support_indices.len() as f64 / n as f64;
            let slack = 2.0 / n as f64;
            assert!(outliers <= nu + slack, "n={n} nu={nu}: outliers {outliers}");
            assert!(
                sv_fraction >= nu - slack,
                "n={n} nu={nu}: SVs {sv_fraction}"
            );
        }
    }
    pass(
        8,
        "training outliers <= nu + 2/n and SVs >= nu - 2/n for all (nu, n)",
    );
}

// ---------------------------------------------------------------------------
// 9. QP solver vs projected-gradient oracle
// ---------------------------------------------------------------------------

fn project_box_simplex(v: &[f64], c: f64) -> Vec<f64> {
    let clip_sum = |lambda: f64| -> f64 { v.iter().map(|&x| (x - lambda).clamp(0.0, c)).sum() };
    let mut lo = v.iter().cloned().fold(f64::INFINITY, f64::min) - c - 1.0;
    let mut hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if clip_sum(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);
    v.iter().map(|&x| (x - lambda).clamp(0.0, c)).collect()
}

#[test]
fn criterion_09_qp_solver_oracle() {
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(900 + seed);
        let n = rng.gen_range(10..=60);
        let d = rng.gen_range(2..=5);
        let samples = cluster(n, d, 950 + seed);
        let std = Standardizer::fit(&samples).unwrap();
        let gamma = rng.gen_range(0.1..2.0);
        let gram = kernel::gram(&samples, &KernelConfig::rbf(gamma), &std).unwrap();
        let nu = [0.05, 0.1, 0.2, 0.5][rng.gen_range(0..4)];
        let cfg = OcSvmConfig {
            nu,
            tol: 1e-9,
            max_iter: 1_000_000,
        };
        let model = svm::train(&gram, &cfg, &std).unwrap();
        let smo_obj = svm::dual_objective(&gram, &model.alphas);

        // Accelerated projected gradient with a Gershgorin step bound.
        let c = 1.0 / (nu * n as f64);
        let lipschitz = (0..n)
            .map(|i| gram.row(i).iter().map(|k| k.abs()).sum::<f64>())
            .fold(0.0, f64::max);
        let step = 1.0 / lipschitz;
        let grad = |a: &[f64]| -> Vec<f64> {
            (0..n)
                .map(|i| gram.row(i).iter().zip(a).map(|(&k, &x)| k * x).sum())
                .collect()
        };
        let mut alpha = project_box_simplex(&vec![1.0 / n as f64; n], c);
        let mut alpha_prev = alpha.clone();
        let mut t: f64 = 1.0;
        for _ in 0..20_000 {
            let t_next = 0.5 * (1.0 + (1.0 + 4.0 * t * t).sqrt());
            let momentum = (t - 1.0) / t_next;
            let y: Vec<f64> = alpha
                .iter()
                .zip(&alpha_prev)
                .map(|(&a, &p)| a + momentum * (a - p))
                .collect();
            let g = grad(&y);
            let moved: Vec<f64> = y.iter().zip(&g).map(|(&yi, &gi)| yi - step * gi).collect();
            alpha_prev = alpha;
            alpha = project_box_simplex(&moved, c);
            t = t_next;
        }
        let oracle_obj = svm::dual_objective(&gram, &alpha);
        let rel = (smo_obj - oracle_obj).abs() / oracle_obj.abs().max(1e-12);
        assert!(rel < 1e-6, "instance {seed}: relative gap {rel:.2e}");
    }
    pass(
        9,
        "dual objective within 1e-6 relative of projected gradient, 20 instances",
    );
}

// ---------------------------------------------------------------------------
// 10. Circuit vs dense unitary oracle
// ---------------------------------------------------------------------------

type Matrix = Vec<Vec<Complex64>>;

fn c_re(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn identity_m(dim: usize) -> Matrix {
    (0..dim)
        .map(|i| (0..dim).map(|j| c_re((i == j) as u8 as f64)).collect())
        .collect()
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ar, ac, br, bc) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![c_re(0.0); ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![c_re(0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn oracle_state(x: &[f64], cfg: &FeatureMapConfig) -> Vec<Complex64> {
    let n = cfg.n_qubits;
    let dim = 1usize << n;
    let mut u = identity_m(dim);
    let ry = |theta: f64| -> Matrix {
        let (cs, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        vec![vec![c_re(cs), c_re(-sn)], vec![c_re(sn), c_re(cs)]]
    };
    #[allow(clippy::needless_range_loop)]
    let cnot = |control: usize, target: usize| -> Matrix {
        let mut m = vec![vec![c_re(0.0); dim]; dim];
        for col in 0..dim {
            let row = if col & (1 << control) != 0 {
                col ^ (1 << target)
            } else {
                col
            };
            m[row][col] = c_re(1.0);
        }
        m
    };
    for _ in 0..cfg.repetitions {
        for (i, &xi) in x.iter().enumerate() {
            let gate = kron(
                &kron(&identity_m(1 << (n - 1 - i)), &ry(cfg.angle_scale * xi)),
                &identity_m(1 << i),
            );
            u = matmul(&gate, &u);
        }
        if n >= 2 {
            for q in 0..n - 1 {
                u = matmul(&cnot(q, q + 1), &u);
            }
            if cfg.entangler == Entangler::Ring {
                u = matmul(&cnot(n - 1, 0), &u);
            }
        }
    }
    (0..dim).map(|row| u[row][0]).collect()
}

#[test]
fn criterion_10_circuit_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3usize);
        let cfg = FeatureMapConfig {
            n_qubits: n,
            repetitions: rng.gen_range(1..=3),
            entangler: if rng.gen::<bool>() {
                Entangler::LinearChain
            } else {
                Entangler::Ring
            },
            angle_scale: rng.gen_range(0.1..std::f64::consts::PI),
        };
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let fast = quantum::feature_map_state(&x, &cfg).unwrap();
        for (a, b) in fast.amplitudes().iter().zip(oracle_state(&x, &cfg)) {
            assert!((a - b).norm_sqr().sqrt() < 1e-10);
        }
    }
    pass(
        10,
        "statevector equals dense unitary product for n <= 3, 100 inputs",
    );
}

// ---------------------------------------------------------------------------
// 11. Gram PSD at n = 200
// ---------------------------------------------------------------------------

#[test]
fn criterion_11_gram_psd() {
    for seed in 0..10u64 {
        let samples = cluster(200, 5, 1100 + seed);
        let std = Standardizer::fit(&samples).unwrap();
        for cfg in [
            KernelConfig::rbf(0.5),
            KernelConfig::quantum(FeatureMapConfig::default()),
        ] {
            // Construction itself enforces the bound; assert the eigenvalue
            // explicitly as well.
            let gram = kernel::gram(&samples, &cfg, &std).unwrap();
            let min_eig = gram.min_eigenvalue();
            assert!(
                min_eig >= -1e-8,
                "seed {seed} {}: min eigenvalue {min_eig:e}",
                gram.config.kind.name()
            );
        }
    }
    pass(
        11,
        "min Gram eigenvalue >= -1e-8 for both kernels, 200 samples, 10 seeds",
    );
}

// ---------------------------------------------------------------------------
// 12. Quadrant separation of the two anomaly classes
// ---------------------------------------------------------------------------

#[test]
fn criterion_12_quadrant_separation() {
    let runs = bench_runs();
    for (seed, dir, run) in &runs.runs {
        let mut con_counts: std::collections::HashMap<Quadrant, usize> = Default::default();
        let mut cha_counts: std::collections::HashMap<Quadrant, usize> = Default::default();
        for cell in &run.cells {
            if cell.kernel != "quantum" {
                continue;
            }
            let path = dir.join(format!(
                "results/scatter_d{}_{}.csv",
                cell.distance_m, cell.channel
            ));
            for p in formats::read_scatter_csv(&path).unwrap() {
                match (p.condition.con_anomalous, p.condition.cha_anomalous) {
                    (true, false) => *con_counts.entry(p.quadrant).or_insert(0) += 1,
                    (false, true) => *cha_counts.entry(p.quadrant).or_insert(0) += 1,
                    _ => {}
                }
            }
        }
        let dominant = |counts: &std::collections::HashMap<Quadrant, usize>| {
            let total: usize = counts.values().sum();
            let (&quadrant, &n) = counts.iter().max_by_key(|(_, &n)| n).unwrap();
            (quadrant, n as f64 / total as f64)
        };
        let (con_quadrant, con_frac) = dominant(&con_counts);
        let (cha_quadrant, cha_frac) = dominant(&cha_counts);
        assert!(
            con_frac >= 0.80,
            "seed {seed}: CON anomalies only {con_frac:.2} in {con_quadrant}"
        );
        assert!(
            cha_frac >= 0.80,
            "seed {seed}: CHA anomalies only {cha_frac:.2} in {cha_quadrant}"
        );
        assert_ne!(
            con_quadrant, cha_quadrant,
            "seed {seed}: both classes cluster in {con_quadrant}"
        );
    }
    pass(
        12,
        ">=80% of each anomaly class clusters in its own distinct quadrant, 5 seeds",
    );
}

// ---------------------------------------------------------------------------
// 13. Statistics oracle
// ---------------------------------------------------------------------------

#[test]
fn criterion_13_statistics_oracle() {
    // Hand-computed paired t-test: d = {1, 2, 3}.
    let r = stats::paired_t_test(&[1.0, 2.0, 3.0], &[0.0, 0.0, 0.0]).unwrap();
    assert!((r.t - 3.4641016).abs() < 1e-6);
    assert_eq!(r.df, 2);
    assert!((r.p - 0.0741799).abs() < 1e-6);

    // Published critical value: t = 4.303 at df = 2 <-> p ~ 0.05.
    let p = stats::student_t_two_sided_p(4.303, 2);
    assert!((p - 0.05).abs() < 1e-3);

    // Cohen's d from summary statistics 0.988 +/- 0.013 vs 0.743 +/- 0.257.
    let half = 2.0_f64.sqrt().recip();
    let a = [0.988 - 0.013 * half, 0.988 + 0.013 * half];
    let b = [0.743 - 0.257 * half, 0.743 + 0.257 * half];
    let d = stats::cohens_d(&a, &b).unwrap();
    let expected = (0.988 - 0.743) / ((0.013_f64.powi(2) + 0.257_f64.powi(2)) / 2.0).sqrt();
    assert!((d - expected).abs() < 1e-6);
    assert!((d - 1.3465).abs() < 1e-3);
    pass(
        13,
        "t-test, t-CDF, and Cohen's d match hand-computed values",
    );
}
