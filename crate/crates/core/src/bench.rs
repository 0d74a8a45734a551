//! Scaling benchmarks: generate strings of increasing length, scan them and
//! fit the growth of the evaluation count on a log-log scale.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::build_prefix_counts;
use crate::scan::{scan, scan_threshold_streaming, Instrumentation, Variant};
use crate::stats::{fit_loglog_slope, SlopeFit};
use crate::synth::{derive_seed, generate, GeneratorSpec};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    /// Template; `n` and `seed` are replaced per trial.
    pub generator: GeneratorSpec,
    pub variant: Variant,
    pub oracle: bool,
    /// Base seed, see [`derive_seed`].
    pub seed: u64,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return Err(Error::Domain("sizes must be non-empty and positive".into()));
        }
        if self.trials == 0 {
            return Err(Error::Domain("trials must be at least 1".into()));
        }
        self.generator.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub trial: usize,
    pub evaluations: u64,
    pub chi2_max: f64,
    pub elapsed_seconds: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    /// Ordered by size, then trial.
    pub rows: Vec<BenchRow>,
    /// Mean evaluations per size, in the order sizes were given.
    pub mean_evaluations: Vec<(usize, f64)>,
    /// Present when at least two distinct sizes were run.
    pub fit: Option<SlopeFit>,
}

/// Generates one string and scans it, returning the instrumentation and
/// the best score found (0 when nothing qualifies).
pub fn run_trial(
    spec: &GeneratorSpec,
    variant: Variant,
    oracle: bool,
) -> Result<(Instrumentation, f64)> {
    let generated = generate(spec)?;
    let pc = build_prefix_counts(&generated.string);
    match variant {
        Variant::Threshold { alpha } => {
            let mut best = 0.0f64;
            let ins = scan_threshold_streaming(&pc, &generated.model, alpha, oracle, |s| {
                best = best.max(s.score)
            })?;
            Ok((ins, best))
        }
        _ => {
            let r = scan(&pc, &generated.model, variant, oracle)?;
            Ok((r.instrumentation, r.best_score().unwrap_or(0.0)))
        }
    }
}

/// Runs every (size, trial) pair; trials execute in parallel but rows come
/// back in a fixed order.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    config.validate()?;
    let jobs: Vec<(usize, usize)> = config
        .sizes
        .iter()
        .flat_map(|&n| (0..config.trials).map(move |t| (n, t)))
        .collect();

    let rows = jobs
        .par_iter()
        .map(|&(n, trial)| {
            let seed = derive_seed(config.seed, n, trial);
            let spec = config.generator.clone().with_n(n).with_seed(seed);
            let (ins, chi2_max) = run_trial(&spec, config.variant, config.oracle)?;
            Ok(BenchRow {
                n,
                k: spec.k,
                trial,
                evaluations: ins.evaluations,
                chi2_max,
                elapsed_seconds: ins.elapsed,
                seed,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut mean_evaluations: Vec<(usize, f64)> = Vec::new();
    for &n in &config.sizes {
        if mean_evaluations.iter().any(|&(m, _)| m == n) {
            continue;
        }
        let evals: Vec<f64> = rows
            .iter()
            .filter(|r| r.n == n)
            .map(|r| r.evaluations as f64)
            .collect();
        mean_evaluations.push((n, evals.iter().sum::<f64>() / evals.len() as f64));
    }
    let pairs: Vec<(f64, f64)> = mean_evaluations
        .iter()
        .map(|&(n, m)| (n as f64, m))
        .collect();
    let fit = if pairs.len() >= 2 {
        Some(fit_loglog_slope(&pairs)?)
    } else {
        None
    };

    Ok(BenchReport {
        rows,
        mean_evaluations,
        fit,
    })
}
