//! Benchmark harness: times the approximation engines against the exact DP
//! across a size sweep and emits JSON-lines rows plus a TSV summary.

use anyhow::{anyhow, bail, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;
use std::time::Instant;

use edix_core::channel::{corrupt_counts, CorruptionMode};
use edix_core::editdist::edit_distance;
use edix_core::editscript::apply_edit_script;
use edix_core::indexing::{
    build_indexing_scheme, build_two_layer_scheme, ed_approx, enhanced_ed_approx, CodebookParams,
    IndexingScheme,
};
use edix_core::rng::SeedSplitter;
use edix_core::strings::IndexedString;
use rand::Rng;

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub trial: usize,
    pub method: &'static str,
    pub distance: usize,
    pub oracle_distance: Option<usize>,
    pub ratio: Option<f64>,
    pub edge_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub eps: f64,
    pub seed: u64,
    pub layers: u8,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub eps: f64,
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
    pub layers: u8,
    /// one-layer block length (outer N1 for two layers)
    pub block_len: usize,
    pub inner_block_len: usize,
    pub index_alphabet: u32,
    pub inner_alphabet: u32,
    pub payload_alphabet: u16,
    /// per-trial edit budget as a fraction of n
    pub budget: f64,
    /// DP is measured only up to this size
    pub dp_cutoff: usize,
    /// include wall times in rows (off by default for reproducible files)
    pub timings: bool,
}

impl BenchConfig {
    pub fn standard(sizes: Vec<usize>, eps: f64, trials: usize, seed: u64) -> Self {
        BenchConfig {
            sizes,
            eps,
            trials,
            seed,
            jobs: 1,
            layers: 1,
            block_len: 16,
            inner_block_len: 8,
            index_alphabet: 65536,
            inner_alphabet: 512,
            payload_alphabet: 16,
            budget: 0.1,
            dp_cutoff: usize::MAX,
            timings: true,
        }
    }

    fn method_name(&self) -> &'static str {
        if self.layers == 2 {
            "ed-approx-2layer"
        } else {
            "ed-approx-1layer"
        }
    }
}

fn build_scheme(cfg: &BenchConfig, n: usize, seed: u64) -> Result<IndexingScheme> {
    let scheme = if cfg.layers == 2 {
        build_two_layer_scheme(
            n,
            cfg.eps,
            &CodebookParams::standard(cfg.block_len, cfg.index_alphabet),
            &CodebookParams::standard(cfg.inner_block_len, cfg.inner_alphabet),
            seed,
        )
    } else {
        build_indexing_scheme(
            n,
            cfg.eps,
            &CodebookParams::standard(cfg.block_len, cfg.index_alphabet),
            seed,
        )
    };
    scheme.map_err(|e| anyhow!(e))
}

/// Runs the size sweep. Sizes must be ascending. Rows come back sorted by
/// `(n, trial, method)` regardless of job count.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    if cfg.sizes.windows(2).any(|w| w[0] >= w[1]) {
        bail!("sizes must be strictly ascending");
    }
    if !(cfg.layers == 1 || cfg.layers == 2) {
        bail!("layers must be 1 or 2");
    }
    let split = SeedSplitter::new(cfg.seed);
    let mut rows: Vec<BenchRow> = Vec::new();
    for &n in &cfg.sizes {
        let scheme = build_scheme(
            cfg,
            n,
            split.stream_indexed("bench-scheme", n as u64).random(),
        )?;
        let mut prng = split.stream_indexed("bench-payload", n as u64);
        let data: Vec<u16> = (0..n)
            .map(|_| prng.random_range(0..cfg.payload_alphabet))
            .collect();
        let payload =
            IndexedString::plain(&data, cfg.payload_alphabet as u32).map_err(|e| anyhow!(e))?;
        let indexed = payload
            .index_concat(&scheme.index_string().map_err(|e| anyhow!(e))?)
            .map_err(|e| anyhow!(e))?;

        let trial_ids: Vec<usize> = (0..cfg.trials).collect();
        let run_trial = |&trial: &usize| -> Result<Vec<BenchRow>> {
            let mut trng = split.stream_indexed("bench-trial", (n as u64) << 20 | trial as u64);
            let budget = (cfg.budget * n as f64) as usize;
            let ops = trng.random_range(0..=budget);
            let dels = trng.random_range(0..=ops);
            let (target, _) = corrupt_counts(
                &indexed,
                dels,
                ops - dels,
                CorruptionMode::Uniform,
                trng.random(),
            )
            .map_err(|e| anyhow!("n={n} trial={trial} seed={}: {e}", cfg.seed))?;

            let mut out = Vec::with_capacity(2);
            let t0 = Instant::now();
            let (script, stats) = if cfg.layers == 2 {
                enhanced_ed_approx(&indexed, &target, &scheme)
            } else {
                ed_approx(&indexed, &target, &scheme)
            }
            .map_err(|e| anyhow!("n={n} trial={trial} seed={}: {e}", cfg.seed))?;
            let approx_ms = t0.elapsed().as_secs_f64() * 1e3;
            let replayed = apply_edit_script(&indexed, &script).map_err(|e| anyhow!(e))?;
            if replayed != target {
                bail!("script does not reproduce the target (n={n}, trial={trial})");
            }

            let oracle = if n <= cfg.dp_cutoff {
                let t1 = Instant::now();
                let d = edit_distance(&indexed, &target).map_err(|e| anyhow!(e))?;
                Some((d, t1.elapsed().as_secs_f64() * 1e3))
            } else {
                None
            };

            let ratio = oracle.map(|(d, _)| {
                if d == 0 {
                    1.0
                } else {
                    script.size() as f64 / d as f64
                }
            });
            if let (Some(r), Some((d, _))) = (ratio, oracle) {
                if d > 0 && r < 1.0 {
                    bail!("approximate distance below exact (n={n}, trial={trial})");
                }
            }
            out.push(BenchRow {
                n,
                trial,
                method: cfg.method_name(),
                distance: script.size(),
                oracle_distance: oracle.map(|(d, _)| d),
                ratio,
                edge_count: Some(stats.edge_count),
                wall_ms: cfg.timings.then_some(approx_ms),
            });
            if let Some((d, dp_ms)) = oracle {
                out.push(BenchRow {
                    n,
                    trial,
                    method: "dp",
                    distance: d,
                    oracle_distance: Some(d),
                    ratio: Some(1.0),
                    edge_count: None,
                    wall_ms: cfg.timings.then_some(dp_ms),
                });
            }
            Ok(out)
        };

        let mut n_rows: Vec<BenchRow> = if cfg.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.jobs)
                .build()
                .map_err(|e| anyhow!(e))?;
            pool.install(|| {
                trial_ids
                    .par_iter()
                    .map(run_trial)
                    .collect::<Result<Vec<Vec<BenchRow>>>>()
            })?
            .into_iter()
            .flatten()
            .collect()
        } else {
            let mut acc = Vec::new();
            for t in &trial_ids {
                acc.extend(run_trial(t)?);
            }
            acc
        };
        n_rows.sort_by(|a, b| (a.n, a.trial, a.method).cmp(&(b.n, b.trial, b.method)));
        rows.extend(n_rows);
    }
    Ok(BenchReport {
        rows,
        eps: cfg.eps,
        seed: cfg.seed,
        layers: cfg.layers,
    })
}

/// Median wall time per size for one method (requires timings).
pub fn median_walls(report: &BenchReport, method: &str) -> Vec<(usize, f64)> {
    let mut out = Vec::new();
    let mut sizes: Vec<usize> = report.rows.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    for n in sizes {
        let mut walls: Vec<f64> = report
            .rows
            .iter()
            .filter(|r| r.n == n && r.method == method)
            .filter_map(|r| r.wall_ms)
            .collect();
        if walls.is_empty() {
            continue;
        }
        walls.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.push((n, walls[walls.len() / 2]));
    }
    out
}

/// Wall-time growth factor per size doubling, from median walls.
pub fn growth_factors(report: &BenchReport, method: &str) -> Vec<(usize, usize, f64)> {
    let walls = median_walls(report, method);
    walls
        .windows(2)
        .map(|w| (w[0].0, w[1].0, w[1].1 / w[0].1))
        .collect()
}

pub fn to_json_lines(report: &BenchReport) -> String {
    let mut out = String::new();
    for row in &report.rows {
        out.push_str(&serde_json::to_string(row).expect("bench row serialization"));
        out.push('\n');
    }
    out
}

pub fn to_tsv(report: &BenchReport) -> String {
    let mut out = String::from("n\tmethod\ttrial\twall_ms\tdistance\toracle\tratio\tedges\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.n,
            r.method,
            r.trial,
            r.wall_ms
                .map_or_else(|| "-".to_string(), |w| format!("{w:.3}")),
            r.distance,
            r.oracle_distance
                .map_or_else(|| "-".to_string(), |d| d.to_string()),
            r.ratio
                .map_or_else(|| "-".to_string(), |x| format!("{x:.4}")),
            r.edge_count
                .map_or_else(|| "-".to_string(), |e| e.to_string()),
        );
    }
    out
}
