//! Command-line interface, file formats and benchmark harness around
//! `edix-core`. Every subcommand is a thin wrapper over the library: same
//! seeds, same results.

pub mod bench;
pub mod formats;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use edix_core::channel::{corrupt_counts, verify_record, CorruptionMode};
use edix_core::codes::{
    convert_lr_to_insdel, decode_unique_report, encode_list, encode_unique, list_decode_insdel,
    ListInsdelCode, UniqueInsdelCode,
};
use edix_core::indexing::{
    build_indexing_scheme, build_two_layer_scheme, ed_approx, enhanced_ed_approx, CodebookParams,
    IndexingScheme,
};
use edix_core::num::floor_usize;
use edix_core::sync::{count_misdecodings, gen_sync_with, verify_sync};
use edix_core::{AlphabetSpec, IndexedString};

use bench::{run_bench, to_json_lines, to_tsv, BenchConfig};
use formats::{
    read_list_code, read_scheme, read_string_bin, read_string_text, read_sync, read_unique_code,
    record_from_json, record_to_json, report_line, write_list_code, write_scheme, write_string_bin,
    write_string_text, write_sync, write_unique_code, TrialReport,
};

#[derive(Parser)]
#[command(
    name = "edix",
    version,
    about = "Indexed edit-distance approximation and insertion-deletion codes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synchronization string and write it to a file
    GenSync(GenSyncArgs),
    /// Build an indexing scheme (index string + codebooks + parameters)
    GenScheme(GenSchemeArgs),
    /// Approximate the edit distance between an indexed string and a target
    EdApprox(EdApproxArgs),
    /// Encode a message with an insertion-deletion code
    Encode(EncodeArgs),
    /// Uniquely decode a received string
    Decode(DecodeArgs),
    /// List-decode a received string
    ListDecode(ListDecodeArgs),
    /// Apply insertion/deletion noise with a ground-truth record
    Corrupt(CorruptArgs),
    /// Run the scaling benchmark
    Bench(BenchArgs),
    /// Check a sync string, scheme, code bundle or corruption record
    Verify(VerifyArgs),
}

/// Entry point shared by the binary and the integration tests; returns the
/// process exit code (0 success, 1 domain failure, 2 usage error).
pub fn cli_dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            code
        }
        Ok(cli) => match run(cli.command) {
            Ok(()) => 0,
            Err(err) => {
                eprintln!("error: {err:#}");
                1
            }
        },
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::GenSync(a) => cmd_gen_sync(a),
        Command::GenScheme(a) => cmd_gen_scheme(a),
        Command::EdApprox(a) => cmd_ed_approx(a),
        Command::Encode(a) => cmd_encode(a),
        Command::Decode(a) => cmd_decode(a),
        Command::ListDecode(a) => cmd_list_decode(a),
        Command::Corrupt(a) => cmd_corrupt(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

// -------------------------------------------------------------- gen-sync

#[derive(Args)]
struct GenSyncArgs {
    #[arg(long, env = "EDIX_N")]
    n: usize,
    #[arg(long, env = "EDIX_EPS")]
    eps: f64,
    #[arg(long, env = "EDIX_SEED", default_value_t = 0)]
    seed: u64,
    /// constant c in the alphabet size ceil(c / eps^3)
    #[arg(long, default_value_t = 4.0)]
    alphabet_const: f64,
    #[arg(long, env = "EDIX_OUT")]
    out: PathBuf,
}

fn cmd_gen_sync(a: GenSyncArgs) -> Result<()> {
    let s = gen_sync_with(a.n, a.eps, a.alphabet_const, a.seed).map_err(|e| anyhow!(e))?;
    fs::write(&a.out, write_sync(&s)).with_context(|| format!("writing {}", a.out.display()))?;
    println!(
        "sync string: n={} eps={} alphabet={} -> {}",
        s.len(),
        s.epsilon(),
        s.string().alphabet().component_size(0),
        a.out.display()
    );
    Ok(())
}

// ------------------------------------------------------------ gen-scheme

#[derive(Args)]
struct GenSchemeArgs {
    #[arg(long, env = "EDIX_N")]
    n: usize,
    #[arg(long, env = "EDIX_EPS")]
    eps: f64,
    #[arg(long, env = "EDIX_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "EDIX_LAYERS", default_value_t = 1)]
    layers: u8,
    #[arg(long, default_value_t = 8)]
    block_len: usize,
    #[arg(long, default_value_t = 8)]
    inner_block_len: usize,
    #[arg(long, default_value_t = 4096)]
    alphabet: u32,
    #[arg(long, default_value_t = 512)]
    inner_alphabet: u32,
    #[arg(long, env = "EDIX_OUT")]
    out: PathBuf,
}

fn cmd_gen_scheme(a: GenSchemeArgs) -> Result<()> {
    let scheme = match a.layers {
        1 => build_indexing_scheme(
            a.n,
            a.eps,
            &CodebookParams::standard(a.block_len, a.alphabet),
            a.seed,
        )
        .map_err(|e| anyhow!(e))?,
        2 => build_two_layer_scheme(
            a.n,
            a.eps,
            &CodebookParams::standard(a.block_len, a.alphabet),
            &CodebookParams::standard(a.inner_block_len, a.inner_alphabet),
            a.seed,
        )
        .map_err(|e| anyhow!(e))?,
        other => bail!("layers must be 1 or 2, got {other}"),
    };
    fs::write(&a.out, write_scheme(&scheme))
        .with_context(|| format!("writing {}", a.out.display()))?;
    println!(
        "scheme: n={} eps={} N={} window={} layers={} -> {}",
        scheme.len(),
        scheme.epsilon(),
        scheme.block_len(),
        scheme.window(),
        if scheme.layer2().is_some() { 2 } else { 1 },
        a.out.display()
    );
    Ok(())
}

// ------------------------------------------------------------- ed-approx

#[derive(Args)]
struct EdApproxArgs {
    #[arg(long, env = "EDIX_SCHEME")]
    scheme: PathBuf,
    /// composite source (payload already indexed by the scheme)
    #[arg(long, conflicts_with = "payload")]
    source: Option<PathBuf>,
    /// plain payload; the source is built by attaching the scheme's index
    #[arg(long)]
    payload: Option<PathBuf>,
    #[arg(long)]
    target: Option<PathBuf>,
    /// expected layer count, checked against the scheme file
    #[arg(long, env = "EDIX_LAYERS")]
    layers: Option<u8>,
    /// print instrumentation counters
    #[arg(long)]
    stats: bool,
    /// write the composite source string here (usable without --target)
    #[arg(long)]
    indexed_out: Option<PathBuf>,
    /// write the edit script here
    #[arg(long, env = "EDIX_OUT")]
    out: Option<PathBuf>,
}

fn cmd_ed_approx(a: EdApproxArgs) -> Result<()> {
    let scheme = read_scheme(&read_text(&a.scheme)?)?;
    let scheme_layers: u8 = if scheme.layer2().is_some() { 2 } else { 1 };
    if let Some(l) = a.layers {
        if l != scheme_layers {
            bail!("--layers {l} but the scheme has {scheme_layers}");
        }
    }
    let source = match (&a.source, &a.payload) {
        (Some(path), None) => {
            let (s, _) = read_scheme_pair(&scheme, &read_text(path)?, None)?;
            s
        }
        (None, Some(path)) => {
            let payload = read_string_text(&read_text(path)?, None)?;
            payload
                .index_concat(&scheme.index_string().map_err(|e| anyhow!(e))?)
                .map_err(|e| anyhow!(e))?
        }
        _ => bail!("exactly one of --source/--payload is required"),
    };
    if let Some(path) = &a.indexed_out {
        fs::write(path, write_string_text(&source))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let Some(target_path) = &a.target else {
        if a.indexed_out.is_some() {
            println!("indexed source written; no target given");
            return Ok(());
        }
        bail!("--target is required unless only --indexed-out is requested");
    };
    let target_text = read_text(target_path)?;
    let target = read_string_text(&target_text, Some(source.alphabet()))?;
    let (script, stats) = if scheme_layers == 2 {
        enhanced_ed_approx(&source, &target, &scheme)
    } else {
        ed_approx(&source, &target, &scheme)
    }
    .map_err(|e| anyhow!(e))?;
    println!(
        "approx distance {} (deletions {}, insertions {})",
        script.size(),
        script.num_deletions(),
        script.num_insertions()
    );
    if a.stats {
        println!(
            "stats: decode_calls={} inner_decode_calls={} edges={} edge_bound={} max_list={}",
            stats.decode_calls,
            stats.inner_decode_calls,
            stats.edge_count,
            stats.edge_bound,
            stats.max_list
        );
        println!("list size histogram: {:?}", stats.list_sizes);
    }
    if let Some(out) = &a.out {
        fs::write(out, formats::write_script(&script))
            .with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(())
}

/// Reads a composite string whose trailing components belong to `scheme`;
/// payload component sizes are inferred, index components come from the
/// scheme's codebooks.
fn read_scheme_pair(
    scheme: &IndexingScheme,
    source_text: &str,
    target_text: Option<&str>,
) -> Result<(IndexedString, Option<IndexedString>)> {
    let raw = read_string_text(source_text, None)?;
    let k = raw.num_components();
    let own = if scheme.layer2().is_some() { 2 } else { 1 };
    if k < own + 1 {
        bail!(
            "source has {k} components, scheme needs at least {}",
            own + 1
        );
    }
    let mut sizes: Vec<u32> = raw.alphabet().components().to_vec();
    sizes[k - own] = scheme.codebook().alphabet_size();
    if let Some(l2) = scheme.layer2() {
        sizes[k - 1] = l2.codebook.alphabet_size();
    }
    let alphabet = AlphabetSpec::new(sizes).map_err(|e| anyhow!(e))?;
    let source =
        IndexedString::new(alphabet.clone(), raw.raw().to_vec()).map_err(|e| anyhow!(e))?;
    let target = target_text
        .map(|t| read_string_text(t, Some(&alphabet)))
        .transpose()?;
    Ok((source, target))
}

// ---------------------------------------------------------------- encode

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeKind {
    Unique,
    List,
}

#[derive(Args, Clone)]
struct CodeParams {
    #[arg(long, value_enum, env = "EDIX_KIND", default_value = "unique")]
    kind: CodeKind,
    /// load an existing code bundle instead of building one
    #[arg(long)]
    code: Option<PathBuf>,
    #[arg(long, env = "EDIX_N", default_value_t = 255)]
    n: usize,
    #[arg(long, env = "EDIX_DELTA", default_value_t = 0.1)]
    delta: f64,
    #[arg(long, env = "EDIX_EPS", default_value_t = 0.3)]
    eps: f64,
    #[arg(long, env = "EDIX_GAMMA", default_value_t = 1.0)]
    gamma: f64,
    #[arg(long, env = "EDIX_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    block_len: usize,
    #[arg(long, default_value_t = 4096)]
    alphabet: u32,
    /// list kind: agreement threshold alpha
    #[arg(long, default_value_t = 0.4)]
    alpha: f64,
    /// list kind: input list size l
    #[arg(long, default_value_t = 20)]
    l: usize,
    /// list kind: codebook size M
    #[arg(long, default_value_t = 64)]
    lr_m: usize,
    /// list kind: codeword length N
    #[arg(long, default_value_t = 32)]
    lr_n: usize,
    /// list kind: codebook alphabet q
    #[arg(long, default_value_t = 256)]
    lr_q: u32,
    /// list kind: pairwise separation of the codebook
    #[arg(long, default_value_t = 48)]
    lr_sep: usize,
}

enum LoadedCode {
    Unique(Box<UniqueInsdelCode>),
    List(Box<ListInsdelCode>),
}

fn load_or_build_code(p: &CodeParams) -> Result<LoadedCode> {
    if let Some(path) = &p.code {
        let text = read_text(path)?;
        return match p.kind {
            CodeKind::Unique => Ok(LoadedCode::Unique(Box::new(read_unique_code(&text)?))),
            CodeKind::List => Ok(LoadedCode::List(Box::new(read_list_code(&text)?))),
        };
    }
    match p.kind {
        CodeKind::Unique => {
            let code = UniqueInsdelCode::new(p.n, p.delta, p.eps, p.block_len, p.alphabet, p.seed)
                .map_err(|e| anyhow!(e))?;
            Ok(LoadedCode::Unique(Box::new(code)))
        }
        CodeKind::List => {
            let lr = edix_core::blockcode::gen_codebook(p.lr_m, p.lr_n, p.lr_q, p.lr_sep, p.seed)
                .map_err(|e| anyhow!(e))?;
            let code = convert_lr_to_insdel(
                lr,
                p.alpha,
                p.l,
                p.eps,
                p.gamma,
                p.block_len,
                p.alphabet,
                p.seed.wrapping_add(1),
            )
            .map_err(|e| anyhow!(e))?;
            Ok(LoadedCode::List(Box::new(code)))
        }
    }
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    params: CodeParams,
    /// write the (re)built code bundle here
    #[arg(long)]
    code_out: Option<PathBuf>,
    /// unique kind: message as hex bytes
    #[arg(long)]
    message_hex: Option<String>,
    /// unique kind: message as a raw byte file
    #[arg(long)]
    message_file: Option<PathBuf>,
    /// list kind: message index
    #[arg(long)]
    message_index: Option<usize>,
    #[arg(long, env = "EDIX_OUT")]
    out: PathBuf,
    /// write the codeword in the compact binary format
    #[arg(long)]
    binary: bool,
}

fn cmd_encode(a: EncodeArgs) -> Result<()> {
    let code = load_or_build_code(&a.params)?;
    if let Some(path) = &a.code_out {
        let text = match &code {
            LoadedCode::Unique(c) => write_unique_code(c),
            LoadedCode::List(c) => write_list_code(c),
        };
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let sent = match &code {
        LoadedCode::Unique(c) => {
            let message = match (&a.message_hex, &a.message_file) {
                (Some(hex), None) => parse_hex(hex)?,
                (None, Some(path)) => fs::read(path)?,
                _ => bail!("unique encoding needs exactly one of --message-hex/--message-file"),
            };
            if message.len() != c.message_len() {
                bail!(
                    "message is {} bytes, code dimension is {}",
                    message.len(),
                    c.message_len()
                );
            }
            encode_unique(c, &message).map_err(|e| anyhow!(e))?
        }
        LoadedCode::List(c) => {
            let idx = a
                .message_index
                .context("list encoding needs --message-index")?;
            encode_list(c, idx).map_err(|e| anyhow!(e))?
        }
    };
    write_string_file(&a.out, &sent, a.binary)?;
    let rate_note = match &code {
        LoadedCode::Unique(c) => format!(" (effective rate {:.3})", effective_rate(c)),
        LoadedCode::List(_) => String::new(),
    };
    println!(
        "codeword: n={} components={}{rate_note} -> {}",
        sent.len(),
        sent.num_components(),
        a.out.display()
    );
    Ok(())
}

// ---------------------------------------------------------------- decode

#[derive(Args)]
struct DecodeArgs {
    #[command(flatten)]
    params: CodeParams,
    #[arg(long)]
    received: PathBuf,
    /// ground-truth record (enables misdecoding accounting in the report)
    #[arg(long)]
    record: Option<PathBuf>,
    /// decoded message destination (hex line)
    #[arg(long, env = "EDIX_OUT")]
    out: Option<PathBuf>,
    /// JSON-lines trial report (appended)
    #[arg(long)]
    report: Option<PathBuf>,
    /// include wall-clock times in the report
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    binary: bool,
}

fn cmd_decode(a: DecodeArgs) -> Result<()> {
    let LoadedCode::Unique(code) = load_or_build_code(&a.params)? else {
        bail!("decode expects a unique code; use list-decode for list codes");
    };
    let alphabet = code.composite_alphabet().map_err(|e| anyhow!(e))?;
    let received = read_string_file(&a.received, Some(&alphabet), a.binary)?;
    let started = std::time::Instant::now();
    let outcome = decode_unique_report(&code, &received);
    let wall_ms = a.timings.then(|| started.elapsed().as_secs_f64() * 1e3);

    let misdecodings = match (&a.record, &outcome) {
        (Some(path), Ok(report)) => {
            let record = record_from_json(&read_text(path)?)?;
            Some(count_misdecodings(&record, &report.decoding).map_err(|e| anyhow!(e))?)
        }
        _ => None,
    };
    let line = TrialReport {
        recovered: outcome.is_ok(),
        misdecodings,
        list_size: None,
        wall_ms,
    };
    if let Some(path) = &a.report {
        append_file(path, &report_line(&line))?;
    }
    match outcome {
        Ok(report) => {
            let hex = to_hex(&report.message);
            if let Some(out) = &a.out {
                fs::write(out, format!("{hex}\n"))?;
            }
            println!(
                "recovered ({} erasures, {} symbol errors): {hex}",
                report.erasures, report.errors_observed
            );
            Ok(())
        }
        Err(e) => Err(anyhow!(e)),
    }
}

// ------------------------------------------------------------ list-decode

#[derive(Args)]
struct ListDecodeArgs {
    #[command(flatten)]
    params: CodeParams,
    #[arg(long)]
    received: PathBuf,
    #[arg(long, env = "EDIX_OUT")]
    out: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    binary: bool,
}

fn cmd_list_decode(a: ListDecodeArgs) -> Result<()> {
    let mut params = a.params.clone();
    params.kind = CodeKind::List;
    let LoadedCode::List(code) = load_or_build_code(&params)? else {
        unreachable!("kind forced to list");
    };
    let alphabet = code.composite_alphabet().map_err(|e| anyhow!(e))?;
    let received = read_string_file(&a.received, Some(&alphabet), a.binary)?;
    let started = std::time::Instant::now();
    let outcome = list_decode_insdel(&code, &received).map_err(|e| anyhow!(e))?;
    let wall_ms = a.timings.then(|| started.elapsed().as_secs_f64() * 1e3);
    let line = TrialReport {
        recovered: !outcome.messages.is_empty(),
        misdecodings: None,
        list_size: Some(outcome.messages.len()),
        wall_ms,
    };
    if let Some(path) = &a.report {
        append_file(path, &report_line(&line))?;
    }
    let listing: String = outcome.messages.iter().map(|m| format!("{m}\n")).collect();
    if let Some(out) = &a.out {
        fs::write(out, &listing)?;
    }
    println!(
        "list of {} candidates (max per-position candidates {})",
        outcome.messages.len(),
        outcome.max_candidates
    );
    print!("{listing}");
    Ok(())
}

// --------------------------------------------------------------- corrupt

#[derive(Args)]
struct CorruptArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, env = "EDIX_DELTA", default_value_t = 0.0)]
    delta: f64,
    #[arg(long, env = "EDIX_GAMMA", default_value_t = 0.0)]
    gamma: f64,
    /// uniform | burst | block-shuffle-adjacent
    #[arg(long, default_value = "uniform")]
    mode: String,
    #[arg(long, env = "EDIX_SEED", default_value_t = 0)]
    seed: u64,
    /// comma-separated component sizes of the input alphabet
    /// (inferred from the data when omitted)
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long, env = "EDIX_OUT")]
    out: PathBuf,
    #[arg(long)]
    record_out: Option<PathBuf>,
    #[arg(long)]
    binary: bool,
}

fn cmd_corrupt(a: CorruptArgs) -> Result<()> {
    let mode =
        CorruptionMode::parse(&a.mode).with_context(|| format!("unknown mode `{}`", a.mode))?;
    let alphabet = a.alphabet.as_deref().map(parse_alphabet).transpose()?;
    if !(0.0..1.0).contains(&a.delta) || a.gamma < 0.0 {
        bail!("delta must lie in [0,1), gamma must be non-negative");
    }
    let input = read_string_file(&a.input, alphabet.as_ref(), a.binary)?;
    let n = input.len();
    let d = floor_usize(a.delta * n as f64);
    let i = floor_usize(a.gamma * n as f64);
    let (received, record) = corrupt_counts(&input, d, i, mode, a.seed).map_err(|e| anyhow!(e))?;
    write_string_file(&a.out, &received, a.binary)?;
    if let Some(path) = &a.record_out {
        fs::write(path, record_to_json(&record))?;
    }
    println!(
        "corrupted: {} deletions, {} insertions, {} -> {} symbols",
        record.deletions,
        record.insertions,
        n,
        received.len()
    );
    Ok(())
}

// ----------------------------------------------------------------- bench

#[derive(Args)]
struct BenchArgs {
    /// comma-separated sizes, ascending
    #[arg(long, default_value = "4096,8192,16384")]
    sizes: String,
    #[arg(long, env = "EDIX_EPS", default_value_t = 1.0 / 21.0)]
    eps: f64,
    #[arg(long, env = "EDIX_TRIALS", default_value_t = 3)]
    trials: usize,
    #[arg(long, env = "EDIX_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "EDIX_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long, env = "EDIX_LAYERS", default_value_t = 1)]
    layers: u8,
    #[arg(long, default_value_t = 16)]
    block_len: usize,
    #[arg(long, default_value_t = 8)]
    inner_block_len: usize,
    #[arg(long, default_value_t = 65536)]
    alphabet: u32,
    #[arg(long, default_value_t = 512)]
    inner_alphabet: u32,
    #[arg(long, default_value_t = 16)]
    payload_alphabet: u16,
    /// per-trial edit budget as a fraction of n
    #[arg(long, default_value_t = 0.1)]
    budget: f64,
    /// skip the exact DP above this size
    #[arg(long)]
    dp_cutoff: Option<usize>,
    /// include wall times in the rows (timed runs are not byte-reproducible)
    #[arg(long)]
    timings: bool,
    /// JSON-lines output
    #[arg(long, env = "EDIX_OUT")]
    out: Option<PathBuf>,
    /// TSV summary output
    #[arg(long)]
    tsv: Option<PathBuf>,
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    let sizes: Vec<usize> = a
        .sizes
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| anyhow!(e)))
        .collect::<Result<_>>()?;
    let mut cfg = BenchConfig::standard(sizes, a.eps, a.trials, a.seed);
    cfg.jobs = a.jobs.max(1);
    cfg.layers = a.layers;
    cfg.block_len = a.block_len;
    cfg.inner_block_len = a.inner_block_len;
    cfg.index_alphabet = a.alphabet;
    cfg.inner_alphabet = a.inner_alphabet;
    cfg.payload_alphabet = a.payload_alphabet;
    cfg.budget = a.budget;
    cfg.dp_cutoff = a.dp_cutoff.unwrap_or(usize::MAX);
    cfg.timings = a.timings;
    let report = run_bench(&cfg)?;
    let json = to_json_lines(&report);
    match &a.out {
        Some(path) => fs::write(path, &json)?,
        None => print!("{json}"),
    }
    if let Some(path) = &a.tsv {
        fs::write(path, to_tsv(&report))?;
    }
    if a.timings {
        for method in ["ed-approx-1layer", "ed-approx-2layer", "dp"] {
            for (lo, hi, factor) in bench::growth_factors(&report, method) {
                println!("{method}: {lo} -> {hi}: wall x{factor:.2}");
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- verify

#[derive(Args)]
struct VerifyArgs {
    /// sync string file to re-verify
    #[arg(long)]
    sync: Option<PathBuf>,
    /// override the stored epsilon
    #[arg(long, env = "EDIX_EPS")]
    eps: Option<f64>,
    /// scheme file to validate structurally
    #[arg(long, env = "EDIX_SCHEME")]
    scheme: Option<PathBuf>,
    /// code bundle (unique) to validate
    #[arg(long)]
    code: Option<PathBuf>,
    /// corruption record to check against --input and --received
    #[arg(long)]
    record: Option<PathBuf>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    received: Option<PathBuf>,
}

fn cmd_verify(a: VerifyArgs) -> Result<()> {
    let mut checked = false;
    if let Some(path) = &a.sync {
        checked = true;
        let sync = read_sync(&read_text(path)?)?;
        let eps = a.eps.unwrap_or_else(|| sync.epsilon());
        match verify_sync(sync.string(), eps).map_err(|e| anyhow!(e))? {
            None => println!("sync {}: valid at eps={eps}", path.display()),
            Some(v) => {
                let (i, j, k) = v.one_based();
                bail!(
                    "sync {}: violation at (i,j,k)=({i},{j},{k}), ed={}",
                    path.display(),
                    v.ed
                );
            }
        }
    }
    if let Some(path) = &a.scheme {
        checked = true;
        let scheme = read_scheme(&read_text(path)?)?;
        println!(
            "scheme {}: structurally valid (n={}, N={}, layers={})",
            path.display(),
            scheme.len(),
            scheme.block_len(),
            if scheme.layer2().is_some() { 2 } else { 1 }
        );
    }
    if let Some(path) = &a.code {
        checked = true;
        let code = read_unique_code(&read_text(path)?)?;
        println!(
            "code {}: loads cleanly (n={}, k={}, K={})",
            path.display(),
            code.n(),
            code.message_len(),
            code.k_rounds
        );
    }
    if let Some(record_path) = &a.record {
        checked = true;
        let input_path = a.input.as_ref().context("--record needs --input")?;
        let received_path = a.received.as_ref().context("--record needs --received")?;
        let input = read_string_file(input_path, None, false)?;
        let received = read_string_file(received_path, Some(input.alphabet()), false)?;
        let record = record_from_json(&read_text(record_path)?)?;
        if verify_record(&input, &received, &record) {
            println!("record {}: consistent", record_path.display());
        } else {
            bail!(
                "record {}: inconsistent with the given strings",
                record_path.display()
            );
        }
    }
    if !checked {
        bail!("nothing to verify; pass --sync, --scheme, --code or --record");
    }
    Ok(())
}

// ----------------------------------------------------------------- utils

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_string_file(
    path: &Path,
    alphabet: Option<&AlphabetSpec>,
    binary: bool,
) -> Result<IndexedString> {
    if binary {
        read_string_bin(&fs::read(path)?, alphabet)
    } else {
        read_string_text(&read_text(path)?, alphabet)
    }
}

fn write_string_file(path: &Path, s: &IndexedString, binary: bool) -> Result<()> {
    if binary {
        fs::write(path, write_string_bin(s))?;
    } else {
        fs::write(path, write_string_text(s))?;
    }
    Ok(())
}

fn append_file(path: &Path, content: &str) -> Result<()> {
    use std::io::Write;
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    f.write_all(content.as_bytes())?;
    Ok(())
}

fn parse_alphabet(spec: &str) -> Result<AlphabetSpec> {
    let sizes: Vec<u32> = spec
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| anyhow!(e)))
        .collect::<Result<_>>()?;
    AlphabetSpec::new(sizes).map_err(|e| anyhow!(e))
}

fn parse_hex(hex: &str) -> Result<Vec<u8>> {
    let cleaned: String = hex.chars().filter(|c| !c.is_whitespace()).collect();
    if !cleaned.len().is_multiple_of(2) {
        bail!("hex string has odd length");
    }
    (0..cleaned.len() / 2)
        .map(|i| u8::from_str_radix(&cleaned[2 * i..2 * i + 2], 16).map_err(|e| anyhow!(e)))
        .collect()
}

fn to_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Effective rate in bits: message bits over composite-codeword bits.
/// Reported, never asserted.
pub fn effective_rate(code: &UniqueInsdelCode) -> f64 {
    let msg_bits = code.message_len() as f64 * 8.0;
    let sym_bits: f64 = code
        .composite_alphabet()
        .map(|a| a.components().iter().map(|&q| (q as f64).log2()).sum())
        .unwrap_or(f64::NAN);
    msg_bits / (code.n() as f64 * sym_bits)
}
