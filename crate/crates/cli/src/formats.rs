//! Text and binary file formats. Everything is line-oriented, written with
//! deterministic formatting so identical inputs produce byte-identical
//! files.
//!
//! String files carry symbols only (`n k` header, then one row of `k`
//! integers per symbol); the alphabet comes from the consuming context, or
//! is inferred as the per-column minima when standalone.

use anyhow::{anyhow, bail, Context, Result};
use std::fmt::Write as _;

use edix_core::blockcode::BlockCodebook;
use edix_core::channel::CorruptionRecord;
use edix_core::codes::{ListInsdelCode, UniqueInsdelCode};
use edix_core::editscript::{EditOp, EditScript};
use edix_core::indexing::{IndexingScheme, InnerLayer};
use edix_core::rs::RsCode;
use edix_core::sync::SyncString;
use edix_core::{AlphabetSpec, IndexedString};
use serde::{Deserialize, Serialize};

// ---------------------------------------------------------------- strings

pub fn write_string_text(s: &IndexedString) -> String {
    let k = s.num_components();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", s.len(), k);
    for sym in s.symbols() {
        let mut first = true;
        for &c in sym {
            if first {
                first = false;
            } else {
                out.push(' ');
            }
            let _ = write!(out, "{c}");
        }
        out.push('\n');
    }
    out
}

pub fn read_string_text(text: &str, alphabet: Option<&AlphabetSpec>) -> Result<IndexedString> {
    let mut lines = text.lines();
    read_string_lines(&mut lines, alphabet)
}

pub(crate) fn read_string_lines<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    alphabet: Option<&AlphabetSpec>,
) -> Result<IndexedString> {
    let header = lines.next().context("missing string header")?;
    let mut it = header.split_whitespace();
    let n: usize = it.next().context("missing n")?.parse()?;
    let k: usize = it.next().context("missing k")?.parse()?;
    // capacity capped so a malformed header cannot force a huge allocation
    let mut data = Vec::with_capacity((n.saturating_mul(k)).min(1 << 22));
    for row in 0..n {
        let line = lines
            .next()
            .with_context(|| format!("missing symbol row {row}"))?;
        let mut count = 0;
        for tok in line.split_whitespace() {
            data.push(tok.parse::<u16>().with_context(|| format!("row {row}"))?);
            count += 1;
        }
        if count != k {
            bail!("row {row} has {count} coordinates, expected {k}");
        }
    }
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => infer_alphabet(k, &data)?,
    };
    IndexedString::new(alphabet, data).map_err(|e| anyhow!(e))
}

pub fn infer_alphabet(k: usize, data: &[u16]) -> Result<AlphabetSpec> {
    let mut sizes = vec![1u32; k];
    for row in data.chunks_exact(k.max(1)) {
        for (c, &v) in row.iter().enumerate() {
            sizes[c] = sizes[c].max(v as u32 + 1);
        }
    }
    AlphabetSpec::new(sizes).map_err(|e| anyhow!(e))
}

/// Compact binary: `u32 n`, `u16 k`, then `n*k` little-endian `u16`s.
pub fn write_string_bin(s: &IndexedString) -> Vec<u8> {
    let mut out = Vec::with_capacity(6 + s.raw().len() * 2);
    out.extend_from_slice(&(s.len() as u32).to_le_bytes());
    out.extend_from_slice(&(s.num_components() as u16).to_le_bytes());
    for &c in s.raw() {
        out.extend_from_slice(&c.to_le_bytes());
    }
    out
}

pub fn read_string_bin(bytes: &[u8], alphabet: Option<&AlphabetSpec>) -> Result<IndexedString> {
    if bytes.len() < 6 {
        bail!("binary string file too short");
    }
    let n = u32::from_le_bytes(bytes[0..4].try_into().unwrap()) as usize;
    let k = u16::from_le_bytes(bytes[4..6].try_into().unwrap()) as usize;
    let want = 6 + n * k * 2;
    if bytes.len() != want {
        bail!(
            "binary string file: expected {want} bytes, found {}",
            bytes.len()
        );
    }
    let data: Vec<u16> = bytes[6..]
        .chunks_exact(2)
        .map(|b| u16::from_le_bytes([b[0], b[1]]))
        .collect();
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => infer_alphabet(k, &data)?,
    };
    IndexedString::new(alphabet, data).map_err(|e| anyhow!(e))
}

// ------------------------------------------------------------ edit script

pub fn write_script(script: &EditScript) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "script {} {} {}",
        script.size(),
        script.num_deletions(),
        script.num_insertions()
    );
    for op in script.ops() {
        match op {
            EditOp::Delete { src } => {
                let _ = writeln!(out, "D {src}");
            }
            EditOp::Insert { dst, symbol } => {
                let _ = write!(out, "I {dst}");
                for &c in symbol {
                    let _ = write!(out, " {c}");
                }
                out.push('\n');
            }
        }
    }
    out
}

pub fn read_script(text: &str) -> Result<EditScript> {
    let mut lines = text.lines();
    let header = lines.next().context("missing script header")?;
    let mut it = header.split_whitespace();
    if it.next() != Some("script") {
        bail!("not a script file");
    }
    let size: usize = it.next().context("missing size")?.parse()?;
    let mut deletes = Vec::new();
    let mut inserts = Vec::new();
    for line in lines {
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("D") => deletes.push(toks.next().context("D without position")?.parse()?),
            Some("I") => {
                let dst: usize = toks.next().context("I without position")?.parse()?;
                let symbol: Vec<u16> = toks.map(|t| t.parse::<u16>()).collect::<Result<_, _>>()?;
                inserts.push((dst, symbol));
            }
            Some(other) => bail!("unknown op {other}"),
            None => continue,
        }
    }
    let script = EditScript::from_parts(deletes, inserts).map_err(|e| anyhow!(e))?;
    if script.size() != size {
        bail!("script header says {size} ops, found {}", script.size());
    }
    Ok(script)
}

// ------------------------------------------------------------ sync string

pub fn write_sync(s: &SyncString) -> String {
    let mut out = format!(
        "epsilon={} verified={} q={}\n",
        s.epsilon(),
        if s.verified() { 1 } else { 0 },
        s.string().alphabet().component_size(0)
    );
    out.push_str(&write_string_text(s.string()));
    out
}

pub fn read_sync(text: &str) -> Result<SyncString> {
    let mut lines = text.lines();
    read_sync_lines(&mut lines)
}

pub(crate) fn read_sync_lines<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Result<SyncString> {
    let header = lines.next().context("missing sync header")?;
    let mut epsilon = None;
    let mut verified = None;
    let mut q: Option<u32> = None;
    for tok in header.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .context("sync header: expected key=value")?;
        match key {
            "epsilon" => epsilon = Some(value.parse::<f64>()?),
            "verified" => verified = Some(value == "1"),
            "q" => q = Some(value.parse()?),
            other => bail!("sync header: unknown key {other}"),
        }
    }
    let alphabet = q
        .map(AlphabetSpec::single)
        .transpose()
        .map_err(|e| anyhow!(e))?;
    let string = read_string_lines(lines, alphabet.as_ref())?;
    Ok(SyncString::new_unchecked(
        string,
        epsilon.context("sync header: missing epsilon")?,
        verified.context("sync header: missing verified")?,
    ))
}

// -------------------------------------------------------------- codebooks

fn write_codebook_into(out: &mut String, cb: &BlockCodebook) {
    let _ = writeln!(
        out,
        "codebook {} {} {} {} {} {}",
        cb.num_codewords(),
        cb.block_len(),
        cb.alphabet_size(),
        cb.d_max(),
        cb.i_max(),
        cb.list_cap()
    );
    for w in cb.codewords() {
        let mut first = true;
        for &c in w {
            if first {
                first = false;
            } else {
                out.push(' ');
            }
            let _ = write!(out, "{c}");
        }
        out.push('\n');
    }
}

pub fn write_codebook(cb: &BlockCodebook) -> String {
    let mut out = String::new();
    write_codebook_into(&mut out, cb);
    out
}

pub(crate) fn read_codebook_lines<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
) -> Result<BlockCodebook> {
    let header = lines.next().context("missing codebook header")?;
    let mut it = header.split_whitespace();
    if it.next() != Some("codebook") {
        bail!("not a codebook section");
    }
    let m: usize = it.next().context("missing M")?.parse()?;
    let n: usize = it.next().context("missing N")?.parse()?;
    let q: u32 = it.next().context("missing q")?.parse()?;
    let d_max: usize = it.next().context("missing dMax")?.parse()?;
    let i_max: usize = it.next().context("missing iMax")?.parse()?;
    let cap: usize = it.next().context("missing L")?.parse()?;
    let mut words = Vec::with_capacity(m.min(1 << 20));
    for row in 0..m {
        let line = lines
            .next()
            .with_context(|| format!("missing codeword {row}"))?;
        let w: Vec<u16> = line
            .split_whitespace()
            .map(|t| t.parse::<u16>())
            .collect::<Result<_, _>>()?;
        if w.len() != n {
            bail!("codeword {row} has length {}, expected {n}", w.len());
        }
        words.push(w);
    }
    BlockCodebook::new(words, n, q, d_max, i_max, cap).map_err(|e| anyhow!(e))
}

pub fn read_codebook(text: &str) -> Result<BlockCodebook> {
    read_codebook_lines(&mut text.lines())
}

/// Binary codebook: six little-endian `u32` header fields
/// (M, N, q, dMax, iMax, L), then `M*N` little-endian `u16` coordinates.
pub fn write_codebook_bin(cb: &BlockCodebook) -> Vec<u8> {
    let mut out = Vec::with_capacity(24 + cb.num_codewords() * cb.block_len() * 2);
    for v in [
        cb.num_codewords() as u32,
        cb.block_len() as u32,
        cb.alphabet_size(),
        cb.d_max() as u32,
        cb.i_max() as u32,
        cb.list_cap() as u32,
    ] {
        out.extend_from_slice(&v.to_le_bytes());
    }
    for w in cb.codewords() {
        for &c in w {
            out.extend_from_slice(&c.to_le_bytes());
        }
    }
    out
}

pub fn read_codebook_bin(bytes: &[u8]) -> Result<BlockCodebook> {
    if bytes.len() < 24 {
        bail!("binary codebook too short");
    }
    let mut header = [0u32; 6];
    for (i, h) in header.iter_mut().enumerate() {
        *h = u32::from_le_bytes(bytes[4 * i..4 * i + 4].try_into().unwrap());
    }
    let [m, n, q, d_max, i_max, cap] = header;
    let (m, n) = (m as usize, n as usize);
    let want = 24 + m * n * 2;
    if bytes.len() != want {
        bail!(
            "binary codebook: expected {want} bytes, found {}",
            bytes.len()
        );
    }
    let coords: Vec<u16> = bytes[24..]
        .chunks_exact(2)
        .map(|b| u16::from_le_bytes([b[0], b[1]]))
        .collect();
    let words: Vec<Vec<u16>> = coords.chunks_exact(n.max(1)).map(|w| w.to_vec()).collect();
    BlockCodebook::new(words, n, q, d_max as usize, i_max as usize, cap as usize)
        .map_err(|e| anyhow!(e))
}

// ---------------------------------------------------------------- schemes

pub fn write_scheme(s: &IndexingScheme) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "edix-scheme v1");
    let _ = writeln!(out, "eps {}", s.epsilon());
    let _ = writeln!(out, "n {}", s.len());
    let _ = writeln!(out, "block-len {}", s.block_len());
    let _ = writeln!(out, "layers {}", if s.layer2().is_some() { 2 } else { 1 });
    write_codebook_into(&mut out, s.codebook());
    let _ = writeln!(out, "index");
    push_ints(&mut out, s.index());
    if let Some(l2) = s.layer2() {
        let _ = writeln!(out, "inner-block-len {}", l2.block_len);
        write_codebook_into(&mut out, &l2.codebook);
        let _ = writeln!(out, "inner-index");
        push_ints(&mut out, &l2.inner_index);
    }
    out
}

fn push_ints(out: &mut String, vals: &[u16]) {
    let mut first = true;
    for &v in vals {
        if first {
            first = false;
        } else {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

fn parse_ints(line: &str) -> Result<Vec<u16>> {
    line.split_whitespace()
        .map(|t| t.parse::<u16>().map_err(|e| anyhow!(e)))
        .collect()
}

fn expect_kv<'a>(lines: &mut impl Iterator<Item = &'a str>, key: &str) -> Result<String> {
    let line = lines
        .next()
        .with_context(|| format!("missing `{key}` line"))?;
    let rest = line
        .strip_prefix(key)
        .with_context(|| format!("expected `{key} ...`, found `{line}`"))?;
    Ok(rest.trim().to_string())
}

pub fn read_scheme(text: &str) -> Result<IndexingScheme> {
    read_scheme_lines(&mut text.lines())
}

pub(crate) fn read_scheme_lines<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
) -> Result<IndexingScheme> {
    let magic = lines.next().context("missing scheme magic")?;
    if magic != "edix-scheme v1" {
        bail!("not an edix scheme file (found `{magic}`)");
    }
    let eps: f64 = expect_kv(lines, "eps")?.parse()?;
    let n: usize = expect_kv(lines, "n")?.parse()?;
    let block_len: usize = expect_kv(lines, "block-len")?.parse()?;
    let layers: u8 = expect_kv(lines, "layers")?.parse()?;
    let codebook = read_codebook_lines(lines)?;
    let index_tag = lines.next().context("missing index section")?;
    if index_tag != "index" {
        bail!("expected `index`, found `{index_tag}`");
    }
    let index = parse_ints(lines.next().context("missing index data")?)?;
    if index.len() != n {
        bail!("index length {} != declared n {n}", index.len());
    }
    let layer2 = if layers == 2 {
        let inner_block: usize = expect_kv(lines, "inner-block-len")?.parse()?;
        let inner_cb = read_codebook_lines(lines)?;
        let tag = lines.next().context("missing inner-index section")?;
        if tag != "inner-index" {
            bail!("expected `inner-index`, found `{tag}`");
        }
        let inner_index = parse_ints(lines.next().context("missing inner index data")?)?;
        Some(InnerLayer {
            block_len: inner_block,
            codebook: inner_cb,
            inner_index,
        })
    } else {
        None
    };
    IndexingScheme::from_parts(eps, block_len, index, codebook, layer2).map_err(|e| anyhow!(e))
}

// ------------------------------------------------------------ code bundles

pub fn write_unique_code(c: &UniqueInsdelCode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "edix-unique-code v1");
    let _ = writeln!(out, "n {}", c.n());
    let _ = writeln!(out, "delta {}", c.delta);
    let _ = writeln!(out, "eps {}", c.epsilon);
    let _ = writeln!(out, "K {}", c.k_rounds);
    let _ = writeln!(out, "rs {} {}", c.ecc.n(), c.ecc.k());
    let _ = writeln!(out, "sync");
    out.push_str(&write_sync(&c.sync));
    let _ = writeln!(out, "scheme");
    out.push_str(&write_scheme(&c.scheme));
    out
}

pub fn read_unique_code(text: &str) -> Result<UniqueInsdelCode> {
    let mut lines = text.lines();
    let magic = lines.next().context("missing code magic")?;
    if magic != "edix-unique-code v1" {
        bail!("not a unique-code bundle (found `{magic}`)");
    }
    let _n: usize = expect_kv(&mut lines, "n")?.parse()?;
    let delta: f64 = expect_kv(&mut lines, "delta")?.parse()?;
    let eps: f64 = expect_kv(&mut lines, "eps")?.parse()?;
    let k_rounds: usize = expect_kv(&mut lines, "K")?.parse()?;
    let rs_line = expect_kv(&mut lines, "rs")?;
    let mut it = rs_line.split_whitespace();
    let rs_n: usize = it.next().context("rs n")?.parse()?;
    let rs_k: usize = it.next().context("rs k")?.parse()?;
    let ecc = RsCode::new(rs_n, rs_k).map_err(|e| anyhow!(e))?;
    if lines.next() != Some("sync") {
        bail!("expected `sync` section");
    }
    let sync = read_sync_lines(&mut lines)?;
    if lines.next() != Some("scheme") {
        bail!("expected `scheme` section");
    }
    let scheme = read_scheme_lines(&mut lines)?;
    UniqueInsdelCode::from_parts(ecc, sync, scheme, k_rounds, delta, eps).map_err(|e| anyhow!(e))
}

pub fn write_list_code(c: &ListInsdelCode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "edix-list-code v1");
    let _ = writeln!(out, "alpha {}", c.alpha);
    let _ = writeln!(out, "l {}", c.list_input_size);
    let _ = writeln!(out, "eps {}", c.epsilon);
    let _ = writeln!(out, "gamma {}", c.gamma);
    let _ = writeln!(out, "K {}", c.k_rounds);
    write_codebook_into(&mut out, &c.lr);
    let _ = writeln!(out, "sync");
    out.push_str(&write_sync(&c.sync));
    let _ = writeln!(out, "scheme");
    out.push_str(&write_scheme(&c.scheme));
    out
}

pub fn read_list_code(text: &str) -> Result<ListInsdelCode> {
    let mut lines = text.lines();
    let magic = lines.next().context("missing code magic")?;
    if magic != "edix-list-code v1" {
        bail!("not a list-code bundle (found `{magic}`)");
    }
    let alpha: f64 = expect_kv(&mut lines, "alpha")?.parse()?;
    let l: usize = expect_kv(&mut lines, "l")?.parse()?;
    let eps: f64 = expect_kv(&mut lines, "eps")?.parse()?;
    let gamma: f64 = expect_kv(&mut lines, "gamma")?.parse()?;
    let k_rounds: usize = expect_kv(&mut lines, "K")?.parse()?;
    let lr = read_codebook_lines(&mut lines)?;
    if lines.next() != Some("sync") {
        bail!("expected `sync` section");
    }
    let sync = read_sync_lines(&mut lines)?;
    if lines.next() != Some("scheme") {
        bail!("expected `scheme` section");
    }
    let scheme = read_scheme_lines(&mut lines)?;
    ListInsdelCode::from_parts(lr, alpha, l, sync, scheme, k_rounds, eps, gamma)
        .map_err(|e| anyhow!(e))
}

// ---------------------------------------------------------------- records

#[derive(Serialize, Deserialize)]
struct RecordJson {
    sent_len: usize,
    received_len: usize,
    deletions: usize,
    insertions: usize,
    survivor_map: Vec<[usize; 2]>,
    inserted_positions: Vec<usize>,
}

pub fn record_to_json(r: &CorruptionRecord) -> String {
    let mirror = RecordJson {
        sent_len: r.sent_len,
        received_len: r.received_len,
        deletions: r.deletions,
        insertions: r.insertions,
        survivor_map: r.survivor_map.iter().map(|&(a, b)| [a, b]).collect(),
        inserted_positions: r.inserted_positions.clone(),
    };
    let mut out = serde_json::to_string(&mirror).expect("record serialization");
    out.push('\n');
    out
}

pub fn record_from_json(text: &str) -> Result<CorruptionRecord> {
    let mirror: RecordJson = serde_json::from_str(text.trim())?;
    Ok(CorruptionRecord {
        sent_len: mirror.sent_len,
        received_len: mirror.received_len,
        deletions: mirror.deletions,
        insertions: mirror.insertions,
        survivor_map: mirror.survivor_map.iter().map(|&[a, b]| (a, b)).collect(),
        inserted_positions: mirror.inserted_positions,
    })
}

// ------------------------------------------------------------ trial report

/// One JSON line per decode trial. Wall time appears only when timings are
/// requested, so default runs are byte-reproducible.
#[derive(Debug, Serialize, Deserialize)]
pub struct TrialReport {
    pub recovered: bool,
    pub misdecodings: Option<usize>,
    pub list_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

pub fn report_line(r: &TrialReport) -> String {
    let mut out = serde_json::to_string(r).expect("report serialization");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use edix_core::channel::{corrupt, CorruptionMode};
    use edix_core::indexing::{build_indexing_scheme, build_two_layer_scheme, CodebookParams};
    use edix_core::rng::SeedSplitter;
    use edix_core::sync::gen_sync;
    use proptest::prelude::*;
    use rand::Rng;

    #[test]
    fn string_text_roundtrip_with_alphabet() {
        let a = AlphabetSpec::new(vec![4, 16]).unwrap();
        let s = IndexedString::new(a.clone(), vec![0, 7, 3, 15, 1, 0]).unwrap();
        let text = write_string_text(&s);
        assert_eq!(read_string_text(&text, Some(&a)).unwrap(), s);
    }

    #[test]
    fn empty_string_roundtrip() {
        let a = AlphabetSpec::single(4).unwrap();
        let s = IndexedString::empty(a.clone());
        let text = write_string_text(&s);
        assert_eq!(text, "0 1\n");
        assert_eq!(read_string_text(&text, Some(&a)).unwrap(), s);
    }

    #[test]
    fn sync_roundtrip() {
        let s = gen_sync(40, 0.5, 3).unwrap();
        let text = write_sync(&s);
        let back = read_sync(&text).unwrap();
        assert_eq!(back.string(), s.string());
        assert_eq!(back.epsilon(), s.epsilon());
        assert!(back.verified());
        assert_eq!(write_sync(&back), text);
    }

    #[test]
    fn scheme_roundtrip_one_layer() {
        let scheme =
            build_indexing_scheme(100, 1.0 / 21.0, &CodebookParams::standard(8, 4096), 5).unwrap();
        let text = write_scheme(&scheme);
        let back = read_scheme(&text).unwrap();
        assert_eq!(write_scheme(&back), text);
        assert_eq!(back.index(), scheme.index());
        assert_eq!(back.window(), scheme.window());
    }

    #[test]
    fn scheme_roundtrip_two_layer() {
        let scheme = build_two_layer_scheme(
            288,
            1.0 / 121.0,
            &CodebookParams::standard(48, 4096),
            &CodebookParams::standard(8, 512),
            7,
        )
        .unwrap();
        let text = write_scheme(&scheme);
        let back = read_scheme(&text).unwrap();
        assert_eq!(write_scheme(&back), text);
    }

    #[test]
    fn tampered_scheme_rejected() {
        let scheme =
            build_indexing_scheme(64, 1.0 / 21.0, &CodebookParams::standard(8, 4096), 5).unwrap();
        let text = write_scheme(&scheme);
        // flip one index symbol: no longer the codeword concatenation
        let mut lines: Vec<String> = text.lines().map(|l| l.to_string()).collect();
        let idx_line = lines.iter().position(|l| l == "index").unwrap() + 1;
        let mut vals: Vec<u16> = lines[idx_line]
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        vals[0] = vals[0].wrapping_add(1) % 4096;
        lines[idx_line] = vals
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        assert!(read_scheme(&(lines.join("\n") + "\n")).is_err());
    }

    #[test]
    fn record_json_roundtrip() {
        let s = IndexedString::plain(&[1, 2, 3, 4, 5, 6], 8).unwrap();
        let (_, rec) = corrupt(&s, 0.3, 0.3, CorruptionMode::Uniform, 11).unwrap();
        let json = record_to_json(&rec);
        assert_eq!(record_from_json(&json).unwrap(), rec);
    }

    #[test]
    fn script_roundtrip() {
        let a = IndexedString::plain(&[1, 2, 3, 4], 8).unwrap();
        let b = IndexedString::plain(&[2, 3, 7], 8).unwrap();
        let (_, script) = edix_core::editdist::edit_distance_exact(&a, &b).unwrap();
        let text = write_script(&script);
        assert_eq!(read_script(&text).unwrap(), script);
    }

    proptest! {
        #[test]
        fn string_binary_roundtrips(data in proptest::collection::vec(0u16..256, 0..200)) {
            let padded_len = data.len() - data.len() % 2;
            let a = AlphabetSpec::new(vec![256, 256]).unwrap();
            let s = IndexedString::new(a.clone(), data[..padded_len].to_vec()).unwrap();
            let bytes = write_string_bin(&s);
            prop_assert_eq!(read_string_bin(&bytes, Some(&a)).unwrap(), s.clone());
            let text = write_string_text(&s);
            prop_assert_eq!(read_string_text(&text, Some(&a)).unwrap(), s);
        }
    }

    #[test]
    fn unique_code_bundle_roundtrip() {
        let code = edix_core::codes::UniqueInsdelCode::new(60, 0.1, 0.3, 8, 4096, 42).unwrap();
        let text = write_unique_code(&code);
        let back = read_unique_code(&text).unwrap();
        assert_eq!(write_unique_code(&back), text);
        assert_eq!(back.n(), code.n());
        assert_eq!(back.k_rounds, code.k_rounds);
        assert_eq!(back.position_carrier(), code.position_carrier());
    }

    #[test]
    fn list_code_bundle_roundtrip() {
        let lr = edix_core::blockcode::gen_codebook(16, 24, 256, 44, 5).unwrap();
        let code =
            edix_core::codes::convert_lr_to_insdel(lr, 0.4, 20, 0.3, 1.0, 8, 4096, 99).unwrap();
        let text = write_list_code(&code);
        let back = read_list_code(&text).unwrap();
        assert_eq!(write_list_code(&back), text);
        assert_eq!(back.position_carrier(), code.position_carrier());
    }

    #[test]
    fn codebook_binary_roundtrip() {
        let cb = edix_core::blockcode::gen_codebook(9, 7, 128, 10, 3).unwrap();
        let bytes = write_codebook_bin(&cb);
        let back = read_codebook_bin(&bytes).unwrap();
        assert_eq!(back, cb);
        assert!(read_codebook_bin(&bytes[..bytes.len() - 1]).is_err());
    }

    #[test]
    fn codebook_roundtrip() {
        let mut rng = SeedSplitter::new(1).stream("cb");
        let words: Vec<Vec<u16>> = (0..6)
            .map(|_| (0..5).map(|_| rng.random_range(0..64)).collect())
            .collect();
        let mut uniq = words.clone();
        uniq.dedup();
        if uniq.len() == words.len() {
            let cb = BlockCodebook::new(words, 5, 64, 3, 3, 4).unwrap();
            let text = write_codebook(&cb);
            let back = read_codebook(&text).unwrap();
            assert_eq!(write_codebook(&back), text);
        }
    }
}
