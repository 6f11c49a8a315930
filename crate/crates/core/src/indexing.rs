//! Indexing schemes: an index string built by concatenating the codewords
//! of a list-decodable block code, plus the windowed candidate-graph
//! algorithms that approximate edit distance against any other string.
//!
//! One layer gives scripts of size at most `(1+11ε)·ED` for `ε <= 1/21`;
//! the two-layer variant decodes sub-blocks against an inner code before
//! adding edges and gives `(1+23ε)·ED` for `ε <= 1/121` with far fewer
//! edges per block.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::blockcode::{
    gen_codebook, list_decode, worst_case_list_cap, BlockCodebook, BlockDecoder,
};
use crate::editdist::EdEngine;
use crate::editscript::EditScript;
use crate::error::{Error, Result};
use crate::matching::{matching_to_script, max_noncrossing_matching, EdgeSet};
use crate::num::{ceil_usize, floor_usize};
use crate::rng::SeedSplitter;
use crate::strings::IndexedString;

/// Construction knobs for the codebook behind an index string.
#[derive(Debug, Clone)]
pub struct CodebookParams {
    pub block_len: usize,
    pub alphabet: u32,
    pub min_ed_sep: usize,
}

impl CodebookParams {
    /// Random codewords over a large alphabet are near-maximally separated;
    /// `2N - 4` keeps the greedy construction fast while forcing pairwise
    /// LCS <= 2.
    pub fn standard(block_len: usize, alphabet: u32) -> Self {
        let sep = if block_len >= 2 { 2 * block_len - 4 } else { 0 };
        CodebookParams {
            block_len,
            alphabet,
            min_ed_sep: sep & !1,
        }
    }
}

/// Inner layer of a two-layer scheme: block length `N2`, its codebook, and
/// the inner index string `I'` of length `N1` whose repetition forms the
/// second index component.
#[derive(Debug, Clone)]
pub struct InnerLayer {
    pub block_len: usize,
    pub codebook: BlockCodebook,
    pub inner_index: Vec<u16>,
}

/// Index string plus block-decoder handles and parameters.
#[derive(Debug, Clone)]
pub struct IndexingScheme {
    epsilon: f64,
    window: usize,
    block_len: usize,
    index: Vec<u16>,
    index2: Vec<u16>,
    codebook: BlockCodebook,
    layer2: Option<InnerLayer>,
}

/// Instrumentation counters for one approximation run.
#[derive(Debug, Clone, Default)]
pub struct GraphStats {
    pub decode_calls: usize,
    pub inner_decode_calls: usize,
    /// |E(G)| (edges are unique by construction)
    pub edge_count: usize,
    /// exact worst-case ceiling implied by the lists actually returned
    pub edge_bound: usize,
    /// histogram: outer list size -> occurrences
    pub list_sizes: BTreeMap<usize, usize>,
    pub inner_list_sizes: BTreeMap<usize, usize>,
    pub max_list: usize,
    pub matching_size: usize,
}

impl GraphStats {
    fn record_list(&mut self, len: usize) {
        *self.list_sizes.entry(len).or_insert(0) += 1;
        self.max_list = self.max_list.max(len);
    }

    fn record_inner_list(&mut self, len: usize) {
        *self.inner_list_sizes.entry(len).or_insert(0) += 1;
    }
}

fn scaled_radius(epsilon: f64, len: usize) -> usize {
    floor_usize((1.0 - epsilon) * len as f64)
}

/// Radius for a received block of length `len` against codewords of length
/// `block_len`: the LCS threshold is `ceil(eps * len)` on both the deletion
/// and the insertion side. For `len == block_len` this is exactly the
/// contract radius `floor((1-eps) * block_len)`; for a short final block it
/// scales so the block still finds its candidates.
fn block_radius(epsilon: f64, block_len: usize, len: usize) -> (usize, usize) {
    let need = ceil_usize(epsilon * len as f64).max(1);
    debug_assert!(need <= len && need <= block_len);
    (block_len - need, len - need)
}

impl IndexingScheme {
    /// Number of index components this scheme owns (trailing components of
    /// the indexed string's alphabet).
    pub fn index_components(&self) -> usize {
        if self.layer2.is_some() {
            2
        } else {
            1
        }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn index(&self) -> &[u16] {
        &self.index
    }

    pub fn index2(&self) -> &[u16] {
        &self.index2
    }

    pub fn codebook(&self) -> &BlockCodebook {
        &self.codebook
    }

    pub fn layer2(&self) -> Option<&InnerLayer> {
        self.layer2.as_ref()
    }

    /// The approximation slack of the emitted scripts: `11ε` for one layer,
    /// `23ε` for two.
    pub fn ratio_epsilon(&self) -> f64 {
        if self.layer2.is_some() {
            23.0 * self.epsilon
        } else {
            11.0 * self.epsilon
        }
    }

    /// Index string(s) as an [`IndexedString`] over the scheme's component
    /// alphabet, ready for coordinate-wise concatenation with a payload.
    pub fn index_string(&self) -> Result<IndexedString> {
        let one = IndexedString::plain(&self.index, self.codebook.alphabet_size())?;
        match &self.layer2 {
            None => Ok(one),
            Some(l2) => {
                let two = IndexedString::plain(&self.index2, l2.codebook.alphabet_size())?;
                one.index_concat(&two)
            }
        }
    }

    /// Rebuilds a scheme from stored parts, revalidating the structural
    /// invariants (index = truncated codeword concatenation; second layer =
    /// repetition of the inner index).
    pub fn from_parts(
        epsilon: f64,
        block_len: usize,
        index: Vec<u16>,
        codebook: BlockCodebook,
        layer2: Option<InnerLayer>,
    ) -> Result<Self> {
        check_epsilon(epsilon, layer2.is_some())?;
        let n = index.len();
        if codebook.block_len() != block_len {
            return Err(Error::SchemeInfeasible {
                detail: format!(
                    "codebook block length {} != N {block_len}",
                    codebook.block_len()
                ),
            });
        }
        if codebook.concat_truncated(n)? != index {
            return Err(Error::SchemeInfeasible {
                detail: "index string is not the truncated codeword concatenation".to_string(),
            });
        }
        let index2 = match &layer2 {
            None => Vec::new(),
            Some(l2) => {
                if l2.inner_index.len() != block_len {
                    return Err(Error::SchemeInfeasible {
                        detail: format!(
                            "inner index length {} != N1 {block_len}",
                            l2.inner_index.len()
                        ),
                    });
                }
                if !block_len.is_multiple_of(l2.block_len) {
                    return Err(Error::SchemeInfeasible {
                        detail: format!("N1 {block_len} not divisible by N2 {}", l2.block_len),
                    });
                }
                if l2.codebook.concat_truncated(block_len)? != l2.inner_index {
                    return Err(Error::SchemeInfeasible {
                        detail: "inner index is not the inner codeword concatenation".to_string(),
                    });
                }
                cycle_to(&l2.inner_index, n)
            }
        };
        let window = ceil_usize(1.0 / epsilon) + 1;
        Ok(IndexingScheme {
            epsilon,
            window,
            block_len,
            index,
            index2,
            codebook,
            layer2,
        })
    }
}

fn check_epsilon(epsilon: f64, two_layer: bool) -> Result<()> {
    let hi = if two_layer { 1.0 / 121.0 } else { 1.0 / 21.0 };
    if !(epsilon > 0.0 && epsilon <= hi) {
        return Err(Error::ParamOutOfRange {
            name: "epsilon",
            value: epsilon,
            expected: if two_layer { "(0, 1/121]" } else { "(0, 1/21]" },
        });
    }
    Ok(())
}

fn cycle_to(pattern: &[u16], len: usize) -> Vec<u16> {
    (0..len).map(|i| pattern[i % pattern.len()]).collect()
}

fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Builds a one-layer scheme: codebook with `ceil(n/N)` codewords, index =
/// concatenation truncated to `n`, window `ceil(1/eps) + 1`, decoding
/// radius `floor((1-eps) N)` for both deletions and insertions.
pub fn build_indexing_scheme(
    n: usize,
    epsilon: f64,
    params: &CodebookParams,
    seed: u64,
) -> Result<IndexingScheme> {
    check_epsilon(epsilon, false)?;
    if n == 0 {
        return Err(Error::ParamOutOfRange {
            name: "n",
            value: 0.0,
            expected: ">= 1",
        });
    }
    let split = SeedSplitter::new(seed);
    let m = div_ceil(n, params.block_len);
    let mut cb = gen_codebook(
        m,
        params.block_len,
        params.alphabet,
        params.min_ed_sep,
        split.stream("scheme-codebook").next_seed(),
    )?;
    let radius = scaled_radius(epsilon, params.block_len);
    let mut with_radius = BlockCodebook::new(
        cb.codewords().to_vec(),
        params.block_len,
        params.alphabet,
        radius,
        radius,
        1,
    )?;
    with_radius.set_list_cap(worst_case_list_cap(&with_radius, radius, radius));
    cb = with_radius;
    let index = cb.concat_truncated(n)?;
    IndexingScheme::from_parts(epsilon, params.block_len, index, cb, None)
}

/// Builds a two-layer scheme. `inner` covers one outer block exactly
/// (`N1 % N2 == 0`); the second index component is the inner index string
/// repeated.
pub fn build_two_layer_scheme(
    n: usize,
    epsilon: f64,
    outer: &CodebookParams,
    inner: &CodebookParams,
    seed: u64,
) -> Result<IndexingScheme> {
    check_epsilon(epsilon, true)?;
    if n == 0 {
        return Err(Error::ParamOutOfRange {
            name: "n",
            value: 0.0,
            expected: ">= 1",
        });
    }
    let n1 = outer.block_len;
    let n2 = inner.block_len;
    if !n1.is_multiple_of(n2) {
        return Err(Error::SchemeInfeasible {
            detail: format!("N1 {n1} not divisible by N2 {n2}"),
        });
    }
    let split = SeedSplitter::new(seed);

    let m2 = n1 / n2;
    let icb0 = gen_codebook(
        m2,
        n2,
        inner.alphabet,
        inner.min_ed_sep,
        split.stream("inner-codebook").next_seed(),
    )?;
    let r2 = scaled_radius(epsilon, n2);
    let mut icb = BlockCodebook::new(icb0.codewords().to_vec(), n2, inner.alphabet, r2, r2, 1)?;
    icb.set_list_cap(worst_case_list_cap(&icb, r2, r2));
    let inner_index = icb.concat_truncated(n1)?;

    let m1 = div_ceil(n, n1);
    let ocb0 = gen_codebook(
        m1,
        n1,
        outer.alphabet,
        outer.min_ed_sep,
        split.stream("outer-codebook").next_seed(),
    )?;
    let r1 = scaled_radius(epsilon, n1);
    let mut ocb = BlockCodebook::new(ocb0.codewords().to_vec(), n1, outer.alphabet, r1, r1, 1)?;
    ocb.set_list_cap(worst_case_list_cap(&ocb, r1, r1));
    let index = ocb.concat_truncated(n)?;

    IndexingScheme::from_parts(
        epsilon,
        n1,
        index,
        ocb,
        Some(InnerLayer {
            block_len: n2,
            codebook: icb,
            inner_index,
        }),
    )
}

trait NextSeed {
    fn next_seed(self) -> u64;
}

impl NextSeed for rand_chacha::ChaCha12Rng {
    fn next_seed(mut self) -> u64 {
        use rand::Rng;
        self.random()
    }
}

/// One-layer approximation. `s_indexed` must be the
/// payload indexed by this scheme's index string; `s_prime` is arbitrary
/// over the same product alphabet. Returns the script and instrumentation.
pub fn ed_approx(
    s_indexed: &IndexedString,
    s_prime: &IndexedString,
    scheme: &IndexingScheme,
) -> Result<(EditScript, GraphStats)> {
    if scheme.layer2.is_some() {
        return Err(Error::SchemeInfeasible {
            detail: "scheme has two layers; use enhanced_ed_approx".to_string(),
        });
    }
    approx_impl(s_indexed, s_prime, scheme, None, 0)
}

/// Two-layer approximation: outer candidates as in the
/// one-layer algorithm, then an inner list-decode per sub-block restricts
/// edges to matched sub-block pairs.
pub fn enhanced_ed_approx(
    s_indexed: &IndexedString,
    s_prime: &IndexedString,
    scheme: &IndexingScheme,
) -> Result<(EditScript, GraphStats)> {
    if scheme.layer2.is_none() {
        return Err(Error::SchemeInfeasible {
            detail: "scheme has one layer; use ed_approx".to_string(),
        });
    }
    approx_impl(s_indexed, s_prime, scheme, None, 0)
}

/// Substituted block decoders: the outer (and, for two-layer schemes,
/// inner) decoding runs through the given handles instead of the plain
/// codebook scan. Per-block seeds derive from `seed`, so randomized
/// decoders (failure-injected, amplified) are replayable.
pub struct SubstituteDecoders<'a> {
    pub outer: &'a dyn BlockDecoder,
    pub inner: Option<&'a dyn BlockDecoder>,
}

/// Approximation with pluggable block decoders (one or two layers,
/// according to the scheme). The emitted script is always valid; the ratio
/// guarantee degrades with the decoders' failure behavior.
pub fn approx_with_decoders(
    s_indexed: &IndexedString,
    s_prime: &IndexedString,
    scheme: &IndexingScheme,
    decoders: &SubstituteDecoders<'_>,
    seed: u64,
) -> Result<(EditScript, GraphStats)> {
    approx_impl(s_indexed, s_prime, scheme, Some(decoders), seed)
}

fn validate_inputs(
    s_indexed: &IndexedString,
    s_prime: &IndexedString,
    scheme: &IndexingScheme,
) -> Result<usize> {
    if s_indexed.alphabet() != s_prime.alphabet() {
        return Err(Error::AlphabetMismatch {
            detail: format!(
                "indexed {:?} vs received {:?}",
                s_indexed.alphabet().components(),
                s_prime.alphabet().components()
            ),
        });
    }
    if s_indexed.len() != scheme.len() {
        return Err(Error::LengthMismatch {
            left: s_indexed.len(),
            right: scheme.len(),
        });
    }
    let k = s_indexed.num_components();
    let own = scheme.index_components();
    if k < own + 1 {
        return Err(Error::AlphabetMismatch {
            detail: format!("need payload plus {own} index components, found {k}"),
        });
    }
    let idx1 = k - own;
    let sizes = s_indexed.alphabet().components();
    if sizes[idx1] != scheme.codebook.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            detail: format!(
                "index component size {} != codebook alphabet {}",
                sizes[idx1],
                scheme.codebook.alphabet_size()
            ),
        });
    }
    for i in 0..s_indexed.len() {
        if s_indexed.coord(i, idx1) != scheme.index[i] {
            return Err(Error::AlphabetMismatch {
                detail: format!("index component differs from scheme at position {i}"),
            });
        }
    }
    if let Some(l2) = &scheme.layer2 {
        let idx2 = k - 1;
        if sizes[idx2] != l2.codebook.alphabet_size() {
            return Err(Error::AlphabetMismatch {
                detail: format!(
                    "inner index component size {} != inner codebook alphabet {}",
                    sizes[idx2],
                    l2.codebook.alphabet_size()
                ),
            });
        }
        for i in 0..s_indexed.len() {
            if s_indexed.coord(i, idx2) != scheme.index2[i] {
                return Err(Error::AlphabetMismatch {
                    detail: format!("inner index component differs from scheme at position {i}"),
                });
            }
        }
    }
    Ok(idx1)
}

/// Sorted positions of every sent symbol, for output-sensitive edge scans.
type SymbolMap<'a> = BTreeMap<&'a [u16], Vec<u32>>;

fn build_symbol_map(s: &IndexedString) -> SymbolMap<'_> {
    let mut map: SymbolMap<'_> = BTreeMap::new();
    for p in 0..s.len() {
        map.entry(s.symbol(p)).or_default().push(p as u32);
    }
    map
}

fn approx_impl(
    s_indexed: &IndexedString,
    s_prime: &IndexedString,
    scheme: &IndexingScheme,
    decoders: Option<&SubstituteDecoders<'_>>,
    seed: u64,
) -> Result<(EditScript, GraphStats)> {
    let idx1 = validate_inputs(s_indexed, s_prime, scheme)?;
    let n = s_indexed.len();
    let m = s_prime.len();
    let nn = scheme.block_len;
    let w = scheme.window;
    let sent_blocks = div_ceil(n, nn);
    let recv_blocks = div_ceil(m, nn);
    let sent_symbols = build_symbol_map(s_indexed);
    let seed_split = SeedSplitter::new(seed);
    let mut stats = GraphStats::default();
    let mut edges = EdgeSet::new(n, m);
    let mut candidate_blocks: Vec<usize> = Vec::new();

    for i in 0..recv_blocks {
        let lo = i * nn;
        let hi = ((i + 1) * nn).min(m);
        let blk_len = hi - lo;
        let received_index: Vec<u16> = (lo..hi).map(|p| s_prime.coord(p, idx1)).collect();
        let (d_max, i_max) = block_radius(scheme.epsilon, nn, blk_len);
        debug_assert!(blk_len < nn || d_max == scheme.codebook.d_max());
        let (list, cap) = match decoders {
            Some(subst) => {
                use rand::Rng;
                let block_seed = seed_split.stream_indexed("outer-block", i as u64).random();
                (
                    subst
                        .outer
                        .decode_at(&received_index, d_max, i_max, block_seed),
                    subst.outer.list_cap(),
                )
            }
            None => (
                list_decode(&scheme.codebook, &received_index, d_max, i_max),
                scheme.codebook.list_cap(),
            ),
        };
        stats.decode_calls += 1;
        stats.record_list(list.len());
        if list.len() > cap {
            return Err(Error::ListCapExceeded {
                block: i,
                got: list.len(),
                cap,
            });
        }
        if scheme.layer2.is_none() {
            stats.edge_bound = stats
                .edge_bound
                .saturating_add(list.len() * (2 * w + 1) * nn * blk_len);
        }

        candidate_blocks.clear();
        for &j in &list {
            let k_lo = j.saturating_sub(w);
            let k_hi = (j + w).min(sent_blocks.saturating_sub(1));
            for kblk in k_lo..=k_hi {
                candidate_blocks.push(kblk);
            }
        }
        candidate_blocks.sort_unstable();
        candidate_blocks.dedup();

        match &scheme.layer2 {
            None => {
                let runs = runs_from_blocks(&candidate_blocks, nn, n);
                add_identical_edges(&sent_symbols, s_prime, &runs, lo, hi, &mut edges);
            }
            Some(l2) => {
                inner_layer_edges(InnerPass {
                    sent_symbols: &sent_symbols,
                    s_prime,
                    scheme,
                    l2,
                    n,
                    candidate_blocks: &candidate_blocks,
                    lo,
                    hi,
                    inner_decoder: decoders.and_then(|d| d.inner),
                    seed_split: &seed_split,
                    recv_block: i,
                    edges: &mut edges,
                    stats: &mut stats,
                })?;
            }
        }
    }

    stats.edge_count = edges.len();
    let matching = max_noncrossing_matching(&edges)?;
    stats.matching_size = matching.len();
    let script = matching_to_script(&matching, s_indexed, s_prime)?;
    Ok((script, stats))
}

struct InnerPass<'a, 'b> {
    sent_symbols: &'a SymbolMap<'b>,
    s_prime: &'a IndexedString,
    scheme: &'a IndexingScheme,
    l2: &'a InnerLayer,
    n: usize,
    candidate_blocks: &'a [usize],
    lo: usize,
    hi: usize,
    inner_decoder: Option<&'a dyn BlockDecoder>,
    seed_split: &'a SeedSplitter,
    recv_block: usize,
    edges: &'a mut EdgeSet,
    stats: &'a mut GraphStats,
}

fn inner_layer_edges(pass: InnerPass<'_, '_>) -> Result<()> {
    let InnerPass {
        sent_symbols,
        s_prime,
        scheme,
        l2,
        n,
        candidate_blocks,
        lo,
        hi,
        inner_decoder,
        seed_split,
        recv_block,
        edges,
        stats,
    } = pass;
    let n2 = l2.block_len;
    let w = scheme.window;
    let idx2 = s_prime.num_components() - 1;
    let sub_blocks = div_ceil(hi - lo, n2);
    // candidate sub-slices of the sent string per received sub-block
    let mut sub_candidates: Vec<(usize, usize)> = Vec::new();

    for ip in 0..sub_blocks {
        let sub_lo = lo + ip * n2;
        let sub_hi = (sub_lo + n2).min(hi);
        let sub_len = sub_hi - sub_lo;
        let received_inner: Vec<u16> = (sub_lo..sub_hi).map(|p| s_prime.coord(p, idx2)).collect();
        let (d2, i2) = block_radius(scheme.epsilon, n2, sub_len);
        let (list2, cap2) = match inner_decoder {
            Some(dec) => {
                use rand::Rng;
                let sub_seed = seed_split
                    .stream_indexed("inner-block", ((recv_block as u64) << 24) | ip as u64)
                    .random();
                (
                    dec.decode_at(&received_inner, d2, i2, sub_seed),
                    dec.list_cap(),
                )
            }
            None => (
                list_decode(&l2.codebook, &received_inner, d2, i2),
                l2.codebook.list_cap(),
            ),
        };
        stats.inner_decode_calls += 1;
        stats.record_inner_list(list2.len());
        if list2.len() > cap2 {
            return Err(Error::ListCapExceeded {
                block: sub_lo / n2,
                got: list2.len(),
                cap: cap2,
            });
        }
        stats.edge_bound = stats
            .edge_bound
            .saturating_add(candidate_blocks.len() * list2.len() * (2 * w + 1) * n2 * sub_len);

        sub_candidates.clear();
        for &kblk in candidate_blocks {
            let blk_lo = kblk * scheme.block_len;
            let blk_hi = ((kblk + 1) * scheme.block_len).min(n);
            let sent_subs = div_ceil(blk_hi - blk_lo, n2);
            for &jp in &list2 {
                let kp_lo = jp.saturating_sub(w);
                let kp_hi = (jp + w).min(sent_subs.saturating_sub(1));
                for kp in kp_lo..=kp_hi {
                    sub_candidates.push((kblk, kp));
                }
            }
        }
        sub_candidates.sort_unstable();
        sub_candidates.dedup();
        let mut runs: Vec<(usize, usize)> = Vec::with_capacity(sub_candidates.len());
        for &(kblk, kp) in &sub_candidates {
            let blk_lo = kblk * scheme.block_len;
            let blk_hi = ((kblk + 1) * scheme.block_len).min(n);
            let s_lo = blk_lo + kp * n2;
            let s_hi = (s_lo + n2).min(blk_hi);
            match runs.last_mut() {
                Some((_, end)) if *end == s_lo => *end = s_hi,
                _ => runs.push((s_lo, s_hi)),
            }
        }
        add_identical_edges(sent_symbols, s_prime, &runs, sub_lo, sub_hi, edges);
    }
    Ok(())
}

/// Merges sorted candidate block ids into disjoint sent-position runs.
fn runs_from_blocks(blocks: &[usize], nn: usize, n: usize) -> Vec<(usize, usize)> {
    let mut runs: Vec<(usize, usize)> = Vec::with_capacity(blocks.len());
    for &k in blocks {
        let lo = k * nn;
        let hi = ((k + 1) * nn).min(n);
        match runs.last_mut() {
            Some((_, end)) if *end == lo => *end = hi,
            _ => runs.push((lo, hi)),
        }
    }
    runs
}

/// Connects identical full-tuple symbols between the sent positions inside
/// `runs` and `received[r_lo..r_hi)`. One symbol-map lookup per received
/// position; whichever of (occurrence list, run list) is shorter drives the
/// intersection.
fn add_identical_edges(
    sent_symbols: &SymbolMap<'_>,
    received: &IndexedString,
    runs: &[(usize, usize)],
    r_lo: usize,
    r_hi: usize,
    edges: &mut EdgeSet,
) {
    if runs.is_empty() {
        return;
    }
    for q in r_lo..r_hi {
        let Some(positions) = sent_symbols.get(received.symbol(q)) else {
            continue;
        };
        if positions.len() <= 4 * runs.len() {
            for &p in positions {
                let pu = p as usize;
                let idx = runs.partition_point(|&(_, end)| end <= pu);
                if idx < runs.len() && runs[idx].0 <= pu {
                    edges.push_unchecked(p, q as u32);
                }
            }
        } else {
            for &(lo, hi) in runs {
                let start = positions.partition_point(|&p| (p as usize) < lo);
                for &p in &positions[start..] {
                    if p as usize >= hi {
                        break;
                    }
                    edges.push_unchecked(p, q as u32);
                }
            }
        }
    }
}

/// An indexing scheme as an edit-distance engine for the position decoder.
pub struct SchemeEngine<'a> {
    pub scheme: &'a IndexingScheme,
}

impl EdEngine for SchemeEngine<'_> {
    fn ratio_epsilon(&self) -> f64 {
        self.scheme.ratio_epsilon()
    }

    fn script(&self, source: &IndexedString, target: &IndexedString) -> Result<EditScript> {
        approx_impl(source, target, self.scheme, None, 0).map(|(s, _)| s)
    }
}
